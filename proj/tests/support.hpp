#ifndef ORDMON_TESTS_SUPPORT_HPP_
#define ORDMON_TESTS_SUPPORT_HPP_

// Generators and small monoids shared by the unit tests and the
// acceptance binary.

#include <algorithm>   // for sort, unique
#include <cstdint>     // for uint64_t, int64_t
#include <functional>  // for greater
#include <random>      // for mt19937_64, uniform_int_distribution
#include <string>      // for string
#include <vector>      // for vector

#include "ordmon/cayley.hpp"
#include "ordmon/divisibility.hpp"
#include "ordmon/heisenberg.hpp"
#include "ordmon/ordinal.hpp"
#include "ordmon/word.hpp"

namespace ordmon::test {

  using Rng = std::mt19937_64;

  inline std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
  }

  inline std::int64_t uniform_signed(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  }

  //! An ordinal with at most 3 terms per level, coefficients up to 5 and
  //! exponents nested to the given depth.
  inline Ordinal random_ordinal(Rng& rng, int depth = 1) {
    std::vector<Ordinal> exponents;
    std::size_t          k = uniform(rng, 0, 3);
    for (std::size_t i = 0; i < k; ++i) {
      exponents.push_back(depth > 0 ? random_ordinal(rng, depth - 1)
                                    : Ordinal::finite(uniform(rng, 0, 3)));
    }
    std::sort(exponents.begin(), exponents.end(), std::greater<>());
    exponents.erase(std::unique(exponents.begin(), exponents.end()),
                    exponents.end());
    std::vector<Ordinal::Term> terms;
    for (auto& e : exponents) {
      terms.push_back({e, uniform(rng, 1, 5)});
    }
    return Ordinal::from_terms(std::move(terms));
  }

  //! An ordinal below w^4, with finite exponents only.
  inline Ordinal random_small_ordinal(Rng& rng) {
    std::vector<Ordinal::Term> terms;
    for (std::uint64_t e = 4; e-- > 0;) {
      if (uniform(rng, 0, 2) != 0) {
        terms.push_back({Ordinal::finite(e), uniform(rng, 1, 4)});
      }
    }
    return Ordinal::from_terms(std::move(terms));
  }

  inline HeisenbergElement random_heis(Rng& rng, std::int64_t radius) {
    while (true) {
      HeisenbergElement x{uniform_signed(rng, -radius, radius),
                          uniform_signed(rng, -radius, radius),
                          uniform_signed(rng, -radius, radius)};
      if (heis_in_M(x)) {
        return x;
      }
    }
  }

  //! All of M in the box |m|, |n|, |p| <= radius.
  inline std::vector<HeisenbergElement> heis_box(std::int64_t radius) {
    std::vector<HeisenbergElement> out;
    for (std::int64_t m = -radius; m <= radius; ++m) {
      for (std::int64_t n = -radius; n <= radius; ++n) {
        for (std::int64_t p = -radius; p <= radius; ++p) {
          HeisenbergElement x{m, n, p};
          if (heis_in_M(x)) {
            out.push_back(x);
          }
        }
      }
    }
    return out;
  }

  inline Word random_word(Rng& rng, std::size_t max_len, std::string_view alphabet = "ab") {
    Word        w;
    std::size_t len = uniform(rng, 0, max_len);
    for (std::size_t i = 0; i < len; ++i) {
      w.push_back(alphabet[uniform(rng, 0, alphabet.size() - 1)]);
    }
    return w;
  }

  inline CayleyMonoid table(std::size_t                                  unit,
                            std::vector<std::vector<std::size_t>> const& rows,
                            std::vector<std::string>                     labels = {}) {
    CayleyTable t{rows.size(), unit, {}};
    for (auto const& row : rows) {
      t.entries.insert(t.entries.end(), row.begin(), row.end());
    }
    return CayleyMonoid(std::move(t), std::move(labels));
  }

  //! 0 < d < a < T with d + d = d, a + d = d + a = a, a + a = T.
  inline CayleyMonoid two_generator_chain() {
    return table(0,
                 {{0, 1, 2, 3}, {1, 1, 2, 3}, {2, 2, 3, 3}, {3, 3, 3, 3}},
                 {"0", "d", "a", "T"});
  }

  //! The free commutative monoid on a, b truncated above degree 1: every
  //! sum of two generators is T.
  inline CayleyMonoid two_generator_free() {
    return table(0,
                 {{0, 1, 2, 3}, {1, 3, 3, 3}, {2, 3, 3, 3}, {3, 3, 3, 3}},
                 {"0", "a", "b", "T"});
  }

  //! {0, a, b} with x + y = y for x, y nonzero.
  inline CayleyMonoid right_zero_with_unit() {
    return table(0, {{0, 1, 2}, {1, 1, 2}, {2, 1, 2}}, {"0", "a", "b"});
  }

  //! {0, a, b} with x + y = x for x, y nonzero.
  inline CayleyMonoid left_zero_with_unit() {
    return table(0, {{0, 1, 2}, {1, 1, 1}, {2, 2, 2}}, {"0", "a", "b"});
  }

  struct CorpusEntry {
    std::string  name;
    CayleyMonoid t;
    //! Has a nontrivial zero sum (an invertible element other than 0).
    bool group_like;
  };

  //! Finite monoids of size at most 5.
  inline std::vector<CorpusEntry> corpus() {
    std::vector<CorpusEntry> out;
    auto add = [&](std::string name, CayleyMonoid t) {
      bool group_like = !zero_sum_criterion(t).holds();
      out.push_back({std::move(name), std::move(t), group_like});
    };
    add("trivial", saturating_chain(0));
    for (std::size_t k = 1; k <= 4; ++k) {
      add("saturating" + std::to_string(k), saturating_chain(k));
    }
    for (std::size_t n = 2; n <= 5; ++n) {
      add("z" + std::to_string(n), cyclic_group(n));
    }
    for (std::size_t k = 1; k <= 4; ++k) {
      add("max" + std::to_string(k), max_semilattice(k));
    }
    add("sat1xsat1", direct_product(saturating_chain(1), saturating_chain(1)));
    add("z2xsat1", direct_product(cyclic_group(2), saturating_chain(1)));
    add("two_generator_chain", two_generator_chain());
    add("two_generator_free", two_generator_free());
    add("collapsed_ab_ab_1", collapsed_cone_table("ab", "ab", 1));
    add("collapsed_ab_ba_1", collapsed_cone_table("ab", "ba", 1));
    add("collapsed_ab_aa_1", collapsed_cone_table("ab", "aa", 1));
    add("collapsed_a_aaaa_3", collapsed_cone_table("a", "aaaa", 3));
    add("collapsed_ab_b_3", collapsed_cone_table("ab", "b", 3));
    add("collapsed_abc_ab_1", collapsed_cone_table("abc", "ab", 1));
    return out;
  }

}  // namespace ordmon::test

#endif  // ORDMON_TESTS_SUPPORT_HPP_
