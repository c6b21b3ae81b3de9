#include "ordmon/divisibility.hpp"

#include <vector>  // for vector

#include "ordmon/checked.hpp"

namespace ordmon {

  using detail::checked_mul;
  using detail::checked_sub;

  std::optional<Ordinal> divides_right(Ordinal const& a, Ordinal const& b) {
    auto const& s = a.terms();
    auto const& t = b.terms();
    std::size_t i = 0;
    while (i < s.size() && i < t.size() && s[i] == t[i]) {
      ++i;
    }
    if (i == s.size()) {
      // a is an initial segment of b
      return Ordinal::from_terms({t.begin() + i, t.end()});
    }
    if (i == t.size()) {
      return std::nullopt;
    }
    auto c = ord_cmp(s[i].exponent, t[i].exponent);
    if (c > 0 || (c == 0 && s[i].coefficient > t[i].coefficient)) {
      return std::nullopt;
    }
    std::vector<Ordinal::Term> rest(t.begin() + i, t.end());
    if (c == 0) {
      rest.front().coefficient -= s[i].coefficient;
    }
    return Ordinal::from_terms(std::move(rest));
  }

  std::optional<Ordinal> divides_left(Ordinal const& a, Ordinal const& b) {
    if (a.is_zero()) {
      return b;
    }
    auto const& s = a.terms();
    auto const& t = b.terms();
    if (t.size() < s.size()) {
      return std::nullopt;
    }
    // b = P + w^e1*d + (tail of a) with every exponent of P above e1
    std::size_t const k = t.size() - s.size();
    for (std::size_t j = 1; j < s.size(); ++j) {
      if (!(t[k + j] == s[j])) {
        return std::nullopt;
      }
    }
    auto const& lead = t[k];
    if (!(lead.exponent == s[0].exponent)
        || lead.coefficient < s[0].coefficient) {
      return std::nullopt;
    }
    std::vector<Ordinal::Term> witness(t.begin(), t.begin() + k);
    if (lead.coefficient > s[0].coefficient) {
      witness.push_back(
          Ordinal::Term{lead.exponent, lead.coefficient - s[0].coefficient});
    }
    return Ordinal::from_terms(std::move(witness));
  }

  std::optional<HeisenbergElement> divides_right(HeisenbergElement const& a,
                                                 HeisenbergElement const& b) {
    // b = a + c: c.p = b.p - a.p - a.n * c.m
    HeisenbergElement c;
    c.m = checked_sub(b.m, a.m);
    c.n = checked_sub(b.n, a.n);
    c.p = checked_sub(checked_sub(b.p, a.p), checked_mul(a.n, c.m));
    if (!heis_in_M(c)) {
      return std::nullopt;
    }
    return c;
  }

  std::optional<HeisenbergElement> divides_left(HeisenbergElement const& a,
                                                HeisenbergElement const& b) {
    // b = c + a: c.p = b.p - a.p - c.n * a.m
    HeisenbergElement c;
    c.m = checked_sub(b.m, a.m);
    c.n = checked_sub(b.n, a.n);
    c.p = checked_sub(checked_sub(b.p, a.p), checked_mul(c.n, a.m));
    if (!heis_in_M(c)) {
      return std::nullopt;
    }
    return c;
  }

  std::optional<Word> divides_right(Word const& a, Word const& b) {
    if (b.size() < a.size() || b.compare(0, a.size(), a) != 0) {
      return std::nullopt;
    }
    return b.substr(a.size());
  }

  std::optional<Word> divides_left(Word const& a, Word const& b) {
    if (b.size() < a.size()
        || b.compare(b.size() - a.size(), a.size(), a) != 0) {
      return std::nullopt;
    }
    return b.substr(0, b.size() - a.size());
  }

  std::optional<std::size_t> divides_right(CayleyMonoid const& t,
                                           std::size_t         a,
                                           std::size_t         b) {
    for (std::size_t c = 0; c < t.size(); ++c) {
      if (t.add(a, c) == b) {
        return c;
      }
    }
    return std::nullopt;
  }

  std::optional<std::size_t> divides_left(CayleyMonoid const& t,
                                          std::size_t         a,
                                          std::size_t         b) {
    for (std::size_t c = 0; c < t.size(); ++c) {
      if (t.add(c, a) == b) {
        return c;
      }
    }
    return std::nullopt;
  }

  Verdict<std::pair<std::size_t, std::size_t>>
  zero_sum_criterion(CayleyMonoid const& t) {
    for (std::size_t x = 0; x < t.size(); ++x) {
      if (x == t.unit()) {
        continue;
      }
      for (std::size_t y = 0; y < t.size(); ++y) {
        if (t.add(x, y) == t.unit()) {
          return {std::pair{x, y}};
        }
      }
    }
    return {};
  }

  namespace {
    template <typename Divides>
    Verdict<std::pair<std::size_t, std::size_t>>
    antisymmetric(CayleyMonoid const& t, Divides divides) {
      for (std::size_t a = 0; a < t.size(); ++a) {
        for (std::size_t b = a + 1; b < t.size(); ++b) {
          if (divides(t, a, b) && divides(t, b, a)) {
            return {std::pair{a, b}};
          }
        }
      }
      return {};
    }
  }  // namespace

  Verdict<std::pair<std::size_t, std::size_t>>
  right_divisibility_antisymmetric(CayleyMonoid const& t) {
    return antisymmetric(t, [](auto const& m, std::size_t x, std::size_t y) {
      return divides_right(m, x, y).has_value();
    });
  }

  Verdict<std::pair<std::size_t, std::size_t>>
  left_divisibility_antisymmetric(CayleyMonoid const& t) {
    return antisymmetric(t, [](auto const& m, std::size_t x, std::size_t y) {
      return divides_left(m, x, y).has_value();
    });
  }

}  // namespace ordmon
