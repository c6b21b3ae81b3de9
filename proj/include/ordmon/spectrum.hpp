#ifndef ORDMON_SPECTRUM_HPP_
#define ORDMON_SPECTRUM_HPP_

// Absorption, idempotents and generalized idempotents, and the
// Archimedean classification of pairs.

#include <cstddef>   // for size_t
#include <cstdint>   // for uint64_t
#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

#include "cayley.hpp"
#include "core.hpp"
#include "error.hpp"

namespace ordmon {

  inline constexpr std::uint64_t default_cap = 1000;

  //! a + b = a
  template <typename E>
  bool absorbs_left(MonoidContract<E> const& m, E const& a, E const& b) {
    return m.eq(m.add(a, b), a);
  }

  //! b + a = a
  template <typename E>
  bool absorbs_right(MonoidContract<E> const& m, E const& a, E const& b) {
    return m.eq(m.add(b, a), a);
  }

  enum class Side { left, right };

  //! lAb(a) = {b : a + b = a} or rAb(a) = {b : b + a = a}, sorted.
  std::vector<std::size_t> absorbed_set(CayleyMonoid const& t,
                                        std::size_t         a,
                                        Side                side);

  //! The six conditions that characterise an idempotent a in a positive
  //! partially ordered monoid, evaluated separately.
  struct IdempotentReport {
    bool left_absorbs_cone;       // lAb(a) is the lower cone of a
    bool right_absorbs_cone;      // rAb(a) is the lower cone of a
    bool idempotent;              // a + a = a
    bool cone_is_submonoid;       // lower cone closed under +
    bool left_has_greatest;       // lAb(a) has greatest element a
    bool right_has_greatest;      // rAb(a) has greatest element a

    bool agree() const noexcept {
      return left_absorbs_cone == right_absorbs_cone
             && right_absorbs_cone == idempotent
             && idempotent == cone_is_submonoid
             && cone_is_submonoid == left_has_greatest
             && left_has_greatest == right_has_greatest;
    }
  };

  //! Throws Error(unorderable_carrier) unless the table is orderable; the
  //! order used is the minimal preorder.
  IdempotentReport idempotent_equivalences(CayleyMonoid const& t,
                                           std::size_t         a);

  struct GenIdemReport {
    enum class Status { not_within_cap, found };
    Status        status = Status::not_within_cap;
    std::uint64_t n      = 0;  // least n with na = ma for some m > n
    std::uint64_t m      = 0;  // first such m
    //! Set to n when the multiples stay equal to na from n up to the cap.
    std::optional<std::uint64_t> stabilized_from;
    std::uint64_t                cap = 0;
    //! False when an exact rule decided the verdict.
    bool bounded = true;

    bool found() const noexcept {
      return status == Status::found;
    }
  };

  //! Iterates a, 2a, ..., cap*a and reports the first repeat. Instances
  //! with an exact rule skip the iteration for elements whose multiples
  //! are provably distinct.
  template <typename E>
  GenIdemReport generalized_idempotent(OrderedMonoid<E> const& inst,
                                       E const&                a,
                                       std::uint64_t           cap = default_cap) {
    GenIdemReport report;
    report.cap = cap;
    if (inst.multiples_distinct && inst.multiples_distinct(a)) {
      report.bounded = false;
      return report;
    }
    std::vector<E> multiples;  // multiples[k - 1] = k a
    multiples.push_back(a);
    for (std::uint64_t k = 2; k <= cap; ++k) {
      E next = inst.add(multiples.back(), a);
      for (std::uint64_t j = 1; j < k; ++j) {
        if (inst.eq(multiples[j - 1], next)) {
          report.status = GenIdemReport::Status::found;
          report.n      = j;
          report.m      = k;
          break;
        }
      }
      multiples.push_back(std::move(next));
      if (report.found()) {
        break;
      }
    }
    if (!report.found()) {
      return report;
    }
    E const& base   = multiples[report.n - 1];
    E        cur    = base;
    bool     stable = true;
    for (std::uint64_t k = report.n + 1; k <= cap && stable; ++k) {
      cur    = inst.add(cur, a);
      stable = inst.eq(cur, base);
    }
    if (stable) {
      report.stabilized_from = report.n;
    }
    return report;
  }

  enum class PairClass {
    commensurable,
    a_infinitely_greater,
    b_infinitely_greater,
    unknown_within_cap
  };

  std::string to_string(PairClass c);

  struct Classification {
    PairClass value;
    //! a <= n b and b <= m a, minimal, when found.
    std::optional<std::uint64_t> n;
    std::optional<std::uint64_t> m;
    std::uint64_t                cap = 0;
    bool                         bounded = true;
  };

  namespace detail {
    //! Least k in [1, limit] with x <= k y, by doubling then bisection.
    //! Valid because k y is monotone in k in a positive ordered monoid.
    template <typename E>
    std::optional<std::uint64_t> least_multiple_above(
        OrderedMonoid<E> const& inst,
        E const&                x,
        E const&                y,
        std::uint64_t           limit) {
      std::uint64_t lo = 0;  // lo y < x (or lo = 0)
      std::uint64_t hi = 1;
      while (!inst.le(x, nat_mul(hi, y, inst))) {
        lo = hi;
        if (hi >= limit) {
          return std::nullopt;
        }
        hi = hi > limit / 2 ? limit : 2 * hi;
      }
      while (hi - lo > 1) {
        std::uint64_t mid = lo + (hi - lo) / 2;
        if (inst.le(x, nat_mul(mid, y, inst))) {
          hi = mid;
        } else {
          lo = mid;
        }
      }
      return hi;
    }
  }  // namespace detail

  //! Classifies (a, b) as commensurable or one infinitely greater than the
  //! other. Instances with an exact Archimedean rule are decided exactly;
  //! finite carriers are searched exhaustively; otherwise witnesses are
  //! sought up to cap and the result may be unknown_within_cap.
  template <typename E>
  Classification classify_pair(OrderedMonoid<E> const& inst,
                               E const&                a,
                               E const&                b,
                               std::uint64_t           cap = default_cap) {
    Classification result{PairClass::unknown_within_cap, {}, {}, cap, true};
    if (inst.archimedean) {
      result.bounded = false;
      auto c         = inst.archimedean(a, b);
      std::uint64_t const unbounded = std::uint64_t(1) << 62;
      if (c == std::partial_ordering::equivalent) {
        result.value = PairClass::commensurable;
        result.n     = detail::least_multiple_above(inst, a, b, unbounded);
        result.m     = detail::least_multiple_above(inst, b, a, unbounded);
        if (!result.n || !result.m) {
          throw Error(ErrorKind::cap_exceeded,
                      "commensurability witness exceeds 2^62");
        }
      } else if (c == std::partial_ordering::greater) {
        result.value = PairClass::a_infinitely_greater;
      } else if (c == std::partial_ordering::less) {
        result.value = PairClass::b_infinitely_greater;
      }
      return result;
    }
    std::uint64_t limit = cap;
    if (inst.carrier_size) {
      // every value of k y already occurs for some k <= size
      limit          = *inst.carrier_size;
      result.bounded = false;
    }
    result.n = detail::least_multiple_above(inst, a, b, limit);
    result.m = detail::least_multiple_above(inst, b, a, limit);
    if (result.n && result.m) {
      result.value = PairClass::commensurable;
    } else if (!result.bounded) {
      if (result.n) {
        result.value = PairClass::b_infinitely_greater;
      } else if (result.m) {
        result.value = PairClass::a_infinitely_greater;
      }
      // neither: incomparable classes in a partial order; stays unknown
    }
    return result;
  }

  //! a is infinitely greater than b: a > n b for every n >= 1 (decided
  //! exhaustively on the table's minimal order).
  bool infinitely_greater(CayleyMonoid const& t, std::size_t a, std::size_t b);

  struct AbsorptionViolation {
    std::size_t a;
    std::size_t b;
    std::string rule;
  };

  struct AbsorptionReport {
    bool                               skipped = false;
    std::string                        reason;
    std::optional<AbsorptionViolation> violation;

    bool passed() const noexcept {
      return !skipped && !violation;
    }
  };

  //! On a table whose minimal order is a total order, checks for every
  //! pair (a, b):
  //!  - a absorbs b on either side only if a is idempotent or infinitely
  //!    greater than b;
  //!  - for commensurable a, b with a absorbing b, a = n b for some n;
  //!  - for commensurable a, b with one a generalized idempotent, the
  //!    stabilized multiples of a and b coincide in an idempotent that is
  //!    the greatest element Archimedean to a and absorbs all of those
  //!    elements on both sides.
  //! Tables that are not orderable or not total are skipped.
  AbsorptionReport absorption_theorems(CayleyMonoid const& t);

}  // namespace ordmon

#endif  // ORDMON_SPECTRUM_HPP_
