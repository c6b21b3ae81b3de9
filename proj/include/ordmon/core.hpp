#ifndef ORDMON_CORE_HPP_
#define ORDMON_CORE_HPP_

// Contracts shared by every monoid instance: the monoid itself, an ordering
// with declared postulates, natural multiples, and a sample-based auditor.

#include <array>       // for array
#include <compare>     // for partial_ordering
#include <cstddef>     // for size_t
#include <cstdint>     // for uint64_t
#include <functional>  // for function
#include <optional>    // for optional
#include <set>         // for set
#include <span>        // for span
#include <string>      // for string
#include <utility>     // for move
#include <vector>      // for vector

#include "error.hpp"

namespace ordmon {

  //! A monoid given as a bundle of functions over an opaque element type.
  template <typename E>
  struct MonoidContract {
    E                                        zero;
    std::function<E(E const&, E const&)>     add;
    std::function<bool(E const&, E const&)>  eq;
  };

  enum class Postulate { O, P, C, T, A };

  inline constexpr std::array<Postulate, 5> all_postulates
      = {Postulate::O, Postulate::P, Postulate::C, Postulate::T, Postulate::A};

  inline char tag(Postulate p) noexcept {
    return "OPCTA"[static_cast<int>(p)];
  }

  //! The relation <= together with the postulates the caller claims for it.
  template <typename E>
  struct OrderContract {
    std::function<bool(E const&, E const&)> le;
    std::set<Postulate>                     flags;
  };

  //! Outcome of a check that either holds or is refuted by a witness.
  template <typename W>
  struct Verdict {
    std::optional<W> witness;

    bool holds() const noexcept {
      return !witness.has_value();
    }

    explicit operator bool() const noexcept {
      return holds();
    }
  };

  //! A monoid with an ordering plus optional exact rules that let the
  //! spectrum and ratio code avoid capped searches.
  template <typename E>
  struct OrderedMonoid {
    MonoidContract<E> monoid;
    OrderContract<E>  order;
    //! Compares Archimedean classes: less means the first argument is
    //! infinitely smaller than the second. Empty when there is no exact rule.
    std::function<std::partial_ordering(E const&, E const&)> archimedean;
    //! True when all positive multiples of the argument are provably
    //! distinct. Empty when there is no exact rule.
    std::function<bool(E const&)> multiples_distinct;
    //! Set for finite carriers; multiple searches up to this bound are
    //! exhaustive.
    std::optional<std::size_t> carrier_size;
    std::function<std::string(E const&)> print;

    bool le(E const& x, E const& y) const {
      return order.le(x, y);
    }
    bool eq(E const& x, E const& y) const {
      return monoid.eq(x, y);
    }
    E add(E const& x, E const& y) const {
      return monoid.add(x, y);
    }
  };

  //! n-fold sum of a, by binary doubling (a commutes with itself).
  template <typename E>
  E nat_mul(std::uint64_t n, E const& a, MonoidContract<E> const& m) {
    E result = m.zero;
    E power  = a;
    while (n != 0) {
      if (n & 1) {
        result = m.add(result, power);
      }
      n >>= 1;
      if (n != 0) {
        power = m.add(power, power);
      }
    }
    return result;
  }

  template <typename E>
  E nat_mul(std::uint64_t n, E const& a, OrderedMonoid<E> const& inst) {
    return nat_mul(n, a, inst.monoid);
  }

  template <typename E>
  struct PostulateVerdict {
    bool           pass = true;
    std::vector<E> witness;
  };

  template <typename E>
  struct AxiomReport {
    std::array<PostulateVerdict<E>, 5> verdicts;
    std::set<Postulate>                audited;

    PostulateVerdict<E> const& operator[](Postulate p) const {
      return verdicts[static_cast<int>(p)];
    }

    bool all_pass() const {
      for (auto p : audited) {
        if (!(*this)[p].pass) {
          return false;
        }
      }
      return true;
    }
  };

  //! Does the tuple refute postulate p?  Arity: 1 for P, 2 for T and A,
  //! 3 for O and C.
  template <typename E>
  bool refutes(Postulate                p,
               MonoidContract<E> const& m,
               OrderContract<E> const&  o,
               std::span<E const>       tuple) {
    auto const& le = o.le;
    switch (p) {
      case Postulate::P:
        return !le(m.zero, tuple[0]);
      case Postulate::T:
        return !le(tuple[0], tuple[1]) && !le(tuple[1], tuple[0]);
      case Postulate::A:
        return le(tuple[0], tuple[1]) && le(tuple[1], tuple[0])
               && !m.eq(tuple[0], tuple[1]);
      case Postulate::O:
        return le(tuple[0], tuple[1]) && le(tuple[1], tuple[2])
               && !le(tuple[0], tuple[2]);
      case Postulate::C: {
        auto const& a = tuple[0];
        auto const& b = tuple[1];
        auto const& c = tuple[2];
        if (!le(a, b)) {
          return false;
        }
        return !le(m.add(a, c), m.add(b, c)) || !le(m.add(c, a), m.add(c, b));
      }
    }
    return false;
  }

  inline std::size_t arity(Postulate p) noexcept {
    switch (p) {
      case Postulate::P:
        return 1;
      case Postulate::T:
      case Postulate::A:
        return 2;
      default:
        return 3;
    }
  }

  //! Tests every declared postulate on every tuple of the sample and keeps
  //! the first refuting tuple (in sample order) for each failure.
  template <typename E>
  AxiomReport<E> audit_axioms(MonoidContract<E> const& m,
                              OrderContract<E> const&  o,
                              std::span<E const>       sample) {
    bool has_zero = false;
    for (auto const& x : sample) {
      has_zero = has_zero || m.eq(x, m.zero);
    }
    if (!has_zero) {
      throw Error(ErrorKind::invalid_argument,
                  "audit sample must contain the unit element");
    }
    AxiomReport<E> report;
    report.audited = o.flags;
    std::size_t const n = sample.size();
    for (auto p : o.flags) {
      auto&       verdict = report.verdicts[static_cast<int>(p)];
      std::size_t k       = arity(p);
      std::size_t total   = 1;
      for (std::size_t i = 0; i < k; ++i) {
        total *= n;
      }
      std::vector<E> tuple;
      for (std::size_t code = 0; code < total && verdict.pass; ++code) {
        tuple.clear();
        std::size_t rest = code;
        std::size_t div  = total;
        for (std::size_t i = 0; i < k; ++i) {
          div /= n;
          tuple.push_back(sample[rest / div]);
          rest %= div;
        }
        if (refutes<E>(p, m, o, tuple)) {
          verdict.pass    = false;
          verdict.witness = tuple;
        }
      }
    }
    return report;
  }

  template <typename E>
  AxiomReport<E> audit_axioms(OrderedMonoid<E> const& inst,
                              std::span<E const>      sample) {
    return audit_axioms(inst.monoid, inst.order, sample);
  }

}  // namespace ordmon

#endif  // ORDMON_CORE_HPP_
