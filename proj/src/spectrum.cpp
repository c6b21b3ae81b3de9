#include "ordmon/spectrum.hpp"

#include <algorithm>  // for all_of, find

#include "ordmon/orderability.hpp"

namespace ordmon {

  std::vector<std::size_t> absorbed_set(CayleyMonoid const& t,
                                        std::size_t         a,
                                        Side                side) {
    std::vector<std::size_t> out;
    for (std::size_t b = 0; b < t.size(); ++b) {
      std::size_t s = side == Side::left ? t.add(a, b) : t.add(b, a);
      if (s == a) {
        out.push_back(b);
      }
    }
    return out;
  }

  namespace {
    Relation checked_order(CayleyMonoid const& t) {
      auto closure = preceq_min(t);
      if (!closure.reachable.is_antisymmetric()) {
        throw Error(ErrorKind::unorderable_carrier,
                    "the table is not orderable");
      }
      return std::move(closure.reachable);
    }

    std::vector<std::size_t> lower_cone(Relation const& le, std::size_t a) {
      std::vector<std::size_t> out;
      for (std::size_t x = 0; x < le.size(); ++x) {
        if (le(x, a)) {
          out.push_back(x);
        }
      }
      return out;
    }

    bool greatest_is(Relation const&                 le,
                     std::vector<std::size_t> const& set,
                     std::size_t                     a) {
      return std::find(set.begin(), set.end(), a) != set.end()
             && std::all_of(set.begin(), set.end(), [&](std::size_t x) {
                  return le(x, a);
                });
    }

    // k a for k = 0..limit
    std::vector<std::size_t> multiples(CayleyMonoid const& t,
                                       std::size_t         a,
                                       std::size_t         limit) {
      std::vector<std::size_t> out(limit + 1, t.unit());
      for (std::size_t k = 1; k <= limit; ++k) {
        out[k] = t.add(out[k - 1], a);
      }
      return out;
    }

    // some k >= 1 with x <= k y; multiples past the carrier size repeat
    bool archimedean_to(Relation const&                 le,
                        std::vector<std::size_t> const& mult_y,
                        std::size_t                     x) {
      for (std::size_t k = 1; k < mult_y.size(); ++k) {
        if (le(x, mult_y[k])) {
          return true;
        }
      }
      return false;
    }
  }  // namespace

  IdempotentReport idempotent_equivalences(CayleyMonoid const& t,
                                           std::size_t         a) {
    Relation const le    = checked_order(t);
    auto const     cone  = lower_cone(le, a);
    auto const     left  = absorbed_set(t, a, Side::left);
    auto const     right = absorbed_set(t, a, Side::right);

    IdempotentReport r;
    r.left_absorbs_cone  = left == cone;
    r.right_absorbs_cone = right == cone;
    r.idempotent         = t.add(a, a) == a;
    r.cone_is_submonoid  = true;
    for (auto x : cone) {
      for (auto y : cone) {
        if (!le(t.add(x, y), a)) {
          r.cone_is_submonoid = false;
        }
      }
    }
    r.left_has_greatest  = greatest_is(le, left, a);
    r.right_has_greatest = greatest_is(le, right, a);
    return r;
  }

  std::string to_string(PairClass c) {
    switch (c) {
      case PairClass::commensurable:
        return "commensurable";
      case PairClass::a_infinitely_greater:
        return "a-infinitely-greater";
      case PairClass::b_infinitely_greater:
        return "b-infinitely-greater";
      case PairClass::unknown_within_cap:
        return "unknown-within-cap";
    }
    return "";
  }

  bool infinitely_greater(CayleyMonoid const& t, std::size_t a, std::size_t b) {
    Relation const le = preceq_min(t).reachable;
    return !archimedean_to(le, multiples(t, b, t.size()), a);
  }

  AbsorptionReport absorption_theorems(CayleyMonoid const& t) {
    AbsorptionReport  report;
    std::size_t const n       = t.size();
    auto const        closure = preceq_min(t);
    Relation const&   le      = closure.reachable;
    if (!le.is_antisymmetric()) {
      report.skipped = true;
      report.reason  = "not orderable";
      return report;
    }
    if (!le.is_total()) {
      report.skipped = true;
      report.reason  = "minimal order is not total";
      return report;
    }

    std::vector<std::vector<std::size_t>> mult(n);
    for (std::size_t x = 0; x < n; ++x) {
      mult[x] = multiples(t, x, n);
    }
    auto arch = [&](std::size_t x, std::size_t y) {
      return archimedean_to(le, mult[y], x);
    };
    // n a for n = size is past any pre-period, so it is the stable value
    // when a is a generalized idempotent
    auto is_gen_idem = [&](std::size_t x) {
      auto const& m = mult[x];
      for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = i + 1; j <= n; ++j) {
          if (m[i] == m[j]) {
            return true;
          }
        }
      }
      return false;
    };
    auto fail = [&](std::size_t a, std::size_t b, std::string rule) {
      report.violation = AbsorptionViolation{a, b, std::move(rule)};
    };

    for (std::size_t a = 0; a < n && !report.violation; ++a) {
      for (std::size_t b = 0; b < n && !report.violation; ++b) {
        bool const absorbs     = t.add(a, b) == a || t.add(b, a) == a;
        bool const commensurable = arch(a, b) && arch(b, a);
        if (absorbs && t.add(a, a) != a && arch(a, b)) {
          fail(a, b, "absorbs but neither idempotent nor infinitely greater");
        } else if (absorbs && commensurable
                   && std::find(mult[b].begin() + 1, mult[b].end(), a)
                          == mult[b].end()) {
          fail(a, b, "commensurable absorption without a = n b");
        } else if (commensurable && (is_gen_idem(a) || is_gen_idem(b))) {
          std::size_t const top = mult[a][n];
          if (!is_gen_idem(a) || !is_gen_idem(b)) {
            fail(a, b, "only one of a commensurable pair is a generalized "
                       "idempotent");
          } else if (mult[b][n] != top) {
            fail(a, b, "stabilized multiples differ");
          } else if (t.add(top, top) != top) {
            fail(a, b, "stabilized multiple is not idempotent");
          } else {
            for (std::size_t x = 0; x < n; ++x) {
              if (!arch(x, a)) {
                continue;
              }
              if (!le(x, top) || t.add(top, x) != top
                  || t.add(x, top) != top) {
                fail(a, b, "stabilized multiple does not absorb the "
                           "Archimedean ray");
                break;
              }
            }
          }
        }
      }
    }
    return report;
  }

}  // namespace ordmon
