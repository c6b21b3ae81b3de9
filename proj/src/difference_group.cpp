#include "ordmon/difference_group.hpp"

#include <vector>  // for vector

#include "ordmon/divisibility.hpp"
#include "ordmon/instances.hpp"

namespace ordmon {

  DifferenceInstance<HeisenbergElement> heisenberg_differences() {
    using H = HeisenbergElement;
    return {heisenberg_monoid().monoid,
            [](H const& a, H const& b) { return divides_right(a, b); },
            [](H const& a, H const& b) { return divides_left(a, b); },
            true,
            true,
            "heisenberg"};
  }

  DifferenceInstance<Ordinal> ordinal_differences() {
    return {ordinal_monoid().monoid,
            [](Ordinal const& a, Ordinal const& b) {
              return divides_right(a, b);
            },
            [](Ordinal const& a, Ordinal const& b) {
              return divides_left(a, b);
            },
            true,
            false,
            "ordinal"};
  }

  namespace {
    // 0, 1, -1, 2, -2, ...
    std::vector<std::int64_t> outward(int radius) {
      std::vector<std::int64_t> out{0};
      for (int r = 1; r <= radius; ++r) {
        out.push_back(r);
        out.push_back(-r);
      }
      return out;
    }
  }  // namespace

  Verdict<std::pair<HeisenbergElement, HeisenbergElement>> cone_check(
      int                                            radius,
      std::function<bool(HeisenbergElement const&)> member) {
    auto const                     coords = outward(radius);
    std::vector<HeisenbergElement> cone;
    for (auto m : coords) {
      for (auto n : coords) {
        for (auto p : coords) {
          HeisenbergElement x{m, n, p};
          if (member(x)) {
            cone.push_back(x);
          }
        }
      }
    }
    for (auto const& x : cone) {
      auto y = heis_neg(x);
      if (!(x == HeisenbergElement{}) && member(y)) {
        return {std::pair{x, y}};
      }
    }
    for (auto const& u : cone) {
      auto neg_u = heis_neg(u);
      for (auto const& v : cone) {
        auto x = heis_add(neg_u, v);
        if (!member(x) && !member(heis_neg(x))) {
          return {std::pair{x, heis_neg(x)}};
        }
      }
    }
    return {};
  }

}  // namespace ordmon
