#include "ordmon/heisenberg.hpp"

#include <tuple>  // for tie

#include "ordmon/checked.hpp"

namespace ordmon {

  using detail::checked_add;
  using detail::checked_mul;
  using detail::checked_sub;

  HeisenbergElement heis_add(HeisenbergElement const& a,
                             HeisenbergElement const& b) {
    return {checked_add(a.m, b.m),
            checked_add(a.n, b.n),
            checked_add(checked_add(a.p, b.p), checked_mul(a.n, b.m))};
  }

  HeisenbergElement heis_neg(HeisenbergElement const& a) {
    // p + p' + n*(-m) = 0
    return {checked_sub<std::int64_t>(0, a.m),
            checked_sub<std::int64_t>(0, a.n),
            checked_sub(checked_mul(a.n, a.m), a.p)};
  }

  bool heis_in_M(HeisenbergElement const& a) {
    return a.m > 0 || (a.m == 0 && a.n > 0)
           || (a.m == 0 && a.n == 0 && a.p >= 0);
  }

  bool heis_lex_le(HeisenbergElement const& a, HeisenbergElement const& b) {
    return std::tie(a.m, a.n, a.p) <= std::tie(b.m, b.n, b.p);
  }

  std::string to_string(HeisenbergElement const& a) {
    return "(" + std::to_string(a.m) + "," + std::to_string(a.n) + ","
           + std::to_string(a.p) + ")";
  }

}  // namespace ordmon
