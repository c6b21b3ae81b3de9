#ifndef ORDMON_HEISENBERG_HPP_
#define ORDMON_HEISENBERG_HPP_

#include <cstdint>  // for int64_t
#include <string>   // for string

namespace ordmon {

  //! mi + nj + pk in the integer Heisenberg group, where k is central and
  //! j + i = i + j + k.
  struct HeisenbergElement {
    std::int64_t m = 0;
    std::int64_t n = 0;
    std::int64_t p = 0;

    friend bool operator==(HeisenbergElement const&,
                           HeisenbergElement const&) = default;
  };

  inline constexpr HeisenbergElement heis_i{1, 0, 0};
  inline constexpr HeisenbergElement heis_j{0, 1, 0};
  inline constexpr HeisenbergElement heis_k{0, 0, 1};

  //! (m,n,p) + (m',n',p') = (m+m', n+n', p+p'+n*m'). Throws on overflow.
  HeisenbergElement heis_add(HeisenbergElement const& a,
                             HeisenbergElement const& b);

  //! The group inverse: heis_add(a, heis_neg(a)) is (0,0,0).
  HeisenbergElement heis_neg(HeisenbergElement const& a);

  //! Membership in the positive cone M of lexicographically nonnegative
  //! elements.
  bool heis_in_M(HeisenbergElement const& a);

  //! Lexicographic order on (m, n, p).
  bool heis_lex_le(HeisenbergElement const& a, HeisenbergElement const& b);

  //! "(m,n,p)"
  std::string to_string(HeisenbergElement const& a);

}  // namespace ordmon

#endif  // ORDMON_HEISENBERG_HPP_
