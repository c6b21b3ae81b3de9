#ifndef ORDMON_DIVISIBILITY_HPP_
#define ORDMON_DIVISIBILITY_HPP_

// Right divisibility a <=_r b :<=> b = a + c, left divisibility
// a <=_l b :<=> b = c + a. Each solver returns a witness c or nullopt.

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <utility>   // for pair

#include "cayley.hpp"
#include "core.hpp"
#include "heisenberg.hpp"
#include "ordinal.hpp"
#include "word.hpp"

namespace ordmon {

  // Ordinals are left-cancelative, so the right witness is unique.
  std::optional<Ordinal> divides_right(Ordinal const& a, Ordinal const& b);
  //! The minimal c with c + a = b. Other witnesses differ from it by terms
  //! that a absorbs.
  std::optional<Ordinal> divides_left(Ordinal const& a, Ordinal const& b);

  //! Witnesses are restricted to the cone M.
  std::optional<HeisenbergElement> divides_right(HeisenbergElement const& a,
                                                 HeisenbergElement const& b);
  std::optional<HeisenbergElement> divides_left(HeisenbergElement const& a,
                                                HeisenbergElement const& b);

  //! Prefix and suffix tests in the free monoid.
  std::optional<Word> divides_right(Word const& a, Word const& b);
  std::optional<Word> divides_left(Word const& a, Word const& b);

  //! Smallest-index witness by exhaustive scan.
  std::optional<std::size_t> divides_right(CayleyMonoid const& t,
                                           std::size_t         a,
                                           std::size_t         b);
  std::optional<std::size_t> divides_left(CayleyMonoid const& t,
                                          std::size_t         a,
                                          std::size_t         b);

  //! Holds when no sum of non-unit elements is the unit. It is enough to
  //! scan pairs: a zero sum a1 + ... + an with a1 != 0 gives the pair
  //! (a1, a2 + ... + an). The witness is the first pair (x, y), x != unit,
  //! with x + y = unit.
  Verdict<std::pair<std::size_t, std::size_t>>
  zero_sum_criterion(CayleyMonoid const& t);

  //! Antisymmetry of <=_r (resp. <=_l) on a finite table; the witness is a
  //! pair a != b related both ways.
  Verdict<std::pair<std::size_t, std::size_t>>
  right_divisibility_antisymmetric(CayleyMonoid const& t);
  Verdict<std::pair<std::size_t, std::size_t>>
  left_divisibility_antisymmetric(CayleyMonoid const& t);

}  // namespace ordmon

#endif  // ORDMON_DIVISIBILITY_HPP_
