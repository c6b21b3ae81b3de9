#ifndef ORDMON_INSTANCES_HPP_
#define ORDMON_INSTANCES_HPP_

#include <cstddef>  // for size_t

#include "cayley.hpp"
#include "core.hpp"
#include "heisenberg.hpp"
#include "ordinal.hpp"
#include "word.hpp"

namespace ordmon {

  //! Ordinals with ordinal addition and their usual (total) order. Exact
  //! Archimedean rule: compare leading exponents.
  OrderedMonoid<Ordinal> ordinal_monoid();

  //! The positive cone M of the twisted Heisenberg group with the
  //! lexicographic order. Exact Archimedean rule: the position of the
  //! first nonzero coordinate.
  OrderedMonoid<HeisenbergElement> heisenberg_monoid();

  //! The free monoid on lowercase letters with the subword order (not
  //! total; no exact rules).
  OrderedMonoid<Word> word_monoid();

  //! The free monoid with the upper cone of pivot collapsed to Top.
  OrderedMonoid<CollapsedElement> collapsed_monoid(Word pivot);

  //! The monoid part of a finite table; elements are indices.
  MonoidContract<std::size_t> cayley_contract(CayleyMonoid const& t);

}  // namespace ordmon

#endif  // ORDMON_INSTANCES_HPP_
