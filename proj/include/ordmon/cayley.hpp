#ifndef ORDMON_CAYLEY_HPP_
#define ORDMON_CAYLEY_HPP_

#include <array>        // for array
#include <cstddef>      // for size_t
#include <iosfwd>       // for istream
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

namespace ordmon {

  //! A raw operation table: entry (i, j) is the index of i + j.
  struct CayleyTable {
    std::size_t              size = 0;
    std::size_t              unit = 0;
    std::vector<std::size_t> entries;  // row-major, size * size

    std::size_t operator()(std::size_t i, std::size_t j) const {
      return entries[i * size + j];
    }
    std::size_t& operator()(std::size_t i, std::size_t j) {
      return entries[i * size + j];
    }
  };

  struct TableViolation {
    enum class Kind { associativity, left_unit, right_unit };
    Kind kind;
    //! (x, y, z) with (x+y)+z != x+(y+z); for unit failures only x is used.
    std::array<std::size_t, 3> elements;
  };

  //! Exhaustive associativity and unit-law check. Returns the first
  //! violation in lexicographic order, or nullopt when the table is a
  //! monoid. Throws Error(invalid_table) on bad dimensions or entries out
  //! of range.
  std::optional<TableViolation> cayley_validate(CayleyTable const& t);

  //! A finite monoid given by a validated operation table. Elements are
  //! the indices 0, ..., size() - 1.
  class CayleyMonoid {
   public:
    //! Throws Error(invalid_table) unless cayley_validate passes.
    explicit CayleyMonoid(CayleyTable table,
                          std::vector<std::string> labels = {});

    std::size_t size() const noexcept {
      return _table.size;
    }
    std::size_t unit() const noexcept {
      return _table.unit;
    }
    std::size_t add(std::size_t x, std::size_t y) const {
      return _table(x, y);
    }
    CayleyTable const& table() const noexcept {
      return _table;
    }
    //! Human-readable element names; index strings when none were given.
    std::string label(std::size_t x) const;

    bool is_commutative() const;

   private:
    CayleyTable              _table;
    std::vector<std::string> _labels;
  };

  //! Reads the text table format: line 1 the size n, line 2 the 0-based
  //! unit, then n rows of n space-separated indices. Blank trailing lines
  //! are ignored. Throws ParseError (with the 1-based line) or
  //! Error(invalid_table).
  CayleyMonoid parse_cayley(std::istream& in);
  CayleyMonoid parse_cayley(std::string_view text);

  std::string format_cayley(CayleyMonoid const& t);

  // Standard small monoids used throughout the tests and examples.

  //! {0, ..., cap} under x + y capped at cap.
  CayleyMonoid saturating_chain(std::size_t cap);

  //! Integers modulo n under addition.
  CayleyMonoid cyclic_group(std::size_t n);

  //! {0, ..., k} under max.
  CayleyMonoid max_semilattice(std::size_t k);

  //! Direct product, elements (x, y) indexed as x * b.size() + y.
  CayleyMonoid direct_product(CayleyMonoid const& a, CayleyMonoid const& b);

  //! The words over alphabet of length <= max_len that avoid pivot as a
  //! subword, plus one absorbing element Top standing for every other word
  //! (those containing pivot or longer than max_len). Elements are in
  //! shortlex order with the empty word at index 0 and Top last.
  CayleyMonoid collapsed_cone_table(std::string_view alphabet,
                                    std::string_view pivot,
                                    std::size_t      max_len);

}  // namespace ordmon

#endif  // ORDMON_CAYLEY_HPP_
