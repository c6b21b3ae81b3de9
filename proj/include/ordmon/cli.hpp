#ifndef ORDMON_CLI_HPP_
#define ORDMON_CLI_HPP_

// Command-line front end. Exit codes: 0 success, 1 domain error, 2 parse
// or usage error.

#include <iosfwd>       // for ostream
#include <string>       // for string
#include <string_view>  // for string_view
#include <variant>      // for variant
#include <vector>       // for vector

#include "heisenberg.hpp"
#include "ordinal.hpp"
#include "word.hpp"

namespace ordmon::cli {

  enum class InstanceKind { ordinal, heis, word, cayley };

  //! Sums of terms w^E*C, w*C, w^E, w or a nonnegative integer, with E an
  //! integer, w, or a parenthesised ordinal; terms are folded left to
  //! right by ordinal addition, so "5+w" is w. Throws ParseError with a
  //! 0-based character position.
  Ordinal parse_ordinal(std::string_view text);

  //! "(m,n,p)" with optionally signed integers; the element must lie in
  //! the cone M.
  HeisenbergElement parse_heisenberg(std::string_view text);

  //! Lowercase letters; the empty string and "\"\"" both denote the empty
  //! word.
  Word parse_word(std::string_view text);

  //! The inverse of parse_word: the word itself, or "\"\"" when empty.
  std::string print_word(Word const& w);

  using Element = std::variant<Ordinal, HeisenbergElement, Word>;

  //! Dispatches on kind; cayley elements are plain indices and are not
  //! handled here.
  Element parse_element(InstanceKind kind, std::string_view text);

  std::string print_element(Element const& e);

  //! Runs one command; args excludes the program name.
  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err);

}  // namespace ordmon::cli

#endif  // ORDMON_CLI_HPP_
