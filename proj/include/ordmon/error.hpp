#ifndef ORDMON_ERROR_HPP_
#define ORDMON_ERROR_HPP_

#include <cstddef>    // for size_t
#include <stdexcept>  // for runtime_error
#include <string>     // for string

namespace ordmon {

  enum class ErrorKind {
    invalid_argument,
    parse,
    invalid_table,
    unsupported_instance,
    not_commensurable,
    generalized_idempotent,
    cap_exceeded,
    unorderable_carrier,
    overflow
  };

  //! Every error raised by the library is an Error; kind() says which
  //! contract was broken.
  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& what)
        : std::runtime_error(what), _kind(kind) {}

    ErrorKind kind() const noexcept {
      return _kind;
    }

   private:
    ErrorKind _kind;
  };

  //! A parse failure. For element grammars position() is the 0-based
  //! character offset; for table files line() is the 1-based line number.
  class ParseError : public Error {
   public:
    ParseError(std::string const& what,
               std::size_t        position,
               std::size_t        line = 0)
        : Error(ErrorKind::parse, what), _position(position), _line(line) {}

    std::size_t position() const noexcept {
      return _position;
    }

    std::size_t line() const noexcept {
      return _line;
    }

   private:
    std::size_t _position;
    std::size_t _line;
  };

}  // namespace ordmon

#endif  // ORDMON_ERROR_HPP_
