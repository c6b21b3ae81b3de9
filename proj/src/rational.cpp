#include "ordmon/rational.hpp"

#include <charconv>  // for from_chars
#include <utility>   // for move

#include "ordmon/error.hpp"

namespace ordmon {

  Rational::Rational(std::uint64_t num, std::uint64_t den) {
    if (num == 0 || den == 0) {
      throw Error(ErrorKind::invalid_argument,
                  "rationals must have positive numerator and denominator");
    }
    _value = BigRational(BigInt(num), BigInt(den));
  }

  Rational::Rational(BigRational value) : _value(std::move(value)) {
    if (_value <= 0) {
      throw Error(ErrorKind::invalid_argument, "rationals must be positive");
    }
  }

  namespace {
    std::uint64_t parse_positive(std::string_view text, std::size_t offset) {
      std::uint64_t value = 0;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                       value);
      std::size_t used = static_cast<std::size_t>(ptr - text.data());
      if (ec == std::errc::result_out_of_range) {
        throw ParseError("integer out of range", offset);
      }
      if (ec != std::errc() || used == 0) {
        throw ParseError("expected a positive integer", offset + used);
      }
      if (used != text.size()) {
        throw ParseError("unexpected character", offset + used);
      }
      if (value == 0) {
        throw ParseError("expected a positive integer", offset);
      }
      return value;
    }
  }  // namespace

  Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
      return Rational(parse_positive(text, 0));
    }
    return Rational(parse_positive(text.substr(0, slash), 0),
                    parse_positive(text.substr(slash + 1), slash + 1));
  }

  BigInt Rational::numerator() const {
    return boost::multiprecision::numerator(_value);
  }

  BigInt Rational::denominator() const {
    return boost::multiprecision::denominator(_value);
  }

  Rational Rational::reciprocal() const {
    return Rational(BigRational(denominator(), numerator()));
  }

  Rational operator+(Rational const& x, Rational const& y) {
    return Rational(BigRational(x._value + y._value));
  }

  Rational operator*(Rational const& x, Rational const& y) {
    return Rational(BigRational(x._value * y._value));
  }

  std::strong_ordering operator<=>(Rational const& x, Rational const& y) {
    if (x._value < y._value) {
      return std::strong_ordering::less;
    }
    if (y._value < x._value) {
      return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  std::string to_string(Rational const& q) {
    return q.numerator().str() + "/" + q.denominator().str();
  }

  std::uint64_t to_u64(BigInt const& x) {
    if (x < 0 || x > BigInt(UINT64_MAX)) {
      throw Error(ErrorKind::overflow, "integer does not fit in 64 bits");
    }
    return static_cast<std::uint64_t>(x);
  }

}  // namespace ordmon
