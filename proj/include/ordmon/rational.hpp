#ifndef ORDMON_RATIONAL_HPP_
#define ORDMON_RATIONAL_HPP_

// Positive exact rationals, always in lowest terms.

#include <compare>      // for strong_ordering
#include <cstdint>      // for uint64_t
#include <string>       // for string
#include <string_view>  // for string_view

#include <boost/multiprecision/cpp_int.hpp>

namespace ordmon {

  using BigInt      = boost::multiprecision::cpp_int;
  using BigRational = boost::multiprecision::cpp_rational;

  class Rational {
   public:
    //! Throws Error(invalid_argument) unless num and den are positive.
    Rational(std::uint64_t num, std::uint64_t den = 1);
    //! Throws Error(invalid_argument) unless value > 0.
    explicit Rational(BigRational value);

    //! "p/q" or "p" with p, q positive decimal integers. Throws ParseError.
    static Rational parse(std::string_view text);

    BigInt numerator() const;
    BigInt denominator() const;

    BigRational const& value() const noexcept {
      return _value;
    }

    Rational reciprocal() const;

    friend Rational operator+(Rational const& x, Rational const& y);
    friend Rational operator*(Rational const& x, Rational const& y);

    friend bool operator==(Rational const& x, Rational const& y) {
      return x._value == y._value;
    }
    friend std::strong_ordering operator<=>(Rational const& x,
                                            Rational const& y);

   private:
    BigRational _value;
  };

  //! Always "p/q", including q = 1.
  std::string to_string(Rational const& q);

  //! The value as a uint64_t; throws Error(overflow) if it does not fit.
  std::uint64_t to_u64(BigInt const& x);

}  // namespace ordmon

#endif  // ORDMON_RATIONAL_HPP_
