#ifndef ORDMON_ORDINAL_HPP_
#define ORDMON_ORDINAL_HPP_

#include <compare>  // for strong_ordering
#include <cstdint>  // for uint64_t
#include <string>   // for string
#include <vector>   // for vector

namespace ordmon {

  //! An ordinal below epsilon_0 in Cantor normal form,
  //! w^e1*c1 + ... + w^ek*ck with e1 > ... > ek and every ci > 0.
  //!
  //! The normal form is enforced on construction, so equality is
  //! structural.
  class Ordinal {
   public:
    struct Term;

    Ordinal() = default;

    static Ordinal finite(std::uint64_t n);
    static Ordinal omega();
    //! w^exponent * coefficient; coefficient 0 gives 0.
    static Ordinal power(Ordinal const& exponent, std::uint64_t coefficient = 1);
    //! Throws Error(invalid_argument) unless terms are in normal form.
    static Ordinal from_terms(std::vector<Term> terms);

    std::vector<Term> const& terms() const noexcept {
      return _terms;
    }

    bool is_zero() const noexcept {
      return _terms.empty();
    }

    bool is_finite() const;

    //! Exponent of the leading term; 0 for the zero ordinal.
    Ordinal const& leading_exponent() const;

    friend bool operator==(Ordinal const& x, Ordinal const& y);
    friend std::strong_ordering operator<=>(Ordinal const& x,
                                            Ordinal const& y);

   private:
    std::vector<Term> _terms;
  };

  struct Ordinal::Term {
    Ordinal       exponent;
    std::uint64_t coefficient;

    friend bool operator==(Term const& x, Term const& y) {
      return x.coefficient == y.coefficient && x.exponent == y.exponent;
    }
  };

  //! Ordinal sum: trailing terms of a below the leading exponent of b are
  //! absorbed, equal leading exponents merge.
  Ordinal ord_add(Ordinal const& a, Ordinal const& b);

  //! Lexicographic comparison of the term sequences.
  std::strong_ordering ord_cmp(Ordinal const& a, Ordinal const& b);

  inline Ordinal operator+(Ordinal const& a, Ordinal const& b) {
    return ord_add(a, b);
  }

  //! Uses the CLI grammar: "0", "5", "w", "w*3+5", "w^2", "w^(w+1)*2".
  std::string to_string(Ordinal const& a);

}  // namespace ordmon

#endif  // ORDMON_ORDINAL_HPP_
