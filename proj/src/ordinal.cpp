#include "ordmon/ordinal.hpp"

#include <algorithm>  // for min

#include "ordmon/checked.hpp"
#include "ordmon/error.hpp"

namespace ordmon {

  namespace {
    Ordinal const& zero_ordinal() {
      static Ordinal const z;
      return z;
    }
  }  // namespace

  Ordinal Ordinal::finite(std::uint64_t n) {
    return power(Ordinal(), n);
  }

  Ordinal Ordinal::omega() {
    return power(finite(1), 1);
  }

  Ordinal Ordinal::power(Ordinal const& exponent, std::uint64_t coefficient) {
    Ordinal result;
    if (coefficient != 0) {
      result._terms.push_back(Term{exponent, coefficient});
    }
    return result;
  }

  Ordinal Ordinal::from_terms(std::vector<Term> terms) {
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (terms[i].coefficient == 0) {
        throw Error(ErrorKind::invalid_argument,
                    "Cantor normal form coefficients must be positive");
      }
      if (i > 0 && !(terms[i - 1].exponent > terms[i].exponent)) {
        throw Error(ErrorKind::invalid_argument,
                    "Cantor normal form exponents must strictly decrease");
      }
    }
    Ordinal result;
    result._terms = std::move(terms);
    return result;
  }

  bool Ordinal::is_finite() const {
    return _terms.empty()
           || (_terms.size() == 1 && _terms[0].exponent.is_zero());
  }

  Ordinal const& Ordinal::leading_exponent() const {
    return _terms.empty() ? zero_ordinal() : _terms.front().exponent;
  }

  bool operator==(Ordinal const& x, Ordinal const& y) {
    return x._terms == y._terms;
  }

  std::strong_ordering operator<=>(Ordinal const& x, Ordinal const& y) {
    return ord_cmp(x, y);
  }

  std::strong_ordering ord_cmp(Ordinal const& a, Ordinal const& b) {
    auto const& s = a.terms();
    auto const& t = b.terms();
    std::size_t n = std::min(s.size(), t.size());
    for (std::size_t i = 0; i < n; ++i) {
      auto c = ord_cmp(s[i].exponent, t[i].exponent);
      if (c != 0) {
        return c;
      }
      if (s[i].coefficient != t[i].coefficient) {
        return s[i].coefficient <=> t[i].coefficient;
      }
    }
    return s.size() <=> t.size();
  }

  Ordinal ord_add(Ordinal const& a, Ordinal const& b) {
    if (b.is_zero()) {
      return a;
    }
    auto const&            lead = b.terms().front();
    std::vector<Ordinal::Term> terms;
    terms.reserve(a.terms().size() + b.terms().size());
    for (auto const& term : a.terms()) {
      auto c = ord_cmp(term.exponent, lead.exponent);
      if (c > 0) {
        terms.push_back(term);
      } else {
        if (c == 0) {
          terms.push_back(Ordinal::Term{
              lead.exponent,
              detail::checked_add(term.coefficient, lead.coefficient)});
        }
        break;
      }
    }
    auto first = b.terms().begin();
    if (!terms.empty() && terms.back().exponent == lead.exponent) {
      ++first;
    }
    terms.insert(terms.end(), first, b.terms().end());
    return Ordinal::from_terms(std::move(terms));
  }

  std::string to_string(Ordinal const& a) {
    if (a.is_zero()) {
      return "0";
    }
    std::string out;
    for (auto const& term : a.terms()) {
      if (!out.empty()) {
        out += '+';
      }
      auto const& e = term.exponent;
      if (e.is_zero()) {
        out += std::to_string(term.coefficient);
        continue;
      }
      out += 'w';
      if (e != Ordinal::finite(1)) {
        out += '^';
        bool atomic = e.is_finite() || e == Ordinal::omega();
        if (atomic) {
          out += to_string(e);
        } else {
          out += '(' + to_string(e) + ')';
        }
      }
      if (term.coefficient != 1) {
        out += '*' + std::to_string(term.coefficient);
      }
    }
    return out;
  }

}  // namespace ordmon
