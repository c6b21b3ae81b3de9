#include "ordmon/cayley.hpp"

#include <algorithm>  // for max, min
#include <charconv>   // for from_chars
#include <istream>    // for istream, getline
#include <sstream>    // for istringstream, ostringstream

#include "ordmon/error.hpp"
#include "ordmon/word.hpp"

namespace ordmon {

  std::optional<TableViolation> cayley_validate(CayleyTable const& t) {
    std::size_t const n = t.size;
    if (n == 0) {
      throw Error(ErrorKind::invalid_table, "table size must be positive");
    }
    if (t.entries.size() != n * n) {
      throw Error(ErrorKind::invalid_table,
                  "table has " + std::to_string(t.entries.size())
                      + " entries, expected " + std::to_string(n * n));
    }
    if (t.unit >= n) {
      throw Error(ErrorKind::invalid_table, "unit index out of range");
    }
    for (auto e : t.entries) {
      if (e >= n) {
        throw Error(ErrorKind::invalid_table,
                    "table entry " + std::to_string(e) + " out of range");
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (t(t.unit, x) != x) {
        return TableViolation{TableViolation::Kind::left_unit, {x, 0, 0}};
      }
      if (t(x, t.unit) != x) {
        return TableViolation{TableViolation::Kind::right_unit, {x, 0, 0}};
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        std::size_t xy = t(x, y);
        for (std::size_t z = 0; z < n; ++z) {
          if (t(xy, z) != t(x, t(y, z))) {
            return TableViolation{TableViolation::Kind::associativity,
                                  {x, y, z}};
          }
        }
      }
    }
    return std::nullopt;
  }

  CayleyMonoid::CayleyMonoid(CayleyTable table, std::vector<std::string> labels)
      : _table(std::move(table)), _labels(std::move(labels)) {
    if (auto v = cayley_validate(_table)) {
      auto const& e = v->elements;
      switch (v->kind) {
        case TableViolation::Kind::associativity:
          throw Error(ErrorKind::invalid_table,
                      "table is not associative at (" + std::to_string(e[0])
                          + "," + std::to_string(e[1]) + ","
                          + std::to_string(e[2]) + ")");
        default:
          throw Error(ErrorKind::invalid_table,
                      "unit law fails at element " + std::to_string(e[0]));
      }
    }
    if (!_labels.empty() && _labels.size() != _table.size) {
      throw Error(ErrorKind::invalid_argument, "label count must match size");
    }
  }

  std::string CayleyMonoid::label(std::size_t x) const {
    return _labels.empty() ? std::to_string(x) : _labels[x];
  }

  bool CayleyMonoid::is_commutative() const {
    for (std::size_t x = 0; x < size(); ++x) {
      for (std::size_t y = x + 1; y < size(); ++y) {
        if (add(x, y) != add(y, x)) {
          return false;
        }
      }
    }
    return true;
  }

  namespace {
    std::vector<std::size_t> parse_line(std::string const& line,
                                        std::size_t        lineno) {
      std::vector<std::size_t> values;
      std::size_t              i = 0;
      while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
          ++i;
          continue;
        }
        std::size_t value = 0;
        auto [ptr, ec]    = std::from_chars(
            line.data() + i, line.data() + line.size(), value);
        std::size_t consumed = ptr - (line.data() + i);
        if (ec != std::errc() || consumed == 0
            || (ptr != line.data() + line.size() && *ptr != ' '
                && *ptr != '\t' && *ptr != '\r')) {
          throw ParseError("line " + std::to_string(lineno)
                               + ": expected a nonnegative integer at column "
                               + std::to_string(i + 1),
                           i,
                           lineno);
        }
        values.push_back(value);
        i += consumed;
      }
      return values;
    }

    std::size_t parse_single(std::string const& line,
                             std::size_t        lineno,
                             char const*        what) {
      auto values = parse_line(line, lineno);
      if (values.size() != 1) {
        throw ParseError("line " + std::to_string(lineno) + ": expected "
                             + what,
                         0,
                         lineno);
      }
      return values[0];
    }
  }  // namespace

  CayleyMonoid parse_cayley(std::istream& in) {
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) {
      lines.push_back(line);
    }
    while (!lines.empty()
           && lines.back().find_first_not_of(" \t\r") == std::string::npos) {
      lines.pop_back();
    }
    if (lines.empty()) {
      throw ParseError("line 1: expected the table size", 0, 1);
    }
    CayleyTable t;
    t.size = parse_single(lines[0], 1, "the table size");
    if (t.size == 0) {
      throw ParseError("line 1: table size must be positive", 0, 1);
    }
    if (lines.size() < 2) {
      throw ParseError("line 2: expected the unit index", 0, 2);
    }
    t.unit = parse_single(lines[1], 2, "the unit index");
    if (t.unit >= t.size) {
      throw ParseError("line 2: unit index out of range", 0, 2);
    }
    t.entries.reserve(t.size * t.size);
    for (std::size_t r = 0; r < t.size; ++r) {
      std::size_t lineno = r + 3;
      if (r + 2 >= lines.size()) {
        throw ParseError("line " + std::to_string(lineno)
                             + ": missing table row",
                         0,
                         lineno);
      }
      auto row = parse_line(lines[r + 2], lineno);
      if (row.size() != t.size) {
        throw ParseError("line " + std::to_string(lineno) + ": expected "
                             + std::to_string(t.size) + " entries, found "
                             + std::to_string(row.size()),
                         0,
                         lineno);
      }
      for (auto v : row) {
        if (v >= t.size) {
          throw ParseError("line " + std::to_string(lineno) + ": entry "
                               + std::to_string(v) + " out of range",
                           0,
                           lineno);
        }
        t.entries.push_back(v);
      }
    }
    if (lines.size() > t.size + 2) {
      std::size_t lineno = t.size + 3;
      throw ParseError("line " + std::to_string(lineno)
                           + ": unexpected line after the table",
                       0,
                       lineno);
    }
    return CayleyMonoid(std::move(t));
  }

  CayleyMonoid parse_cayley(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_cayley(in);
  }

  std::string format_cayley(CayleyMonoid const& t) {
    std::ostringstream out;
    out << t.size() << '\n' << t.unit() << '\n';
    for (std::size_t x = 0; x < t.size(); ++x) {
      for (std::size_t y = 0; y < t.size(); ++y) {
        out << (y == 0 ? "" : " ") << t.add(x, y);
      }
      out << '\n';
    }
    return out.str();
  }

  CayleyMonoid saturating_chain(std::size_t cap) {
    CayleyTable t{cap + 1, 0, {}};
    for (std::size_t x = 0; x <= cap; ++x) {
      for (std::size_t y = 0; y <= cap; ++y) {
        t.entries.push_back(std::min(x + y, cap));
      }
    }
    return CayleyMonoid(std::move(t));
  }

  CayleyMonoid cyclic_group(std::size_t n) {
    CayleyTable t{n, 0, {}};
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        t.entries.push_back((x + y) % n);
      }
    }
    return CayleyMonoid(std::move(t));
  }

  CayleyMonoid max_semilattice(std::size_t k) {
    CayleyTable t{k + 1, 0, {}};
    for (std::size_t x = 0; x <= k; ++x) {
      for (std::size_t y = 0; y <= k; ++y) {
        t.entries.push_back(std::max(x, y));
      }
    }
    return CayleyMonoid(std::move(t));
  }

  CayleyMonoid direct_product(CayleyMonoid const& a, CayleyMonoid const& b) {
    std::size_t const nb = b.size();
    CayleyTable       t{a.size() * nb, a.unit() * nb + b.unit(), {}};
    for (std::size_t x = 0; x < t.size; ++x) {
      for (std::size_t y = 0; y < t.size; ++y) {
        t.entries.push_back(a.add(x / nb, y / nb) * nb
                            + b.add(x % nb, y % nb));
      }
    }
    return CayleyMonoid(std::move(t));
  }

  CayleyMonoid collapsed_cone_table(std::string_view alphabet,
                                    std::string_view pivot,
                                    std::size_t      max_len) {
    std::vector<Word> words{Word()};
    std::vector<Word> layer{Word()};
    for (std::size_t len = 1; len <= max_len; ++len) {
      std::vector<Word> next;
      for (auto const& w : layer) {
        for (char c : alphabet) {
          next.push_back(w + c);
        }
      }
      layer.clear();
      for (auto& w : next) {
        if (!subword_le(pivot, w)) {
          layer.push_back(w);
          words.push_back(w);
        }
      }
    }
    std::size_t const top = words.size();
    CayleyTable       t{top + 1, 0, {}};
    auto              index_of = [&](Word const& w) {
      if (w.size() > max_len) {
        return top;
      }
      for (std::size_t i = 0; i < words.size(); ++i) {
        if (words[i] == w) {
          return i;
        }
      }
      return top;
    };
    for (std::size_t x = 0; x <= top; ++x) {
      for (std::size_t y = 0; y <= top; ++y) {
        if (x == top || y == top) {
          t.entries.push_back(top);
        } else {
          t.entries.push_back(index_of(words[x] + words[y]));
        }
      }
    }
    std::vector<std::string> labels;
    for (auto const& w : words) {
      labels.push_back(w.empty() ? std::string("e") : w);
    }
    labels.emplace_back("T");
    return CayleyMonoid(std::move(t), std::move(labels));
  }

}  // namespace ordmon
