#include "ordmon/cli.hpp"

#include <algorithm>  // for reverse
#include <charconv>   // for from_chars
#include <cstdint>    // for uint64_t, int64_t
#include <fstream>    // for ifstream
#include <ostream>    // for ostream
#include <sstream>    // for ostringstream

#include <CLI11.hpp>

#include "ordmon/cayley.hpp"
#include "ordmon/difference_group.hpp"
#include "ordmon/divisibility.hpp"
#include "ordmon/error.hpp"
#include "ordmon/instances.hpp"
#include "ordmon/orderability.hpp"
#include "ordmon/ratio.hpp"
#include "ordmon/rational.hpp"
#include "ordmon/spectrum.hpp"

namespace ordmon::cli {

  namespace {

    class OrdinalParser {
     public:
      explicit OrdinalParser(std::string_view text) : _text(text) {}

      Ordinal parse() {
        Ordinal result = sum();
        skip_space();
        if (_pos != _text.size()) {
          fail("unexpected character '" + std::string(1, _text[_pos]) + "'");
        }
        return result;
      }

     private:
      [[noreturn]] void fail(std::string const& what) const {
        throw ParseError(what + " at position " + std::to_string(_pos), _pos);
      }

      void skip_space() {
        while (_pos < _text.size() && _text[_pos] == ' ') {
          ++_pos;
        }
      }

      bool accept(char c) {
        skip_space();
        if (_pos < _text.size() && _text[_pos] == c) {
          ++_pos;
          return true;
        }
        return false;
      }

      std::uint64_t integer() {
        skip_space();
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(
            _text.data() + _pos, _text.data() + _text.size(), value);
        if (ec == std::errc::result_out_of_range) {
          fail("integer out of range");
        }
        if (ec != std::errc()) {
          fail("expected an integer or w");
        }
        _pos = static_cast<std::size_t>(ptr - _text.data());
        return value;
      }

      Ordinal sum() {
        Ordinal result = term();
        while (accept('+')) {
          result = ord_add(result, term());
        }
        return result;
      }

      Ordinal term() {
        if (!accept('w')) {
          return Ordinal::finite(integer());
        }
        Ordinal exponent = Ordinal::finite(1);
        if (accept('^')) {
          exponent = atom();
        }
        std::uint64_t coefficient = 1;
        if (accept('*')) {
          std::size_t at = _pos;
          coefficient    = integer();
          if (coefficient == 0) {
            _pos = at;
            skip_space();
            fail("coefficient must be positive");
          }
        }
        return Ordinal::power(exponent, coefficient);
      }

      Ordinal atom() {
        if (accept('w')) {
          return Ordinal::omega();
        }
        if (accept('(')) {
          Ordinal inner = sum();
          if (!accept(')')) {
            fail("expected ')'");
          }
          return inner;
        }
        return Ordinal::finite(integer());
      }

      std::string_view _text;
      std::size_t      _pos = 0;
    };

  }  // namespace

  Ordinal parse_ordinal(std::string_view text) {
    return OrdinalParser(text).parse();
  }

  HeisenbergElement parse_heisenberg(std::string_view text) {
    std::size_t pos  = 0;
    auto        fail = [&](std::string const& what) {
      throw ParseError(what + " at position " + std::to_string(pos), pos);
    };
    auto skip_space = [&] {
      while (pos < text.size() && text[pos] == ' ') {
        ++pos;
      }
    };
    auto expect = [&](char c) {
      skip_space();
      if (pos >= text.size() || text[pos] != c) {
        fail(std::string("expected '") + c + "'");
      }
      ++pos;
    };
    auto integer = [&] {
      skip_space();
      std::int64_t value = 0;
      auto [ptr, ec]     = std::from_chars(
          text.data() + pos, text.data() + text.size(), value);
      if (ec == std::errc::result_out_of_range) {
        fail("integer out of range");
      }
      if (ec != std::errc()) {
        fail("expected an integer");
      }
      pos = static_cast<std::size_t>(ptr - text.data());
      return value;
    };
    HeisenbergElement x;
    expect('(');
    x.m = integer();
    expect(',');
    x.n = integer();
    expect(',');
    x.p = integer();
    expect(')');
    skip_space();
    if (pos != text.size()) {
      fail("unexpected character");
    }
    if (!heis_in_M(x)) {
      pos = 0;
      fail(to_string(x) + " is not in the cone M");
    }
    return x;
  }

  Word parse_word(std::string_view text) {
    if (text == "\"\"") {
      return {};
    }
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] < 'a' || text[i] > 'z') {
        throw ParseError("expected a lowercase letter at position "
                             + std::to_string(i),
                         i);
      }
    }
    return Word(text);
  }

  std::string print_word(Word const& w) {
    return w.empty() ? "\"\"" : w;
  }

  Element parse_element(InstanceKind kind, std::string_view text) {
    switch (kind) {
      case InstanceKind::ordinal:
        return parse_ordinal(text);
      case InstanceKind::heis:
        return parse_heisenberg(text);
      case InstanceKind::word:
        return parse_word(text);
      case InstanceKind::cayley:
        break;
    }
    throw Error(ErrorKind::invalid_argument,
                "cayley elements are table indices");
  }

  std::string print_element(Element const& e) {
    struct {
      std::string operator()(Ordinal const& x) const {
        return to_string(x);
      }
      std::string operator()(HeisenbergElement const& x) const {
        return to_string(x);
      }
      std::string operator()(Word const& x) const {
        return print_word(x);
      }
    } visitor;
    return std::visit(visitor, e);
  }

  namespace {

    struct Options {
      std::string              verb;
      std::string              instance;
      std::string              eps  = "1/1000";
      std::uint64_t            cap  = default_cap;
      std::string              side = "right";
      std::vector<std::string> args;
    };

    // A usage error detected after option parsing.
    struct Usage : std::runtime_error {
      using std::runtime_error::runtime_error;
    };

    InstanceKind kind_of(std::string const& name) {
      if (name == "ordinal") {
        return InstanceKind::ordinal;
      }
      if (name == "heis") {
        return InstanceKind::heis;
      }
      if (name == "word") {
        return InstanceKind::word;
      }
      return InstanceKind::cayley;
    }

    void require_args(Options const& opt, std::size_t n) {
      if (opt.args.size() != n) {
        throw Usage(opt.verb + " expects " + std::to_string(n)
                    + " arguments, got " + std::to_string(opt.args.size()));
      }
    }

    CayleyMonoid load_table(std::string const& path) {
      std::ifstream in(path);
      if (!in) {
        throw Usage("cannot open table file " + path);
      }
      return parse_cayley(in);
    }

    std::size_t parse_index(CayleyMonoid const& t, std::string const& text) {
      std::size_t value = 0;
      auto [ptr, ec]    = std::from_chars(
          text.data(), text.data() + text.size(), value);
      if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw ParseError("expected an element index at position "
                             + std::to_string(ptr - text.data()),
                         static_cast<std::size_t>(ptr - text.data()));
      }
      if (value >= t.size()) {
        throw ParseError("index " + text + " out of range", 0);
      }
      return value;
    }

    OrderedMonoid<std::size_t> ordered_table(CayleyMonoid const& t) {
      if (!is_orderable(t)) {
        throw Error(ErrorKind::unorderable_carrier,
                    "the table is not orderable");
      }
      return cayley_ordered(t);
    }

    std::string show(Ordinal const& x) {
      return to_string(x);
    }
    std::string show(HeisenbergElement const& x) {
      return to_string(x);
    }
    std::string show(Word const& x) {
      return print_word(x);
    }
    std::string show(std::size_t x) {
      return std::to_string(x);
    }

    template <typename E>
    E parse_as(std::string const& text) {
      if constexpr (std::is_same_v<E, Ordinal>) {
        return parse_ordinal(text);
      } else if constexpr (std::is_same_v<E, HeisenbergElement>) {
        return parse_heisenberg(text);
      } else {
        return parse_word(text);
      }
    }

    template <typename E>
    OrderedMonoid<E> instance_of() {
      if constexpr (std::is_same_v<E, Ordinal>) {
        return ordinal_monoid();
      } else if constexpr (std::is_same_v<E, HeisenbergElement>) {
        return heisenberg_monoid();
      } else {
        return word_monoid();
      }
    }

    template <typename E>
    std::vector<E> default_sample() {
      std::vector<E> out;
      if constexpr (std::is_same_v<E, Ordinal>) {
        for (auto s : {"0", "1", "2", "w", "w+1", "w*2", "w^2", "w^w"}) {
          out.push_back(parse_ordinal(s));
        }
      } else if constexpr (std::is_same_v<E, HeisenbergElement>) {
        for (std::int64_t m = -2; m <= 2; ++m) {
          for (std::int64_t n = -2; n <= 2; ++n) {
            for (std::int64_t p = -2; p <= 2; ++p) {
              HeisenbergElement x{m, n, p};
              if (heis_in_M(x)) {
                out.push_back(x);
              }
            }
          }
        }
      } else {
        for (auto s : {"", "a", "b", "ab", "ba", "aab"}) {
          out.push_back(s);
        }
      }
      return out;
    }

    template <typename E>
    void print_axioms(OrderedMonoid<E> inst,
                      std::vector<E>   sample,
                      std::ostream&    out) {
      bool has_zero = false;
      for (auto const& x : sample) {
        has_zero = has_zero || inst.eq(x, inst.monoid.zero);
      }
      if (!has_zero) {
        sample.insert(sample.begin(), inst.monoid.zero);
      }
      // every postulate is audited, whatever the instance declares
      inst.order.flags = {all_postulates.begin(), all_postulates.end()};
      auto report = audit_axioms(inst, std::span<E const>(sample));
      char const* sep = "";
      for (auto p : all_postulates) {
        out << sep << tag(p) << '=';
        sep = " ";
        auto const& v = report[p];
        if (v.pass) {
          out << "pass";
          continue;
        }
        out << "fail(";
        for (std::size_t i = 0; i < v.witness.size(); ++i) {
          out << (i ? "," : "") << show(v.witness[i]);
        }
        out << ')';
      }
      out << '\n';
    }

    void print_classification(Classification const& c,
                              std::uint64_t         cap,
                              std::ostream&         out) {
      out << to_string(c.value);
      if (c.value == PairClass::unknown_within_cap) {
        out << " cap=" << cap;
      }
      out << '\n';
    }

    void print_idem(GenIdemReport const& r, std::ostream& out) {
      if (r.found()) {
        out << "found n=" << r.n << " m=" << r.m << '\n';
      } else {
        out << "not-within-cap cap=" << r.cap << '\n';
      }
    }

    template <typename E>
    void print_divides(std::optional<E> const& c, std::ostream& out) {
      if (c) {
        out << "yes c=" << show(*c) << '\n';
      } else {
        out << "no\n";
      }
    }

    template <typename E>
    int run_elements(Options const& opt, std::ostream& out) {
      auto const inst = instance_of<E>();
      auto       arg  = [&](std::size_t i) { return parse_as<E>(opt.args[i]); };
      if (opt.verb == "ratio") {
        if constexpr (std::is_same_v<E, Word>) {
          throw Usage("ratio needs --instance ordinal or heis");
        } else {
          require_args(opt, 2);
          Rational const eps = Rational::parse(opt.eps);
          auto const     r   = ratio(inst, arg(0), arg(1), eps, opt.cap);
          out << "lo=" << to_string(r.lo) << " hi=" << to_string(r.hi)
              << " exact=" << (r.exact ? to_string(*r.exact) : "none")
              << " comparisons=" << r.comparisons << '\n';
        }
      } else if (opt.verb == "classify") {
        require_args(opt, 2);
        print_classification(
            classify_pair(inst, arg(0), arg(1), opt.cap), opt.cap, out);
      } else if (opt.verb == "divides") {
        require_args(opt, 2);
        E const a = arg(0);
        E const b = arg(1);
        print_divides(opt.side == "left" ? divides_left(a, b)
                                         : divides_right(a, b),
                      out);
      } else if (opt.verb == "axioms") {
        std::vector<E> sample;
        for (std::size_t i = 0; i < opt.args.size(); ++i) {
          sample.push_back(arg(i));
        }
        if (sample.empty()) {
          sample = default_sample<E>();
        }
        print_axioms(inst, sample, out);
      } else if (opt.verb == "subword") {
        if constexpr (!std::is_same_v<E, Word>) {
          throw Usage("subword needs --instance word");
        } else {
          require_args(opt, 2);
          out << (subword_le(arg(0), arg(1)) ? "yes" : "no") << '\n';
        }
      } else if (opt.verb == "diffgroup") {
        if constexpr (std::is_same_v<E, Word>) {
          throw Usage("diffgroup needs --instance heis");
        } else {
          if (opt.args.size() != 2 && opt.args.size() != 4) {
            throw Usage("diffgroup expects 2 or 4 arguments, got "
                        + std::to_string(opt.args.size()));
          }
          DifferenceInstance<E> di;
          if constexpr (std::is_same_v<E, Ordinal>) {
            di = ordinal_differences();
          } else {
            di = heisenberg_differences();
          }
          DifferenceGroup<E> group(std::move(di));
          DiffPair<E>        x{arg(0), arg(1)};
          if (opt.args.size() == 4) {
            x = group.add(x, DiffPair<E>{arg(2), arg(3)});
          }
          auto const c = group.canonical(x);
          out << '[' << show(c.b) << '-' << show(c.a) << "]\n";
        }
      } else if (opt.verb == "idem") {
        require_args(opt, 1);
        print_idem(generalized_idempotent(inst, arg(0), opt.cap), out);
      } else {
        throw Usage(opt.verb + " needs --instance cayley");
      }
      return 0;
    }

    int run_cayley(Options const& opt, std::ostream& out) {
      if (opt.args.empty()) {
        throw Usage(opt.verb + " expects a table file");
      }
      CayleyMonoid const t   = load_table(opt.args[0]);
      auto               idx = [&](std::size_t i) {
        return parse_index(t, opt.args[i]);
      };
      if (opt.verb == "orderable") {
        require_args(opt, 1);
        auto v = is_orderable(t);
        if (v) {
          out << "yes\n";
        } else {
          out << "no witness=" << v.witness->a << ',' << v.witness->b
              << '\n';
        }
      } else if (opt.verb == "axioms") {
        require_args(opt, 1);
        std::vector<std::size_t> sample(t.size());
        for (std::size_t i = 0; i < t.size(); ++i) {
          sample[i] = i;
        }
        print_axioms(cayley_ordered(t), sample, out);
      } else if (opt.verb == "divides") {
        require_args(opt, 3);
        std::size_t const a = idx(1);
        std::size_t const b = idx(2);
        print_divides(opt.side == "left" ? divides_left(t, a, b)
                                         : divides_right(t, a, b),
                      out);
      } else if (opt.verb == "classify") {
        require_args(opt, 3);
        std::size_t const a = idx(1);
        std::size_t const b = idx(2);
        print_classification(
            classify_pair(ordered_table(t), a, b, opt.cap), opt.cap, out);
      } else if (opt.verb == "idem") {
        require_args(opt, 2);
        std::size_t const a = idx(1);
        print_idem(generalized_idempotent(cayley_ordered(t), a, opt.cap),
                   out);
      } else {
        throw Usage(opt.verb + " does not support --instance cayley");
      }
      return 0;
    }

    int dispatch(Options const& opt, std::ostream& out) {
      switch (kind_of(opt.instance)) {
        case InstanceKind::ordinal:
          return run_elements<Ordinal>(opt, out);
        case InstanceKind::heis:
          return run_elements<HeisenbergElement>(opt, out);
        case InstanceKind::word:
          return run_elements<Word>(opt, out);
        case InstanceKind::cayley:
          return run_cayley(opt, out);
      }
      return 2;
    }

    std::string default_instance(std::string const& verb) {
      if (verb == "subword") {
        return "word";
      }
      if (verb == "orderable") {
        return "cayley";
      }
      if (verb == "diffgroup") {
        return "heis";
      }
      return "ordinal";
    }

  }  // namespace

  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err) {
    CLI::App app{"Positive ordered monoids: divisibility, orderability, "
                 "Archimedean classes and ratios",
                 "ordmon"};
    app.require_subcommand(1);
    Options opt;

    struct Verb {
      char const* name;
      char const* help;
      bool        eps;
      bool        side;
    };
    static constexpr Verb verbs[] = {
        {"ratio", "bracket the ratio a:b", true, false},
        {"classify", "commensurable or infinitely greater", false, false},
        {"divides", "solve a + c = b (right) or c + a = b (left)", false, true},
        {"orderable", "is the minimal preorder of a table antisymmetric",
         false, false},
        {"axioms", "audit the order postulates on a sample", false, false},
        {"subword", "is a a subword of b", false, false},
        {"diffgroup", "canonical class of b - a, or a sum of two classes",
         false, false},
        {"idem", "is a a generalized idempotent", false, false},
    };
    for (auto const& v : verbs) {
      auto* sub = app.add_subcommand(v.name, v.help);
      sub->add_option("--instance", opt.instance, "ordinal, heis, word or cayley")
          ->check(CLI::IsMember({"ordinal", "heis", "word", "cayley"}));
      sub->add_option("--cap", opt.cap, "search bound")
          ->check(CLI::PositiveNumber);
      if (v.eps) {
        sub->add_option("--eps", opt.eps, "bracket width p/q");
      }
      if (v.side) {
        sub->add_option("--side", opt.side, "left or right")
            ->check(CLI::IsMember({"left", "right"}));
      }
      sub->add_option("args", opt.args, "elements, or a table file first");
      sub->callback([&opt, sub] { opt.verb = sub->get_name(); });
    }

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      int code = app.exit(e, out, err);
      return code == 0 ? 0 : 2;
    }
    if (opt.instance.empty()) {
      opt.instance = default_instance(opt.verb);
    }

    try {
      return dispatch(opt, out);
    } catch (Usage const& e) {
      err << "usage error: " << e.what() << '\n';
      return 2;
    } catch (ParseError const& e) {
      err << "parse error: " << e.what() << '\n';
      return 2;
    } catch (Error const& e) {
      if (e.kind() == ErrorKind::invalid_table
          || e.kind() == ErrorKind::invalid_argument) {
        err << "input error: " << e.what() << '\n';
        return 2;
      }
      err << "error: " << e.what() << '\n';
      return 1;
    }
  }

}  // namespace ordmon::cli
