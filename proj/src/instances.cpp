#include "ordmon/instances.hpp"

#include <memory>  // for make_shared
#include <string>  // for string

namespace ordmon {

  namespace {
    std::set<Postulate> const total_order_flags{
        Postulate::O, Postulate::P, Postulate::C, Postulate::T, Postulate::A};
    std::set<Postulate> const partial_order_flags{
        Postulate::O, Postulate::P, Postulate::C, Postulate::A};

    int heis_rank(HeisenbergElement const& a) {
      if (a.m != 0) {
        return 3;
      } else if (a.n != 0) {
        return 2;
      } else if (a.p != 0) {
        return 1;
      }
      return 0;
    }
  }  // namespace

  OrderedMonoid<Ordinal> ordinal_monoid() {
    OrderedMonoid<Ordinal> inst;
    inst.monoid = {Ordinal(),
                   [](Ordinal const& x, Ordinal const& y) {
                     return ord_add(x, y);
                   },
                   [](Ordinal const& x, Ordinal const& y) { return x == y; }};
    inst.order  = {[](Ordinal const& x, Ordinal const& y) {
                    return ord_cmp(x, y) <= 0;
                  },
                  total_order_flags};
    inst.archimedean = [](Ordinal const& x, Ordinal const& y) {
      if (x.is_zero() || y.is_zero()) {
        return static_cast<std::partial_ordering>(!x.is_zero() <=> !y.is_zero());
      }
      return static_cast<std::partial_ordering>(
          ord_cmp(x.leading_exponent(), y.leading_exponent()));
    };
    // na < na + a for nonzero a
    inst.multiples_distinct = [](Ordinal const& x) { return !x.is_zero(); };
    inst.print = [](Ordinal const& x) { return to_string(x); };
    return inst;
  }

  OrderedMonoid<HeisenbergElement> heisenberg_monoid() {
    using H = HeisenbergElement;
    OrderedMonoid<H> inst;
    inst.monoid = {H{},
                   [](H const& x, H const& y) { return heis_add(x, y); },
                   [](H const& x, H const& y) { return x == y; }};
    inst.order  = {[](H const& x, H const& y) { return heis_lex_le(x, y); },
                  total_order_flags};
    inst.archimedean = [](H const& x, H const& y) {
      return static_cast<std::partial_ordering>(heis_rank(x) <=> heis_rank(y));
    };
    // H is torsion-free
    inst.multiples_distinct = [](H const& x) { return !(x == H{}); };
    inst.print              = [](H const& x) { return to_string(x); };
    return inst;
  }

  OrderedMonoid<Word> word_monoid() {
    OrderedMonoid<Word> inst;
    inst.monoid = {Word(),
                   [](Word const& x, Word const& y) { return x + y; },
                   [](Word const& x, Word const& y) { return x == y; }};
    inst.order  = {[](Word const& x, Word const& y) {
                    return subword_le(x, y);
                  },
                  partial_order_flags};
    inst.print  = [](Word const& x) { return x; };
    return inst;
  }

  OrderedMonoid<CollapsedElement> collapsed_monoid(Word pivot) {
    using C    = CollapsedElement;
    auto shared = std::make_shared<Word const>(std::move(pivot));
    OrderedMonoid<C> inst;
    inst.monoid = {C(),
                   [shared](C const& x, C const& y) {
                     return collapsed_add(x, y, *shared);
                   },
                   [](C const& x, C const& y) { return x == y; }};
    inst.order  = {[](C const& x, C const& y) { return collapsed_le(x, y); },
                  partial_order_flags};
    inst.print  = [](C const& x) { return to_string(x); };
    return inst;
  }

  MonoidContract<std::size_t> cayley_contract(CayleyMonoid const& t) {
    auto shared = std::make_shared<CayleyMonoid const>(t);
    return {t.unit(),
            [shared](std::size_t x, std::size_t y) {
              return shared->add(x, y);
            },
            [](std::size_t x, std::size_t y) { return x == y; }};
  }

}  // namespace ordmon
