#include <catch_amalgamated.hpp>

#include "ordmon/core.hpp"
#include "ordmon/instances.hpp"
#include "support.hpp"

using namespace ordmon;

TEST_CASE("Core 01: natural multiples by doubling", "[quick][core][01]") {
  auto const m = heisenberg_monoid().monoid;
  test::Rng  rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    auto          a = test::random_heis(rng, 5);
    std::uint64_t n = test::uniform(rng, 0, 40);
    auto          slow = m.zero;
    for (std::uint64_t k = 0; k < n; ++k) {
      slow = m.add(slow, a);
    }
    REQUIRE(nat_mul(n, a, m) == slow);
  }
}

TEST_CASE("Core 02: multiples add", "[quick][core][02]") {
  auto const inst = ordinal_monoid();
  test::Rng  rng(102);
  for (int trial = 0; trial < 200; ++trial) {
    auto          a = test::random_ordinal(rng);
    std::uint64_t n = test::uniform(rng, 0, 20);
    std::uint64_t k = test::uniform(rng, 0, 20);
    REQUIRE(nat_mul(n + k, a, inst)
            == inst.add(nat_mul(n, a, inst), nat_mul(k, a, inst)));
  }
}

TEST_CASE("Core 03: Heisenberg cone passes every postulate",
          "[quick][core][03]") {
  auto const inst   = heisenberg_monoid();
  auto const sample = test::heis_box(2);
  auto const report = audit_axioms(inst, std::span(sample));
  REQUIRE(report.audited.size() == 5);
  REQUIRE(report.all_pass());
}

TEST_CASE("Core 04: ordinals are compatible but not strictly",
          "[quick][core][04]") {
  auto const inst = ordinal_monoid();
  auto const w    = Ordinal::omega();
  std::vector<Ordinal> sample{Ordinal(), Ordinal::finite(1), w,
                              ord_add(w, Ordinal::finite(1))};
  REQUIRE(audit_axioms(inst, std::span<Ordinal const>(sample)).all_pass());

  // 0 < 1 yet 0 + w = 1 + w: the strict form of (C) fails on the left
  Ordinal const zero, one = Ordinal::finite(1);
  REQUIRE(inst.le(zero, one));
  REQUIRE(!(zero == one));
  REQUIRE(ord_add(zero, w) == ord_add(one, w));
}

TEST_CASE("Core 05: audit witnesses replay", "[quick][core][05]") {
  // reverse lexicographic order on M: total and antisymmetric but not
  // positive
  auto inst     = heisenberg_monoid();
  inst.order.le = [](HeisenbergElement const& x, HeisenbergElement const& y) {
    return heis_lex_le(y, x);
  };
  auto const sample = test::heis_box(1);
  auto const report = audit_axioms(inst, std::span(sample));
  REQUIRE(!report[Postulate::P].pass);
  REQUIRE(report[Postulate::T].pass);
  REQUIRE(report[Postulate::A].pass);
  for (auto p : all_postulates) {
    auto const& v = report[p];
    if (!v.pass) {
      REQUIRE(v.witness.size() == arity(p));
      REQUIRE(refutes<HeisenbergElement>(
          p, inst.monoid, inst.order, std::span(v.witness)));
    }
  }
}

TEST_CASE("Core 06: subword order is not total", "[quick][core][06]") {
  auto const           inst = word_monoid();
  std::vector<Word>    sample{"", "a", "b", "ab"};
  auto                 o = inst.order;
  o.flags.insert(Postulate::T);
  auto const report = audit_axioms(inst.monoid, o, std::span<Word const>(sample));
  REQUIRE(!report[Postulate::T].pass);
  REQUIRE(report[Postulate::T].witness == std::vector<Word>{"a", "b"});
  REQUIRE(report[Postulate::C].pass);
  REQUIRE(report[Postulate::P].pass);
}

TEST_CASE("Core 07: audit needs the unit", "[quick][core][07]") {
  auto const        inst = word_monoid();
  std::vector<Word> sample{"a", "b"};
  REQUIRE_THROWS_AS(audit_axioms(inst, std::span<Word const>(sample)), Error);
}

TEST_CASE("Core 08: verdicts", "[quick][core][08]") {
  Verdict<int> ok;
  Verdict<int> bad{3};
  REQUIRE(ok.holds());
  REQUIRE(static_cast<bool>(ok));
  REQUIRE(!bad.holds());
  REQUIRE(*bad.witness == 3);
}
