#include <catch_amalgamated.hpp>

#include <set>  // for set

#include "ordmon/instances.hpp"
#include "ordmon/word.hpp"
#include "support.hpp"

using namespace ordmon;

namespace {
  // every word obtained from w by deleting letters
  std::set<Word> all_subwords(Word const& w) {
    std::set<Word> out;
    for (std::uint32_t mask = 0; mask < (1u << w.size()); ++mask) {
      Word v;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (mask & (1u << i)) {
          v.push_back(w[i]);
        }
      }
      out.insert(v);
    }
    return out;
  }

  CollapsedElement normal(Word w) {
    return CollapsedElement::of(std::move(w), "ab");
  }
}  // namespace

TEST_CASE("Word 01: subword against exhaustive deletion", "[quick][word][01]") {
  test::Rng rng(401);
  for (int trial = 0; trial < 500; ++trial) {
    Word w    = test::random_word(rng, 10, "abc");
    auto subs = all_subwords(w);
    for (int k = 0; k < 10; ++k) {
      Word v = test::random_word(rng, 5, "abc");
      REQUIRE(subword_le(v, w) == (subs.count(v) == 1));
    }
    for (auto const& v : subs) {
      REQUIRE(subword_le(v, w));
    }
  }
}

TEST_CASE("Word 02: subword order is a compatible partial order",
          "[quick][word][02]") {
  test::Rng rng(402);
  for (int trial = 0; trial < 2000; ++trial) {
    Word a = test::random_word(rng, 5);
    Word b = test::random_word(rng, 5);
    Word c = test::random_word(rng, 3);
    REQUIRE(subword_le("", a));
    if (subword_le(a, b)) {
      REQUIRE(subword_le(a + c, b + c));
      REQUIRE(subword_le(c + a, c + b));
      if (subword_le(b, a)) {
        REQUIRE(a == b);
      }
    }
    if (subword_le(a, b) && subword_le(b, c)) {
      REQUIRE(subword_le(a, c));
    }
  }
}

TEST_CASE("Word 03: collapsed cone sums", "[quick][word][03]") {
  REQUIRE(collapsed_add(normal("a"), normal("b"), "ab").is_top());
  REQUIRE(collapsed_add(normal("a"), normal("a"), "ab") == normal("aa"));
  REQUIRE(collapsed_add(CollapsedElement::top(), normal("b"), "ab").is_top());
  REQUIRE(collapsed_add(normal("b"), normal("a"), "ab") == normal("ba"));
  REQUIRE(normal("bab").is_top());
  REQUIRE(to_string(CollapsedElement::top()) == "T");
  REQUIRE(to_string(normal("ba")) == "ba");
}

TEST_CASE("Word 04: the collapsed quotient is a positive ordered monoid",
          "[quick][word][04]") {
  auto const inst = collapsed_monoid("ab");
  test::Rng  rng(403);
  for (int trial = 0; trial < 2000; ++trial) {
    auto a = normal(test::random_word(rng, 4));
    auto b = normal(test::random_word(rng, 4));
    auto c = normal(test::random_word(rng, 4));
    REQUIRE(inst.add(inst.add(a, b), c) == inst.add(a, inst.add(b, c)));
    REQUIRE(inst.le(inst.monoid.zero, a));
    REQUIRE(inst.le(a, CollapsedElement::top()));
    REQUIRE(inst.add(CollapsedElement::top(), a).is_top());
    REQUIRE(inst.add(a, CollapsedElement::top()).is_top());
    if (inst.le(a, b)) {
      REQUIRE(inst.le(inst.add(a, c), inst.add(b, c)));
      REQUIRE(inst.le(inst.add(c, a), inst.add(c, b)));
    }
  }
}

TEST_CASE("Word 05: word instance", "[quick][word][05]") {
  auto const inst = word_monoid();
  REQUIRE(inst.add("ab", "c") == "abc");
  REQUIRE(inst.le("ac", "abc"));
  REQUIRE(!inst.order.flags.contains(Postulate::T));
  REQUIRE(!inst.archimedean);
  REQUIRE(!inst.multiples_distinct);
}
