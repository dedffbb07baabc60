#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "g3/charlib.hpp"
#include "g3/seeds.hpp"
#include "g3/verify.hpp"

using namespace g3;

TEST_CASE("translation of the typical seed onto the longest element") {
  TranslationStore store;
  const auto r = store.verify(0, 0, word("21212"));
  CHECK(r.verdict == Verdict::Pass);
  CHECK(r.detail.find("[-3/2|0,0,0]") != std::string::npos);
  CHECK(tilting(0, 0, word("21212"))->total() == 12);
}

TEST_CASE("two-summand case") {
  const auto sc = seed_case(0, 0, word("01212"));
  REQUIRE(sc.summands.size() == 2);
  CHECK(sc.summands[1] == WeylElt::longest2());
  TranslationStore store;
  const auto r = store.verify(0, 0, word("01212"));
  CHECK(r.verdict == Verdict::Pass);
  CHECK(r.flagged);
}

TEST_CASE("unknown row is skipped, not failed") {
  TranslationStore store;
  CHECK(store.verify(0, 2, word("0")).verdict == Verdict::SkippedUnknown);
}

TEST_CASE("a corrupted expectation is reported with a symbol-level diff") {
  TranslationStore store;
  const auto seed = store.seed_tilting_char(f(2, 10, word("1")) - to_symbol(delta() * 2));
  REQUIRE(seed);
  const auto got = translate(*seed, AtypicalBlock{2});
  CHECK(got == *tilting(2, 10, word("1")));
  CHECK_FALSE(got == *tilting(2, 10, word("2")));
}

TEST_CASE("small suites") {
  SuiteParams p;
  p.kmax = 2;
  for (const char* s : {"translation", "duality", "lengths", "table2", "jantzen"}) {
    const auto r = verify_suite(s, p);
    CHECK_MESSAGE(r.ok(), s);
    CHECK(r.count(Verdict::Pass) > 0);
  }
  CHECK_THROWS(verify_suite("bogus", p));
  CHECK(proof_chains(0).size() == 4);
  CHECK(proof_chains(2).size() == 8);
}

TEST_CASE("reports are deterministic and carry exact diffs") {
  SuiteParams p;
  p.kmax = 1;
  const auto a = to_json(verify_translation(p)).dump();
  const auto b = to_json(verify_translation(p)).dump();
  CHECK(a == b);

  CaseResult c{"x", "y", 1, 2, word("1")};
  c.verdict = Verdict::Fail;
  c.extra.add(f(1, 2));
  const auto j = to_json(c);
  CHECK(j["verdict"] == "fail");
  const auto s = f(1, 2);
  CHECK(j["extra"][0]["symbol"] == nlohmann::json{s.d2, s.x2, s.y2, s.z2});
  CHECK(j["extra"][0]["mult"] == 1);
  CHECK(j["w"] == "1");
}
