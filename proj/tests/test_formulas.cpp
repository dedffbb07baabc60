#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "g3/charlib.hpp"
#include "g3/formulas.hpp"
#include "oracles.hpp"

using namespace g3;

namespace {

VermaChar sum(int k, int n, std::initializer_list<const char*> words, std::int64_t mult = 1) {
  VermaChar c;
  for (const char* w : words) c.add(f(k, n, word(w)), mult);
  return c;
}

}  // namespace

TEST_CASE("tilting rows") {
  CHECK(*tilting(2, 10, word("1")) == sum(2, 10, {"e", "1"}) + sum(2, 11, {"e", "1"}));
  CHECK(tilting_row(2, 10, word("1"))->case_id == "tilting.generic");
  // k = 2, layer k−1, σ = 12.
  CHECK(*tilting(2, 1, word("12")) ==
        sum(2, 1, {"e", "1", "2", "12"}) + sum(2, 2, {"e"}, 2) + sum(2, 2, {"2", "12"}) + sum(2, 3, {"e", "1", "2", "12"}));
  const auto t = *tilting(0, 0, word("21212"));
  CHECK(t.total() == 12);
  CHECK(t.max_mult() == 1);
  CHECK_FALSE(tilting(0, 2, word("0")).known());
}

TEST_CASE("every tilting row has its top once and everything else strictly below") {
  for (int k = 0; k <= 5; ++k)
    for (int n = 0; n <= 3 * k + 8; ++n)
      for (const auto& w : weyl_elements()) {
        const auto t = tilting(k, n, w);
        if (!t) continue;
        const auto top = f(k, n, w);
        CHECK((*t)[top] == 1);
        for (const auto& [s, m] : *t) {
          CHECK(in_block(s, AtypicalBlock{k}));
          if (s != top) CHECK_MESSAGE(oracle::symbol_geq(top, s), (render(top) + " over " + render(s)));
          CHECK(weight_geq(top, s) == oracle::symbol_geq(top, s));
        }
      }
}

TEST_CASE("projective rows") {
  CHECK(*projective(2, 10, word("0w0")) == sum(2, 10, {"0w0"}) + sum(2, 11, {"0w0"}));
  const WeylElt w0 = WeylElt::longest2();
  VermaChar expected = sum(1, 0, {"w0", "0w0"});
  expected.add(f(1, 0, word("0w0") * word("2")));
  expected += sum(1, 1, {"0w0"}) + sum(1, 2, {"0w0"});
  CHECK(*projective(1, 0, w0) == expected);
  CHECK_FALSE(projective(0, 2, w0).known());
}

TEST_CASE("composition rows") {
  CHECK(*jordan_holder(2, 10, word("12")) == sum(2, 10, {"e", "1", "2", "12"}) + sum(2, 11, {"e", "1", "2", "12"}));
  CHECK(*jordan_holder(3, 12, word("e")) == sum(3, 12, {"e"}) + sum(3, 13, {"e"}));
  CHECK((*jordan_holder(1, 2, word("0w0")))[f(1, 0, WeylElt::longest2())] == 1);
  CHECK_FALSE(jordan_holder_row(0, 3, word("1")).known());
  for (int k = 0; k <= 3; ++k)
    for (int n = 0; n <= 3 * k + 8; ++n)
      for (const auto& w : weyl_elements())
        if (const auto j = jordan_holder(k, n, w)) CHECK((*j)[f(k, n, w)] == 1);
}

TEST_CASE("Soergel transform") {
  for (int k = 0; k <= 3; ++k)
    for (int n = 0; n <= 6; ++n)
      for (const auto& w : weyl_elements()) CHECK(-f(k, n, w) == f(k, n, word("0w0") * w));
  const auto t = *tilting(2, 3, word("121"));
  CHECK(soergel_transform(soergel_transform(t)) == t);
  for (int k = 0; k <= 3; ++k)
    for (int n = 0; n <= 3 * k + 8; ++n) {
      const auto a = tilting(k, n, word("0w0"));
      const auto b = projective(k, n, WeylElt::e());
      REQUIRE(a.known() == b.known());
      if (a) CHECK(soergel_transform(*a) == soergel_transform(*b));
    }
}

TEST_CASE("index set expressions") {
  const auto I = IndexSet::below(word("12").w2);
  CHECK(oracle::as_set(I.evaluate()) == oracle::as_set(interval(word("12"))));
  CHECK(I.a1().evaluate().size() == 8);
  CHECK(I.mod(1).evaluate().size() == 3);
  CHECK(IndexSet::above(word("121").w2).evaluate().size() == 6);
  CHECK((I | I).evaluate().size() == 8);
  CHECK(IndexSet::explicit_words({"2", "12"}).prefix0().evaluate() == ElementSet{word("02"), word("012")});
  CHECK(IndexSet::explicit_words({"2"}).times(1).evaluate() == ElementSet{word("21")});
  CHECK(IndexSet::below(Dihedral::longest()).descents(1).evaluate().size() == 6);
  CHECK_FALSE(I.render().empty());
}
