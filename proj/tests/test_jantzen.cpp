#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "g3/jantzen.hpp"
#include "oracles.hpp"

using namespace g3;

TEST_CASE("sum formula data") {
  const auto r = jantzen_rhs(f(0, 0));
  CHECK(std::ranges::any_of(r.musson, [](const MussonTerm& m) { return m.label == f(0, 1); }));
  for (const auto& m : r.musson) CHECK(form(f(0, 0), m.gamma.weight) == Rational(0));

  const auto rs = to_symbol(rho());
  const auto rr = jantzen_rhs(rs);
  CHECK(std::ranges::any_of(rr.even, [](const EvenTerm& e) { return e.label == Symbol{-5, 4, 1, -5}; }));
  for (const auto& e : rr.even) CHECK(e.pairing > Rational(0));

  const Symbol typical{-3, 0, 0, 0};
  REQUIRE(is_antidominant(typical));
  for (const auto& e : jantzen_rhs(typical).even) CHECK(e.alpha.name == "2d");
  CHECK(jantzen_rhs(typical).musson.empty());
}

TEST_CASE("flag witnesses") {
  const auto w = find_flag_witness(f(0, 0), f(0, 1));
  REQUIRE(w);
  CHECK(w->clause == 3);
  CHECK(w->odd.at(0).name == "d+e2");
  CHECK(validate(*w));

  const auto c = find_flag_witness(f(2, 1, word("12")), f(2, 3, word("12")));
  REQUIRE(c);
  CHECK(c->clause == 5);
  CHECK(c->odd.at(0).name == "d-e2");
  CHECK(c->odd.at(1).name == "d-e3");
  CHECK(c->even.empty());
  CHECK(c->odd[0].height < c->odd[1].height);

  CHECK_FALSE(find_flag_witness(f(1, 2), f(1, 2)));
  CHECK(kMaxChain <= 8);

  for (const auto& [target, wit] : all_flag_witnesses(f(2, 4, word("21")))) {
    CHECK(validate(wit));
    CHECK(wit.to() == target);
    CHECK(wit.from() == f(2, 4, word("21")));
  }
}

TEST_CASE("a tampered witness fails validation") {
  auto w = *find_flag_witness(f(0, 0), f(0, 1));
  w.odd[0] = root_named("d-e1");
  CHECK_FALSE(validate(w));
}

TEST_CASE("connectivity of two-layer rows in block 2") {
  std::vector<RowLabel> rows;
  for (int n = 0; n <= 10; ++n)
    for (const auto& w : dihedral_elements()) {
      const auto row = tilting_row(2, n, WeylElt{false, w});
      if (!row) continue;
      const auto& id = row->case_id;
      if ((id == "tilting.generic" || id == "tilting.red" || id == "tilting.blue") && layer_count(*row) == 2)
        rows.push_back({2, n, WeylElt{false, w}});
    }
  REQUIRE_FALSE(rows.empty());
  const auto rep = check_connectivity(rows);
  CHECK(rep.total > 0);
  CHECK(rep.witnessed == rep.total);
  CHECK(rep.coverage() == 1.0);
  CHECK(check_connectivity({}).entries.empty());
}
