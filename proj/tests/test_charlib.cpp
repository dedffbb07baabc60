#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "g3/charlib.hpp"
#include "g3/formulas.hpp"
#include "oracles.hpp"

using namespace g3;

namespace {

// Distinct symbols f(k,n,τ) over τ ∈ W₂, one per ⟨s_i⟩-coset.
VermaChar coset_sum(int k, int n, int i) {
  std::set<std::set<WeylElt>> cosets;
  for (const auto& d : dihedral_elements())
    cosets.insert({WeylElt{false, d}, WeylElt{false, d * Dihedral::gen(i)}});
  VermaChar c;
  for (const auto& co : cosets) c.add(f(k, n, *co.begin()));
  return c;
}

}  // namespace

TEST_CASE("character arithmetic") {
  VermaChar a;
  a.add(f(0, 0), 2);
  a.add(f(0, 1));
  VermaChar b({{f(0, 1), 1}});
  CHECK(a.total() == 3);
  CHECK((a + b)[f(0, 1)] == 2);
  CHECK(a.minus(b) == VermaChar({{f(0, 0), 2}}));
  CHECK(a.contains(b));
  CHECK_FALSE(b.contains(a));
  CHECK(a.scaled(3).total() == 9);
  CHECK(a.max_mult() == 2);
  CHECK_THROWS(a.add(f(0, 0), -2));
  CHECK(a.minus(VermaChar({{f(0, 0), 2}})) == b);
}

TEST_CASE("tensoring with the adjoint") {
  const Symbol lam = f(1, 2);
  const auto t = tensor_adjoint(VermaChar({{lam, 1}}));
  CHECK(t.total() == 31);
  CHECK(t[lam] == 3);
  VermaChar two({{lam, 2}, {f(0, 0), 1}});
  CHECK(tensor_adjoint(two).total() == 93);
}

TEST_CASE("block projection and translation") {
  const VermaChar seed({{Symbol{-3, 0, 0, 0}, 1}});
  const auto p = project_block(tensor_adjoint(seed), AtypicalBlock{0});
  CHECK(p.size() == 12);
  CHECK(p.max_mult() == 1);
  CHECK(project_block(p, AtypicalBlock{1}).empty());

  const auto t = translate(seed, AtypicalBlock{0});
  CHECK(t == coset_sum(0, 0, 1) + coset_sum(0, 1, 2));
  CHECK(t == *tilting(0, 0, word("21212")));
  CHECK(translate(VermaChar{}, AtypicalBlock{3}).empty());

  const auto g = f(2, 4, word("1")) - to_symbol(delta() * 2);
  REQUIRE_FALSE(is_atypical(g));
  CHECK(translate(typical_tilting_char(g), AtypicalBlock{2}) == *tilting(2, 4, word("1")));
}

TEST_CASE("blocks partition the atypical symbols") {
  for (int k = 0; k <= 5; ++k)
    for (int n = 0; n <= 12; ++n)
      for (const auto& w : weyl_elements()) {
        const auto s = f(k, n, w);
        for (int j = 0; j <= 6; ++j) CHECK(in_block(s, AtypicalBlock{j}) == (j == k));
      }
  const Symbol typ{-3, 0, 0, 0};
  for (int j = 0; j <= 3; ++j) CHECK_FALSE(in_block(typ, AtypicalBlock{j}));
  CHECK(in_block(typ, classify(typ)));
}
