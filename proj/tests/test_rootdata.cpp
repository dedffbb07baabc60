#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

using namespace g3;

TEST_CASE("forms on named weights") {
  CHECK(bilinear_form(delta(), delta()) == Rational(-2));
  CHECK(bilinear_form(rho(), rho()) == Rational(3, 2));
  CHECK(rho() == Weight{-5, 1, 1});
  CHECK(bilinear_form(Weight{}, rho()) == Rational(0));
  CHECK(coroot_pairing(rho(), eps(2) - eps(1)) == Rational(1));
  CHECK(coroot_pairing(Weight{-3, 0, 0}, delta() * 2) == Rational(-3, 2));
  CHECK_THROWS(coroot_pairing(rho(), delta() + eps(1)));
}

TEST_CASE("epsilon coordinates") {
  for (int i = 0; i < 200; ++i) {
    const auto w = oracle::random_weight();
    CHECK(from_eps(w.d2, to_eps(w)) == w);
  }
  CHECK(eps(1) + eps(2) + eps(3) == Weight{});
}

TEST_CASE("form agrees with an embedding of the ε-plane in R^3") {
  // ε_i ↦ e_i − (1,1,1)/3 scaled by 3: (ε_i, ε_j) = 3δ_ij − 1.
  auto gram = [](const Weight& u, const Weight& v) {
    const auto eu = to_eps(u), ev = to_eps(v);
    const std::int64_t cu[2] = {eu.e1, eu.e2}, cv[2] = {ev.e1, ev.e2};
    Rational s = Rational(-u.d2 * v.d2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) s += Rational(cu[i] * cv[j] * ((i == j ? 3 : 0) - 1));
    return s;
  };
  for (int i = 0; i < 500; ++i) {
    const auto u = oracle::random_weight(), v = oracle::random_weight();
    CHECK(bilinear_form(u, v) == gram(u, v));
    CHECK(bilinear_form(u, v) == bilinear_form(v, u));
  }
}

TEST_CASE("positive roots") {
  const auto& roots = positive_roots();
  CHECK(roots.size() == 14);
  CHECK(positive_even_roots().size() == 7);
  CHECK(odd_isotropic_roots().size() == 6);
  for (const auto& r : odd_isotropic_roots()) CHECK(bilinear_form(r.weight, r.weight) == Rational(0));
  for (const auto& r : positive_even_roots()) CHECK(bilinear_form(r.weight, r.weight) != Rational(0));
  CHECK(root_named("d+e2").weight == delta() + eps(2));
  CHECK_THROWS(root_named("nope"));

  SUBCASE("heights are simple-root coefficient sums found by brute force") {
    const Weight simple[3] = {delta() + eps(3), eps(1), eps(2) - eps(1)};
    for (const auto& r : roots) {
      int found = -1;
      for (int a = 0; a <= 6; ++a)
        for (int b = 0; b <= 6; ++b)
          for (int c = 0; c <= 6; ++c)
            if (simple[0] * a + simple[1] * b + simple[2] * c == r.weight) found = a + b + c;
      CHECK_MESSAGE(found == r.height, r.name);
      CHECK(in_positive_cone(r.weight));
      CHECK(oracle::in_cone(r.weight));
      CHECK_FALSE(in_positive_cone(-r.weight));
    }
  }

  SUBCASE("for odd roots, lower height means the difference is not in the positive cone") {
    for (const auto& b : roots)
      for (const auto& g : roots) {
        if (b.parity != Parity::Odd || g.parity != Parity::Odd || b.name == g.name) continue;
        CHECK_MESSAGE((b.height < g.height) == !oracle::in_cone(b.weight - g.weight), (b.name + " vs " + g.name));
      }
  }
}

TEST_CASE("cone membership matches the hand-solved oracle") {
  for (int i = 0; i < 2000; ++i) {
    const auto w = oracle::random_weight(12);
    CHECK(in_positive_cone(w) == oracle::in_cone(w));
  }
}

TEST_CASE("adjoint weights") {
  const auto& adj = adjoint_weights();
  int total = 0, zero = 0;
  std::map<Weight, int> mult;
  for (const auto& [w, m] : adj) {
    total += m;
    mult[w] += m;
    if (w == Weight{}) zero += m;
  }
  CHECK(total == 31);
  CHECK(zero == 3);
  for (const auto& [w, m] : mult) CHECK(mult[-w] == m);
  for (const auto& r : positive_roots()) {
    CHECK(mult[r.weight] == 1);
    CHECK(mult[-r.weight] == 1);
  }
}
