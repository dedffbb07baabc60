#include "g3/rootdata.hpp"

#include <algorithm>
#include <stdexcept>

namespace g3 {

EpsCoords to_eps(const Weight& w) { return {w.a + w.b, 2 * w.a + w.b}; }

Weight from_eps(std::int64_t d2, const EpsCoords& e) {
  // a = e2 - e1, b = 2e1 - e2
  return {d2, e.e2 - e.e1, 2 * e.e1 - e.e2};
}

Rational bilinear_form(const Weight& u, const Weight& v) {
  const auto p = to_eps(u);
  const auto q = to_eps(v);
  const std::int64_t g2 = 2 * p.e1 * q.e1 - p.e1 * q.e2 - p.e2 * q.e1 + 2 * p.e2 * q.e2;
  return Rational(-u.d2 * v.d2, 2) + Rational(g2);
}

Rational coroot_pairing(const Weight& lam, const Weight& alpha) {
  const Rational aa = bilinear_form(alpha, alpha);
  if (aa == 0) throw std::invalid_argument("coroot pairing with an isotropic root");
  return 2 * bilinear_form(lam, alpha) / aa;
}

Weight delta() { return {2, 0, 0}; }

Weight eps(int i) {
  switch (i) {
    case 1: return {0, -1, 2};
    case 2: return {0, 1, -1};
    case 3: return {0, 0, -1};
  }
  throw std::invalid_argument("eps index out of range");
}

Weight rho() { return {-5, 1, 1}; }

const std::vector<Root>& positive_roots() {
  using enum Parity;
  using enum RootClass;
  const Weight d = delta();
  const Weight e1 = eps(1), e2 = eps(2), e3 = eps(3);
  static const std::vector<Root> table = {
      {d * 2, Even, EvenLong, 8, "2d"},
      {e1, Even, EvenIsotropicFree, 1, "e1"},
      {e2, Even, EvenIsotropicFree, 2, "e2"},
      {-e3, Even, EvenIsotropicFree, 3, "-e3"},
      {e2 - e1, Even, EvenIsotropicFree, 1, "e2-e1"},
      {e1 - e3, Even, EvenIsotropicFree, 4, "e1-e3"},
      {e2 - e3, Even, EvenIsotropicFree, 5, "e2-e3"},
      {d, Odd, OddNonIsotropic, 4, "d"},
      {d + e1, Odd, OddIsotropic, 5, "d+e1"},
      {d + e2, Odd, OddIsotropic, 6, "d+e2"},
      {d + e3, Odd, OddIsotropic, 1, "d+e3"},
      {d - e1, Odd, OddIsotropic, 3, "d-e1"},
      {d - e2, Odd, OddIsotropic, 2, "d-e2"},
      {d - e3, Odd, OddIsotropic, 7, "d-e3"},
  };
  return table;
}

std::vector<Root> positive_even_roots() {
  std::vector<Root> out;
  std::ranges::copy_if(positive_roots(), std::back_inserter(out),
                       [](const Root& r) { return r.parity == Parity::Even; });
  return out;
}

std::vector<Root> odd_isotropic_roots() {
  std::vector<Root> out;
  std::ranges::copy_if(positive_roots(), std::back_inserter(out),
                       [](const Root& r) { return r.cls == RootClass::OddIsotropic; });
  return out;
}

const Root& root_named(const std::string& name) {
  for (const auto& r : positive_roots())
    if (r.name == name) return r;
  throw std::invalid_argument("unknown root: " + name);
}

std::optional<std::array<std::int64_t, 3>> simple_root_coords(const Weight& w) {
  if (w.d2 % 2 != 0) return std::nullopt;
  const auto e = to_eps(w);
  const std::int64_t c1 = w.d2 / 2;
  const std::int64_t c3 = e.e2 + c1;
  const std::int64_t c2 = e.e1 + c1 + c3;
  return std::array{c1, c2, c3};
}

bool in_positive_cone(const Weight& w) {
  const auto c = simple_root_coords(w);
  return c && std::ranges::all_of(*c, [](std::int64_t v) { return v >= 0; });
}

const std::vector<WeightMult>& adjoint_weights() {
  static const std::vector<WeightMult> table = [] {
    std::vector<WeightMult> v;
    for (const auto& r : positive_roots()) {
      v.push_back({r.weight, 1});
      v.push_back({-r.weight, 1});
    }
    v.push_back({Weight{}, 3});
    return v;
  }();
  return table;
}

}  // namespace g3
