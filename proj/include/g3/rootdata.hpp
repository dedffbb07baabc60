#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace g3 {

using Rational = boost::rational<std::int64_t>;
}  // namespace g3

namespace boost {
inline bool operator==(const rational<std::int64_t>& a, int b) { return a == rational<std::int64_t>(b); }
inline bool operator==(const rational<std::int64_t>& a, long b) { return a == rational<std::int64_t>(b); }
inline bool operator==(const rational<std::int64_t>& a, long long b) { return a == rational<std::int64_t>(b); }
}  // namespace boost

namespace g3 {

// dδ + aω₁ + bω₂ with d = d2/2.
struct Weight {
  std::int64_t d2 = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend auto operator<=>(const Weight&, const Weight&) = default;
  Weight operator+(const Weight& o) const { return {d2 + o.d2, a + o.a, b + o.b}; }
  Weight operator-(const Weight& o) const { return {d2 - o.d2, a - o.a, b - o.b}; }
  Weight operator-() const { return {-d2, -a, -b}; }
  Weight operator*(std::int64_t c) const { return {c * d2, c * a, c * b}; }
};

// Coefficients of ε₁, ε₂ (with ε₃ = -ε₁-ε₂ implicit).
struct EpsCoords {
  std::int64_t e1 = 0;
  std::int64_t e2 = 0;
  friend bool operator==(const EpsCoords&, const EpsCoords&) = default;
};

EpsCoords to_eps(const Weight& w);
Weight from_eps(std::int64_t d2, const EpsCoords& e);

enum class Parity { Even, Odd };

enum class RootClass {
  EvenIsotropicFree,  // even roots of the G2 part
  EvenLong,           // 2δ
  OddIsotropic,       // δ ± ε_i
  OddNonIsotropic     // δ
};

struct Root {
  Weight weight;
  Parity parity;
  RootClass cls;
  int height;
  std::string name;
};

Rational bilinear_form(const Weight& u, const Weight& v);

// 2(λ,α)/(α,α); throws std::invalid_argument for isotropic α.
Rational coroot_pairing(const Weight& lam, const Weight& alpha);

Weight rho();
Weight delta();
Weight eps(int i);  // i in 1..3

const std::vector<Root>& positive_roots();
std::vector<Root> positive_even_roots();
std::vector<Root> odd_isotropic_roots();
const Root& root_named(const std::string& name);

// Coordinates in the simple roots (δ+ε₃, ε₁, ε₂−ε₁); nullopt off the root lattice.
std::optional<std::array<std::int64_t, 3>> simple_root_coords(const Weight& w);
bool in_positive_cone(const Weight& w);

struct WeightMult {
  Weight weight;
  int mult;
};
const std::vector<WeightMult>& adjoint_weights();

}  // namespace g3
