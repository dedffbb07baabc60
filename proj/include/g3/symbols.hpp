#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "g3/rootdata.hpp"

namespace g3 {

// [d | x, y, z], every coordinate doubled.
struct Symbol {
  std::int64_t d2 = 0;
  std::int64_t x2 = 0;
  std::int64_t y2 = 0;
  std::int64_t z2 = 0;

  friend auto operator<=>(const Symbol&, const Symbol&) = default;
  Symbol operator+(const Symbol& o) const { return {d2 + o.d2, x2 + o.x2, y2 + o.y2, z2 + o.z2}; }
  Symbol operator-(const Symbol& o) const { return {d2 - o.d2, x2 - o.x2, y2 - o.y2, z2 - o.z2}; }
  Symbol operator-() const { return {-d2, -x2, -y2, -z2}; }

  bool valid() const { return x2 + y2 + z2 == 0 && (y2 - x2) % 3 == 0; }
  bool shifted() const { return d2 % 2 != 0; }  // labels an element of X+ρ
};

Symbol to_symbol(const Weight& w);
// Throws std::invalid_argument when the invariants fail.
Weight to_weight(const Symbol& s);

Rational form(const Symbol& u, const Symbol& v);
Rational form(const Symbol& u, const Weight& v);

// Odd isotropic positive roots γ with (s, γ) = 0.
std::vector<Root> atypicality(const Symbol& s);
bool is_atypical(const Symbol& s);
// ±d ∈ {x, y, z}
bool coordinate_atypical(const Symbol& s);

std::string render(const Symbol& s);
std::optional<Symbol> parse_symbol(std::string_view text);

}  // namespace g3
