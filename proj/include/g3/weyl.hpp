#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "g3/symbols.hpp"

namespace g3 {

// Element of the dihedral group of order 12 generated by s1, s2.
// Normal form: length and the first letter of the (alternating) reduced word.
class Dihedral {
 public:
  static constexpr int kMaxLen = 6;

  constexpr Dihedral() = default;
  static Dihedral make(int len, int first);
  static Dihedral gen(int i) { return make(1, i); }
  static Dihedral longest() { return make(kMaxLen, 1); }

  int len() const { return len_; }
  int first() const { return first_; }
  int last() const;
  std::string word() const;  // "" for e

  Dihedral times_gen(int i) const;  // this * s_i
  Dihedral gen_times(int i) const;  // s_i * this
  Dihedral inverse() const;
  friend Dihedral operator*(const Dihedral& a, const Dihedral& b);

  bool right_descent(int i) const { return times_gen(i).len_ < len_; }
  bool left_descent(int i) const { return gen_times(i).len_ < len_; }

  friend auto operator<=>(const Dihedral&, const Dihedral&) = default;

 private:
  int len_ = 0;
  int first_ = 1;
};

struct WeylElt {
  bool s0 = false;
  Dihedral w2;

  static WeylElt e() { return {}; }
  static WeylElt zero() { return {true, {}}; }
  static WeylElt gen(int i) { return i == 0 ? zero() : WeylElt{false, Dihedral::gen(i)}; }
  static WeylElt longest2() { return {false, Dihedral::longest()}; }

  int length() const { return (s0 ? 1 : 0) + w2.len(); }
  WeylElt inverse() const { return {s0, w2.inverse()}; }
  friend WeylElt operator*(const WeylElt& a, const WeylElt& b) { return {a.s0 != b.s0, a.w2 * b.w2}; }
  friend auto operator<=>(const WeylElt&, const WeylElt&) = default;
};

using ElementSet = std::vector<WeylElt>;

// All 12 dihedral elements, ordered by (length, first letter).
const std::vector<Dihedral>& dihedral_elements();
// All 24 elements; the W2 part first, then the s0 coset.
const std::vector<WeylElt>& weyl_elements();

std::string render(const WeylElt& w);          // "e", "0", "121", "w0", "0w0"
std::optional<WeylElt> parse_word(std::string_view text);
WeylElt word(std::string_view text);           // throws on malformed input

Symbol act(const WeylElt& w, const Symbol& s);
Symbol act(const Dihedral& w, const Symbol& s);
Weight act(const WeylElt& w, const Weight& s);

bool bruhat_leq(const Dihedral& u, const Dihedral& v);
bool bruhat_leq(const WeylElt& u, const WeylElt& v);
// Reduced-subword test on the words themselves.
bool bruhat_leq_subword(const Dihedral& u, const Dihedral& v);

ElementSet interval(const WeylElt& v);        // [e, v]
ElementSet interval(const WeylElt& lo, const WeylElt& hi);
ElementSet upper_interval(const WeylElt& v);  // [v, (s0 part) w∘], inside the A1 layer of v
// Minimal-length representatives of the cosets x<s_i> meeting S (order of first appearance).
ElementSet coset_mod(const ElementSet& s, int i);
Dihedral coset_min(const Dihedral& x, int i);
Dihedral coset_max(const Dihedral& x, int i);

bool is_antidominant(const Symbol& s);

struct CosetRep {
  Symbol antidominant;
  ElementSet coset;  // {w : w·antidominant = input}, sorted
};
CosetRep min_coset_rep(const Symbol& lam);

ElementSet sorted_unique(ElementSet s);

}  // namespace g3
