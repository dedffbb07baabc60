#include "g3/weyl.hpp"

#include <algorithm>
#include <stdexcept>

namespace g3 {

namespace {
int other(int i) { return i == 1 ? 2 : 1; }
}  // namespace

Dihedral Dihedral::make(int len, int first) {
  if (len < 0 || len > kMaxLen || (first != 1 && first != 2))
    throw std::invalid_argument("bad dihedral normal form");
  Dihedral d;
  d.len_ = len;
  d.first_ = (len == 0 || len == kMaxLen) ? 1 : first;
  return d;
}

int Dihedral::last() const { return len_ % 2 == 1 ? first_ : other(first_); }

std::string Dihedral::word() const {
  std::string w;
  for (int k = 0; k < len_; ++k) w += char('0' + (k % 2 == 0 ? first_ : other(first_)));
  return w;
}

Dihedral Dihedral::times_gen(int i) const {
  if (len_ == 0) return make(1, i);
  if (len_ == kMaxLen) return make(kMaxLen - 1, other(i));
  if (last() == i) return make(len_ - 1, first_);
  return make(len_ + 1, first_);
}

Dihedral Dihedral::gen_times(int i) const {
  if (len_ == 0) return make(1, i);
  if (len_ == kMaxLen) return make(kMaxLen - 1, other(i));
  if (first_ == i) return make(len_ - 1, other(i));
  return make(len_ + 1, i);
}

Dihedral Dihedral::inverse() const { return make(len_, last()); }

Dihedral operator*(const Dihedral& a, const Dihedral& b) {
  Dihedral r = a;
  for (char c : b.word()) r = r.times_gen(c - '0');
  return r;
}

const std::vector<Dihedral>& dihedral_elements() {
  static const std::vector<Dihedral> all = [] {
    std::vector<Dihedral> v{Dihedral{}};
    for (int l = 1; l < Dihedral::kMaxLen; ++l)
      for (int f : {1, 2}) v.push_back(Dihedral::make(l, f));
    v.push_back(Dihedral::longest());
    return v;
  }();
  return all;
}

const std::vector<WeylElt>& weyl_elements() {
  static const std::vector<WeylElt> all = [] {
    std::vector<WeylElt> v;
    for (bool z : {false, true})
      for (const auto& d : dihedral_elements()) v.push_back({z, d});
    return v;
  }();
  return all;
}

std::string render(const WeylElt& w) {
  std::string r = w.s0 ? "0" : "";
  r += w.w2.len() == Dihedral::kMaxLen ? "w0" : w.w2.word();
  return r.empty() ? "e" : r;
}

std::optional<WeylElt> parse_word(std::string_view text) {
  if (text.empty()) return std::nullopt;
  if (text == "e") return WeylElt{};
  WeylElt w;
  for (std::size_t k = 0; k < text.size(); ++k) {
    const char c = text[k];
    if (c == 'w') {
      if (k + 1 >= text.size() || text[k + 1] != '0') return std::nullopt;
      w = w * WeylElt::longest2();
      ++k;
    } else if (c >= '0' && c <= '2') {
      w = w * WeylElt::gen(c - '0');
    } else {
      return std::nullopt;
    }
  }
  return w;
}

WeylElt word(std::string_view text) {
  auto w = parse_word(text);
  if (!w) throw std::invalid_argument("malformed word: " + std::string(text));
  return *w;
}

namespace {
Symbol gen_act(int i, const Symbol& s) {
  switch (i) {
    case 0: return {-s.d2, s.x2, s.y2, s.z2};
    case 1: return {s.d2, s.y2, s.x2, s.z2};
    default: return {s.d2, -s.x2, -s.z2, -s.y2};
  }
}
}  // namespace

Symbol act(const Dihedral& w, const Symbol& s) {
  Symbol r = s;
  const auto wd = w.word();
  for (auto it = wd.rbegin(); it != wd.rend(); ++it) r = gen_act(*it - '0', r);
  return r;
}

Symbol act(const WeylElt& w, const Symbol& s) {
  Symbol r = act(w.w2, s);
  return w.s0 ? gen_act(0, r) : r;
}

Weight act(const WeylElt& w, const Weight& s) { return to_weight(act(w, to_symbol(s))); }

bool bruhat_leq(const Dihedral& u, const Dihedral& v) { return u == v || u.len() < v.len(); }

bool bruhat_leq(const WeylElt& u, const WeylElt& v) {
  return (!u.s0 || v.s0) && bruhat_leq(u.w2, v.w2);
}

bool bruhat_leq_subword(const Dihedral& u, const Dihedral& v) {
  // u ≤ v iff some reduced word of u is a subword of some reduced word of v.
  auto reduced_words = [](const Dihedral& d) {
    if (d.len() == Dihedral::kMaxLen) return std::vector<std::string>{"121212", "212121"};
    return std::vector<std::string>{d.word()};
  };
  auto is_subword = [](const std::string& a, const std::string& b) {
    std::size_t j = 0;
    for (char c : b)
      if (j < a.size() && a[j] == c) ++j;
    return j == a.size();
  };
  for (const auto& a : reduced_words(u))
    for (const auto& b : reduced_words(v))
      if (is_subword(a, b)) return true;
  return false;
}

ElementSet interval(const WeylElt& lo, const WeylElt& hi) {
  ElementSet out;
  for (const auto& w : weyl_elements())
    if (bruhat_leq(lo, w) && bruhat_leq(w, hi)) out.push_back(w);
  return out;
}

ElementSet interval(const WeylElt& v) { return interval(WeylElt{}, v); }

ElementSet upper_interval(const WeylElt& v) {
  return interval(v, WeylElt{v.s0, Dihedral::longest()});
}

Dihedral coset_min(const Dihedral& x, int i) {
  const auto y = x.times_gen(i);
  return y.len() < x.len() ? y : x;
}

Dihedral coset_max(const Dihedral& x, int i) {
  const auto y = x.times_gen(i);
  return y.len() > x.len() ? y : x;
}

ElementSet coset_mod(const ElementSet& s, int i) {
  ElementSet out;
  for (const auto& w : s) {
    WeylElt r{w.s0, coset_min(w.w2, i)};
    if (std::ranges::find(out, r) == out.end()) out.push_back(r);
  }
  return out;
}

bool is_antidominant(const Symbol& s) {
  for (const auto& r : positive_roots())
    if (r.parity == Parity::Even && 2 * form(s, r.weight) / form(to_symbol(r.weight), r.weight) > 0)
      return false;
  return true;
}

CosetRep min_coset_rep(const Symbol& lam) {
  for (const auto& w : weyl_elements()) {
    const Symbol l = act(w, lam);
    if (!is_antidominant(l)) continue;
    CosetRep rep{l, {}};
    for (const auto& u : weyl_elements())
      if (act(u, l) == lam) rep.coset.push_back(u);
    return rep;
  }
  throw std::logic_error("no anti-dominant conjugate for " + render(lam));
}

ElementSet sorted_unique(ElementSet s) {
  std::ranges::sort(s);
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace g3
