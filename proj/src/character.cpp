#include "g3/character.hpp"

#include <algorithm>
#include <stdexcept>

namespace g3 {

VermaChar::VermaChar(Map terms) {
  for (const auto& [s, m] : terms) add(s, m);
}

void VermaChar::add(const Symbol& s, std::int64_t mult) {
  if (mult < 0) throw std::invalid_argument("negative multiplicity");
  if (mult == 0) return;
  terms_[s] += mult;
}

std::int64_t VermaChar::operator[](const Symbol& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? 0 : it->second;
}

VermaChar& VermaChar::operator+=(const VermaChar& o) {
  for (const auto& [s, m] : o.terms_) terms_[s] += m;
  return *this;
}

VermaChar VermaChar::scaled(std::int64_t c) const {
  VermaChar r;
  for (const auto& [s, m] : terms_) r.add(s, c * m);
  return r;
}

VermaChar VermaChar::minus(const VermaChar& o) const {
  VermaChar r;
  for (const auto& [s, m] : terms_)
    if (m > o[s]) r.add(s, m - o[s]);
  return r;
}

bool VermaChar::contains(const VermaChar& o) const { return o.minus(*this).empty(); }

std::int64_t VermaChar::total() const {
  std::int64_t t = 0;
  for (const auto& [s, m] : terms_) t += m;
  return t;
}

std::int64_t VermaChar::max_mult() const {
  std::int64_t r = 0;
  for (const auto& [s, m] : terms_) r = std::max(r, m);
  return r;
}

std::string render(const VermaChar& c) {
  std::string out;
  for (const auto& [s, m] : c) {
    if (!out.empty()) out += " + ";
    if (m != 1) out += std::to_string(m) + "*";
    out += "M" + render(s);
  }
  return out.empty() ? "0" : out;
}

}  // namespace g3
