#include "g3/symbols.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace g3 {

Symbol to_symbol(const Weight& w) {
  return {w.d2, w.b, 3 * w.a + w.b, -(3 * w.a + 2 * w.b)};
}

Weight to_weight(const Symbol& s) {
  if (!s.valid()) throw std::invalid_argument("not a symbol: " + render(s));
  return {s.d2, (s.y2 - s.x2) / 3, s.x2};
}

Rational form(const Symbol& u, const Symbol& v) {
  return Rational(-u.d2 * v.d2, 2) + Rational(u.x2 * v.x2 + u.y2 * v.y2 + u.z2 * v.z2, 3);
}

Rational form(const Symbol& u, const Weight& v) { return form(u, to_symbol(v)); }

std::vector<Root> atypicality(const Symbol& s) {
  std::vector<Root> out;
  for (const auto& r : odd_isotropic_roots())
    if (form(s, r.weight) == 0) out.push_back(r);
  return out;
}

bool is_atypical(const Symbol& s) {
  return std::ranges::any_of(odd_isotropic_roots(),
                             [&](const Root& r) { return form(s, r.weight) == 0; });
}

bool coordinate_atypical(const Symbol& s) {
  for (auto c : {s.x2, s.y2, s.z2})
    if (c == s.d2 || c == -s.d2) return true;
  return false;
}

namespace {

std::string half(std::int64_t v2) {
  if (v2 % 2 == 0) return std::to_string(v2 / 2);
  return std::to_string(v2) + "/2";
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

// "p" or "p/2" to a doubled integer.
std::optional<std::int64_t> parse_half(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t num = 0;
  const auto slash = s.find('/');
  const auto head = s.substr(0, slash);
  auto [p, ec] = std::from_chars(head.data(), head.data() + head.size(), num);
  if (ec != std::errc{} || p != head.data() + head.size() || head.empty()) return std::nullopt;
  if (slash == std::string_view::npos) return 2 * num;
  auto den = trim(s.substr(slash + 1));
  if (den == "2") return num;
  if (den == "1") return 2 * num;
  return std::nullopt;
}

}  // namespace

std::string render(const Symbol& s) {
  return "[" + half(s.d2) + "|" + half(s.x2) + "," + half(s.y2) + "," + half(s.z2) + "]";
}

std::optional<Symbol> parse_symbol(std::string_view text) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') return std::nullopt;
  text = text.substr(1, text.size() - 2);
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) return std::nullopt;
  std::vector<std::string_view> parts{text.substr(0, bar)};
  auto rest = text.substr(bar + 1);
  for (std::size_t pos; (pos = rest.find(',')) != std::string_view::npos; rest = rest.substr(pos + 1))
    parts.push_back(rest.substr(0, pos));
  parts.push_back(rest);
  if (parts.size() != 4) return std::nullopt;
  std::int64_t v[4];
  for (int i = 0; i < 4; ++i) {
    auto h = parse_half(parts[i]);
    if (!h) return std::nullopt;
    v[i] = *h;
  }
  Symbol s{v[0], v[1], v[2], v[3]};
  if (!s.valid()) return std::nullopt;
  return s;
}

}  // namespace g3
