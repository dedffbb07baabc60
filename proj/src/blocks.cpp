#include "g3/blocks.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace g3 {

Symbol f(int k, int n) {
  const std::int64_t K = k, N = n;
  if (N <= K - 1) return {-(2 * N + 1), -(2 * N + 1), N - 3 * K - 1, 3 * K + N + 2};
  if (N == K) return {-(2 * K + 1), -(2 * K + 1), -(2 * K + 1), 2 * (2 * K + 1)};
  if (N <= 3 * K) return {-(2 * N + 1), N - 3 * K - 1, -(2 * N + 1), 3 * K + N + 2};
  if (N == 3 * K + 1) return {-3 * (2 * K + 1), 0, -3 * (2 * K + 1), 3 * (2 * K + 1)};
  return {-(2 * N + 1), -(N - 3 * K - 1), -(3 * K + N + 2), 2 * N + 1};
}

Rational casimir(const Symbol& s) {
  const Symbol r = to_symbol(rho());
  return form(s, s) - form(r, r);
}

std::optional<int> block_of_casimir(const Rational& c) {
  if (c.denominator() != 1 || c < 0) return std::nullopt;
  const std::int64_t v = c.numerator();
  auto k = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v) / 6.0));
  for (std::int64_t t = std::max<std::int64_t>(0, k - 2); t <= k + 2; ++t)
    if (6 * t * t + 6 * t == v) return static_cast<int>(t);
  return std::nullopt;
}

bool is_singular_layer(int k, int n) { return n == k || n == 3 * k + 1; }

BlockId classify(const Symbol& s) {
  if (!is_atypical(s)) return TypicalBlock{min_coset_rep(s).antidominant};
  return AtypicalBlock{label(s).k};
}

AtypicalLabel label(const Symbol& s) {
  if (!is_atypical(s)) throw std::invalid_argument("typical symbol has no block label: " + render(s));
  auto rep = min_coset_rep(s);
  const auto k = block_of_casimir(casimir(s));
  if (!k) throw std::logic_error("Casimir value is not 6k^2+6k for " + render(s));
  const std::int64_t n = (-rep.antidominant.d2 - 1) / 2;
  if (n < 0 || f(*k, static_cast<int>(n)) != rep.antidominant)
    throw std::logic_error("anti-dominant form does not match f(k,n) for " + render(s));
  return {*k, static_cast<int>(n), std::move(rep.coset)};
}

WeylElt canonical_elt(const AtypicalLabel& l) {
  return *std::ranges::min_element(l.w, [](const WeylElt& a, const WeylElt& b) {
    return std::pair(a.length(), a) < std::pair(b.length(), b);
  });
}

VermaChar typical_tilting_char(const Symbol& s) {
  if (is_atypical(s)) throw std::invalid_argument("typical_tilting_char on atypical " + render(s));
  const auto rep = min_coset_rep(s);
  const WeylElt sigma = *std::ranges::min_element(
      rep.coset, [](const WeylElt& a, const WeylElt& b) { return a.length() < b.length(); });
  ElementSet stab;
  for (const auto& u : weyl_elements())
    if (act(u, rep.antidominant) == rep.antidominant) stab.push_back(u);
  VermaChar out;
  for (const auto& t : weyl_elements()) {
    const bool minimal = std::ranges::all_of(
        stab, [&](const WeylElt& u) { return t.length() <= (t * u).length(); });
    if (minimal && bruhat_leq(t, sigma)) out.add(act(t, rep.antidominant));
  }
  return out;
}

}  // namespace g3
