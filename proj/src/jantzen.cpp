#include "g3/jantzen.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <tuple>

namespace g3 {

namespace {

Rational self_form(const Root& r) { return bilinear_form(r.weight, r.weight); }

Rational coroot(const Symbol& s, const Root& r) { return 2 * form(s, r.weight) / self_form(r); }

Symbol reflect(const Symbol& s, const Root& r) {
  const Rational c = coroot(s, r);
  const Weight shift = r.weight * c.numerator();
  // c is integral except for 2δ, where c·2δ = (2c)·δ stays integral.
  if (c.denominator() == 1) return s - to_symbol(shift);
  return s - to_symbol(delta() * (2 * c).numerator());
}

std::size_t root_index(const Root& r) {
  const auto& all = positive_roots();
  for (std::size_t k = 0; k < all.size(); ++k)
    if (all[k].name == r.name) return k;
  return all.size();
}

// Even reflection step with strictly positive pairing.
bool admissible(const Symbol& s, const Root& r) {
  return r.parity == Parity::Even && coroot(s, r) > 0;
}

struct Reached {
  std::vector<Root> chain;
  std::vector<Symbol> path;
};

// Least chains (by length, then root order from the first step) to every symbol
// reachable from start through admissible reflections.
std::map<Symbol, Reached> even_closure(const Symbol& start, int max_chain) {
  std::map<Symbol, Reached> seen{{start, {{}, {start}}}};
  std::deque<Symbol> frontier{start};
  const auto even = positive_even_roots();
  for (int depth = 0; depth < max_chain && !frontier.empty(); ++depth) {
    std::deque<Symbol> next;
    for (const auto& s : frontier) {
      for (const auto& r : even) {
        if (!admissible(s, r)) continue;
        const Symbol t = reflect(s, r);
        if (seen.contains(t)) continue;
        Reached rc = seen.at(s);
        rc.chain.push_back(r);
        rc.path.push_back(t);
        seen.emplace(t, std::move(rc));
        next.push_back(t);
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

auto order_key(const FlagWitness& w) {
  std::vector<std::size_t> roots;
  for (const auto& r : w.odd) roots.push_back(root_index(r));
  for (const auto& r : w.even) roots.push_back(root_index(r));
  return std::tuple(w.even.size(), w.clause, roots);
}

}  // namespace

JantzenRHS jantzen_rhs(const Symbol& lam) {
  JantzenRHS rhs;
  for (const auto& r : positive_roots()) {
    if (r.cls == RootClass::EvenIsotropicFree) {
      const Rational c = coroot(lam, r);
      if (c.denominator() == 1 && c > 0) rhs.even.push_back({r, c, reflect(lam, r)});
    } else if (r.cls == RootClass::EvenLong) {
      const Rational c = coroot(lam, r);
      if (c.denominator() == 2 && c > 0) rhs.even.push_back({r, c, reflect(lam, r)});
    } else if (r.cls == RootClass::OddIsotropic && form(lam, r.weight) == 0) {
      rhs.musson.push_back({r, lam - to_symbol(r.weight)});
    }
  }
  return rhs;
}

std::string FlagWitness::render() const {
  std::string s = "clause " + std::to_string(clause) + ":";
  for (const auto& r : odd) s += " -(" + r.name + ")";
  for (const auto& r : even) s += " s[" + r.name + "]";
  return s;
}

bool validate(const FlagWitness& w) {
  if (w.clause < 1 || w.clause > 6 || w.path.empty()) return false;
  const std::size_t n_odd = w.clause <= 2 ? 0 : w.clause <= 4 ? 1 : 2;
  const bool has_even = w.clause % 2 == 0 || w.clause == 1;
  if (w.odd.size() != n_odd) return false;
  if (w.clause == 1 && w.even.size() != 1) return false;
  if (has_even != !w.even.empty()) return false;
  if (w.path.size() != 1 + w.odd.size() + w.even.size()) return false;

  Symbol cur = w.path.front();
  std::size_t step = 1;
  for (const auto& b : w.odd) {
    if (b.parity != Parity::Odd || form(cur, b.weight) != 0) return false;
    cur = cur - to_symbol(b.weight);
    if (cur != w.path[step++]) return false;
  }
  if (n_odd == 2 && !(w.odd[0].height < w.odd[1].height)) return false;
  for (const auto& a : w.even) {
    if (!admissible(cur, a)) return false;
    cur = reflect(cur, a);
    if (cur != w.path[step++]) return false;
  }
  return true;
}

std::map<Symbol, FlagWitness> all_flag_witnesses(const Symbol& lam, int max_chain) {
  std::map<Symbol, FlagWitness> best;
  auto offer = [&](FlagWitness w) {
    if (w.to() == lam) return;
    auto it = best.find(w.to());
    if (it == best.end()) best.emplace(w.to(), std::move(w));
    else if (order_key(w) < order_key(it->second)) it->second = std::move(w);
  };
  auto extend = [&](const std::vector<Root>& odd, const std::vector<Symbol>& prefix) {
    for (auto& [t, rc] : even_closure(prefix.back(), max_chain)) {
      FlagWitness w;
      const int base = odd.empty() ? 1 : odd.size() == 1 ? 3 : 5;
      w.clause = rc.chain.empty() ? base : (odd.empty() && rc.chain.size() == 1 ? 1 : base + 1);
      if (rc.chain.empty() && odd.empty()) continue;
      w.odd = odd;
      w.even = rc.chain;
      w.path = prefix;
      w.path.insert(w.path.end(), rc.path.begin() + 1, rc.path.end());
      offer(std::move(w));
    }
  };

  extend({}, {lam});
  const auto odd = odd_isotropic_roots();
  for (const auto& b : odd) {
    if (form(lam, b.weight) != 0) continue;
    const Symbol l1 = lam - to_symbol(b.weight);
    extend({b}, {lam, l1});
    for (const auto& g : odd) {
      if (form(l1, g.weight) != 0 || !(b.height < g.height)) continue;
      extend({b, g}, {lam, l1, l1 - to_symbol(g.weight)});
    }
  }
  return best;
}

std::optional<FlagWitness> find_flag_witness(const Symbol& lam, const Symbol& target, int max_chain) {
  auto all = all_flag_witnesses(lam, max_chain);
  auto it = all.find(target);
  if (it == all.end()) return std::nullopt;
  return it->second;
}

int layer_count(const Row& row) {
  std::set<int> layers;
  for (const auto& t : row.formula.terms) layers.insert(t.layer);
  return static_cast<int>(layers.size());
}

ConnectivityReport check_connectivity(const std::vector<RowLabel>& rows, int max_chain) {
  ConnectivityReport rep;
  for (const auto& [k, n, w] : rows) {
    const auto c = tilting(k, n, w);
    if (!c) continue;
    ConnectivityEntry e{{k, n, w}, f(k, n, w), {}, {}};
    const auto witnesses = all_flag_witnesses(e.top, max_chain);
    for (const auto& [s, m] : *c) {
      if (s == e.top) continue;
      ++rep.total;
      if (auto it = witnesses.find(s); it != witnesses.end()) {
        e.found.push_back(it->second);
        ++rep.witnessed;
      } else {
        e.missing.push_back(s);
      }
    }
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

}  // namespace g3
