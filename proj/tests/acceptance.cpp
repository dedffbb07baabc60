// One line per acceptance criterion; exit status 1 if any criterion fails.
#include <cstdio>
#include <functional>
#include <iostream>

#include "g3/verify.hpp"
#include "oracles.hpp"

using namespace g3;

namespace {

struct Finding {
  bool ok;
  std::string detail;
};

Finding round_trip_and_equivariance() {
  long bad = 0, checks = 0;
  for (int i = 0; i < 10000; ++i) {
    const auto w = oracle::random_weight(1000);
    const auto s = to_symbol(w);
    bad += to_weight(s) != w;
    for (const auto& g : weyl_elements()) {
      bad += act(g, s) != to_symbol(oracle::act_by_reflections(g, w));
      ++checks;
    }
  }
  return {bad == 0, std::to_string(checks) + " equivariance checks, " + std::to_string(bad) + " mismatches"};
}

Finding antidominant_snapshot_matches() {
  const auto r = verify_antidominant_table();
  return {r.ok() && r.count(Verdict::Pass) == 68, std::to_string(r.count(Verdict::Pass)) + "/68 entries and arrows"};
}

Finding casimir_values() {
  const Rational rr = bilinear_form(rho(), rho());
  long bad = 0;
  for (int k = 0; k <= 6; ++k)
    for (int n = 0; n <= 20; ++n)
      for (const auto& w : weyl_elements()) {
        const auto s = f(k, n, w);
        const auto lam = to_weight(s);
        // (λ,λ) − (ρ,ρ) by the ε-plane embedding.
        const auto e = to_eps(lam);
        const Rational sq = Rational(-lam.d2 * lam.d2, 2) + Rational(2 * e.e1 * e.e1 - 2 * e.e1 * e.e2 + 2 * e.e2 * e.e2);
        bad += casimir(s) != Rational(6 * k * k + 6 * k) || sq - rr != Rational(6 * k * k + 6 * k);
      }
  return {bad == 0, std::to_string(bad) + " mismatches over 7x21x24 labels"};
}

Finding classification_complete() {
  std::map<Symbol, std::set<std::pair<int, int>>> index;
  std::map<Symbol, std::set<WeylElt>> cosets;
  for (int k = 0; k <= 45; ++k)
    for (int n = 0; n <= 20; ++n)
      for (const auto& w : weyl_elements()) {
        index[f(k, n, w)].insert({k, n});
        cosets[f(k, n, w)].insert(w);
      }
  long total = 0, bad = 0;
  for (std::int64_t d2 = -41; d2 <= 41; d2 += 2)
    for (std::int64_t x2 = -41; x2 <= 41; ++x2)
      for (std::int64_t y2 = -41; y2 <= 41; ++y2) {
        const Symbol s{d2, x2, y2, -x2 - y2};
        if (!s.valid() || std::abs(s.z2) > 41 || !is_atypical(s)) continue;
        ++total;
        const auto it = index.find(s);
        if (it == index.end() || it->second.size() != 1) {
          ++bad;
          continue;
        }
        const auto l = label(s);
        bad += std::pair(l.k, l.n) != *it->second.begin() || oracle::as_set(l.w) != cosets[s];
      }
  return {bad == 0 && total > 0, std::to_string(total) + " atypical symbols, " + std::to_string(bad) + " failures"};
}

std::string tally(const Report& r) {
  return std::to_string(r.count(Verdict::Pass)) + " pass, " + std::to_string(r.count(Verdict::Fail)) + " fail, " +
         std::to_string(r.count(Verdict::SkippedUnknown)) + " skipped-unknown";
}

bool skips_only_in_block0(const Report& r) {
  return std::ranges::all_of(r.cases, [](const CaseResult& c) { return c.verdict != Verdict::SkippedUnknown || c.k == 0; });
}

Finding translation_rederived() {
  const auto r = verify_translation(SuiteParams{});
  TranslationStore store;
  const auto two = store.verify(0, 0, word("01212"));
  const bool ok = r.ok() && skips_only_in_block0(r) && two.verdict == Verdict::Pass && two.flagged;
  return {ok, tally(r) + ", two-summand case " + verdict_name(two.verdict)};
}

Finding lengths_and_multiplicities() {
  const auto r = verify_lengths(SuiteParams{});
  std::set<std::string> checks;
  for (const auto& c : r.cases) checks.insert(c.check);
  const bool all_kinds = checks.count("tilting.generic flag length") && checks.count("tilting.red flag length") &&
                         checks.count("tilting.blue flag length") && checks.count("tilting.0generic flag length") &&
                         checks.count("maximal flag length is 60");
  return {r.ok() && all_kinds, tally(r)};
}

Finding duality() {
  const auto r = verify_duality(SuiteParams{});
  return {r.ok() && skips_only_in_block0(r), tally(r)};
}

Finding jantzen_witnesses() {
  SuiteParams p;
  p.kmax = 3;
  const auto r = verify_jantzen(p);
  std::size_t chains = 0, rows = 0;
  for (const auto& c : r.cases) (c.check.rfind("quoted chain", 0) == 0 ? chains : rows) += c.verdict == Verdict::Pass;
  return {r.ok() && chains == 28 && rows > 0 && r.count(Verdict::SkippedUnknown) == 0,
          std::to_string(chains) + "/28 quoted chains, " + std::to_string(rows) + " two-layer rows fully witnessed"};
}

Finding adjoint_multiset() {
  std::map<Weight, int> mult;
  int total = 0;
  for (const auto& [w, m] : adjoint_weights()) {
    mult[w] += m;
    total += m;
  }
  bool symmetric = true;
  for (const auto& [w, m] : mult) symmetric = symmetric && mult.count(-w) && mult.at(-w) == m;
  return {total == 31 && mult[Weight{}] == 3 && symmetric,
          "total " + std::to_string(total) + ", zero weight " + std::to_string(mult[Weight{}])};
}

void info_s0_coverage() {
  std::vector<RowLabel> rows;
  for (int k = 1; k <= 3; ++k)
    for (int n = 0; n <= 3 * k + 8; ++n) {
      std::set<Symbol> seen;
      for (const auto& w : weyl_elements()) {
        if (!w.s0 || !seen.insert(f(k, n, w)).second) continue;
        const auto row = tilting_row(k, n, w);
        if (row && layer_count(*row) == 2) rows.push_back({k, n, w});
      }
    }
  const auto rep = check_connectivity(rows);
  std::printf("INFO two-layer rows with an s0 part, k in {1,2,3}: %zu/%zu symbols witnessed\n", rep.witnessed,
              rep.total);
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Finding()>> criteria[] = {
      {"symbol map round trip and W-equivariance", round_trip_and_equivariance},
      {"anti-dominant weight table snapshot", antidominant_snapshot_matches},
      {"Casimir values", casimir_values},
      {"classification completeness for |d2| <= 41", classification_complete},
      {"translation re-derivation", translation_rederived},
      {"flag lengths and multiplicities", lengths_and_multiplicities},
      {"duality cross-checks", duality},
      {"Jantzen flag witnesses", jantzen_witnesses},
      {"adjoint weight multiset", adjoint_multiset},
  };
  int failed = 0, i = 0;
  for (const auto& [name, check] : criteria) {
    const auto r = check();
    failed += !r.ok;
    std::printf("%s criterion %d: %s (%s)\n", r.ok ? "PASS" : "FAIL", ++i, name, r.detail.c_str());
    std::fflush(stdout);
  }
  info_s0_coverage();
  return failed == 0 ? 0 : 1;
}
