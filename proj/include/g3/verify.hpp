#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "g3/formulas.hpp"
#include "g3/jantzen.hpp"

namespace g3 {

enum class Verdict { Pass, Fail, SkippedUnknown };

struct CaseResult {
  std::string suite;
  std::string check;
  int k = 0;
  int n = 0;
  WeylElt w;
  Verdict verdict = Verdict::Pass;
  std::string detail;
  VermaChar extra;    // present but not expected
  VermaChar missing;  // expected but not present
  bool flagged = false;
};

struct Report {
  std::vector<CaseResult> cases;
  double seconds = 0;

  std::size_t count(Verdict v) const;
  std::size_t flagged() const;
  bool ok() const { return count(Verdict::Fail) == 0; }
  void append(const Report& o);
};

struct SuiteParams {
  int kmax = 5;
  // Highest layer; defaults to 3k+8 for block k.
  std::optional<int> nmax;
  int layer_limit(int k) const { return nmax ? *nmax : 3 * k + 8; }
};

// Re-derives tilting rows by translating seed characters; each seed that is
// itself atypical is resolved through the store, which verifies it first.
class TranslationStore {
 public:
  CaseResult verify(int k, int n, const WeylElt& w);
  Outcome<VermaChar> seed_tilting_char(const Symbol& g);

 private:
  using Key = std::tuple<int, int, WeylElt>;
  static Key canonical(int k, int n, const WeylElt& w);
  std::map<Key, std::optional<CaseResult>> state_;  // nullopt while in progress
};

Report verify_translation(const SuiteParams& p);
Report verify_duality(const SuiteParams& p);
Report verify_lengths(const SuiteParams& p);
Report verify_antidominant_table();
Report verify_jantzen(const SuiteParams& p);
Report verify_suite(const std::string& name, const SuiteParams& p);

struct ProofChain {
  WeylElt sigma;
  int layer;
  std::string beta;
  std::string gamma;
  int target_layer;
  WeylElt target_sigma;
};
// Pairing chains quoted in the indecomposability arguments for block k.
std::vector<ProofChain> proof_chains(int k);

nlohmann::json to_json(const CaseResult& c);
nlohmann::json to_json(const Report& r);
nlohmann::json to_json(const VermaChar& c);
nlohmann::json to_json(const FlagWitness& w);

std::string verdict_name(Verdict v);

}  // namespace g3
