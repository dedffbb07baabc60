#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "g3/formulas.hpp"

namespace g3 {

struct EvenTerm {
  Root alpha;
  Rational pairing;  // ⟨λ,α∨⟩
  Symbol label;      // s_α λ
};

struct MussonTerm {
  Root gamma;
  Symbol label;  // λ − γ
};

struct JantzenRHS {
  std::vector<EvenTerm> even;
  std::vector<MussonTerm> musson;
};

JantzenRHS jantzen_rhs(const Symbol& lam);

struct FlagWitness {
  int clause = 0;             // 1..6
  std::vector<Root> odd;      // β, or β and γ
  std::vector<Root> even;     // α₁, α₂, … applied in this order
  std::vector<Symbol> path;   // λ, then every intermediate, ending at the target

  const Symbol& from() const { return path.front(); }
  const Symbol& to() const { return path.back(); }
  std::string render() const;
};

// Re-checks every condition of the witness's clause.
bool validate(const FlagWitness& w);

inline constexpr int kMaxChain = 8;

// Least witness: fewest even reflections, then lowest clause, then the root
// sequence compared by position in the positive-root table.
std::optional<FlagWitness> find_flag_witness(const Symbol& lam, const Symbol& target, int max_chain = kMaxChain);
// The least witness for every symbol reachable from lam.
std::map<Symbol, FlagWitness> all_flag_witnesses(const Symbol& lam, int max_chain = kMaxChain);

struct RowLabel {
  int k;
  int n;
  WeylElt w;
};

struct ConnectivityEntry {
  RowLabel row;
  Symbol top;
  std::vector<FlagWitness> found;
  std::vector<Symbol> missing;
};

struct ConnectivityReport {
  std::vector<ConnectivityEntry> entries;
  std::size_t witnessed = 0;
  std::size_t total = 0;
  double coverage() const { return total == 0 ? 1.0 : double(witnessed) / double(total); }
};

ConnectivityReport check_connectivity(const std::vector<RowLabel>& rows, int max_chain = kMaxChain);

// Number of distinct layers of a tilting row (its term indices).
int layer_count(const Row& row);

}  // namespace g3
