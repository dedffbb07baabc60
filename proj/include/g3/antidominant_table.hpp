#pragma once

#include <string>
#include <vector>

namespace g3 {

// Odd root f(k,n) − f(k,n+1) marked by the arrow between consecutive entries.
enum class ArrowRoot { DeltaPlusE1, DeltaPlusE2, DeltaMinusE3 };

struct AntidominantColumn {
  int k;
  std::vector<std::string> entries;  // rendered f(k,0), f(k,1), ...
  std::vector<ArrowRoot> arrows;     // arrows[n] sits between entries n and n+1
};

// Published anti-dominant weights for k ≤ 3, n ≤ 8.
const std::vector<AntidominantColumn>& antidominant_snapshot();

}  // namespace g3
