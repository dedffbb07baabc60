#pragma once

#include <string>
#include <vector>

#include "g3/blocks.hpp"

namespace g3 {

struct SeedCase {
  Symbol seed;
  // Tilting labels (same block and layer) whose sum the translated seed must equal.
  std::vector<WeylElt> summands;
  // Non-empty when the expected sum is not the single target.
  std::string note;
};

SeedCase seed_case(int k, int n, const WeylElt& w);

}  // namespace g3
