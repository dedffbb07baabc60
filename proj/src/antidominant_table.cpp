#include "g3/antidominant_table.hpp"

namespace g3 {

const std::vector<AntidominantColumn>& antidominant_snapshot() {
  using enum ArrowRoot;
  static const std::vector<AntidominantColumn> table = {
      {0, {"[-1/2|-1/2,-1/2,1]", "[-3/2|0,-3/2,3/2]", "[-5/2|-1/2,-2,5/2]", "[-7/2|-1,-5/2,7/2]", "[-9/2|-3/2,-3,9/2]", "[-11/2|-2,-7/2,11/2]", "[-13/2|-5/2,-4,13/2]", "[-15/2|-3,-9/2,15/2]", "[-17/2|-7/2,-5,17/2]"},
       {DeltaPlusE2, DeltaMinusE3, DeltaMinusE3, DeltaMinusE3, DeltaMinusE3, DeltaMinusE3, DeltaMinusE3, DeltaMinusE3}},
      {1, {"[-1/2|-1/2,-2,5/2]", "[-3/2|-3/2,-3/2,3]", "[-5/2|-1,-5/2,7/2]", "[-7/2|-1/2,-7/2,4]", "[-9/2|0,-9/2,9/2]", "[-11/2|-1/2,-5,11/2]", "[-13/2|-1,-11/2,13/2]", "[-15/2|-3/2,-6,15/2]", "[-17/2|-2,-13/2,17/2]"},
       {DeltaPlusE1, DeltaPlusE2, DeltaPlusE2, DeltaPlusE2, DeltaMinusE3, DeltaMinusE3, DeltaMinusE3, DeltaMinusE3}},
      {2, {"[-1/2|-1/2,-7/2,4]", "[-3/2|-3/2,-3,9/2]", "[-5/2|-5/2,-5/2,5]", "[-7/2|-2,-7/2,11/2]", "[-9/2|-3/2,-9/2,6]", "[-11/2|-1,-11/2,13/2]", "[-13/2|-1/2,-13/2,7]", "[-15/2|0,-15/2,15/2]", "[-17/2|-1/2,-8,17/2]"},
       {DeltaPlusE1, DeltaPlusE1, DeltaPlusE2, DeltaPlusE2, DeltaPlusE2, DeltaPlusE2, DeltaPlusE2, DeltaMinusE3}},
      {3, {"[-1/2|-1/2,-5,11/2]", "[-3/2|-3/2,-9/2,6]", "[-5/2|-5/2,-4,13/2]", "[-7/2|-7/2,-7/2,7]", "[-9/2|-3,-9/2,15/2]", "[-11/2|-5/2,-11/2,8]", "[-13/2|-2,-13/2,17/2]", "[-15/2|-3/2,-15/2,9]", "[-17/2|-1,-17/2,19/2]"},
       {DeltaPlusE1, DeltaPlusE1, DeltaPlusE1, DeltaPlusE2, DeltaPlusE2, DeltaPlusE2, DeltaPlusE2, DeltaPlusE2}},
  };
  return table;
}

}  // namespace g3
