#pragma once

#include "g3/blocks.hpp"
#include "g3/character.hpp"

namespace g3 {

VermaChar tensor_adjoint(const VermaChar& c);
VermaChar project_block(const VermaChar& c, const BlockId& b);
VermaChar translate(const VermaChar& seed, const BlockId& b);

bool in_block(const Symbol& s, const BlockId& b);

}  // namespace g3
