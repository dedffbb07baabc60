#include "g3/charlib.hpp"

#include <vector>

namespace g3 {

namespace {
struct SymbolMult {
  Symbol symbol;
  int mult;
};

const std::vector<SymbolMult>& adjoint_symbols() {
  static const std::vector<SymbolMult> table = [] {
    std::vector<SymbolMult> v;
    for (const auto& [w, m] : adjoint_weights()) v.push_back({to_symbol(w), m});
    return v;
  }();
  return table;
}
}  // namespace

VermaChar tensor_adjoint(const VermaChar& c) {
  VermaChar out;
  for (const auto& [s, m] : c)
    for (const auto& [mu, mm] : adjoint_symbols()) out.add(s + mu, m * mm);
  return out;
}

bool in_block(const Symbol& s, const BlockId& b) {
  if (const auto* a = std::get_if<AtypicalBlock>(&b)) {
    const auto k = static_cast<std::int64_t>(a->k);
    return is_atypical(s) && casimir(s) == Rational(6 * k * k + 6 * k);
  }
  return classify(s) == b;
}

VermaChar project_block(const VermaChar& c, const BlockId& b) {
  VermaChar out;
  for (const auto& [s, m] : c)
    if (in_block(s, b)) out.add(s, m);
  return out;
}

VermaChar translate(const VermaChar& seed, const BlockId& b) {
  return project_block(tensor_adjoint(seed), b);
}

}  // namespace g3
