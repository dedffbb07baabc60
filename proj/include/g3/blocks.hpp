#pragma once

#include <optional>
#include <variant>

#include "g3/character.hpp"
#include "g3/weyl.hpp"

namespace g3 {

struct TypicalBlock {
  Symbol antidominant;
  friend auto operator<=>(const TypicalBlock&, const TypicalBlock&) = default;
};
struct AtypicalBlock {
  int k;
  friend auto operator<=>(const AtypicalBlock&, const AtypicalBlock&) = default;
};
using BlockId = std::variant<TypicalBlock, AtypicalBlock>;

struct AtypicalLabel {
  int k = 0;
  int n = 0;
  ElementSet w;  // {σ : σ·f(k,n) = symbol}, sorted
  friend bool operator==(const AtypicalLabel&, const AtypicalLabel&) = default;
};

// Anti-dominant atypical symbol of block k, layer n.
Symbol f(int k, int n);
inline Symbol f(int k, int n, const WeylElt& w) { return act(w, f(k, n)); }

Rational casimir(const Symbol& s);
// k with 6k²+6k = c, if any.
std::optional<int> block_of_casimir(const Rational& c);

BlockId classify(const Symbol& s);
// Throws std::invalid_argument on typical input.
AtypicalLabel label(const Symbol& s);
// Minimal-length element of the label coset.
WeylElt canonical_elt(const AtypicalLabel& l);

bool is_singular_layer(int k, int n);

VermaChar typical_tilting_char(const Symbol& s);

}  // namespace g3
