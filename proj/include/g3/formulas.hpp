#pragma once

#include <memory>
#include <optional>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "g3/blocks.hpp"
#include "g3/outcome.hpp"

namespace g3 {

// Expression for a finite multiset of Weyl group elements.
class IndexSet {
 public:
  struct Interval { WeylElt lo, hi; };
  struct A1Cross { std::shared_ptr<const IndexSet> inner; };
  struct CosetQuot { std::shared_ptr<const IndexSet> inner; int i; };
  struct RightMul { std::shared_ptr<const IndexSet> inner; int gen; };
  struct Prefix0 { std::shared_ptr<const IndexSet> inner; };
  struct Explicit { ElementSet elts; };
  // τ in inner with ℓ(τ) > ℓ(τ s_i), optionally ℓ(τ) ≤ max_len.
  struct Guarded { std::shared_ptr<const IndexSet> inner; int descent; std::optional<int> max_len; };
  struct Union { std::vector<IndexSet> parts; };
  using Node = std::variant<Interval, A1Cross, CosetQuot, RightMul, Prefix0, Explicit, Guarded, Union>;

  IndexSet(Node n) : node_(std::move(n)) {}
  template <class N>
    requires std::is_constructible_v<Node, N>
  IndexSet(N n) : node_(std::move(n)) {}

  static IndexSet interval(const WeylElt& lo, const WeylElt& hi) { return Interval{lo, hi}; }
  static IndexSet below(const Dihedral& s);  // [e, s]
  static IndexSet above(const Dihedral& s);  // [s, w∘]
  static IndexSet explicit_set(ElementSet elts) { return Explicit{std::move(elts)}; }
  static IndexSet explicit_words(std::initializer_list<const char*> words);

  IndexSet a1() const { return A1Cross{share()}; }
  IndexSet mod(int i) const { return CosetQuot{share(), i}; }
  IndexSet times(int gen) const { return RightMul{share(), gen}; }
  IndexSet prefix0() const { return Prefix0{share()}; }
  IndexSet descents(int i, std::optional<int> max_len = std::nullopt) const {
    return Guarded{share(), i, max_len};
  }
  IndexSet operator|(const IndexSet& o) const { return Union{{*this, o}}; }

  ElementSet evaluate() const;
  std::string render() const;
  const Node& node() const { return node_; }

 private:
  std::shared_ptr<const IndexSet> share() const { return std::make_shared<const IndexSet>(*this); }
  Node node_;
};

struct Term {
  int layer;
  IndexSet set;
  int coef = 1;
};

enum class TermKind { Verma, Simple };

struct Formula {
  TermKind kind = TermKind::Verma;
  std::vector<Term> terms;

  Formula& operator+=(Term t) {
    terms.push_back(std::move(t));
    return *this;
  }
  VermaChar evaluate(int k) const;
  std::string render() const;
};

struct Row {
  std::string case_id;
  Formula formula;
};

Outcome<Row> tilting_row(int k, int n, const WeylElt& w);
Outcome<Row> projective_row(int k, int n, const WeylElt& w);
// Direct composition-multiplicity rows; available for k ≥ 1.
Outcome<Row> jordan_holder_row(int k, int n, const WeylElt& w);

Outcome<VermaChar> tilting(int k, int n, const WeylElt& w);
Outcome<VermaChar> projective(int k, int n, const WeylElt& w);
// Keys are simple labels (by symbol); values are [M : L].
Outcome<VermaChar> jordan_holder(int k, int n, const WeylElt& w);

VermaChar soergel_transform(const VermaChar& c);

// [M_μ : L_λ] = (P_λ : M_μ) with μ = f(k,n,w). Unknown when some projective
// that could contain M_μ is not available.
Outcome<VermaChar> bgg_convert(int k, int n, const WeylElt& w);

// μ − λ is a non-negative integral combination of positive roots.
bool weight_geq(const Symbol& mu, const Symbol& lam);

}  // namespace g3
