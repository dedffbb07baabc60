#include "g3/formulas.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace g3 {

// ---------------------------------------------------------------- index sets

IndexSet IndexSet::below(const Dihedral& s) { return Interval{WeylElt{}, WeylElt{false, s}}; }

IndexSet IndexSet::above(const Dihedral& s) {
  return Interval{WeylElt{false, s}, WeylElt::longest2()};
}

IndexSet IndexSet::explicit_words(std::initializer_list<const char*> words) {
  ElementSet v;
  for (const char* w : words) v.push_back(word(w));
  return Explicit{std::move(v)};
}

namespace {

struct Evaluator {
  ElementSet operator()(const IndexSet::Interval& x) const { return interval(x.lo, x.hi); }
  ElementSet operator()(const IndexSet::A1Cross& x) const {
    ElementSet out;
    for (bool z : {false, true})
      for (const auto& w : x.inner->evaluate()) out.push_back({z, w.w2});
    return out;
  }
  ElementSet operator()(const IndexSet::CosetQuot& x) const { return coset_mod(x.inner->evaluate(), x.i); }
  ElementSet operator()(const IndexSet::RightMul& x) const {
    ElementSet out;
    for (const auto& w : x.inner->evaluate()) out.push_back(w * WeylElt::gen(x.gen));
    return out;
  }
  ElementSet operator()(const IndexSet::Prefix0& x) const {
    ElementSet out;
    for (const auto& w : x.inner->evaluate()) out.push_back(WeylElt::zero() * w);
    return out;
  }
  ElementSet operator()(const IndexSet::Explicit& x) const { return x.elts; }
  ElementSet operator()(const IndexSet::Guarded& x) const {
    ElementSet out;
    for (const auto& w : x.inner->evaluate())
      if (w.w2.right_descent(x.descent) && (!x.max_len || w.w2.len() <= *x.max_len)) out.push_back(w);
    return out;
  }
  ElementSet operator()(const IndexSet::Union& x) const {
    ElementSet out;
    for (const auto& p : x.parts) {
      auto v = p.evaluate();
      out.insert(out.end(), v.begin(), v.end());
    }
    return out;
  }
};

struct Renderer {
  std::string operator()(const IndexSet::Interval& x) const {
    return "[" + g3::render(x.lo) + "," + g3::render(x.hi) + "]";
  }
  std::string operator()(const IndexSet::A1Cross& x) const { return "A1x" + x.inner->render(); }
  std::string operator()(const IndexSet::CosetQuot& x) const {
    return x.inner->render() + "/<s" + std::to_string(x.i) + ">";
  }
  std::string operator()(const IndexSet::RightMul& x) const {
    return x.inner->render() + "s" + std::to_string(x.gen);
  }
  std::string operator()(const IndexSet::Prefix0& x) const { return "0" + x.inner->render(); }
  std::string operator()(const IndexSet::Explicit& x) const {
    std::string s = "{";
    for (std::size_t k = 0; k < x.elts.size(); ++k) s += (k ? "," : "") + g3::render(x.elts[k]);
    return s + "}";
  }
  std::string operator()(const IndexSet::Guarded& x) const {
    std::string cond = "l(t)>l(ts" + std::to_string(x.descent) + ")";
    if (x.max_len) cond = std::to_string(*x.max_len) + ">=l(t), " + cond;
    return "{t in " + x.inner->render() + " : " + cond + "}";
  }
  std::string operator()(const IndexSet::Union& x) const {
    std::string s;
    for (std::size_t k = 0; k < x.parts.size(); ++k) s += (k ? " u " : "") + x.parts[k].render();
    return s;
  }
};

}  // namespace

ElementSet IndexSet::evaluate() const { return std::visit(Evaluator{}, node_); }
std::string IndexSet::render() const { return std::visit(Renderer{}, node_); }

VermaChar Formula::evaluate(int k) const {
  VermaChar c;
  for (const auto& t : terms) {
    const Symbol top = f(k, t.layer);
    for (const auto& w : t.set.evaluate()) c.add(act(w, top), t.coef);
  }
  return c;
}

std::string Formula::render() const {
  std::ostringstream os;
  const char* letter = kind == TermKind::Verma ? "M" : "L";
  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (k) os << " + ";
    if (terms[k].coef != 1) os << terms[k].coef << "*";
    os << letter << "_" << terms[k].layer << "^" << terms[k].set.render();
  }
  return os.str();
}

// ------------------------------------------------------------------- tables

namespace {

using D = Dihedral;

D dw(const char* w) { return word(w).w2; }
bool desc(const D& e, int i) { return e.right_descent(i); }
int left_descent(const D& s) { return s.left_descent(1) ? 1 : 2; }

IndexSet I(const D& s) { return IndexSet::below(s); }
IndexSet U(const D& s) { return IndexSet::above(s); }
IndexSet X(std::initializer_list<const char*> ws) { return IndexSet::explicit_words(ws); }
IndexSet X(ElementSet ws) { return IndexSet::explicit_set(std::move(ws)); }

struct Builder {
  TermKind kind;
  std::string id;
  Formula formula{kind, {}};
  Builder& operator()(int layer, IndexSet set, int coef = 1) {
    formula += Term{layer, std::move(set), coef};
    return *this;
  }
  operator Outcome<Row>() const { return Row{id, formula}; }
};

Builder M(std::string id) { return {TermKind::Verma, std::move(id)}; }
Builder L(std::string id) { return {TermKind::Simple, std::move(id)}; }

Outcome<Row> tilting_w2(int k, int n, const D& e) {
  if (k == 0 && n == 0) {
    const D s = coset_max(e, 1);
    if (s == D::longest())
      return M("tilting.b0.red0.longest")(0, I(s).mod(1))(1, I(s).mod(2));
    return M("tilting.b0.red0")(0, I(s).mod(1))(1, I(s))(2, I(s));
  }
  if (n == 3 * k + 1) {
    const D s = coset_max(e, 2);
    return M("tilting.blue")(n, I(s).mod(2))(n + 1, I(s));
  }
  if (n == k) {
    const D s = coset_max(e, 1);
    return M("tilting.red")(n, I(s).mod(1))(n + 1, I(s));
  }
  if (n == k - 1) {
    if (!desc(e, 1)) return M("tilting.below-red.ascent")(n, I(e))(k, I(e))(k + 1, I(e));
    return M("tilting.below-red.descent")(n, I(e))(k, I(e).mod(1));
  }
  if (n == 3 * k) {
    if (!desc(e, 2)) return M("tilting.below-blue.ascent")(n, I(e))(n + 1, I(e))(n + 2, I(e));
    return M("tilting.below-blue.descent")(n, I(e))(n + 1, I(e).mod(2));
  }
  return M("tilting.generic")(n, I(e))(n + 1, I(e));
}

Outcome<Row> tilting_s0(int k, int n, const D& e) {
  if (k == 0 && n == 0) {
    const D s = coset_min(e, 1);
    if (s == D{}) return M("tilting.b0.0red0.e")(0, I(s).a1())(0, X({"2", "12"}))(1, I(dw("1")));
    if (s == dw("1212"))
      return M("tilting.b0.0red0.1212")(0, I(s).mod(1).a1())(0, I(dw("12")).mod(1) | X({"21212"}))(
          1, I(dw("121")).mod(2));
    if (s == dw("21212")) return M("tilting.b0.0red0.21212")(0, I(D::longest()).mod(1).a1());
    const D i = D::gen(left_descent(s));
    const D s12 = s * dw("12");
    return M("tilting.b0.0red0.short")(0, I(s).mod(1).a1())(
        0, I(s) | X(ElementSet{{false, i * s12}, {false, s12}}))(1, I(s.times_gen(1)));
  }
  if (k == 0 && n == 1) {
    const D s = coset_max(e, 2);
    if (s == D::longest())
      return M("tilting.b0.0blue1.longest")(1, I(s).mod(2).a1())(0, I(s).mod(1).a1());
    return M("tilting.b0.0blue1")(1, I(s).mod(2).a1())(0, I(s).a1());
  }
  if (k == 0 && n == 2) {
    if (e == D{}) return Unknown{"tilting module T_2^0 in block 0 is not determined"};
    if (!desc(e, 2)) return M("tilting.b0.02.ascent")(2, I(e).a1())(1, I(e).a1())(0, I(e).mod(1).a1());
    return M("tilting.b0.02.descent")(2, I(e).a1())(1, I(e).mod(2).a1());
  }
  if (k == 1 && n == 0) {
    if (e == D{}) return M("tilting.b1.00.e")(0, I(e).a1())(0, X({"2"}))(1, X({"e"}))(2, X({"e"}));
    if (!desc(e, 2)) return M("tilting.b1.00.ascent")(0, I(e).a1())(0, I(e).times(2))(1, I(e).mod(1));
    return M("tilting.b1.00.descent")(0, I(e).a1());
  }
  if (n == 0) {
    if (!desc(e, 2)) return M("tilting.00.ascent")(0, I(e).a1())(0, I(e).times(2))(1, I(e));
    return M("tilting.00.descent")(0, I(e).a1());
  }
  if (n == k) {
    const D s = coset_max(e, 1);
    return M("tilting.0red")(k, I(s).mod(1).a1())(k - 1, I(s).a1());
  }
  if (n == 3 * k + 1) {
    const D s = coset_max(e, 2);
    return M("tilting.0blue")(n, I(s).mod(2).a1())(3 * k, I(s).a1());
  }
  if (n == k + 1) {
    if (!desc(e, 1)) return M("tilting.0above-red.ascent")(n, I(e).a1())(k, I(e).a1())(k - 1, I(e).a1());
    return M("tilting.0above-red.descent")(n, I(e).a1())(k, I(e).mod(1).a1());
  }
  if (n == 3 * k + 2) {
    if (!desc(e, 2))
      return M("tilting.0above-blue.ascent")(n, I(e).a1())(3 * k + 1, I(e).a1())(3 * k, I(e).a1());
    return M("tilting.0above-blue.descent")(n, I(e).a1())(3 * k + 1, I(e).mod(2).a1());
  }
  return M("tilting.0generic")(n, I(e).a1())(n - 1, I(e).a1());
}

// P_n^{0τ}
Outcome<Row> projective_s0(int k, int n, const D& t) {
  if (k == 0 && n == 0) {
    const D s = coset_min(t, 1);
    if (s == D{}) return M("projective.b0.0red0.e")(0, U(s).mod(1).prefix0())(1, U(s).mod(2).prefix0());
    return M("projective.b0.0red0")(0, U(s).mod(1).prefix0())(1, U(s).prefix0())(2, U(s).prefix0());
  }
  if (n == 3 * k + 1) {
    const D s = coset_min(t, 2);
    return M("projective.0blue")(n, U(s).mod(2).prefix0())(n + 1, U(s).prefix0());
  }
  if (n == k) {
    const D s = coset_min(t, 1);
    return M("projective.0red")(n, U(s).mod(1).prefix0())(n + 1, U(s).prefix0());
  }
  if (n == k - 1) {
    if (desc(t, 1))
      return M("projective.0below-red.descent")(n, U(t).prefix0())(k, U(t).prefix0())(k + 1, U(t).prefix0());
    return M("projective.0below-red.ascent")(n, U(t).prefix0())(k, U(t).mod(1).prefix0());
  }
  if (n == 3 * k) {
    if (desc(t, 2))
      return M("projective.0below-blue.descent")(n, U(t).prefix0())(n + 1, U(t).prefix0())(
          n + 2, U(t).prefix0());
    return M("projective.0below-blue.ascent")(n, U(t).prefix0())(n + 1, U(t).mod(2).prefix0());
  }
  return M("projective.0generic")(n, U(t).prefix0())(n + 1, U(t).prefix0());
}

// P_n^τ
Outcome<Row> projective_w2(int k, int n, const D& t) {
  if (k == 0 && n == 0) {
    const D s = coset_max(t, 1);
    if (s == D::longest())
      return M("projective.b0.red0.longest")(0, X({"w0", "0w0", "02121", "012121"}))(1, X({"021212", "0w0"}));
    if (s == dw("21"))
      return M("projective.b0.red0.21")(0, U(s).mod(1).a1())(0, U(dw("2121")).mod(1).prefix0() | X({"01"}))(
          1, U(dw("212")).mod(2).prefix0());
    if (s == dw("1")) return M("projective.b0.red0.1")(0, U(D{}).mod(1).a1());
    const int i = left_descent(s);
    const int j = i == 1 ? 2 : 1;
    const D tp = s.gen_times(i).gen_times(j);
    return M("projective.b0.red0.long")(0, U(s).mod(1).a1())(
        0, U(s).prefix0() | X(ElementSet{{true, tp}, {true, tp.gen_times(j)}}))(1, U(s.times_gen(1)).prefix0());
  }
  if (k == 0 && n == 1) {
    const D s = coset_min(t, 2);
    if (s == D{}) return M("projective.b0.blue1.e")(1, U(s).mod(2).a1())(0, U(s).mod(1).a1());
    return M("projective.b0.blue1")(1, U(s).mod(2).a1())(0, U(s).a1());
  }
  if (k == 0 && n == 2) {
    if (t == D::longest()) return Unknown{"projective P_2^w0 in block 0 is not determined"};
    if (desc(t, 2)) return M("projective.b0.2.descent")(2, U(t).a1())(1, U(t).a1())(0, U(t).mod(1).a1());
    return M("projective.b0.2.ascent")(2, U(t).a1())(1, U(t).mod(2).a1());
  }
  if (k == 1 && n == 0) {
    if (t == D::longest())
      return M("projective.b1.0.longest")(0, U(t).a1())(0, X({"012121"}))(1, X({"0w0"}))(2, X({"0w0"}));
    if (desc(t, 2))
      return M("projective.b1.0.descent")(0, U(t).a1())(0, U(t).times(2).prefix0())(1, U(t).mod(1).prefix0());
    return M("projective.b1.0.ascent")(0, U(t).a1());
  }
  if (n == 0) {
    if (desc(t, 2)) return M("projective.0.descent")(0, U(t).a1())(0, U(t).times(2).prefix0())(1, U(t).prefix0());
    return M("projective.0.ascent")(0, U(t).a1());
  }
  if (n == k) {
    const D s = coset_min(t, 1);
    return M("projective.red")(k, U(s).mod(1).a1())(k - 1, U(s).a1());
  }
  if (n == 3 * k + 1) {
    const D s = coset_min(t, 2);
    return M("projective.blue")(n, U(s).mod(2).a1())(3 * k, U(s).a1());
  }
  if (n == k + 1) {
    if (desc(t, 1)) return M("projective.above-red.descent")(n, U(t).a1())(k, U(t).a1())(k - 1, U(t).a1());
    return M("projective.above-red.ascent")(n, U(t).a1())(k, U(t).mod(1).a1());
  }
  if (n == 3 * k + 2) {
    if (desc(t, 2))
      return M("projective.above-blue.descent")(n, U(t).a1())(3 * k + 1, U(t).a1())(3 * k, U(t).a1());
    return M("projective.above-blue.ascent")(n, U(t).a1())(3 * k + 1, U(t).mod(2).a1());
  }
  return M("projective.generic")(n, U(t).a1())(n - 1, U(t).a1());
}

Outcome<Row> jh_w2(int k, int n, const D& s) {
  if (n == 0 && k >= 2) return L("jh.0")(0, I(s))(1, I(s));
  if (n == k - 1) return L("jh.below-red")(n, I(s))(k, I(s).mod(1))(k + 1, I(s).descents(1));
  if (n == k) {
    const D t = coset_max(s, 1);
    return L("jh.red")(k, I(t).mod(1))(k + 1, I(t))(k + 1, I(t).descents(1, t.len() - 2));
  }
  if (n == 3 * k) return L("jh.below-blue")(n, I(s))(n + 1, I(s).mod(2))(n + 2, I(s).descents(2));
  if (n == 3 * k + 1) {
    const D t = coset_max(s, 2);
    return L("jh.blue")(n, I(t).mod(2))(n + 1, I(t))(n + 1, I(t).descents(2, t.len() - 2));
  }
  return L("jh.generic")(n, I(s))(n + 1, I(s));
}

Outcome<Row> jh_s0(int k, int n, const D& s) {
  if (k == 1 && n == 0)
    return L("jh.b1.00")(0, I(s).a1())(0, I(s.times_gen(2)).descents(2))(1, I(s).mod(1))(2, I(s).descents(1));
  if (k == 1 && n == 1) {
    const D t = coset_max(s, 1);
    return L("jh.b1.0red1")(1, I(t).mod(1).a1())(0, I(t).prefix0())(0, I(t).descents(1, t.len() - 2).prefix0())(
        2, I(t))(2, I(t).descents(1, t.len() - 2))(0, I(t).descents(2));
  }
  if (k == 1 && n == 2) {
    auto b = L("jh.b1.02")(2, I(s).a1())(1, I(s).mod(1).prefix0())(0, I(s).descents(1).prefix0())(3, I(s));
    if (s == D::longest()) b(0, X({"w0"}));
    return b;
  }
  if (n == 0) return L("jh.00")(0, I(s).a1())(1, I(s))(0, I(s.times_gen(2)).descents(2));
  if (n == k - 1) {
    auto b = L("jh.0below-red")(n, I(s).a1())(k - 2, I(s).prefix0())(k, I(s).mod(1))(k + 1, I(s).descents(1));
    if (n == 1) b(0, I(s).descents(2));
    return b;
  }
  if (n == k) {
    const D t = coset_max(s, 1);
    return L("jh.0red")(k, I(t).mod(1).a1())(k - 1, I(t).prefix0())(
        k - 1, I(t).descents(1, t.len() - 2).prefix0())(k + 1, I(t))(k + 1, I(t).descents(1, t.len() - 2));
  }
  if (n == k + 1)
    return L("jh.0above-red")(n, I(s).a1())(k, I(s).mod(1).prefix0())(k - 1, I(s).descents(1).prefix0())(
        k + 2, I(s));
  if (n == 3 * k)
    return L("jh.0below-blue")(n, I(s).a1())(n - 1, I(s).prefix0())(n + 1, I(s).mod(2))(n + 2, I(s).descents(2));
  if (n == 3 * k + 1) {
    const D t = coset_max(s, 2);
    return L("jh.0blue")(n, I(t).mod(2).a1())(3 * k, I(t).prefix0())(
        3 * k, I(t).descents(2, t.len() - 2).prefix0())(3 * k + 2, I(t))(3 * k + 2, I(t).descents(2, t.len() - 2));
  }
  if (n == 3 * k + 2)
    return L("jh.0above-blue")(n, I(s).a1())(3 * k + 1, I(s).mod(2).prefix0())(
        3 * k, I(s).descents(2).prefix0())(3 * k + 3, I(s));
  auto b = L("jh.0generic")(n, I(s).a1())(n - 1, I(s).prefix0())(n + 1, I(s));
  if (n == 1) b(0, I(s).descents(2));
  return b;
}

Outcome<VermaChar> evaluate_row(const Outcome<Row>& row, int k) {
  if (!row) return row.unknown();
  return row->formula.evaluate(k);
}

void check_args(int k, int n) {
  if (k < 0 || n < 0) throw std::invalid_argument("block and layer must be non-negative");
}

}  // namespace

Outcome<Row> tilting_row(int k, int n, const WeylElt& w) {
  check_args(k, n);
  return w.s0 ? tilting_s0(k, n, w.w2) : tilting_w2(k, n, w.w2);
}

Outcome<Row> projective_row(int k, int n, const WeylElt& w) {
  check_args(k, n);
  return w.s0 ? projective_s0(k, n, w.w2) : projective_w2(k, n, w.w2);
}

Outcome<Row> jordan_holder_row(int k, int n, const WeylElt& w) {
  check_args(k, n);
  if (k == 0) return Unknown{"no direct composition table for block 0"};
  return w.s0 ? jh_s0(k, n, w.w2) : jh_w2(k, n, w.w2);
}

Outcome<VermaChar> tilting(int k, int n, const WeylElt& w) { return evaluate_row(tilting_row(k, n, w), k); }
Outcome<VermaChar> projective(int k, int n, const WeylElt& w) {
  return evaluate_row(projective_row(k, n, w), k);
}

Outcome<VermaChar> jordan_holder(int k, int n, const WeylElt& w) {
  if (k == 0) return bgg_convert(k, n, w);
  return evaluate_row(jordan_holder_row(k, n, w), k);
}

VermaChar soergel_transform(const VermaChar& c) {
  VermaChar out;
  for (const auto& [s, m] : c) out.add(-s, m);
  return out;
}

bool weight_geq(const Symbol& mu, const Symbol& lam) { return in_positive_cone(to_weight(mu - lam)); }

Outcome<VermaChar> bgg_convert(int k, int n, const WeylElt& w) {
  check_args(k, n);
  const Symbol mu = f(k, n, w);
  VermaChar out;
  std::vector<Symbol> seen;
  // Projective flags span at most two layers on either side of the top.
  for (int n2 = std::max(0, n - 4); n2 <= n + 4; ++n2) {
    for (const auto& w2 : weyl_elements()) {
      const Symbol lam = f(k, n2, w2);
      if (std::ranges::find(seen, lam) != seen.end()) continue;
      seen.push_back(lam);
      const auto p = projective(k, n2, w2);
      if (!p) {
        if (weight_geq(mu, lam)) return Unknown{"depends on " + p.unknown().reason};
        continue;
      }
      if (auto c = (*p)[mu]) out.add(lam, c);
    }
  }
  return out;
}

}  // namespace g3
