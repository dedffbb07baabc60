#include "g3/seeds.hpp"

#include <string_view>
#include <utility>

namespace g3 {

namespace {

using D = Dihedral;

Symbol sym(const Weight& w) { return to_symbol(w); }
Symbol dplus(int i) { return sym(delta() + eps(i)); }
Symbol dminus(int i) { return sym(delta() - eps(i)); }
Symbol epsdiff(int i, int j) { return sym(eps(i) - eps(j)); }
Symbol delta_sym() { return sym(delta()); }

// Rows of (comma-separated words, root subtracted from the target).
using ShiftTable = std::vector<std::pair<std::string_view, Symbol>>;

const Symbol* lookup(const ShiftTable& t, const D& e) {
  for (const auto& [names, root] : t) {
    std::string_view rest = names;
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const auto name = rest.substr(0, comma);
      if (word(name).w2 == e) return &root;
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
  }
  return nullptr;
}

bool desc(const D& e, int i) { return e.right_descent(i); }

}  // namespace

SeedCase seed_case(int k, int n, const WeylElt& w) {
  const D e = w.w2;
  const Symbol target = f(k, n, w);
  const Symbol standard = target - sym(delta() * 2);
  auto single = [&](const Symbol& s) { return SeedCase{s, {w}, ""}; };
  auto shifted = [&](const ShiftTable& t) -> SeedCase {
    if (const Symbol* r = lookup(t, e)) return single(target - *r);
    return single(standard);
  };

  if (!w.s0) {
    if (k == 0 && n == 0 && coset_max(e, 1) == D::longest()) return single({-3, 0, 0, 0});
    if (k >= 2 && n == 3 * k - 3)
      return shifted({{"e,1,121,212,1212", dminus(3)},
                      {"2,12,21,2121,21212", dplus(2)},
                      {"w0,12121", dplus(1)}});
    if (k >= 1 && n == k - 1) {
      if (!desc(e, 1)) {
        if (k == 1)
          return shifted({{"e,2,12", dminus(3)}, {"212", dplus(2)}, {"1212", dplus(1)}, {"21212", dminus(1)}});
        return single(standard);
      }
      return shifted({{"1", epsdiff(2, 3)}, {"21", dplus(1)}, {"121,w0", dplus(2)}, {"2121,12121", dminus(3)}});
    }
    if (k >= 1 && n == 3 * k && desc(e, 2))
      return shifted({{"2,212", dplus(1)}, {"12", epsdiff(2, 3)}, {"1212", dplus(2)}, {"21212,w0", dminus(3)}});
    return single(standard);
  }

  if (k == 0 && n == 0) {
    const D s = coset_min(e, 1);
    if (s == word("21212").w2) return single({-1, 0, 0, 0});
    if (s == word("1212").w2) return {standard, {w, WeylElt::longest2()}, "sum of two tilting modules"};
    return single(standard);
  }
  if (k == 0 && n == 1) {
    if (coset_max(e, 2) == D::longest()) return single({3, 0, 0, 0});
    return single(standard);
  }
  if (k == 0 && n == 2) {
    if (e == word("12").w2) return {target - delta_sym(), {w, w}, "translation gives twice the target"};
    return shifted({{"1,21212", dminus(1)},
                    {"21,1212", dplus(1)},
                    {"212,121", dplus(2)},
                    {"w0", dminus(2)},
                    {"2,2121,12121", dminus(3)}});
  }
  if (k == 1 && n == 0) {
    if (e == D{}) return single(standard);
    if (!desc(e, 2)) return shifted({{"1", dminus(1)}, {"21", dplus(1)}, {"121", dplus(2)}, {"2121,12121", dminus(3)}});
    return shifted({{"212,1212", dplus(2)}, {"2,12,21212,w0", dminus(3)}});
  }
  if (k >= 2 && n == 0) {
    if (!desc(e, 2)) return single(standard);
    if (const Symbol* r = lookup({{"212,1212", dplus(2)}}, e)) return single(target - *r);
    return single(target - dminus(3));
  }
  if (k >= 1 && n == k + 1) {
    if (!desc(e, 1)) {
      if (k == 1) return shifted({{"e,2", delta_sym()}, {"12,21212", dplus(2)}, {"212,1212", dminus(3)}});
      return single(standard);
    }
    return shifted({{"1,2121", dplus(2)}, {"21,121", dminus(3)}, {"12121", dplus(1)}, {"w0", dminus(1)}});
  }
  if (k >= 1 && n == 3 * k + 2) {
    if (!desc(e, 2)) return single(standard);
    return shifted({{"2,12", dminus(3)}, {"212", dplus(2)}, {"1212", dplus(1)}, {"21212", dminus(1)}, {"w0", dminus(2)}});
  }
  if (n == 3 * k + 5) {
    if (e == D{}) return {target - dplus(2), {w, w}, "translation gives twice the target"};
    if (e == D::gen(2)) return {target - dminus(3), {w, w}, "translation gives twice the target"};
    return shifted({{"1,12,21212,w0", dplus(2)}, {"21,121,212,1212,2121,12121", dminus(3)}});
  }
  return single(standard);
}

}  // namespace g3
