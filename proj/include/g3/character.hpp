#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "g3/symbols.hpp"

namespace g3 {

// Finitely supported multiset Symbol -> positive multiplicity.
class VermaChar {
 public:
  using Map = std::map<Symbol, std::int64_t>;

  VermaChar() = default;
  explicit VermaChar(Map terms);

  void add(const Symbol& s, std::int64_t mult = 1);
  std::int64_t operator[](const Symbol& s) const;

  VermaChar& operator+=(const VermaChar& o);
  friend VermaChar operator+(VermaChar a, const VermaChar& b) { return a += b; }
  VermaChar scaled(std::int64_t c) const;
  // Terms of this exceeding o (truncated difference).
  VermaChar minus(const VermaChar& o) const;
  bool contains(const VermaChar& o) const;

  std::int64_t total() const;
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  std::int64_t max_mult() const;

  const Map& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  friend bool operator==(const VermaChar&, const VermaChar&) = default;

 private:
  Map terms_;
};

std::string render(const VermaChar& c);

}  // namespace g3
