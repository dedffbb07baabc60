#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace g3 {

// A value whose derivation is not available (as opposed to an error).
struct Unknown {
  std::string reason;
};

template <class T>
class Outcome {
 public:
  Outcome(T value) : v_(std::move(value)) {}
  Outcome(Unknown u) : v_(std::move(u)) {}

  bool known() const { return std::holds_alternative<T>(v_); }
  explicit operator bool() const { return known(); }

  const T& value() const {
    if (!known()) throw std::logic_error("unknown outcome: " + unknown().reason);
    return std::get<T>(v_);
  }
  const T& operator*() const { return value(); }
  const T* operator->() const { return &value(); }
  const Unknown& unknown() const { return std::get<Unknown>(v_); }

 private:
  std::variant<T, Unknown> v_;
};

}  // namespace g3
