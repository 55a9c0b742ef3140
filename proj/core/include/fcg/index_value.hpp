#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "fcg/integer.hpp"

namespace fcg {

/// Index of a subgroup or size of a conjugacy class: a positive integer or
/// infinity.
class IndexValue {
public:
  static IndexValue finite(std::uint64_t n) {
    if (n == 0) throw InputError("IndexValue must be at least 1");
    return IndexValue(n);
  }
  static IndexValue infinite() { return IndexValue(std::nullopt); }

  bool is_finite() const noexcept { return value_.has_value(); }
  bool is_infinite() const noexcept { return !value_.has_value(); }
  /// Throws if infinite.
  std::uint64_t value() const {
    if (!value_) throw ComputationError("value() on an infinite IndexValue");
    return *value_;
  }

  friend IndexValue operator*(IndexValue a, IndexValue b) {
    if (a.is_infinite() || b.is_infinite()) return infinite();
    return finite(checked::mul(*a.value_, *b.value_));
  }
  friend bool operator==(const IndexValue&, const IndexValue&) = default;

  std::string to_string() const { return value_ ? std::to_string(*value_) : "infinite"; }
  friend std::ostream& operator<<(std::ostream& os, const IndexValue& v) {
    return os << v.to_string();
  }

private:
  explicit IndexValue(std::optional<std::uint64_t> v) : value_(v) {}
  std::optional<std::uint64_t> value_;
};

}  // namespace fcg
