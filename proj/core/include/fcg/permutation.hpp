#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace fcg {

/// A permutation of {0, ..., degree-1} stored as its image array.
/// Products compose left to right: (a * b)(x) = b(a(x)).
class Perm {
public:
  Perm() = default;
  explicit Perm(std::vector<std::uint32_t> images);
  static Perm identity(std::size_t degree);
  /// From 1-based images as written in files; validates bijectivity.
  static Perm from_one_based(const std::vector<long long>& images);

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint32_t operator[](std::size_t x) const { return images_[x]; }
  const std::vector<std::uint32_t>& images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Perm inverse() const;
  /// First point moved, or degree() if identity.
  std::size_t first_moved_point() const noexcept;
  std::size_t order() const;

  std::vector<long long> one_based() const;
  /// Disjoint cycle notation on 1-based points, "()" for the identity.
  std::string cycle_string() const;

  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

private:
  std::vector<std::uint32_t> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

}  // namespace fcg
