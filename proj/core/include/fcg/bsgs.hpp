#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fcg/permutation.hpp"

namespace fcg {

/// Base and strong generating set of a permutation group, built by the
/// deterministic Schreier-Sims algorithm. Base points are chosen as the
/// first point moved by the element that forces a new level.
class Bsgs {
public:
  Bsgs() = default;
  Bsgs(std::size_t degree, const std::vector<Perm>& generators);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<std::size_t>& base() const noexcept { return base_; }
  const std::vector<Perm>& strong_generators() const noexcept { return strong_; }
  std::vector<std::size_t> orbit_lengths() const;

  /// Exact group order (product of basic orbit lengths).
  std::uint64_t order() const;

  /// Sifts g through the stabilizer chain: the residue and the level at
  /// which sifting stopped (levels() means it passed every level).
  std::pair<Perm, std::size_t> strip(const Perm& g) const;
  bool contains(const Perm& g) const;
  std::size_t levels() const noexcept { return levels_.size(); }

  /// All elements, sorted.
  std::vector<Perm> elements() const;

private:
  struct Level {
    std::size_t base_point = 0;
    std::vector<Perm> generators;
    std::vector<std::size_t> orbit;
    // transversal[x] maps base_point to x; empty optional outside the orbit
    std::vector<std::optional<Perm>> transversal;
  };

  void rebuild_orbit(Level& level) const;
  std::pair<Perm, std::size_t> strip_from(const Perm& g, std::size_t start) const;
  void add_level_for(const Perm& g);

  std::size_t degree_ = 0;
  std::vector<std::size_t> base_;
  std::vector<Perm> strong_;
  std::vector<Level> levels_;
};

}  // namespace fcg
