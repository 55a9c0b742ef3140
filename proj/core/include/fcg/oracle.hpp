#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "fcg/group.hpp"

// Brute-force engines. Nothing here uses subgroup closures or lattice code
// from the rest of the library; only element arithmetic is shared.
namespace fcg::oracle {

/// All products of at most `radius` generators (generators are closed under
/// inverses on construction), in breadth-first order.
class Ball {
public:
  const std::vector<Element>& generators() const noexcept { return generators_; }
  std::size_t radius() const noexcept { return layer_end_.size() - 1; }
  std::size_t size() const noexcept { return elements_.size(); }
  /// Elements of word length at most r.
  std::span<const Element> within(std::size_t r) const;
  std::span<const Element> elements() const { return within(radius()); }
  bool contains(const Element& e) const { return members_.count(e) > 0; }

private:
  friend Ball ball_enumerate(const Group&, const std::vector<Element>&, std::size_t, std::size_t);
  std::vector<Element> generators_;
  std::vector<Element> elements_;
  std::vector<std::size_t> layer_end_;
  std::set<Element> members_;
};

Ball ball_enumerate(const Group& group, const std::vector<Element>& gens, std::size_t radius,
                    std::size_t max_elements = 1'000'000);

/// Membership in <gens> by naive closure: full enumeration for finite
/// groups, coset transversal plus a triangularized translation lattice for
/// affine groups.
class NaiveSubgroup {
public:
  NaiveSubgroup(const Group& group, const std::vector<Element>& gens);
  bool contains(const Element& e) const;
  /// a^-1 b in the subgroup
  bool same_coset(const Element& a, const Element& b) const;

private:
  Group group_;
  std::set<Element> finite_elements_;
  std::map<std::uint32_t, Element> transversal_;
  std::vector<Vector> echelon_;  // rows with strictly increasing leading columns
};

enum class Property { ClassSize, Centralizer, FcMembership, SubgroupIndex };

std::string to_string(Property p);

struct Instance {
  Property property = Property::ClassSize;
  std::vector<Element> acting;   // generators of H
  Element element;               // k (unused for SubgroupIndex)
  std::vector<Element> modulus;  // generators of N; empty for trivial
  std::vector<Element> other;    // generators of K for SubgroupIndex
};

/// Ball-restricted computation at radii 0..r.
struct Report {
  Property property = Property::ClassSize;
  std::size_t radius = 0;
  std::vector<std::size_t> counts;  // counts[i] at radius i
  bool stabilized = false;          // counts[r-1] == counts[r]
  std::vector<Element> members;     // Centralizer: ball elements in C_H(k/N)
  std::vector<Element> ball;        // Centralizer: Ball_r(H)

  std::size_t value() const { return counts.back(); }
  /// counts strictly increase over radii [from, to].
  bool strictly_growing(std::size_t from, std::size_t to) const;
};

Report brute_check(const Group& group, const Instance& instance, std::size_t radius);

}  // namespace fcg::oracle
