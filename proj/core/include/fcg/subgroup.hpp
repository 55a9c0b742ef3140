#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fcg/group.hpp"
#include "fcg/lattice.hpp"

namespace fcg {

namespace detail {
struct SubgroupData;
}

/// A subgroup of an ambient Group together with its closure data.
///
/// Finite backend: a base and strong generating set, plus the sorted element
/// list when the order is at most kEnumerationLimit.
///
/// Affine backend: the image P of the subgroup in F, the translation
/// subgroup L = S ∩ Z^n in Hermite normal form, and a section p -> v_p with
/// (v_p, p) in S and v_p reduced modulo L. This data is canonical, so equal
/// subgroups have equal data.
class Subgroup {
public:
  static constexpr std::uint64_t kEnumerationLimit = 5000;

  static Subgroup generate(const Group& group, const std::vector<Element>& gens);
  static Subgroup whole(const Group& group);
  static Subgroup trivial(const Group& group);

  const Group& group() const noexcept;
  Backend backend() const noexcept { return group().backend(); }
  /// A generating set (canonical for the affine backend).
  const std::vector<Element>& generators() const noexcept;

  bool contains(const Element& e) const;
  IndexValue order() const;
  bool is_finite() const { return order().is_finite(); }
  bool is_trivial() const;
  bool is_subgroup_of(const Subgroup& other) const;

  /// All elements, sorted. Requires a finite order of at most
  /// kEnumerationLimit (finite backend) or a rank-0 lattice (affine).
  std::vector<Element> elements() const;

  const Bsgs& bsgs() const;

  const std::vector<std::uint32_t>& finite_image() const;
  bool image_contains(std::uint32_t f) const;
  const Lattice& translations() const;
  /// Canonical v_p; throws if p is not in the image.
  const Vector& section(std::uint32_t p) const;

  std::string describe() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b);

private:
  explicit Subgroup(std::shared_ptr<const detail::SubgroupData> d) : data_(std::move(d)) {}
  std::shared_ptr<const detail::SubgroupData> data_;
};

/// [H : H ∩ K].
IndexValue subgroup_index(const Subgroup& h, const Subgroup& k);
Subgroup subgroup_intersect(const Subgroup& h, const Subgroup& k);
/// True iff every generator of H conjugates every generator of N into N
/// (both h^-1 n h and h n h^-1 are checked).
bool normalizes(const Subgroup& h, const Subgroup& n);
Subgroup join(const Subgroup& a, const Subgroup& b);
Subgroup join(const Subgroup& a, const std::vector<Element>& extra);

/// A subgroup N used as "mod N", with the subgroup verified to normalize it.
class Modulus {
public:
  static Modulus trivial(const Group& group);
  /// Throws PreconditionError if `normalizer` does not normalize `n`.
  static Modulus make(Subgroup n, Subgroup normalizer);
  /// N normalized by the whole ambient group.
  static Modulus normal(Subgroup n);

  const Subgroup& subgroup() const noexcept { return n_; }
  const Subgroup& normalizer() const noexcept { return normalizer_; }

  /// a N == b N
  bool same_coset(const Element& a, const Element& b) const;
  /// Throws PreconditionError unless every generator of h normalizes N.
  void require_normalized_by(const Subgroup& h) const;
  void require_normalized_by(const Element& k) const;
  bool normalized_by(const Element& k) const;

private:
  Modulus(Subgroup n, Subgroup normalizer) : n_(std::move(n)), normalizer_(std::move(normalizer)) {}
  Subgroup n_;
  Subgroup normalizer_;
};

/// Map used to cut out subgroups: its finite part must depend only on the
/// argument's finite part and its translation must be affine in the
/// argument's translation (true for any word in the argument and constants).
using WordMap = std::function<Element(const Element&)>;

/// { x in domain : phi(x) in target for every phi in maps }. The caller
/// guarantees the set is a subgroup; the assembled closure is checked
/// against the per-coset solutions and a ComputationError is raised if
/// they disagree.
Subgroup solve_subgroup(const Subgroup& domain, const Subgroup& target, const std::vector<WordMap>& maps);

/// Builds a finite subgroup from its full sorted element list, picking a
/// small generating set; throws if the list is not closed.
Subgroup subgroup_from_elements(const Group& group, const std::vector<Element>& sorted_elements);

}  // namespace fcg
