#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fcg/index_value.hpp"
#include "fcg/matrix.hpp"

namespace fcg {

/// Row Hermite normal form of A together with a unimodular U with U*A = H.
/// Convention: nonzero rows first, pivots strictly increasing in column and
/// positive, entries above a pivot reduced into [0, pivot).
struct HermiteForm {
  Matrix hnf;
  Matrix transform;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

HermiteForm hermite_normal_form(const Matrix& a);

/// Nontrivial invariant factors d_1 | d_2 | ... of a square or rectangular
/// integer matrix (Smith normal form diagonal, units dropped, zeros kept).
std::vector<Int> smith_invariants(const Matrix& a);

/// A subgroup of Z^n stored as its canonical HNF basis. Two lattices are
/// equal iff their bases are equal.
class Lattice {
public:
  explicit Lattice(std::size_t dim = 0) : dim_(dim), basis_(0, dim) {}

  static Lattice generated_by(const std::vector<Vector>& vectors, std::size_t dim);
  static Lattice full(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return basis_.rows(); }
  const Matrix& basis() const noexcept { return basis_; }
  std::vector<Vector> basis_vectors() const { return basis_.row_list(); }
  const std::vector<std::size_t>& pivot_columns() const noexcept { return pivots_; }

  /// Canonical representative of v + L: every pivot coordinate in [0, pivot).
  Vector reduce(const Vector& v) const;
  bool contains(const Vector& v) const;
  /// Integer coordinates of v in the HNF basis, if v lies in the lattice.
  std::optional<Vector> coordinates(const Vector& v) const;
  bool is_sublattice_of(const Lattice& other) const;

  /// [super : *this]; requires *this to be a sublattice of super.
  IndexValue index_in(const Lattice& super) const;
  /// Invariant factors of super / *this (finite part only when ranks match).
  std::vector<Int> quotient_invariants(const Lattice& super) const;

  Lattice intersect(const Lattice& other) const;
  Lattice sum(const Lattice& other) const;
  /// Image of the lattice under a matrix acting on column vectors.
  Lattice image(const Matrix& m) const;

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.dim_ == b.dim_ && a.basis_ == b.basis_;
  }

  std::string to_string() const;

private:
  std::size_t dim_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// [a : a ∩ b] and [b : a ∩ b].
struct LatticeComparison {
  IndexValue forward;
  IndexValue backward;
  bool commensurable() const { return forward.is_finite() && backward.is_finite(); }
};

IndexValue lattice_index(const Lattice& a, const Lattice& b);
LatticeComparison compare_lattices(const Lattice& a, const Lattice& b);

/// The condition  map * t  ∈  target + modulus  on a vector t.
struct LinearCondition {
  Matrix map;
  Vector target;
  Lattice modulus;
};

/// Solutions of a conjunction of LinearConditions over t in a domain lattice:
/// particular + homogeneous.
struct AffineSolution {
  Vector particular;
  Lattice homogeneous;
};

std::optional<AffineSolution> solve_conditions(const Lattice& domain,
                                               const std::vector<LinearCondition>& conditions);

/// (a + A) ∩ (b + B) as a coset of A ∩ B, if nonempty.
std::optional<AffineSolution> intersect_cosets(const Vector& a, const Lattice& A,
                                               const Vector& b, const Lattice& B);

}  // namespace fcg
