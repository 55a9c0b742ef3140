#include "fcg/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <utility>

namespace fcg {
namespace {

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

// row[dst] -= q * row[src]
void subtract_row(Matrix& m, std::size_t dst, std::size_t src, Int q) {
  if (q == 0) return;
  for (std::size_t c = 0; c < m.cols(); ++c)
    m(dst, c) = checked::sub(m(dst, c), checked::mul(q, m(src, c)));
}

void negate_row(Matrix& m, std::size_t r) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = checked::neg(m(r, c));
}

Int abs_checked(Int x) { return x < 0 ? checked::neg(x) : x; }

}  // namespace

HermiteForm hermite_normal_form(const Matrix& a) {
  HermiteForm out{a, Matrix::identity(a.rows()), 0, {}};
  Matrix& h = out.hnf;
  Matrix& u = out.transform;
  const std::size_t m = h.rows();
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < m; ++c) {
    bool has_pivot = false;
    for (;;) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i)
        if (h(i, c) != 0 && (best == m || abs_checked(h(i, c)) < abs_checked(h(best, c)))) best = i;
      if (best == m) break;
      has_pivot = true;
      swap_rows(h, r, best);
      swap_rows(u, r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (h(i, c) == 0) continue;
        Int q = checked::floor_div(h(i, c), h(r, c));
        subtract_row(h, i, r, q);
        subtract_row(u, i, r, q);
        if (h(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (!has_pivot) continue;
    if (h(r, c) < 0) {
      negate_row(h, r);
      negate_row(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Int q = checked::floor_div(h(i, c), h(r, c));
      subtract_row(h, i, r, q);
      subtract_row(u, i, r, q);
    }
    out.pivot_columns.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

std::vector<Int> smith_invariants(const Matrix& input) {
  Matrix m = input;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<Int> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Bring the smallest nonzero entry of the trailing block to (t, t).
    for (;;) {
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (m(i, j) != 0 && (bi == rows || abs_checked(m(i, j)) < abs_checked(m(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi == rows) {
        std::sort(diag.begin(), diag.end());
        return diag;
      }
      swap_rows(m, t, bi);
      for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, t), m(i, bj));
      bool done = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        Int q = checked::floor_div(m(i, t), m(t, t));
        subtract_row(m, i, t, q);
        if (m(i, t) != 0) done = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        Int q = checked::floor_div(m(t, j), m(t, t));
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = checked::sub(m(i, j), checked::mul(q, m(i, t)));
        if (m(t, j) != 0) done = false;
      }
      if (!done) continue;
      // Divisibility: the pivot must divide the whole trailing block.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m(i, j) % m(t, t) != 0) {
            for (std::size_t c = 0; c < cols; ++c) m(t, c) = checked::add(m(t, c), m(i, c));
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag.push_back(abs_checked(m(t, t)));
  }
  std::vector<Int> out;
  for (Int d : diag)
    if (d != 1) out.push_back(d);
  std::sort(out.begin(), out.end());
  return out;
}

Lattice Lattice::generated_by(const std::vector<Vector>& vectors, std::size_t dim) {
  Lattice l(dim);
  if (vectors.empty()) return l;
  HermiteForm hf = hermite_normal_form(Matrix::from_rows(vectors, dim));
  l.basis_ = Matrix(hf.rank, dim);
  for (std::size_t r = 0; r < hf.rank; ++r)
    for (std::size_t c = 0; c < dim; ++c) l.basis_(r, c) = hf.hnf(r, c);
  l.pivots_ = hf.pivot_columns;
  return l;
}

Lattice Lattice::full(std::size_t dim) {
  Lattice l(dim);
  l.basis_ = Matrix::identity(dim);
  for (std::size_t i = 0; i < dim; ++i) l.pivots_.push_back(i);
  return l;
}

Vector Lattice::reduce(const Vector& v) const {
  if (v.size() != dim_) throw InputError("vector length does not match lattice dimension");
  Vector out = v;
  for (std::size_t r = 0; r < rank(); ++r) {
    std::size_t c = pivots_[r];
    Int q = checked::floor_div(out[c], basis_(r, c));
    if (q == 0) continue;
    for (std::size_t j = c; j < dim_; ++j) out[j] = checked::sub(out[j], checked::mul(q, basis_(r, j)));
  }
  return out;
}

bool Lattice::contains(const Vector& v) const { return is_zero(reduce(v)); }

std::optional<Vector> Lattice::coordinates(const Vector& v) const {
  Vector rest = v;
  Vector coords(rank(), 0);
  for (std::size_t r = 0; r < rank(); ++r) {
    std::size_t c = pivots_[r];
    if (rest[c] % basis_(r, c) != 0) return std::nullopt;
    coords[r] = rest[c] / basis_(r, c);
    for (std::size_t j = c; j < dim_; ++j) rest[j] = checked::sub(rest[j], checked::mul(coords[r], basis_(r, j)));
  }
  if (!is_zero(rest)) return std::nullopt;
  return coords;
}

bool Lattice::is_sublattice_of(const Lattice& other) const {
  for (std::size_t r = 0; r < rank(); ++r)
    if (!other.contains(basis_.row(r))) return false;
  return true;
}

IndexValue Lattice::index_in(const Lattice& super) const {
  if (!is_sublattice_of(super)) throw PreconditionError("index_in: not a sublattice");
  if (rank() < super.rank()) return IndexValue::infinite();
  // Same rational span, hence same pivot columns.
  std::uint64_t num = 1, den = 1;
  for (std::size_t r = 0; r < rank(); ++r) {
    num = checked::mul(num, static_cast<std::uint64_t>(basis_(r, pivots_[r])));
    den = checked::mul(den, static_cast<std::uint64_t>(super.basis_(r, super.pivots_[r])));
  }
  if (num % den != 0) throw ComputationError("index_in: pivot products are not divisible");
  return IndexValue::finite(num / den);
}

std::vector<Int> Lattice::quotient_invariants(const Lattice& super) const {
  Matrix coords(rank(), super.rank());
  for (std::size_t r = 0; r < rank(); ++r) {
    auto c = super.coordinates(basis_.row(r));
    if (!c) throw PreconditionError("quotient_invariants: not a sublattice");
    for (std::size_t j = 0; j < super.rank(); ++j) coords(r, j) = (*c)[j];
  }
  std::vector<Int> inv = smith_invariants(coords);
  // Free part of the quotient shows up as zero invariants.
  for (std::size_t k = rank(); k < super.rank(); ++k) inv.insert(inv.begin(), 0);
  return inv;
}

Lattice Lattice::intersect(const Lattice& other) const {
  std::vector<LinearCondition> cond{{Matrix::identity(dim_), Vector(dim_, 0), other}};
  auto sol = solve_conditions(*this, cond);
  return sol->homogeneous;
}

Lattice Lattice::sum(const Lattice& other) const {
  std::vector<Vector> v = basis_vectors();
  for (auto& row : other.basis_vectors()) v.push_back(std::move(row));
  return generated_by(v, dim_);
}

Lattice Lattice::image(const Matrix& m) const {
  std::vector<Vector> v;
  for (std::size_t r = 0; r < rank(); ++r) v.push_back(m.apply(basis_.row(r)));
  return generated_by(v, m.rows());
}

std::string Lattice::to_string() const {
  std::ostringstream os;
  os << "Lattice(rank " << rank() << " in Z^" << dim_ << ", basis " << basis_.to_string() << ')';
  return os.str();
}

IndexValue lattice_index(const Lattice& a, const Lattice& b) { return a.intersect(b).index_in(a); }

LatticeComparison compare_lattices(const Lattice& a, const Lattice& b) {
  Lattice meet = a.intersect(b);
  return {meet.index_in(a), meet.index_in(b)};
}

std::optional<AffineSolution> solve_conditions(const Lattice& domain,
                                               const std::vector<LinearCondition>& conditions) {
  const std::size_t n = domain.dim();
  const std::size_t r = domain.rank();
  std::size_t total_cols = 0, total_rows = r;
  for (const auto& c : conditions) {
    if (c.map.cols() != n || c.map.rows() != c.target.size() || c.modulus.dim() != c.target.size())
      throw InputError("solve_conditions: dimension mismatch");
    total_cols += c.target.size();
    total_rows += c.modulus.rank();
  }
  if (total_cols == 0) return AffineSolution{Vector(n, 0), domain};

  // Unknowns: domain coordinates x, then the modulus coefficients of each
  // condition.  Solve z * Q = d.
  Matrix q(total_rows, total_cols);
  Vector d(total_cols, 0);
  std::size_t col0 = 0, row0 = r;
  for (const auto& c : conditions) {
    const std::size_t w = c.target.size();
    for (std::size_t i = 0; i < r; ++i) {
      Vector img = c.map.apply(domain.basis().row(i));
      for (std::size_t j = 0; j < w; ++j) q(i, col0 + j) = img[j];
    }
    for (std::size_t k = 0; k < c.modulus.rank(); ++k)
      for (std::size_t j = 0; j < w; ++j) q(row0 + k, col0 + j) = c.modulus.basis()(k, j);
    for (std::size_t j = 0; j < w; ++j) d[col0 + j] = c.target[j];
    col0 += w;
    row0 += c.modulus.rank();
  }

  HermiteForm hf = hermite_normal_form(q);
  Vector y(hf.rank, 0);
  Vector residual = d;
  for (std::size_t i = 0; i < hf.rank; ++i) {
    const std::size_t c = hf.pivot_columns[i];
    const Int p = hf.hnf(i, c);
    if (residual[c] % p != 0) return std::nullopt;
    y[i] = residual[c] / p;
    for (std::size_t j = c; j < total_cols; ++j)
      residual[j] = checked::sub(residual[j], checked::mul(y[i], hf.hnf(i, j)));
  }
  if (!is_zero(residual)) return std::nullopt;

  auto domain_vector = [&](const Vector& z) {
    Vector t(n, 0);
    for (std::size_t i = 0; i < r; ++i) axpy(t, z[i], domain.basis().row(i));
    return t;
  };

  Vector z(total_rows, 0);
  for (std::size_t i = 0; i < hf.rank; ++i) axpy(z, y[i], hf.transform.row(i));
  std::vector<Vector> kernel;
  for (std::size_t i = hf.rank; i < total_rows; ++i) kernel.push_back(domain_vector(hf.transform.row(i)));
  return AffineSolution{domain_vector(z), Lattice::generated_by(kernel, n)};
}

std::optional<AffineSolution> intersect_cosets(const Vector& a, const Lattice& A, const Vector& b,
                                               const Lattice& B) {
  const std::size_t n = A.dim();
  std::vector<LinearCondition> cond{{Matrix::identity(n), sub(b, a), B}};
  auto sol = solve_conditions(A, cond);
  if (!sol) return std::nullopt;
  return AffineSolution{add(a, sol->particular), sol->homogeneous};
}

}  // namespace fcg
