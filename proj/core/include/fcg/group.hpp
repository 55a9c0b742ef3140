#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "fcg/bsgs.hpp"
#include "fcg/index_value.hpp"
#include "fcg/matrix.hpp"
#include "fcg/permutation.hpp"

namespace fcg {

enum class Backend { FinitePermutation, Affine };

std::string to_string(Backend b);

struct FinitePermDescriptor {
  std::size_t degree = 1;
  std::vector<std::string> generator_names;
  std::vector<Perm> generators;
};

/// Z^rank ⋊ F with F a finite permutation group acting through integer
/// matrices; action[i] is the matrix of finite_part.generators[i].
struct AffineDescriptor {
  std::size_t rank = 0;
  FinitePermDescriptor finite_part;
  std::vector<Matrix> action;
  std::vector<std::string> translation_names;  // defaults to t1..tn
};

/// (translation, finite part). The finite part is an index into the ambient
/// group's sorted element table of F.
struct AffineElement {
  Vector translation;
  std::uint32_t finite = 0;

  friend bool operator==(const AffineElement&, const AffineElement&) = default;
  friend auto operator<=>(const AffineElement& a, const AffineElement& b) {
    if (auto c = a.finite <=> b.finite; c != 0) return c;
    return a.translation <=> b.translation;
  }
};

class Element {
public:
  Element() = default;
  Element(Perm p) : value_(std::move(p)) {}
  Element(AffineElement a) : value_(std::move(a)) {}

  Backend backend() const noexcept {
    return std::holds_alternative<Perm>(value_) ? Backend::FinitePermutation : Backend::Affine;
  }
  const Perm& perm() const { return std::get<Perm>(value_); }
  const AffineElement& affine() const { return std::get<AffineElement>(value_); }

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;

private:
  std::variant<Perm, AffineElement> value_;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept;
};

namespace detail {
struct GroupData;
}

/// Handle to an ambient group. Copies share the same immutable data; two
/// handles denote the same group iff they share it.
class Group {
public:
  /// Validates generators; throws InputError.
  static Group finite(FinitePermDescriptor desc, std::string name = {});
  /// Validates that the action is a homomorphism F -> GL(n, Z) by checking
  /// every edge of the Cayley graph of F; throws InputError.
  static Group affine(AffineDescriptor desc, std::string name = {});

  Backend backend() const noexcept;
  const std::string& name() const noexcept;
  bool same_as(const Group& other) const noexcept { return data_ == other.data_; }

  Element identity() const;
  Element multiply(const Element& a, const Element& b) const;
  Element inverse(const Element& a) const;
  /// g^h = h^-1 g h
  Element conjugate(const Element& g, const Element& h) const;
  /// [g, h] = g^-1 h^-1 g h
  Element commutator(const Element& g, const Element& h) const;
  Element power(const Element& g, long long n) const;
  bool is_identity(const Element& e) const { return e == identity(); }

  /// Structural check that e is an element of this group.
  bool owns(const Element& e) const noexcept;
  void require_owned(const Element& e) const;

  /// Generating set: finite -> descriptor generators; affine -> unit
  /// translations followed by (0, f) for each finite-part generator.
  std::vector<Element> generators() const;
  std::vector<std::string> generator_names() const;

  std::string format(const Element& e) const;

  /// Exact order (infinite for affine groups of positive rank).
  IndexValue order() const;

  // Finite-permutation backend.
  std::size_t degree() const;
  const Bsgs& bsgs() const;

  // Affine backend.
  std::size_t rank() const;
  const FinitePermDescriptor& finite_part_descriptor() const;
  std::size_t finite_order() const;
  const Perm& finite_element(std::uint32_t index) const;
  std::uint32_t finite_index(const Perm& p) const;
  std::uint32_t finite_identity() const;
  std::uint32_t finite_multiply(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t finite_inverse(std::uint32_t a) const;
  /// Matrix of rho(f) acting on column vectors.
  const Matrix& action(std::uint32_t finite_index) const;
  Element translation(Vector v) const;
  Element affine_element(Vector v, std::uint32_t finite_index) const;

private:
  explicit Group(std::shared_ptr<const detail::GroupData> d) : data_(std::move(d)) {}
  std::shared_ptr<const detail::GroupData> data_;
};

}  // namespace fcg
