#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fcg/oracle.hpp"
#include "fcg/subgroup.hpp"

namespace fcg {

/// One closed-form value compared against brute_check.
struct CrossCheck {
  oracle::Property property = oracle::Property::ClassSize;
  Element element;
  std::string closed_form;            // index, "true"/"false", or subgroup description
  std::vector<std::size_t> oracle_counts;
  bool stabilized = false;
  bool agree = false;
};

/// Class size, centralizer and FC-membership of x under H modulo N, each
/// checked against the ball oracle at `radius`. Finite closed forms must
/// match the stabilized oracle count; infinite ones need strictly growing
/// counts on radii 3..5 (or up to radius - 1 when smaller). N must be
/// normal in the ambient group or trivial.
std::vector<CrossCheck> cross_check(const Subgroup& h, const Modulus& n, const Element& x, std::size_t radius);

/// [H : H ∩ K] against the oracle's coset count in Ball_r(H).
CrossCheck cross_check_index(const Subgroup& h, const Subgroup& k, std::size_t radius);

}  // namespace fcg
