#pragma once

#include <cstddef>
#include <vector>

#include "fcg/subgroup.hpp"

namespace fcg {

/// C_H(k/N) = { h in H : [h, k] in N }.
Subgroup centralizer_mod(const Subgroup& h, const Element& k, const Modulus& n);
/// { h in H : [h, x] in N for every x in xs }.
Subgroup centralizer_mod(const Subgroup& h, const std::vector<Element>& xs, const Modulus& n);
/// Size of the H-conjugacy class of k modulo N, i.e. [H : C_H(k/N)].
IndexValue class_size_mod(const Subgroup& h, const Element& k, const Modulus& n);
/// Preimage in H of the center of H/N.
Subgroup center_mod(const Subgroup& h, const Modulus& n);
/// N_K(N) = { k in K : k N k^-1 = N }.
Subgroup normalizer_in(const Subgroup& k, const Subgroup& n);

struct ConjugacyClass {
  Element representative;  // least element of the class
  std::uint64_t size = 0;
};

/// Conjugacy classes of a finite subgroup under its own conjugation action,
/// ordered by representative.
std::vector<ConjugacyClass> conjugacy_classes(const Subgroup& h);

struct UpperCentralSeries {
  std::vector<Subgroup> terms;  // Z_0 = 1, Z_1, ... until it stabilizes
  bool nilpotent = false;       // series reached the whole subgroup
  std::size_t nilpotency_class = 0;
};

UpperCentralSeries upper_central_series(const Subgroup& n, std::size_t max_terms = 64);

/// Smallest subgroup containing `gens` and normalized by `by`.
Subgroup normal_closure(const std::vector<Element>& gens, const Subgroup& by);
/// [H, K]: normal closure in <H, K> of the commutators of generators.
Subgroup commutator_subgroup(const Subgroup& h, const Subgroup& k);
/// H^(0) = H, H^(i+1) = [H^(i), H^(i)], until trivial or stable.
std::vector<Subgroup> derived_series(const Subgroup& h, std::size_t max_terms = 64);

/// Coset representatives of M in X (M normal in X), when [X : M] is finite
/// and at most `limit`; identity first.
std::vector<Element> coset_representatives(const Subgroup& x, const Modulus& m, std::size_t limit = 100000);

}  // namespace fcg
