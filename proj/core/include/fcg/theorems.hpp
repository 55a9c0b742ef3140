#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fcg/fc_analysis.hpp"

namespace fcg {

struct TowerOptions {
  FcOptions fc;
  std::size_t coset_limit = 100000;
};

struct TowerFlags {
  bool hypothesis = false;         // N_i ∩ F_{i-1} is bounded FC modulo the modulus
  bool symmetry = false;           // [F_{i-1} : FC_{F_{i-1}}(N_i ∩ F_{i-1} / M)] finite
  bool x_finite = false;           // [X : M] finite
  bool centralizer_finite = false; // [FC-part : F_i] finite
  bool centrality = false;         // H_{j+1}/H_j central in F_i/H_j for j < 2i
  bool containment = false;        // F_i ∩ N_i <= H_{2i}
  bool odd_factor_finite = false;  // [H_{2i-1} : H_{2i-2}] finite
  bool finite_index = false;       // [G : F_i] finite

  bool all() const {
    return hypothesis && symmetry && x_finite && centralizer_finite && centrality && containment &&
           odd_factor_finite && finite_index;
  }
};

/// Step i of the recursion. All quotient groups are represented by their
/// preimages together with `modulus`.
struct TowerStep {
  std::size_t i = 0;
  Subgroup modulus;        // H^{i-1}_{2(i-1)}
  Subgroup previous_f;     // F_{i-1}
  Subgroup level;          // N_i ∩ F_{i-1}
  std::optional<BoundCertificate> level_bound;
  Subgroup fc_part;        // FC_{F_{i-1}}(level / modulus)
  IndexValue fc_part_index = IndexValue::finite(1);  // in F_{i-1}
  Subgroup x;              // [fc_part, level ∩ fc_part] * modulus
  std::vector<Element> x_representatives;  // cosets of the modulus in x
  IndexValue x_index = IndexValue::finite(1);
  Subgroup f;              // F_i
  IndexValue centralizer_index = IndexValue::finite(1);  // [fc_part : F_i]
  std::vector<Subgroup> h; // H^i_0 .. H^i_{2i}
  IndexValue odd_factor_index = IndexValue::finite(1);
  IndexValue f_index = IndexValue::finite(1);  // [G : F_i]
  TowerFlags flags;
};

struct TowerTrace {
  Group group;
  std::size_t n = 0;
  std::vector<TowerStep> steps;
  Subgroup f;                       // F_n
  IndexValue index = IndexValue::finite(1);
  std::vector<Subgroup> h;          // H^n_0 .. H^n_{2n}
  std::size_t nilpotency_class = 0; // of F_n, from its upper central series
  std::size_t class_bound = 0;      // 2n
  bool success = false;
};

/// Builds F_n of finite index and nilpotent of class at most 2n from a
/// bounded FC-nilpotent chain. Throws ProofStepFailure naming the step
/// whose runtime verification failed.
TowerTrace nilpotent_tower(const FCChain& chain, const TowerOptions& opts = {});

/// Chain 1 <= Z_1(N) <= ... <= Z_c(N) (<= G when N != G), validated.
struct NilpotentWitness {
  FCChain chain;
  std::uint64_t k = 1;          // [G : N]
  std::size_t nilpotency_class = 0;
  bool bounds_within_k = false;
};

NilpotentWitness witness_from_nilpotent(const Group& group, const Subgroup& n, const FcOptions& opts = {});

struct Decomposition {
  Subgroup subgroup;
  Subgroup modulus;
  Subgroup derived;              // preimage of (H/N)'
  IndexValue derived_order = IndexValue::finite(1);  // [derived : N]
  Subgroup centralizer;          // preimage of C_{H/N}((H/N)')
  IndexValue centralizer_index = IndexValue::finite(1);
  std::size_t nilpotency_class = 0;  // of centralizer / N
  BoundCertificate bound;
};

/// H a bounded FC-group: H' finite, C_H(H') of finite index and class <= 2.
Decomposition neumann_decompose(const Subgroup& h, const FcOptions& opts = {});
/// The same for H/N with N normal in H.
Decomposition neumann_decompose(const Subgroup& h, const Modulus& n, const FcOptions& opts = {});

enum class SymmetryVerdict { HypothesisFalse, Verified, Violation };
std::string to_string(SymmetryVerdict v);

struct SymmetryRecord {
  std::string interpretation;
  bool hypothesis_bounded = false;                 // FC_H(K/N) bounded
  IndexValue hypothesis_index = IndexValue::finite(1);  // [H : H ∩ FC_G(K/N)]
  IndexValue conclusion_index = IndexValue::finite(1);  // [K : K ∩ FC_G(H/N)]
  SymmetryVerdict verdict = SymmetryVerdict::HypothesisFalse;
};

SymmetryRecord symmetry_check(const Subgroup& g, const Subgroup& h, const Subgroup& k, const Modulus& n,
                              const FcOptions& opts = {});

struct CommutatorResult {
  Subgroup subgroup;
  std::uint64_t order = 1;
  BoundCertificate bound;
};

/// [H, K] for K normalizing H with H = FC_H(K), K = FC_K(H) bounded.
CommutatorResult commutator_finiteness(const Subgroup& h, const Subgroup& k, const FcOptions& opts = {});

struct SolvableLevel {
  Decomposition factor;  // of G_{i+1} / G_i
  Subgroup core;         // normal core in G of the previous S
  Subgroup s;            // S_{i+1}
  IndexValue index = IndexValue::finite(1);  // [G_{i+1} : S_{i+1}]
};

struct SolvableResult {
  std::vector<SolvableLevel> levels;
  Subgroup s;
  IndexValue index = IndexValue::finite(1);
  std::vector<Subgroup> derived_series;  // S, S', ..., 1
  std::size_t derived_length = 0;
};

/// Finite-index solvable subgroup of G from a bounded FC-solvable chain.
SolvableResult solvable_resolve(const FCChain& chain, const FcOptions& opts = {});

/// Largest subgroup of s normal in `by` (s must have finitely many conjugates).
Subgroup normal_core(const Subgroup& s, const Subgroup& by, std::size_t max_rounds = 64);

/// An element of G outside every coset x H, searched in balls up to
/// `radius`. Every H must have infinite index in G.
Element coset_cover_witness(const Subgroup& g, const std::vector<std::pair<Element, Subgroup>>& cosets,
                            std::size_t radius = 20);

}  // namespace fcg
