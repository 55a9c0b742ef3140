#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fcg/structure.hpp"
#include "fcg/subgroup.hpp"

namespace fcg {

struct FcOptions {
  std::size_t verify_radius = 6;   // ball radius for the FC-subgroup cross-check
  std::size_t sample_radius = 3;   // ball radius for sampling members against a bound
  std::uint64_t residue_limit = 1'000'000;
  bool verify = true;
};

enum class BoundMethod { Exhaustive, GenericStabilizer };
std::string to_string(BoundMethod m);

/// sup of [H : C_H(x/N)] over x in FC_K(H/N), with a member attaining it.
struct BoundCertificate {
  std::uint64_t bound = 1;
  Element attaining;
  BoundMethod method = BoundMethod::Exhaustive;
  std::size_t samples_checked = 0;
};

/// k normalizes N and [H : C_H(k/N)] is finite.
bool fc_membership(const Subgroup& k_group, const Subgroup& h, const Modulus& n, const Element& k);

/// FC_K(H/N) = { k in N_K(N) : [H : C_H(k/N)] finite }.
Subgroup fc_centralizer_subgroup(const Subgroup& k, const Subgroup& h, const Modulus& n,
                                 const FcOptions& opts = {});

/// std::nullopt means unbounded.
std::optional<BoundCertificate> fc_bound(const Subgroup& k, const Subgroup& h, const Modulus& n,
                                         const FcOptions& opts = {});

struct Commensurability {
  IndexValue forward = IndexValue::finite(1);   // [H : H ∩ K]
  IndexValue backward = IndexValue::finite(1);  // [K : H ∩ K]
  bool commensurable() const { return forward.is_finite() && backward.is_finite(); }
};

Commensurability commensurable(const Subgroup& h, const Subgroup& k);

enum class ChainKind { Nilpotent, Solvable };
std::string to_string(ChainKind k);

struct ChainLevel {
  Subgroup subgroup;
  std::optional<BoundCertificate> bound;  // unset on level 0 and on failure
  bool normal = false;
  bool increasing = false;
  bool inside_fc = false;
  bool bounded = false;
  std::vector<std::string> diagnostics;
};

/// Subgroups H_0 = 1 <= H_1 <= ... <= H_n = G of one ambient group.
struct FCChain {
  Group group;
  ChainKind kind = ChainKind::Nilpotent;
  std::vector<ChainLevel> levels;
  bool validated = false;

  static FCChain make(const Group& group, ChainKind kind, const std::vector<Subgroup>& subgroups);

  std::size_t length() const { return levels.empty() ? 0 : levels.size() - 1; }
  const Subgroup& operator[](std::size_t i) const { return levels.at(i).subgroup; }
  /// Validated and every level free of diagnostics.
  bool valid() const;
  /// b_1..b_n; infinite where a level has no certificate.
  std::vector<IndexValue> bounds() const;
  std::vector<std::string> diagnostics() const;
};

/// Each H_i normal in G, H_i <= H_{i+1} <= FC_G(G/H_i), with
/// FC_{H_{i+1}}(G/H_i) bounded. Problems are recorded per level.
FCChain check_bounded_fc_nilpotent_chain(FCChain chain, const FcOptions& opts = {});

/// G_i normal in G_{i+1} and G_{i+1}/G_i a bounded FC-group.
FCChain check_bounded_fc_solvable_chain(FCChain chain, const FcOptions& opts = {});

}  // namespace fcg
