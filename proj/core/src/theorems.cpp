#include "fcg/theorems.hpp"

#include <algorithm>

#include "fcg/oracle.hpp"

namespace fcg {

namespace {

std::string first_outside(const Subgroup& s, const Subgroup& inside) {
  for (const auto& g : s.generators())
    if (!inside.contains(g)) return s.group().format(g);
  return {};
}

Modulus modulus_for(const std::string& step, const Subgroup& n, const Subgroup& by) {
  try {
    return Modulus::make(n, by);
  } catch (const PreconditionError& e) {
    throw ProofStepFailure(step, e.what());
  }
}

// Each h[j] normal in f, increasing, and h[j+1]/h[j] central in f/h[j].
bool central_series(const Subgroup& f, const std::vector<Subgroup>& h) {
  const Group& g = f.group();
  for (std::size_t j = 0; j + 1 < h.size(); ++j) {
    if (!h[j].is_subgroup_of(h[j + 1]) || !normalizes(f, h[j]) || !normalizes(f, h[j + 1])) return false;
    for (const auto& a : f.generators())
      for (const auto& b : h[j + 1].generators())
        if (!h[j].contains(g.commutator(a, b))) return false;
  }
  return true;
}

}  // namespace

TowerTrace nilpotent_tower(const FCChain& chain, const TowerOptions& opts) {
  if (chain.kind != ChainKind::Nilpotent || !chain.valid())
    throw PreconditionError("nilpotent_tower needs a validated bounded FC-nilpotent chain");
  const Group& g = chain.group;
  const Subgroup whole = Subgroup::whole(g);
  const std::size_t n = chain.length();

  Subgroup f = whole;
  std::vector<Subgroup> h{Subgroup::trivial(g)};
  std::vector<TowerStep> steps;

  for (std::size_t i = 1; i <= n; ++i) {
    const Subgroup m = h.back();
    const Modulus mod = modulus_for("modulus", m, f);
    TowerFlags flags;

    const Subgroup level = subgroup_intersect(chain[i], f);
    const Subgroup level_fc = fc_centralizer_subgroup(level, f, mod, opts.fc);
    std::optional<BoundCertificate> level_bound;
    if (level_fc == level) level_bound = fc_bound(level, f, mod, opts.fc);
    flags.hypothesis = level_bound.has_value();
    if (!flags.hypothesis)
      throw ProofStepFailure("bounded-fc-level", "level " + std::to_string(i) + " is not bounded FC modulo " +
                                                     m.describe() + "; outside: " + first_outside(level, level_fc));

    const Subgroup b = fc_centralizer_subgroup(f, level, mod, opts.fc);
    const IndexValue b_index = subgroup_index(f, b);
    flags.symmetry = b_index.is_finite();
    if (!flags.symmetry)
      throw ProofStepFailure("symmetry", "FC-centralizer of level " + std::to_string(i) + " has infinite index");

    const Subgroup c = subgroup_intersect(level, b);
    const Subgroup x = join(commutator_subgroup(b, c), m);
    const IndexValue x_index = subgroup_index(x, m);
    flags.x_finite = x_index.is_finite();
    if (!flags.x_finite) throw ProofStepFailure("commutator-finite", "[X : modulus] is infinite at level " + std::to_string(i));
    std::vector<Element> reps = coset_representatives(x, modulus_for("modulus", m, x), opts.coset_limit);
    if (reps.size() != x_index.value())
      throw ProofStepFailure("commutator-finite", "coset representatives disagree with [X : modulus]");

    const Subgroup d = centralizer_mod(b, x.generators(), modulus_for("modulus", m, b));
    const IndexValue d_index = subgroup_index(b, d);
    flags.centralizer_finite = d_index.is_finite();
    if (!flags.centralizer_finite)
      throw ProofStepFailure("centralizer-finite-index", "centralizer of X has infinite index at level " + std::to_string(i));

    std::vector<Subgroup> next;
    for (std::size_t j = 0; j + 1 < 2 * i; ++j) next.push_back(subgroup_intersect(h[j], d));
    next.push_back(subgroup_intersect(x, d));
    next.push_back(subgroup_intersect(c, d));

    flags.centrality = central_series(d, next);
    if (!flags.centrality) throw ProofStepFailure("centrality", "a factor of the H-chain is not central at level " + std::to_string(i));
    flags.containment = subgroup_intersect(d, chain[i]).is_subgroup_of(next.back());
    if (!flags.containment) throw ProofStepFailure("containment", "F_i ∩ N_i is not inside the top of the H-chain");
    const IndexValue odd = subgroup_index(next[2 * i - 1], next[2 * i - 2]);
    flags.odd_factor_finite = odd.is_finite();
    if (!flags.odd_factor_finite) throw ProofStepFailure("odd-factor", "odd factor is infinite at level " + std::to_string(i));
    const IndexValue f_index = subgroup_index(whole, d);
    flags.finite_index = f_index.is_finite();
    if (!flags.finite_index) throw ProofStepFailure("finite-index", "F_i has infinite index at level " + std::to_string(i));

    steps.push_back(TowerStep{.i = i,
                              .modulus = m,
                              .previous_f = f,
                              .level = level,
                              .level_bound = level_bound,
                              .fc_part = b,
                              .fc_part_index = b_index,
                              .x = x,
                              .x_representatives = std::move(reps),
                              .x_index = x_index,
                              .f = d,
                              .centralizer_index = d_index,
                              .h = next,
                              .odd_factor_index = odd,
                              .f_index = f_index,
                              .flags = flags});
    f = d;
    h = std::move(next);
  }

  const UpperCentralSeries ucs = upper_central_series(f);
  if (!ucs.nilpotent || ucs.nilpotency_class > 2 * n)
    throw ProofStepFailure("nilpotency-class", "F_n has class " +
                                                   (ucs.nilpotent ? std::to_string(ucs.nilpotency_class) : "unbounded") +
                                                   " above " + std::to_string(2 * n));
  const IndexValue index = subgroup_index(whole, f);
  return TowerTrace{.group = g,
                    .n = n,
                    .steps = std::move(steps),
                    .f = f,
                    .index = index,
                    .h = h,
                    .nilpotency_class = ucs.nilpotency_class,
                    .class_bound = 2 * n,
                    .success = true};
}

NilpotentWitness witness_from_nilpotent(const Group& group, const Subgroup& n, const FcOptions& opts) {
  const Subgroup whole = Subgroup::whole(group);
  if (!n.group().same_as(group)) throw InputError("subgroup of a different group");
  if (!normalizes(whole, n)) throw PreconditionError("N is not normal in G");
  const IndexValue k = subgroup_index(whole, n);
  if (k.is_infinite()) throw PreconditionError("N has infinite index in G");
  const UpperCentralSeries ucs = upper_central_series(n);
  if (!ucs.nilpotent) throw PreconditionError("N is not nilpotent");

  std::vector<Subgroup> levels = ucs.terms;
  if (!(levels.back() == whole)) levels.push_back(whole);
  FCChain chain = check_bounded_fc_nilpotent_chain(FCChain::make(group, ChainKind::Nilpotent, levels), opts);
  bool within = chain.valid();
  for (const auto& b : chain.bounds()) within = within && b.is_finite() && b.value() <= k.value();
  return NilpotentWitness{std::move(chain), k.value(), ucs.nilpotency_class, within};
}

Decomposition neumann_decompose(const Subgroup& h, const FcOptions& opts) {
  return neumann_decompose(h, Modulus::trivial(h.group()), opts);
}

Decomposition neumann_decompose(const Subgroup& h, const Modulus& n, const FcOptions& opts) {
  const Subgroup& nn = n.subgroup();
  if (!nn.is_subgroup_of(h)) throw PreconditionError("modulus is not inside H");
  n.require_normalized_by(h);
  const Subgroup fc = fc_centralizer_subgroup(h, h, n, opts);
  if (!(fc == h)) throw HypothesisError("H is not an FC-group modulo N", first_outside(h, fc));
  const auto bound = fc_bound(h, h, n, opts);
  if (!bound) throw HypothesisError("H is not a bounded FC-group modulo N", "");

  const Subgroup derived = join(commutator_subgroup(h, h), nn);
  const IndexValue derived_order = subgroup_index(derived, nn);
  if (derived_order.is_infinite()) throw ProofStepFailure("derived-finite", "H' is infinite modulo N");
  const Subgroup c = centralizer_mod(h, derived.generators(), modulus_for("modulus", nn, h));
  const IndexValue c_index = subgroup_index(h, c);
  if (c_index.is_infinite()) throw ProofStepFailure("centralizer-finite-index", "C_H(H') has infinite index");

  Subgroup z = nn;
  std::size_t cls = 0;
  while (!(z == c)) {
    const Subgroup next = center_mod(c, modulus_for("modulus", z, c));
    if (next == z || ++cls > 2) throw ProofStepFailure("class-two", "C_H(H') is not nilpotent of class at most 2");
    z = next;
  }
  return Decomposition{h, nn, derived, derived_order, c, c_index, cls, *bound};
}

std::string to_string(SymmetryVerdict v) {
  switch (v) {
    case SymmetryVerdict::HypothesisFalse: return "hypothesis-false";
    case SymmetryVerdict::Verified: return "verified";
    case SymmetryVerdict::Violation: return "VIOLATION";
  }
  return "unknown";
}

SymmetryRecord symmetry_check(const Subgroup& g, const Subgroup& h, const Subgroup& k, const Modulus& n,
                              const FcOptions& opts) {
  n.require_normalized_by(h);
  n.require_normalized_by(k);
  if (!h.is_subgroup_of(g) || !k.is_subgroup_of(g)) throw PreconditionError("H and K must lie in G");
  SymmetryRecord rec;
  rec.interpretation = "FC_H(K/N) bounded";
  rec.hypothesis_bounded = fc_bound(h, k, n, opts).has_value();
  rec.hypothesis_index = subgroup_index(h, fc_centralizer_subgroup(g, k, n, opts));
  rec.conclusion_index = subgroup_index(k, fc_centralizer_subgroup(g, h, n, opts));
  if (!rec.hypothesis_bounded || rec.hypothesis_index.is_infinite())
    rec.verdict = SymmetryVerdict::HypothesisFalse;
  else
    rec.verdict = rec.conclusion_index.is_finite() ? SymmetryVerdict::Verified : SymmetryVerdict::Violation;
  return rec;
}

CommutatorResult commutator_finiteness(const Subgroup& h, const Subgroup& k, const FcOptions& opts) {
  const Modulus one = Modulus::trivial(h.group());
  if (!normalizes(k, h)) throw HypothesisError("K does not normalize H", first_outside(k, normalizer_in(k, h)));
  const Subgroup fc_h = fc_centralizer_subgroup(h, k, one, opts);
  if (!(fc_h == h)) throw HypothesisError("H differs from FC_H(K)", first_outside(h, fc_h));
  const Subgroup fc_k = fc_centralizer_subgroup(k, h, one, opts);
  if (!(fc_k == k)) throw HypothesisError("K differs from FC_K(H)", first_outside(k, fc_k));
  const auto bound = fc_bound(k, h, one, opts);
  if (!bound) throw HypothesisError("FC_K(H) is not bounded", "");
  const Subgroup c = commutator_subgroup(h, k);
  const IndexValue order = c.order();
  if (order.is_infinite()) throw ProofStepFailure("commutator-finite", "[H, K] is infinite");
  return CommutatorResult{c, order.value(), *bound};
}

Subgroup normal_core(const Subgroup& s, const Subgroup& by, std::size_t max_rounds) {
  const Group& g = s.group();
  Subgroup t = s;
  for (std::size_t round = 0; round < max_rounds; ++round) {
    bool changed = false;
    for (const auto& a : by.generators())
      for (const Element& x : {a, g.inverse(a)}) {
        std::vector<Element> conj;
        for (const auto& y : t.generators()) conj.push_back(g.conjugate(y, x));
        const Subgroup tx = Subgroup::generate(g, conj);
        if (!t.is_subgroup_of(tx)) {
          t = subgroup_intersect(t, tx);
          changed = true;
        }
      }
    if (!changed) return t;
  }
  throw ComputationError("normal core did not stabilize");
}

SolvableResult solvable_resolve(const FCChain& chain, const FcOptions& opts) {
  if (chain.kind != ChainKind::Solvable || !chain.valid())
    throw PreconditionError("solvable_resolve needs a validated bounded FC-solvable chain");
  const Group& g = chain.group;
  const Subgroup whole = Subgroup::whole(g);
  Subgroup s = Subgroup::trivial(g);
  std::vector<SolvableLevel> levels;
  for (std::size_t i = 0; i < chain.length(); ++i) {
    const Subgroup& lower = chain[i];
    const Subgroup& upper = chain[i + 1];
    Decomposition factor = neumann_decompose(upper, modulus_for("modulus", lower, upper), opts);
    const Subgroup core = normal_core(s, whole);
    if (subgroup_index(lower, core).is_infinite())
      throw ProofStepFailure("core-finite-index", "normal core has infinite index at level " + std::to_string(i + 1));
    const Subgroup e = centralizer_mod(factor.centralizer, lower.generators(), modulus_for("modulus", core, factor.centralizer));
    const IndexValue index = subgroup_index(upper, e);
    if (index.is_infinite())
      throw ProofStepFailure("finite-index", "solvable subgroup has infinite index at level " + std::to_string(i + 1));
    levels.push_back(SolvableLevel{std::move(factor), core, e, index});
    s = e;
  }
  std::vector<Subgroup> ds = derived_series(s);
  if (!ds.back().is_trivial()) throw ProofStepFailure("solvable", "derived series does not reach the trivial group");
  const IndexValue index = subgroup_index(whole, s);
  const std::size_t length = ds.size() - 1;
  return SolvableResult{std::move(levels), s, index, std::move(ds), length};
}

Element coset_cover_witness(const Subgroup& g, const std::vector<std::pair<Element, Subgroup>>& cosets,
                            std::size_t radius) {
  const Group& grp = g.group();
  for (const auto& [x, sub] : cosets) {
    if (!g.contains(x) || !sub.is_subgroup_of(g)) throw PreconditionError("coset does not lie in G");
    if (subgroup_index(g, sub).is_finite())
      throw PreconditionError("subgroup " + sub.describe() + " has finite index in G");
  }
  if (cosets.empty()) return grp.identity();
  const auto ball = oracle::ball_enumerate(grp, g.generators(), radius);
  for (const auto& y : ball.elements()) {
    const bool covered = std::any_of(cosets.begin(), cosets.end(), [&](const auto& c) {
      return c.second.contains(grp.multiply(grp.inverse(c.first), y));
    });
    if (!covered) return y;
  }
  throw ComputationError("no uncovered element within radius " + std::to_string(radius) + " (inconclusive)");
}

}  // namespace fcg
