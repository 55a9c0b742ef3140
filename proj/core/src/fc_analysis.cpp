#include "fcg/fc_analysis.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "fcg/oracle.hpp"

namespace fcg {

std::string to_string(BoundMethod m) {
  return m == BoundMethod::Exhaustive ? "exhaustive" : "generic-stabilizer";
}

std::string to_string(ChainKind k) { return k == ChainKind::Nilpotent ? "nilpotent" : "solvable"; }

bool fc_membership(const Subgroup& k_group, const Subgroup& h, const Modulus& n, const Element& k) {
  if (!k_group.contains(k)) throw PreconditionError("fc_membership: element is not in K");
  n.require_normalized_by(h);
  if (!n.normalized_by(k)) return false;
  return class_size_mod(h, k, n).is_finite();
}

namespace {

void verify_fc(const Subgroup& k, const Subgroup& h, const Modulus& n, const Subgroup& fc,
               const FcOptions& opts) {
  for (const auto& g : fc.generators())
    if (!fc_membership(k, h, n, g))
      throw ComputationError("FC-centralizer generator fails membership: " + k.group().format(g));
  const auto ball = oracle::ball_enumerate(k.group(), k.generators(), opts.verify_radius);
  for (const auto& x : ball.elements())
    if (fc_membership(k, h, n, x) != fc.contains(x))
      throw ComputationError("FC-centralizer disagrees with membership at " + k.group().format(x));
}

Element shift(const Group& g, const Element& x, std::size_t i) {
  Vector v = x.affine().translation;
  v[i] = checked::add(v[i], 1);
  return g.affine_element(std::move(v), x.affine().finite);
}

// Columns: translation of f(shift_i(x)) minus translation of f(x).
Matrix shift_matrix(const Group& g, const Element& x, const std::function<Element(const Element&)>& f) {
  const std::size_t n = g.rank();
  const Vector base = f(x).affine().translation;
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Vector col = sub(f(shift(g, x, i)).affine().translation, base);
    for (std::size_t r = 0; r < n; ++r) m(r, i) = col[r];
  }
  return m;
}

}  // namespace

Subgroup fc_centralizer_subgroup(const Subgroup& k, const Subgroup& h, const Modulus& n,
                                 const FcOptions& opts) {
  n.require_normalized_by(h);
  const Group& g = k.group();
  const Subgroup nk = normalizer_in(k, n.subgroup());
  Subgroup fc = nk;
  if (g.backend() == Backend::Affine) {
    // Finiteness of [H : C_H(x/N)] for x in N_K(N) depends only on the
    // finite part of x: the translation part of C_H(x/N) is fixed by it.
    std::vector<Element> gens;
    std::vector<std::uint32_t> phi;
    for (const auto& v : nk.translations().basis_vectors()) gens.push_back(g.translation(v));
    for (std::uint32_t f : nk.finite_image()) {
      Element x = g.affine_element(nk.section(f), f);
      if (class_size_mod(h, x, n).is_finite()) {
        phi.push_back(f);
        gens.push_back(std::move(x));
      }
    }
    fc = Subgroup::generate(g, gens);
    if (fc.finite_image() != phi || !(fc.translations() == nk.translations()))
      throw ComputationError("FC-centralizer finite parts do not form a subgroup");
  }
  if (opts.verify) verify_fc(k, h, n, fc, opts);
  return fc;
}

namespace {

BoundCertificate exhaustive_bound(const Subgroup& fc, const Subgroup& h, const Modulus& n) {
  BoundCertificate cert;
  cert.attaining = fc.group().identity();
  for (const auto& x : fc.elements()) {
    const std::uint64_t s = class_size_mod(h, x, n).value();
    ++cert.samples_checked;
    if (s > cert.bound) {
      cert.bound = s;
      cert.attaining = x;
    }
  }
  return cert;
}

struct CosetCase {
  Vector offset;
  Lattice directions;
};

// Residues of `outer` modulo the full-rank sublattice `inner`, canonical via inner.reduce.
std::vector<Vector> residues(const Lattice& outer, const Lattice& inner, std::uint64_t limit) {
  const IndexValue count = inner.index_in(outer);
  if (count.is_infinite()) throw ComputationError("residue lattice is not of full rank");
  if (count.value() > limit) throw ComputationError("too many residues to enumerate (" + count.to_string() + ")");
  std::set<Vector> seen{inner.reduce(Vector(outer.dim(), 0))};
  std::deque<Vector> queue(seen.begin(), seen.end());
  const auto steps = outer.basis_vectors();
  while (!queue.empty()) {
    Vector v = queue.front();
    queue.pop_front();
    for (const auto& s : steps)
      for (Vector w : {add(v, s), sub(v, s)}) {
        w = inner.reduce(w);
        if (seen.insert(w).second) queue.push_back(w);
      }
  }
  if (seen.size() != count.value()) throw ComputationError("residue enumeration is inconsistent with the index");
  return {seen.begin(), seen.end()};
}

// A point of start + M outside every coset in `avoid` (each of lower rank
// inside the ambient lattice), searched over growing coefficient boxes.
std::optional<Vector> avoid_cosets(const Vector& start, const Lattice& m, const std::vector<CosetCase>& avoid) {
  const auto basis = m.basis_vectors();
  const std::size_t r = basis.size();
  auto outside = [&](const Vector& t) {
    return std::none_of(avoid.begin(), avoid.end(),
                        [&](const CosetCase& c) { return c.directions.contains(sub(t, c.offset)); });
  };
  if (outside(start)) return start;
  for (Int radius = 1; radius <= 64; ++radius) {
    std::vector<Int> coeff(r, -radius);
    while (true) {
      const bool on_shell = std::any_of(coeff.begin(), coeff.end(), [&](Int c) { return c == radius || c == -radius; });
      if (on_shell) {
        Vector t = start;
        for (std::size_t i = 0; i < r; ++i) axpy(t, coeff[i], basis[i]);
        if (outside(t)) return t;
      }
      std::size_t i = 0;
      while (i < r && coeff[i] == radius) coeff[i++] = -radius;
      if (i == r) break;
      ++coeff[i];
    }
    if (r == 0) break;
  }
  return std::nullopt;
}

BoundCertificate affine_bound(const Subgroup& fc, const Subgroup& h, const Modulus& n, const FcOptions& opts) {
  const Group& g = fc.group();
  const Subgroup& nn = n.subgroup();
  const Lattice& lfc = fc.translations();
  const std::uint64_t ph = h.finite_image().size();
  BoundCertificate cert;
  cert.method = BoundMethod::GenericStabilizer;
  cert.attaining = g.identity();
  bool have = false;

  for (std::uint32_t f : fc.finite_image()) {
    const Element k0 = g.affine_element(fc.section(f), f);
    const IndexValue lidx = centralizer_mod(h, k0, n).translations().index_in(h.translations());
    if (lidx.is_infinite()) throw ComputationError("FC member with infinite translation index");

    // For each finite part p of H: the translations t with some h = (v, p)
    // in H commuting with (a_f + t, f) modulo N form empty set or a coset.
    std::vector<CosetCase> periodic, avoidable;
    for (std::uint32_t p : h.finite_image()) {
      const Element h0 = g.affine_element(h.section(p), p);
      const Element c0 = g.commutator(h0, k0);
      const std::uint32_t q = c0.affine().finite;
      if (!nn.image_contains(q)) continue;
      const Matrix a = shift_matrix(g, h0, [&](const Element& x) { return g.commutator(x, k0); });
      const Matrix d = shift_matrix(g, k0, [&](const Element& x) { return g.commutator(h0, x); });
      const Lattice allowed = h.translations().image(a).sum(nn.translations());
      const Vector target = sub(nn.section(q), c0.affine().translation);
      auto sol = solve_conditions(lfc, {LinearCondition{d, target, allowed}});
      if (!sol) continue;
      CosetCase c{sol->particular, sol->homogeneous};
      (c.directions.rank() == lfc.rank() ? periodic : avoidable).push_back(std::move(c));
    }

    Lattice mstar = lfc;
    for (const auto& c : periodic) mstar = mstar.intersect(c.directions);
    std::uint64_t best_count = 0;
    Vector best_t;
    for (const auto& t : residues(lfc, mstar, opts.residue_limit)) {
      std::uint64_t count = 0;
      for (const auto& c : periodic)
        if (c.directions.contains(sub(t, c.offset))) ++count;
      if (best_count == 0 || count < best_count) {
        best_count = count;
        best_t = t;
      }
    }
    if (best_count == 0 || ph % best_count != 0)
      throw ComputationError("stabilizer count does not divide the finite part order");
    const std::uint64_t candidate = checked::mul(ph / best_count, lidx.value());
    if (have && candidate <= cert.bound) continue;
    auto t = avoid_cosets(best_t, mstar, avoidable);
    if (!t) throw ComputationError("no generic translation found for the bound");
    Element x = g.affine_element(add(fc.section(f), *t), f);
    const IndexValue actual = class_size_mod(h, x, n);
    if (actual != IndexValue::finite(candidate))
      throw ComputationError("generic class size " + actual.to_string() + " differs from the predicted " +
                             std::to_string(candidate) + " at " + g.format(x));
    cert.bound = candidate;
    cert.attaining = x;
    have = true;
  }
  return cert;
}

}  // namespace

std::optional<BoundCertificate> fc_bound(const Subgroup& k, const Subgroup& h, const Modulus& n,
                                         const FcOptions& opts) {
  const Subgroup fc = fc_centralizer_subgroup(k, h, n, opts);
  if (k.backend() == Backend::FinitePermutation) return exhaustive_bound(fc, h, n);
  BoundCertificate cert = affine_bound(fc, h, n, opts);
  // Every sampled member must respect the bound; this is also the check
  // that each member of N_K(N) with finite class lies under it.
  const auto ball = oracle::ball_enumerate(k.group(), fc.generators(), opts.sample_radius);
  for (const auto& x : ball.elements()) {
    const IndexValue s = class_size_mod(h, x, n);
    if (s.is_infinite() || s.value() > cert.bound)
      throw ComputationError("sampled member " + k.group().format(x) + " has class size " + s.to_string() +
                             " above the certified bound " + std::to_string(cert.bound));
    ++cert.samples_checked;
  }
  return cert;
}

Commensurability commensurable(const Subgroup& h, const Subgroup& k) {
  if (!h.group().same_as(k.group())) throw InputError("commensurable: subgroups of different groups");
  return {subgroup_index(h, k), subgroup_index(k, h)};
}

FCChain FCChain::make(const Group& group, ChainKind kind, const std::vector<Subgroup>& subgroups) {
  if (subgroups.empty()) throw InputError("a chain needs at least one subgroup");
  FCChain c{group, kind, {}, false};
  for (const auto& s : subgroups) {
    if (!s.group().same_as(group)) throw InputError("chain subgroups must share the ambient group");
    c.levels.push_back(ChainLevel{s, std::nullopt, false, false, false, false, {}});
  }
  return c;
}

bool FCChain::valid() const {
  return validated && std::all_of(levels.begin(), levels.end(), [](const ChainLevel& l) { return l.diagnostics.empty(); });
}

std::vector<IndexValue> FCChain::bounds() const {
  std::vector<IndexValue> out;
  for (std::size_t i = 1; i < levels.size(); ++i)
    out.push_back(levels[i].bound ? IndexValue::finite(levels[i].bound->bound) : IndexValue::infinite());
  return out;
}

std::vector<std::string> FCChain::diagnostics() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < levels.size(); ++i)
    for (const auto& d : levels[i].diagnostics) out.push_back("level " + std::to_string(i) + ": " + d);
  return out;
}

namespace {

void check_ends(FCChain& chain) {
  for (auto& l : chain.levels) l.diagnostics.clear();
  auto& first = chain.levels.front();
  first.normal = first.increasing = first.inside_fc = first.bounded = first.subgroup.is_trivial();
  if (!first.subgroup.is_trivial()) first.diagnostics.push_back("first subgroup is not trivial");
  if (!(chain.levels.back().subgroup == Subgroup::whole(chain.group)))
    chain.levels.back().diagnostics.push_back("last subgroup is not the whole group");
}

// Shared part of both validations: `ambient(i)` is the group acting at level i.
template <typename Ambient>
FCChain validate(FCChain chain, const FcOptions& opts, Ambient ambient) {
  check_ends(chain);
  const Subgroup whole = Subgroup::whole(chain.group);
  for (std::size_t i = 1; i < chain.levels.size(); ++i) {
    ChainLevel& lvl = chain.levels[i];
    const Subgroup& prev = chain.levels[i - 1].subgroup;
    const Subgroup act = ambient(i);
    lvl.bound.reset();
    lvl.increasing = prev.is_subgroup_of(lvl.subgroup);
    if (!lvl.increasing) lvl.diagnostics.push_back("does not contain the previous level");
    lvl.normal = normalizes(act, prev);
    if (!lvl.normal) {
      lvl.diagnostics.push_back(chain.kind == ChainKind::Nilpotent ? "previous level not normal in G"
                                                                   : "previous level not normal in this level");
      lvl.inside_fc = lvl.bounded = false;
      continue;
    }
    if (chain.kind == ChainKind::Nilpotent && !normalizes(whole, lvl.subgroup))
      lvl.diagnostics.push_back("not normal in G");
    if (!lvl.increasing) continue;
    try {
      const Modulus mod = Modulus::make(prev, act);
      const Subgroup fc = fc_centralizer_subgroup(lvl.subgroup, act, mod, opts);
      lvl.inside_fc = fc == lvl.subgroup;
      if (!lvl.inside_fc) {
        std::string witness;
        for (const auto& g : lvl.subgroup.generators())
          if (!fc.contains(g)) {
            witness = chain.group.format(g);
            break;
          }
        lvl.diagnostics.push_back("not inside FC: " + witness + " has infinite class");
        continue;
      }
      lvl.bound = fc_bound(lvl.subgroup, act, mod, opts);
      lvl.bounded = lvl.bound.has_value();
      if (!lvl.bounded) lvl.diagnostics.push_back("unbounded");
    } catch (const ArithmeticOverflow& e) {
      throw;
    } catch (const ComputationError& e) {
      lvl.diagnostics.push_back(std::string("computation failed: ") + e.what());
    }
  }
  chain.validated = true;
  return chain;
}

}  // namespace

FCChain check_bounded_fc_nilpotent_chain(FCChain chain, const FcOptions& opts) {
  chain.kind = ChainKind::Nilpotent;
  const Subgroup whole = Subgroup::whole(chain.group);
  return validate(std::move(chain), opts, [&](std::size_t) { return whole; });
}

FCChain check_bounded_fc_solvable_chain(FCChain chain, const FcOptions& opts) {
  chain.kind = ChainKind::Solvable;
  std::vector<Subgroup> subs;
  for (const auto& l : chain.levels) subs.push_back(l.subgroup);
  return validate(std::move(chain), opts, [subs](std::size_t i) { return subs[i]; });
}

}  // namespace fcg
