#include "fcg/subgroup.hpp"

#include <algorithm>
#include <sstream>

namespace fcg {
namespace detail {

struct FiniteClosure {
  Bsgs bsgs;
  std::vector<Element> elements;  // sorted; empty when above the enumeration limit
};

struct AffineClosure {
  std::vector<std::uint32_t> image;  // sorted
  std::vector<std::int32_t> position;  // |F| entries, -1 outside the image
  Lattice lattice;
  std::vector<Vector> sections;  // aligned with image
};

struct SubgroupData {
  Group group;
  std::vector<Element> generators;
  std::variant<FiniteClosure, AffineClosure> closure;
};

}  // namespace detail

namespace {

using detail::AffineClosure;
using detail::FiniteClosure;

std::vector<Element> dedupe_nontrivial(const Group& g, const std::vector<Element>& gens) {
  std::vector<Element> out;
  const Element e = g.identity();
  for (const auto& x : gens) {
    g.require_owned(x);
    if (x == e) continue;
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  }
  return out;
}

FiniteClosure finite_closure(const Group& g, const std::vector<Element>& gens) {
  std::vector<Perm> perms;
  for (const auto& x : gens) perms.push_back(x.perm());
  FiniteClosure c{Bsgs(g.degree(), perms), {}};
  if (c.bsgs.order() <= Subgroup::kEnumerationLimit)
    for (auto& p : c.bsgs.elements()) c.elements.emplace_back(std::move(p));
  return c;
}

// Schreier generators t_p s t_{ps}^-1 over a BFS transversal of the image P.
AffineClosure schreier_closure(const Group& g, const std::vector<Element>& gens) {
  const std::size_t order_f = g.finite_order();
  std::vector<std::optional<Element>> reps(order_f);
  std::vector<std::uint32_t> queue{g.finite_identity()};
  reps[g.finite_identity()] = g.identity();
  std::vector<Vector> lattice_gens;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const Element t = *reps[queue[k]];
    for (const auto& s : gens) {
      Element y = g.multiply(t, s);
      const std::uint32_t q = y.affine().finite;
      if (!reps[q]) {
        reps[q] = std::move(y);
        queue.push_back(q);
      } else {
        Element u = g.multiply(y, g.inverse(*reps[q]));
        if (!is_zero(u.affine().translation)) lattice_gens.push_back(u.affine().translation);
      }
    }
  }
  AffineClosure c;
  c.lattice = Lattice::generated_by(lattice_gens, g.rank());
  c.image = queue;
  std::sort(c.image.begin(), c.image.end());
  c.position.assign(order_f, -1);
  for (std::size_t i = 0; i < c.image.size(); ++i) {
    c.position[c.image[i]] = static_cast<std::int32_t>(i);
    c.sections.push_back(c.lattice.reduce(reps[c.image[i]]->affine().translation));
  }
  return c;
}

// Canonical generators: lattice basis, then (v_p, p) for a greedy
// generating set of the image.
std::vector<Element> canonical_affine_generators(const Group& g, const AffineClosure& c) {
  std::vector<Element> out;
  for (const auto& b : c.lattice.basis_vectors()) out.push_back(g.translation(b));
  std::vector<std::uint32_t> chosen;
  std::vector<bool> reached(g.finite_order(), false);
  reached[g.finite_identity()] = true;
  for (std::uint32_t p : c.image) {
    if (reached[p]) continue;
    chosen.push_back(p);
    out.push_back(g.affine_element(c.sections[static_cast<std::size_t>(c.position[p])], p));
    std::fill(reached.begin(), reached.end(), false);
    std::vector<std::uint32_t> closure{g.finite_identity()};
    reached[g.finite_identity()] = true;
    for (std::size_t k = 0; k < closure.size(); ++k)
      for (std::uint32_t s : chosen) {
        const std::uint32_t y = g.finite_multiply(closure[k], s);
        if (!reached[y]) {
          reached[y] = true;
          closure.push_back(y);
        }
      }
  }
  return out;
}

const FiniteClosure& fin(const detail::SubgroupData& d) { return std::get<FiniteClosure>(d.closure); }
const AffineClosure& aff(const detail::SubgroupData& d) {
  if (auto p = std::get_if<AffineClosure>(&d.closure)) return *p;
  throw InputError("operation requires an affine subgroup");
}

void require_same_group(const Subgroup& a, const Subgroup& b) {
  if (!a.group().same_as(b.group())) throw InputError("subgroups of different ambient groups");
}

}  // namespace

Subgroup Subgroup::generate(const Group& group, const std::vector<Element>& gens) {
  std::vector<Element> clean = dedupe_nontrivial(group, gens);
  if (group.backend() == Backend::FinitePermutation) {
    FiniteClosure c = finite_closure(group, clean);
    return Subgroup(std::make_shared<const detail::SubgroupData>(
        detail::SubgroupData{group, std::move(clean), std::move(c)}));
  }
  AffineClosure c = schreier_closure(group, clean);
  std::vector<Element> canon = canonical_affine_generators(group, c);
  return Subgroup(std::make_shared<const detail::SubgroupData>(
      detail::SubgroupData{group, std::move(canon), std::move(c)}));
}

Subgroup Subgroup::whole(const Group& group) { return generate(group, group.generators()); }
Subgroup Subgroup::trivial(const Group& group) { return generate(group, {}); }

const Group& Subgroup::group() const noexcept { return data_->group; }
const std::vector<Element>& Subgroup::generators() const noexcept { return data_->generators; }

bool Subgroup::contains(const Element& e) const {
  group().require_owned(e);
  if (backend() == Backend::FinitePermutation) {
    const auto& c = fin(*data_);
    if (!c.elements.empty()) return std::binary_search(c.elements.begin(), c.elements.end(), e);
    return c.bsgs.contains(e.perm());
  }
  const auto& c = aff(*data_);
  const auto& a = e.affine();
  const std::int32_t pos = c.position[a.finite];
  if (pos < 0) return false;
  return c.lattice.reduce(a.translation) == c.sections[static_cast<std::size_t>(pos)];
}

IndexValue Subgroup::order() const {
  if (backend() == Backend::FinitePermutation) return IndexValue::finite(fin(*data_).bsgs.order());
  const auto& c = aff(*data_);
  if (c.lattice.rank() > 0) return IndexValue::infinite();
  return IndexValue::finite(c.image.size());
}

bool Subgroup::is_trivial() const {
  auto o = order();
  return o.is_finite() && o.value() == 1;
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  require_same_group(*this, other);
  return std::all_of(generators().begin(), generators().end(),
                     [&](const Element& x) { return other.contains(x); });
}

std::vector<Element> Subgroup::elements() const {
  if (backend() == Backend::FinitePermutation) {
    const auto& c = fin(*data_);
    if (c.elements.empty() && c.bsgs.order() > 0) {
      std::vector<Element> out;
      for (auto& p : c.bsgs.elements()) out.emplace_back(std::move(p));
      return out;
    }
    return c.elements;
  }
  const auto& c = aff(*data_);
  if (c.lattice.rank() > 0) throw PreconditionError("elements() of an infinite subgroup");
  std::vector<Element> out;
  for (std::size_t i = 0; i < c.image.size(); ++i) out.push_back(group().affine_element(c.sections[i], c.image[i]));
  std::sort(out.begin(), out.end());
  return out;
}

const Bsgs& Subgroup::bsgs() const {
  if (backend() != Backend::FinitePermutation) throw InputError("bsgs() requires the finite backend");
  return fin(*data_).bsgs;
}

const std::vector<std::uint32_t>& Subgroup::finite_image() const { return aff(*data_).image; }
bool Subgroup::image_contains(std::uint32_t f) const {
  const auto& c = aff(*data_);
  return f < c.position.size() && c.position[f] >= 0;
}
const Lattice& Subgroup::translations() const { return aff(*data_).lattice; }
const Vector& Subgroup::section(std::uint32_t p) const {
  const auto& c = aff(*data_);
  if (!image_contains(p)) throw PreconditionError("section(): finite part not in the image");
  return c.sections[static_cast<std::size_t>(c.position[p])];
}

std::string Subgroup::describe() const {
  std::ostringstream os;
  if (backend() == Backend::FinitePermutation) {
    os << "order " << order() << ", generators {";
    for (std::size_t i = 0; i < generators().size(); ++i) os << (i ? ", " : "") << group().format(generators()[i]);
    os << '}';
    return os.str();
  }
  const auto& c = aff(*data_);
  os << "image {";
  for (std::size_t i = 0; i < c.image.size(); ++i)
    os << (i ? ", " : "") << group().finite_element(c.image[i]).cycle_string();
  os << "}, translations " << c.lattice.basis().to_string() << ", generators {";
  for (std::size_t i = 0; i < generators().size(); ++i) os << (i ? ", " : "") << group().format(generators()[i]);
  os << '}';
  return os.str();
}

bool operator==(const Subgroup& a, const Subgroup& b) {
  if (!a.group().same_as(b.group())) return false;
  if (a.backend() == Backend::FinitePermutation)
    return a.order() == b.order() && a.is_subgroup_of(b);
  const auto& x = aff(*a.data_);
  const auto& y = aff(*b.data_);
  return x.image == y.image && x.lattice == y.lattice && x.sections == y.sections;
}

Subgroup subgroup_from_elements(const Group& group, const std::vector<Element>& sorted) {
  std::vector<Element> gens;
  Subgroup current = Subgroup::trivial(group);
  for (const auto& x : sorted) {
    if (current.contains(x)) continue;
    gens.push_back(x);
    current = Subgroup::generate(group, gens);
  }
  auto ord = current.order();
  if (ord.is_infinite() || ord.value() != sorted.size())
    throw ComputationError("element list of size " + std::to_string(sorted.size()) +
                           " is not closed under multiplication (generates order " + ord.to_string() + ")");
  return current;
}

Subgroup subgroup_intersect(const Subgroup& h, const Subgroup& k) {
  require_same_group(h, k);
  const Group& g = h.group();
  if (h.backend() == Backend::FinitePermutation) {
    const Subgroup& small = h.order().value() <= k.order().value() ? h : k;
    const Subgroup& other = &small == &h ? k : h;
    std::vector<Element> common;
    for (auto& x : small.elements())
      if (other.contains(x)) common.push_back(std::move(x));
    return subgroup_from_elements(g, common);
  }
  std::vector<Element> gens;
  const Lattice meet = h.translations().intersect(k.translations());
  for (const auto& b : meet.basis_vectors()) gens.push_back(g.translation(b));
  for (std::uint32_t p : h.finite_image()) {
    if (!k.image_contains(p)) continue;
    auto sol = intersect_cosets(h.section(p), h.translations(), k.section(p), k.translations());
    if (sol) gens.push_back(g.affine_element(sol->particular, p));
  }
  return Subgroup::generate(g, gens);
}

IndexValue subgroup_index(const Subgroup& h, const Subgroup& k) {
  Subgroup meet = subgroup_intersect(h, k);
  if (h.backend() == Backend::FinitePermutation)
    return IndexValue::finite(h.order().value() / meet.order().value());
  IndexValue lattice_part = meet.translations().index_in(h.translations());
  if (lattice_part.is_infinite()) return lattice_part;
  return IndexValue::finite(h.finite_image().size() / meet.finite_image().size()) * lattice_part;
}

bool normalizes(const Subgroup& h, const Subgroup& n) {
  require_same_group(h, n);
  const Group& g = h.group();
  for (const auto& x : h.generators())
    for (const auto& y : n.generators()) {
      if (!n.contains(g.conjugate(y, x))) return false;
      if (!n.contains(g.conjugate(y, g.inverse(x)))) return false;
    }
  return true;
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  require_same_group(a, b);
  return join(a, b.generators());
}

Subgroup join(const Subgroup& a, const std::vector<Element>& extra) {
  std::vector<Element> gens = a.generators();
  gens.insert(gens.end(), extra.begin(), extra.end());
  return Subgroup::generate(a.group(), gens);
}

Modulus Modulus::trivial(const Group& group) { return Modulus(Subgroup::trivial(group), Subgroup::whole(group)); }

Modulus Modulus::make(Subgroup n, Subgroup normalizer) {
  if (!normalizes(normalizer, n))
    throw PreconditionError("modulus is not normalized by the required subgroup (normality violation)");
  return Modulus(std::move(n), std::move(normalizer));
}

Modulus Modulus::normal(Subgroup n) {
  Subgroup whole = Subgroup::whole(n.group());
  return make(std::move(n), std::move(whole));
}

bool Modulus::same_coset(const Element& a, const Element& b) const {
  const Group& g = n_.group();
  return n_.contains(g.multiply(g.inverse(a), b));
}

bool Modulus::normalized_by(const Element& k) const {
  const Group& g = n_.group();
  if (normalizer_.contains(k)) return true;
  for (const auto& y : n_.generators()) {
    if (!n_.contains(g.conjugate(y, k))) return false;
    if (!n_.contains(g.conjugate(y, g.inverse(k)))) return false;
  }
  return true;
}

void Modulus::require_normalized_by(const Element& k) const {
  if (!normalized_by(k))
    throw PreconditionError("normality violation: " + n_.group().format(k) + " does not normalize the modulus");
}

void Modulus::require_normalized_by(const Subgroup& h) const {
  for (const auto& x : h.generators()) require_normalized_by(x);
}

Subgroup solve_subgroup(const Subgroup& domain, const Subgroup& target, const std::vector<WordMap>& maps) {
  require_same_group(domain, target);
  const Group& g = domain.group();
  if (g.backend() == Backend::FinitePermutation) {
    std::vector<Element> kept;
    for (auto& x : domain.elements()) {
      bool ok = std::all_of(maps.begin(), maps.end(), [&](const WordMap& phi) { return target.contains(phi(x)); });
      if (ok) kept.push_back(std::move(x));
    }
    return subgroup_from_elements(g, kept);
  }

  const std::size_t n = g.rank();
  std::vector<Element> gens;
  std::vector<std::uint32_t> solved_image;
  std::optional<Lattice> kernel;
  for (std::uint32_t p : domain.finite_image()) {
    const Vector& base = domain.section(p);
    std::vector<LinearCondition> conditions;
    bool feasible = true;
    for (const auto& phi : maps) {
      const Element y0 = phi(g.affine_element(base, p));
      const std::uint32_t q = y0.affine().finite;
      if (!target.image_contains(q)) {
        feasible = false;
        break;
      }
      // Columns of the linear part, read off by unit shifts of the argument.
      Matrix linear(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        Vector shifted = base;
        shifted[i] = checked::add(shifted[i], 1);
        const Element yi = phi(g.affine_element(shifted, p));
        if (yi.affine().finite != q) throw ComputationError("solve_subgroup: map is not a word map");
        Vector col = sub(yi.affine().translation, y0.affine().translation);
        for (std::size_t r = 0; r < n; ++r) linear(r, i) = col[r];
      }
      conditions.push_back({std::move(linear), sub(target.section(q), y0.affine().translation), target.translations()});
    }
    if (!feasible) continue;
    auto sol = solve_conditions(domain.translations(), conditions);
    if (!sol) continue;
    solved_image.push_back(p);
    gens.push_back(g.affine_element(add(base, sol->particular), p));
    if (!kernel) {
      kernel = sol->homogeneous;
    } else if (!(*kernel == sol->homogeneous)) {
      throw ComputationError("solve_subgroup: solution lattices differ between cosets (normality violation?)");
    }
  }
  if (!kernel) throw ComputationError("solve_subgroup: identity coset has no solution");
  for (const auto& b : kernel->basis_vectors()) gens.push_back(g.translation(b));
  Subgroup result = Subgroup::generate(g, gens);
  if (result.finite_image() != solved_image || !(result.translations() == *kernel))
    throw ComputationError("solve_subgroup: solution set is not a subgroup (normality violation?)");
  return result;
}

}  // namespace fcg
