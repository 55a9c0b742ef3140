#include "fcg/structure.hpp"

#include <algorithm>
#include <set>

namespace fcg {

Subgroup centralizer_mod(const Subgroup& h, const std::vector<Element>& xs, const Modulus& n) {
  n.require_normalized_by(h);
  for (const auto& x : xs) n.require_normalized_by(x);
  const Group& g = h.group();
  std::vector<WordMap> maps;
  for (const auto& x : xs) maps.push_back([&g, x](const Element& y) { return g.commutator(y, x); });
  return solve_subgroup(h, n.subgroup(), maps);
}

Subgroup centralizer_mod(const Subgroup& h, const Element& k, const Modulus& n) {
  return centralizer_mod(h, std::vector<Element>{k}, n);
}

IndexValue class_size_mod(const Subgroup& h, const Element& k, const Modulus& n) {
  return subgroup_index(h, centralizer_mod(h, k, n));
}

Subgroup center_mod(const Subgroup& h, const Modulus& n) { return centralizer_mod(h, h.generators(), n); }

Subgroup normalizer_in(const Subgroup& k, const Subgroup& n) {
  const Group& g = k.group();
  std::vector<WordMap> maps;
  for (const auto& y : n.generators()) {
    maps.push_back([&g, y](const Element& x) { return g.conjugate(y, x); });
    maps.push_back([&g, y](const Element& x) { return g.conjugate(y, g.inverse(x)); });
  }
  return solve_subgroup(k, n, maps);
}

std::vector<ConjugacyClass> conjugacy_classes(const Subgroup& h) {
  const Group& g = h.group();
  const std::vector<Element> elems = h.elements();
  std::set<Element> seen;
  std::vector<ConjugacyClass> out;
  for (const auto& x : elems) {
    if (seen.count(x)) continue;
    // Orbit of x under conjugation by the generators.
    std::vector<Element> orbit{x};
    seen.insert(x);
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (const auto& s : h.generators()) {
        Element y = g.conjugate(orbit[i], s);
        if (seen.insert(y).second) orbit.push_back(std::move(y));
      }
    out.push_back({*std::min_element(orbit.begin(), orbit.end()), orbit.size()});
  }
  std::sort(out.begin(), out.end(),
            [](const ConjugacyClass& a, const ConjugacyClass& b) { return a.representative < b.representative; });
  return out;
}

UpperCentralSeries upper_central_series(const Subgroup& n, std::size_t max_terms) {
  UpperCentralSeries out;
  out.terms.push_back(Subgroup::trivial(n.group()));
  while (out.terms.size() < max_terms) {
    const Subgroup& last = out.terms.back();
    if (last == n) {
      out.nilpotent = true;
      out.nilpotency_class = out.terms.size() - 1;
      return out;
    }
    Subgroup next = center_mod(n, Modulus::make(last, n));
    if (next == last) return out;
    out.terms.push_back(std::move(next));
  }
  throw ComputationError("upper central series did not stabilize within " + std::to_string(max_terms) + " terms");
}

Subgroup normal_closure(const std::vector<Element>& gens, const Subgroup& by) {
  const Group& g = by.group();
  std::vector<Element> current = gens;
  Subgroup closure = Subgroup::generate(g, current);
  bool changed = true;
  while (changed) {
    changed = false;
    const std::vector<Element> snapshot = closure.generators();
    for (const auto& x : snapshot)
      for (const auto& t : by.generators()) {
        for (const Element& c : {g.conjugate(x, t), g.conjugate(x, g.inverse(t))}) {
          if (closure.contains(c)) continue;
          current.push_back(c);
          closure = Subgroup::generate(g, current);
          changed = true;
        }
      }
  }
  return closure;
}

Subgroup commutator_subgroup(const Subgroup& h, const Subgroup& k) {
  const Group& g = h.group();
  std::vector<Element> comms;
  for (const auto& x : h.generators())
    for (const auto& y : k.generators()) comms.push_back(g.commutator(x, y));
  return normal_closure(comms, join(h, k));
}

std::vector<Subgroup> derived_series(const Subgroup& h, std::size_t max_terms) {
  std::vector<Subgroup> out{h};
  while (out.size() < max_terms) {
    if (out.back().is_trivial()) return out;
    Subgroup next = commutator_subgroup(out.back(), out.back());
    if (next == out.back()) return out;
    out.push_back(std::move(next));
  }
  throw ComputationError("derived series did not stabilize within " + std::to_string(max_terms) + " terms");
}

std::vector<Element> coset_representatives(const Subgroup& x, const Modulus& m, std::size_t limit) {
  const Group& g = x.group();
  std::vector<Element> steps = x.generators();
  for (const auto& s : x.generators()) steps.push_back(g.inverse(s));
  std::vector<Element> reps{g.identity()};
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (const auto& s : steps) {
      Element y = g.multiply(reps[i], s);
      bool known = std::any_of(reps.begin(), reps.end(), [&](const Element& r) { return m.same_coset(r, y); });
      if (known) continue;
      if (reps.size() >= limit)
        throw ComputationError("more than " + std::to_string(limit) + " cosets of the modulus");
      reps.push_back(std::move(y));
    }
  return reps;
}

}  // namespace fcg
