// Acceptance suite: one PASS/FAIL line per criterion. All expected values
// are exact integers; time limits are wall-clock seconds per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "fcg/crosscheck.hpp"
#include "fcg/oracle.hpp"
#include "fcg/structure.hpp"
#include "fcg/theorems.hpp"
#include "support.hpp"

using namespace fcg;

namespace {

struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

std::string str(const IndexValue& v) { return v.to_string(); }

// Traces accepted by criterion 1 and the round trips, re-examined by criterion 10.
std::vector<TowerTrace> g_traces;

FCChain nilpotent_chain(const Group& g, const std::vector<Subgroup>& levels) {
  return check_bounded_fc_nilpotent_chain(FCChain::make(g, ChainKind::Nilpotent, levels));
}

std::string criterion1() {
  std::ostringstream out;
  const Group d = test::fixture("Dinf").group;
  const Group z = test::fixture("Z2C4").group;
  struct Case {
    Group g;
    Subgroup mid;
    std::uint64_t index;
  };
  for (const Case& c : {Case{d, test::sub(d, {"t"}), 2}, Case{z, test::sub(z, {"x", "y"}), 4}}) {
    const auto start = std::chrono::steady_clock::now();
    const FCChain chain = nilpotent_chain(c.g, {Subgroup::trivial(c.g), c.mid, Subgroup::whole(c.g)});
    expect(chain.valid(), c.g.name() + ": chain rejected");
    const TowerTrace t = nilpotent_tower(chain);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    expect(t.index == IndexValue::finite(c.index), c.g.name() + ": index " + str(t.index));
    expect(t.nilpotency_class == 1, c.g.name() + ": class " + std::to_string(t.nilpotency_class));
    expect(t.nilpotency_class <= t.class_bound && t.class_bound == 4, c.g.name() + ": class bound");
    for (const auto& s : t.steps) expect(s.flags.all(), c.g.name() + ": unverified step");
    expect(secs < 5.0, c.g.name() + ": took " + std::to_string(secs) + " s");
    g_traces.push_back(t);
    out << c.g.name() << " index " << str(t.index) << " class " << t.nilpotency_class << "; ";
  }
  return out.str();
}

std::string criterion2() {
  std::ostringstream out;
  const Group d = test::fixture("Dinf").group;
  const Group d8 = test::fixture("D8").group;
  struct Case {
    Group g;
    Subgroup n;
    std::uint64_t k;
  };
  for (const Case& c : {Case{d, test::sub(d, {"t"}), 2}, Case{d8, Subgroup::whole(d8), 1}}) {
    const NilpotentWitness w = witness_from_nilpotent(c.g, c.n);
    expect(w.k == c.k, c.g.name() + ": k = " + std::to_string(w.k));
    const FCChain again = check_bounded_fc_nilpotent_chain(w.chain);
    expect(again.valid(), c.g.name() + ": witness chain rejected");
    out << c.g.name() << " bounds";
    for (const auto& b : again.bounds()) {
      expect(b.is_finite() && b.value() <= c.k, c.g.name() + ": bound " + str(b) + " exceeds k");
      out << ' ' << str(b);
    }
    out << " (k=" << c.k << "); ";
  }
  return out.str();
}

std::string criterion3() {
  const Group g = test::fixture("ZxS3").group;
  const Decomposition d = neumann_decompose(Subgroup::whole(g));
  expect(d.derived_order == IndexValue::finite(3), "H' order " + str(d.derived_order));
  expect(d.centralizer_index == IndexValue::finite(2), "index " + str(d.centralizer_index));
  expect(d.nilpotency_class == 1, "class " + std::to_string(d.nilpotency_class));
  // the decomposition's numbers recomputed by the oracle
  const Element a = test::word(g, "a");
  expect(oracle::NaiveSubgroup(g, d.derived.generators()).contains(a), "H' misses (1 2 3)");
  const CrossCheck idx = cross_check_index(Subgroup::whole(g), d.centralizer, 6);
  expect(idx.agree, "oracle disagrees on [H : C_H(H')]");
  return "H' order 3, [H : C_H(H')] = 2, class 1";
}

std::string criterion4() {
  std::mt19937_64 rng(2024);
  std::size_t instances = 0, satisfied = 0, violations = 0;
  std::ostringstream out;
  for (const char* name : {"S3", "D8", "A4", "C12", "Dinf", "ZxS3", "Z2C4"}) {
    const Group g = test::fixture(name).group;
    const Subgroup whole = Subgroup::whole(g);
    const auto gens = g.generators();
    std::uniform_int_distribution<std::size_t> len(0, 3);
    std::size_t local_ok = 0;
    for (int i = 0; i < 20; ++i) {
      const Subgroup h = Subgroup::generate(g, {test::random_word(g, gens, len(rng), rng),
                                                test::random_word(g, gens, len(rng), rng)});
      const Subgroup k = Subgroup::generate(g, {test::random_word(g, gens, len(rng), rng),
                                                test::random_word(g, gens, len(rng), rng)});
      const Element nx = test::random_word(g, gens, len(rng), rng);
      const Modulus n = Modulus::normal(normal_closure({nx}, whole));
      const SymmetryRecord r = symmetry_check(whole, h, k, n);
      ++instances;
      if (r.verdict == SymmetryVerdict::Violation) ++violations;
      if (r.verdict != SymmetryVerdict::HypothesisFalse) {
        ++satisfied;
        ++local_ok;
      }
    }
    out << name << ' ' << local_ok << "/20 ";
  }
  expect(violations == 0, std::to_string(violations) + " VIOLATION verdicts");
  expect(satisfied > 0, "no instance satisfied the hypothesis");
  out << "(" << instances << " instances, " << satisfied << " hypothesis-satisfying, 0 violations)";
  return out.str();
}

std::string criterion5() {
  const Group g = test::fixture("ZxS3").group;
  const CommutatorResult c = commutator_finiteness(Subgroup::whole(g), Subgroup::whole(g));
  expect(c.order == 3, "order " + std::to_string(c.order));
  const Group d = test::fixture("Dinf").group;
  bool refused = false;
  try {
    commutator_finiteness(Subgroup::whole(d), Subgroup::whole(d));
  } catch (const HypothesisError&) {
    refused = true;
  }
  expect(refused, "Dinf accepted");
  return "[ZxS3, ZxS3] order 3; Dinf refused";
}

std::string criterion6() {
  std::mt19937_64 rng(6);
  std::size_t elements = 0, checks = 0, infinite = 0;
  for (const char* name : {"Dinf", "ZxS3", "Z2C4"}) {
    const Group g = test::fixture(name).group;
    const Subgroup whole = Subgroup::whole(g);
    const Modulus one = Modulus::trivial(g);
    std::uniform_int_distribution<std::size_t> len(0, 4);
    for (int i = 0; i < 35; ++i) {
      const Element x = test::random_word(g, g.generators(), len(rng), rng);
      ++elements;
      for (const CrossCheck& c : cross_check(whole, one, x, 6)) {
        ++checks;
        if (c.closed_form == "infinite" || c.closed_form == "false") ++infinite;
        expect(c.agree, std::string(name) + " " + oracle::to_string(c.property) + " at " + g.format(x) +
                            ": closed form " + c.closed_form);
      }
    }
  }
  expect(elements >= 100, "too few elements");
  return std::to_string(elements) + " elements, " + std::to_string(checks) + " checks, " + std::to_string(infinite) +
         " infinite verdicts with growing counts";
}

// Naive recomputation from the full element list of a finite group.
std::string criterion7() {
  std::ostringstream out;
  for (const auto& name : io::fixture_names()) {
    const Group g = test::fixture(name).group;
    if (g.backend() != Backend::FinitePermutation || g.order().value() > 24) continue;
    const auto all = oracle::ball_enumerate(g, g.generators(), 24);
    std::vector<Element> elems(all.elements().begin(), all.elements().end());
    std::sort(elems.begin(), elems.end());
    const Subgroup whole = Subgroup::whole(g);
    expect(g.order().value() == elems.size(), name + ": BSGS order");

    std::multiset<std::uint64_t> naive_sizes;
    std::set<Element> seen;
    for (const auto& x : elems) {
      if (seen.count(x)) continue;
      std::set<Element> cls;
      for (const auto& y : elems) cls.insert(g.conjugate(x, y));
      seen.insert(cls.begin(), cls.end());
      naive_sizes.insert(cls.size());
    }
    std::multiset<std::uint64_t> sizes;
    for (const auto& c : conjugacy_classes(whole)) sizes.insert(c.size);
    expect(sizes == naive_sizes, name + ": class sizes");

    // upper central series: Z_{i+1} = { x : [x, y] in Z_i for all y }
    const auto ucs = upper_central_series(whole);
    std::set<Element> z{g.identity()};
    for (std::size_t i = 1; i < ucs.terms.size(); ++i) {
      std::set<Element> next;
      for (const auto& x : elems)
        if (std::all_of(elems.begin(), elems.end(), [&](const Element& y) { return z.count(g.commutator(x, y)); }))
          next.insert(x);
      z = next;
      expect(ucs.terms[i].order().value() == z.size(), name + ": upper central term " + std::to_string(i));
      for (const auto& x : z) expect(ucs.terms[i].contains(x), name + ": upper central membership");
    }

    // derived subgroup: closure of all commutators
    std::vector<Element> comms;
    for (const auto& x : elems)
      for (const auto& y : elems) comms.push_back(g.commutator(x, y));
    const oracle::NaiveSubgroup naive(g, comms);
    const Subgroup derived = commutator_subgroup(whole, whole);
    std::size_t count = 0;
    for (const auto& x : elems) {
      count += naive.contains(x);
      expect(naive.contains(x) == derived.contains(x), name + ": derived membership");
    }
    expect(derived.order().value() == count, name + ": derived order");
    out << name << " (" << elems.size() << ") ";
  }
  return out.str();
}

std::string criterion8() {
  std::ostringstream out;
  const Group d = test::fixture("Dinf").group;
  const Group s = test::fixture("S3").group;
  struct Case {
    Group g;
    Subgroup mid;
  };
  for (const Case& c : {Case{d, test::sub(d, {"t"})}, Case{s, test::sub(s, {"a"})}}) {
    const FCChain chain = check_bounded_fc_solvable_chain(
        FCChain::make(c.g, ChainKind::Solvable, {Subgroup::trivial(c.g), c.mid, Subgroup::whole(c.g)}));
    expect(chain.valid(), c.g.name() + ": chain rejected");
    const SolvableResult r = solvable_resolve(chain);
    expect(r.index.is_finite(), c.g.name() + ": infinite index");
    expect(r.derived_series.back().is_trivial(), c.g.name() + ": derived series does not end at 1");
    expect(r.derived_length <= 2, c.g.name() + ": derived length " + std::to_string(r.derived_length));
    for (std::size_t i = 0; i + 1 < r.derived_series.size(); ++i)
      expect(commutator_subgroup(r.derived_series[i], r.derived_series[i]) == r.derived_series[i + 1],
             c.g.name() + ": derived series term " + std::to_string(i + 1));
    out << c.g.name() << " index " << str(r.index) << " length " << r.derived_length << "; ";
  }
  return out.str();
}

std::string criterion9() {
  const Group g = test::free_abelian(2);
  const Subgroup whole = Subgroup::whole(g);
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<Int> coord(-5, 5);
  std::uniform_int_distribution<int> count(1, 4);
  std::size_t max_norm = 0;
  for (int family = 0; family < 50; ++family) {
    std::vector<std::pair<Element, Subgroup>> cosets;
    const int m = count(rng);
    for (int i = 0; i < m; ++i) {
      Vector dir{coord(rng), coord(rng)};
      if (dir == Vector{0, 0}) dir = {1, 0};
      const Subgroup h = (i % 3 == 2) ? Subgroup::trivial(g) : Subgroup::generate(g, {g.translation(dir)});
      cosets.emplace_back(g.translation({coord(rng), coord(rng)}), h);
    }
    const Element w = coset_cover_witness(whole, cosets, 20);
    for (const auto& [x, h] : cosets) {
      // independent check: w - x is not a multiple of the direction
      const oracle::NaiveSubgroup naive(g, h.generators());
      expect(!naive.contains(g.multiply(g.inverse(x), w)), "witness lies in a coset");
    }
    const auto& t = w.affine().translation;
    max_norm = std::max<std::size_t>(max_norm, std::abs(t[0]) + std::abs(t[1]));
  }
  return "50 families, witnesses found within word length " + std::to_string(max_norm);
}

std::string criterion10() {
  // round trips add further accepted traces
  for (const char* name : {"S3", "D8", "A4", "C12", "Dinf", "ZxS3", "Z2C4", "trivial"}) {
    const Group g = test::fixture(name).group;
    const Subgroup whole = Subgroup::whole(g);
    std::vector<Subgroup> candidates{whole, Subgroup::trivial(g)};
    if (g.backend() == Backend::Affine) candidates.push_back(fc_centralizer_subgroup(whole, whole, Modulus::trivial(g)));
    for (const auto& n : candidates) {
      if (!normalizes(whole, n) || subgroup_index(whole, n).is_infinite() || !upper_central_series(n).nilpotent) continue;
      const NilpotentWitness w = witness_from_nilpotent(g, n);
      expect(w.chain.valid(), std::string(name) + ": witness chain rejected");
      g_traces.push_back(nilpotent_tower(w.chain));
      break;
    }
  }
  std::size_t steps = 0;
  for (const auto& t : g_traces) {
    expect(t.success, "trace not accepted");
    for (const auto& s : t.steps) {
      const IndexValue odd = subgroup_index(s.h[2 * s.i - 1], s.h[2 * s.i - 2]);
      expect(odd.is_finite() && odd == s.odd_factor_index, "odd factor at step " + std::to_string(s.i));
      ++steps;
    }
  }
  return std::to_string(g_traces.size()) + " traces, " + std::to_string(steps) + " odd factors finite";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double limit;
    std::function<std::string()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "tower: Dinf index 2, Z2C4 index 4, class 1", 10.0, criterion1},
      {2, "nilpotent witness round trip with bounds <= k", 1.0, criterion2},
      {3, "Neumann decomposition of ZxS3", 1.0, criterion3},
      {4, "symmetry suite, zero violations", 60.0, criterion4},
      {5, "commutator finiteness", 1.0, criterion5},
      {6, "closed forms agree with the ball oracle", 60.0, criterion6},
      {7, "finite backend against full enumeration", 30.0, criterion7},
      {8, "solvable resolver", 1.0, criterion8},
      {9, "coset cover witnesses in Z^2", 30.0, criterion9},
      {10, "odd factors of tower traces are finite", 30.0, criterion10},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = c.run();
    } catch (const Failure& f) {
      ok = false;
      detail = f.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && secs >= c.limit) {
      ok = false;
      detail += " (over the " + std::to_string(c.limit) + " s limit)";
    }
    failed += !ok;
    std::printf("%s criterion %2d: %s [%.2f s] %s\n", ok ? "PASS" : "FAIL", c.id, c.title, secs, detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
