#include "doctest.h"
#include "fcg/structure.hpp"
#include "fcg/theorems.hpp"
#include "support.hpp"

using namespace fcg;
using test::affine;
using test::sub;

namespace {

FCChain nilpotent(const Group& g, const std::vector<Subgroup>& levels) {
  return check_bounded_fc_nilpotent_chain(FCChain::make(g, ChainKind::Nilpotent, levels));
}

}  // namespace

TEST_SUITE("theorems") {
  TEST_CASE("tower for the infinite dihedral group") {
    const Group g = test::fixture("Dinf").group;
    const FCChain c = nilpotent(g, {Subgroup::trivial(g), sub(g, {"t"}), Subgroup::whole(g)});
    REQUIRE(c.valid());
    const TowerTrace t = nilpotent_tower(c);
    CHECK(t.success);
    CHECK(t.f == sub(g, {"t"}));
    CHECK(t.index == IndexValue::finite(2));
    CHECK(t.nilpotency_class == 1);
    CHECK(t.class_bound == 4);
    REQUIRE(t.steps.size() == 2);
    for (const auto& s : t.steps) {
      CHECK(s.flags.all());
      CHECK(s.h.size() == 2 * s.i + 1);
      CHECK(s.odd_factor_index.is_finite());
    }
  }

  TEST_CASE("tower for Z^2 x| C4") {
    const Group g = test::fixture("Z2C4").group;
    const FCChain c = nilpotent(g, {Subgroup::trivial(g), sub(g, {"x", "y"}), Subgroup::whole(g)});
    const TowerTrace t = nilpotent_tower(c);
    CHECK(t.f == sub(g, {"x", "y"}));
    CHECK(t.index == IndexValue::finite(4));
    CHECK(t.nilpotency_class == 1);
    CHECK(t.steps[0].x_index == IndexValue::finite(1));
  }

  TEST_CASE("tower for the trivial group") {
    const Group g = test::fixture("trivial").group;
    const TowerTrace t = nilpotent_tower(nilpotent(g, {Subgroup::trivial(g)}));
    CHECK(t.index == IndexValue::finite(1));
    CHECK(t.f.is_trivial());
  }

  TEST_CASE("tower refuses unvalidated chains") {
    const Group g = test::fixture("Dinf").group;
    const FCChain bad = nilpotent(g, {Subgroup::trivial(g), Subgroup::whole(g)});
    CHECK_THROWS_AS(nilpotent_tower(bad), PreconditionError);
  }

  TEST_CASE("witness chains from nilpotent subgroups") {
    const Group g = test::fixture("Dinf").group;
    const NilpotentWitness w = witness_from_nilpotent(g, sub(g, {"t"}));
    CHECK(w.k == 2);
    CHECK(w.chain.valid());
    CHECK(w.bounds_within_k);
    REQUIRE(w.chain.levels.size() == 3);
    CHECK(w.chain[1] == sub(g, {"t"}));

    const Group d = test::fixture("D8").group;
    const NilpotentWitness wd = witness_from_nilpotent(d, Subgroup::whole(d));
    CHECK(wd.k == 1);
    CHECK(wd.chain.valid());
    CHECK(wd.chain.bounds() == std::vector<IndexValue>{IndexValue::finite(1), IndexValue::finite(1)});
    CHECK(wd.chain[1] == sub(d, {"r^2"}));

    const Group s = test::fixture("S3").group;
    const NilpotentWitness ws = witness_from_nilpotent(s, Subgroup::trivial(s));
    CHECK(ws.chain.length() == 1);
    CHECK(ws.chain.bounds().front().value() <= 6);
    CHECK_THROWS_AS(witness_from_nilpotent(s, Subgroup::whole(s)), PreconditionError);
    CHECK_THROWS_AS(witness_from_nilpotent(g, Subgroup::trivial(g)), PreconditionError);
  }

  TEST_CASE("Neumann decomposition") {
    const Group g = test::fixture("ZxS3").group;
    const Decomposition d = neumann_decompose(Subgroup::whole(g));
    CHECK(d.derived_order == IndexValue::finite(3));
    CHECK(d.centralizer == sub(g, {"t", "a"}));
    CHECK(d.centralizer_index == IndexValue::finite(2));
    CHECK(d.nilpotency_class == 1);

    const Group z = test::free_abelian(1);
    const Decomposition dz = neumann_decompose(Subgroup::whole(z));
    CHECK(dz.derived_order == IndexValue::finite(1));
    CHECK(dz.centralizer_index == IndexValue::finite(1));

    const Group dinf = test::fixture("Dinf").group;
    try {
      neumann_decompose(Subgroup::whole(dinf));
      FAIL("expected a hypothesis error");
    } catch (const HypothesisError& e) {
      CHECK(e.witness() == dinf.format(affine(dinf, {0}, "r")));
    }
  }

  TEST_CASE("symmetry checks") {
    const Group g = test::fixture("Z2C4").group;
    const Subgroup whole = Subgroup::whole(g);
    const SymmetryRecord r = symmetry_check(whole, sub(g, {"x", "y"}), whole, Modulus::trivial(g));
    CHECK(r.verdict == SymmetryVerdict::Verified);
    CHECK(r.hypothesis_index == IndexValue::finite(1));
    CHECK(r.conclusion_index == IndexValue::finite(4));
    CHECK(r.interpretation == "FC_H(K/N) bounded");

    const SymmetryRecord all = symmetry_check(whole, whole, whole, Modulus::normal(whole));
    CHECK(all.verdict == SymmetryVerdict::Verified);

    const Group d = test::fixture("Dinf").group;
    const Subgroup dw = Subgroup::whole(d);
    // FC_G(G) = Z has index 2 with classes of size at most 2
    const SymmetryRecord dr = symmetry_check(dw, dw, dw, Modulus::trivial(d));
    CHECK(dr.verdict == SymmetryVerdict::Verified);
    CHECK(dr.hypothesis_bounded);
    CHECK(dr.hypothesis_index == IndexValue::finite(2));
    CHECK(dr.conclusion_index == IndexValue::finite(2));
  }

  TEST_CASE("commutator finiteness") {
    const Group g = test::fixture("ZxS3").group;
    const Subgroup whole = Subgroup::whole(g);
    const CommutatorResult c = commutator_finiteness(whole, whole);
    CHECK(c.order == 3);
    CHECK(c.subgroup == sub(g, {"a"}));

    const Group z = test::free_abelian(2);
    CHECK(commutator_finiteness(Subgroup::whole(z), Subgroup::whole(z)).order == 1);

    const Group d = test::fixture("Dinf").group;
    CHECK_THROWS_AS(commutator_finiteness(Subgroup::whole(d), Subgroup::whole(d)), HypothesisError);
  }

  TEST_CASE("solvable resolver") {
    const Group g = test::fixture("Dinf").group;
    const FCChain c = check_bounded_fc_solvable_chain(
        FCChain::make(g, ChainKind::Solvable, {Subgroup::trivial(g), sub(g, {"t"}), Subgroup::whole(g)}));
    const SolvableResult r = solvable_resolve(c);
    CHECK(r.s == Subgroup::whole(g));
    CHECK(r.index == IndexValue::finite(1));
    CHECK(r.derived_length == 2);
    CHECK(r.derived_series[1] == sub(g, {"t^2"}));

    const Group s = test::fixture("S3").group;
    const SolvableResult rs = solvable_resolve(check_bounded_fc_solvable_chain(
        FCChain::make(s, ChainKind::Solvable, {Subgroup::trivial(s), sub(s, {"a"}), Subgroup::whole(s)})));
    CHECK(rs.s == Subgroup::whole(s));
    CHECK(rs.derived_length == 2);

    const Group c12 = test::fixture("C12").group;
    const SolvableResult ra = solvable_resolve(check_bounded_fc_solvable_chain(
        FCChain::make(c12, ChainKind::Solvable, {Subgroup::trivial(c12), Subgroup::whole(c12)})));
    CHECK(ra.derived_length == 1);
  }

  TEST_CASE("normal core") {
    const Group s = test::fixture("S3").group;
    CHECK(normal_core(sub(s, {"b"}), Subgroup::whole(s)).is_trivial());
    CHECK(normal_core(sub(s, {"a"}), Subgroup::whole(s)) == sub(s, {"a"}));
  }

  TEST_CASE("coset cover witnesses") {
    const Group g = test::free_abelian(2);
    const Subgroup whole = Subgroup::whole(g);
    const Subgroup col = Subgroup::generate(g, {g.translation({0, 1})});
    const Element w = coset_cover_witness(whole, {{g.translation({0, 0}), col}, {g.translation({1, 0}), col}});
    const Int x = w.affine().translation[0];
    CHECK((x != 0 && x != 1));
    CHECK(coset_cover_witness(whole, {}) == g.identity());
    const Subgroup finite_index = Subgroup::generate(g, {g.translation({2, 0}), g.translation({0, 1})});
    CHECK_THROWS_AS(coset_cover_witness(whole, {{g.identity(), finite_index}}), PreconditionError);
  }
}
