#include "doctest.h"
#include "fcg/fc_analysis.hpp"
#include "fcg/oracle.hpp"
#include "fcg/structure.hpp"
#include "support.hpp"

using namespace fcg;
using test::affine;
using test::sub;

TEST_SUITE("fc-analysis") {
  TEST_CASE("membership in the infinite dihedral group") {
    const Group g = test::fixture("Dinf").group;
    const Subgroup whole = Subgroup::whole(g);
    const Modulus one = Modulus::trivial(g);
    CHECK(fc_membership(whole, whole, one, affine(g, {1})));
    CHECK_FALSE(fc_membership(whole, whole, one, affine(g, {0}, "r")));
    const Modulus all = Modulus::normal(whole);
    CHECK(fc_membership(whole, whole, all, affine(g, {0}, "r")));
    CHECK(fc_membership(whole, whole, all, affine(g, {7}, "r")));
  }

  TEST_CASE("FC-centralizers") {
    const Group d = test::fixture("Dinf").group;
    const Subgroup dw = Subgroup::whole(d);
    CHECK(fc_centralizer_subgroup(dw, dw, Modulus::trivial(d)) == sub(d, {"t"}));
    CHECK(fc_centralizer_subgroup(dw, dw, Modulus::normal(dw)) == dw);

    const Group z = test::fixture("ZxS3").group;
    const Subgroup zw = Subgroup::whole(z);
    CHECK(fc_centralizer_subgroup(zw, zw, Modulus::trivial(z)) == zw);

    const Group r = test::fixture("Z2C4").group;
    const Subgroup rw = Subgroup::whole(r);
    CHECK(fc_centralizer_subgroup(rw, rw, Modulus::trivial(r)) == sub(r, {"x", "y"}));
  }

  TEST_CASE("bounds and their certificates") {
    const Group d = test::fixture("Dinf").group;
    const Subgroup dw = Subgroup::whole(d);
    const Modulus one = Modulus::trivial(d);
    const auto b = fc_bound(dw, dw, one);
    REQUIRE(b);
    CHECK(b->bound == 2);
    CHECK(b->method == BoundMethod::GenericStabilizer);
    CHECK(class_size_mod(dw, b->attaining, one) == IndexValue::finite(2));

    const Group z = test::fixture("ZxS3").group;
    const Subgroup zw = Subgroup::whole(z);
    const auto bz = fc_bound(zw, zw, Modulus::trivial(z));
    REQUIRE(bz);
    CHECK(bz->bound == 3);
    CHECK(class_size_mod(zw, bz->attaining, Modulus::trivial(z)) == IndexValue::finite(3));

    const Group c = test::fixture("C12").group;
    const Subgroup cw = Subgroup::whole(c);
    const auto bc = fc_bound(cw, cw, Modulus::trivial(c));
    REQUIRE(bc);
    CHECK(bc->bound == 1);
    CHECK(bc->method == BoundMethod::Exhaustive);

    const Group s = test::fixture("S3").group;
    const Subgroup sw = Subgroup::whole(s);
    CHECK(fc_bound(sw, sw, Modulus::trivial(s))->bound == 3);
  }

  TEST_CASE("bound modulo a nontrivial normal subgroup") {
    const Group g = test::fixture("Z2C4").group;
    const Subgroup whole = Subgroup::whole(g);
    // modulo 2Z^2 every element has finitely many conjugates
    const Subgroup two = Subgroup::generate(g, {affine(g, {2, 0}), affine(g, {0, 2})});
    const Modulus m = Modulus::normal(two);
    CHECK(fc_centralizer_subgroup(whole, whole, m) == whole);
    const auto b = fc_bound(whole, whole, m);
    REQUIRE(b);
    CHECK(class_size_mod(whole, b->attaining, m) == IndexValue::finite(b->bound));
    // ball oracle over representatives of the finite quotient
    std::size_t best = 0;
    oracle::Instance in;
    in.property = oracle::Property::ClassSize;
    in.acting = whole.generators();
    in.modulus = two.generators();
    for (Int x = 0; x < 2; ++x)
      for (Int y = 0; y < 2; ++y)
        for (const char* f : {"e", "c", "c^2", "c^3"}) {
          in.element = affine(g, {x, y}, f);
          const auto rep = oracle::brute_check(g, in, 6);
          REQUIRE(rep.stabilized);
          best = std::max(best, rep.value());
        }
    CHECK(b->bound == best);
  }

  TEST_CASE("commensurability") {
    const Group g = test::fixture("Dinf").group;
    const Subgroup z = sub(g, {"t"});
    const Subgroup z2 = sub(g, {"t^2"});
    auto c = commensurable(z, z2);
    CHECK(c.commensurable());
    CHECK(c.forward == IndexValue::finite(2));
    CHECK(c.backward == IndexValue::finite(1));
    CHECK_FALSE(commensurable(z, Subgroup::trivial(g)).commensurable());
    c = commensurable(Subgroup::whole(g), z);
    CHECK(c.forward == IndexValue::finite(2));
    CHECK(c.backward == IndexValue::finite(1));
  }

  TEST_CASE("chain validation") {
    const auto dinf = test::fixture("Dinf");
    const Group& g = dinf.group;
    const Subgroup whole = Subgroup::whole(g);
    const Subgroup one = Subgroup::trivial(g);
    const Subgroup z = sub(g, {"t"});

    FCChain c = check_bounded_fc_nilpotent_chain(FCChain::make(g, ChainKind::Nilpotent, {one, z, whole}));
    CHECK(c.valid());
    CHECK(c.bounds() == std::vector<IndexValue>{IndexValue::finite(2), IndexValue::finite(1)});

    c = check_bounded_fc_nilpotent_chain(FCChain::make(g, ChainKind::Nilpotent, {one, whole}));
    CHECK_FALSE(c.valid());
    CHECK_FALSE(c.levels[1].inside_fc);
    CHECK_FALSE(c.levels[1].diagnostics.empty());

    c = check_bounded_fc_solvable_chain(FCChain::make(g, ChainKind::Solvable, {one, z, whole}));
    CHECK(c.valid());
    CHECK(c.bounds() == std::vector<IndexValue>{IndexValue::finite(1), IndexValue::finite(1)});

    const Group r = test::fixture("Z2C4").group;
    c = check_bounded_fc_nilpotent_chain(FCChain::make(
        r, ChainKind::Nilpotent, {Subgroup::trivial(r), sub(r, {"x", "y"}), Subgroup::whole(r)}));
    CHECK(c.valid());
    CHECK(c.bounds() == std::vector<IndexValue>{IndexValue::finite(4), IndexValue::finite(1)});

    const Group zs = test::fixture("ZxS3").group;
    c = check_bounded_fc_solvable_chain(FCChain::make(
        zs, ChainKind::Solvable, {Subgroup::trivial(zs), sub(zs, {"t", "a"}), Subgroup::whole(zs)}));
    CHECK(c.valid());

    const Group c12 = test::fixture("C12").group;
    c = check_bounded_fc_solvable_chain(
        FCChain::make(c12, ChainKind::Solvable, {Subgroup::trivial(c12), Subgroup::whole(c12)}));
    CHECK(c.valid());
    CHECK(c.bounds() == std::vector<IndexValue>{IndexValue::finite(1)});
  }

  TEST_CASE("chain diagnostics") {
    const Group g = test::fixture("S3").group;
    const Subgroup t = sub(g, {"b"});
    // <(1 2)> is not normal in S3
    FCChain c = check_bounded_fc_nilpotent_chain(
        FCChain::make(g, ChainKind::Nilpotent, {Subgroup::trivial(g), t, Subgroup::whole(g)}));
    CHECK_FALSE(c.valid());
    CHECK_FALSE(c.diagnostics().empty());
    // first level must be trivial
    c = check_bounded_fc_nilpotent_chain(FCChain::make(g, ChainKind::Nilpotent, {sub(g, {"a"}), Subgroup::whole(g)}));
    CHECK_FALSE(c.valid());
  }

  TEST_CASE("monotone in the modulus") {
    const Group g = test::fixture("Z2C4").group;
    const Subgroup whole = Subgroup::whole(g);
    const Subgroup n1 = Subgroup::generate(g, {affine(g, {4, 0}), affine(g, {0, 4})});
    const Subgroup n2 = Subgroup::generate(g, {affine(g, {2, 0}), affine(g, {0, 2})});
    const Subgroup fc0 = fc_centralizer_subgroup(whole, whole, Modulus::trivial(g));
    const Subgroup fc1 = fc_centralizer_subgroup(whole, whole, Modulus::normal(n1));
    const Subgroup fc2 = fc_centralizer_subgroup(whole, whole, Modulus::normal(n2));
    CHECK(fc0.is_subgroup_of(fc1));
    CHECK(fc1.is_subgroup_of(fc2));
  }
}
