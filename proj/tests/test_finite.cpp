#include <set>

#include "doctest.h"
#include "fcg/structure.hpp"
#include "support.hpp"

using namespace fcg;
using test::sub;
using test::word;

namespace {

Group s3() { return test::fixture("S3").group; }
Group d8() { return test::fixture("D8").group; }

std::multiset<std::uint64_t> class_sizes(const Subgroup& h) {
  std::multiset<std::uint64_t> out;
  for (const auto& c : conjugacy_classes(h)) out.insert(c.size);
  return out;
}

}  // namespace

TEST_SUITE("finite") {
  TEST_CASE("permutations compose left to right") {
    const Perm a = Perm::from_one_based({2, 3, 1});
    const Perm b = Perm::from_one_based({2, 1, 3});
    CHECK((a * b).cycle_string() == "(2 3)");
    CHECK((b * a).cycle_string() == "(1 3)");
    CHECK(a.inverse() * a == Perm::identity(3));
    CHECK(a.order() == 3);
    CHECK_THROWS_AS(Perm::from_one_based({1, 1, 2}), InputError);
  }

  TEST_CASE("commutator of a 3-cycle and a transposition") {
    const Group g = s3();
    const Element c = g.commutator(word(g, "a"), word(g, "b"));
    CHECK(c.perm().cycle_string() == "(1 2 3)");
    CHECK(word(g, "[a,b]") == c);
    CHECK(word(g, "e*a") == word(g, "a"));
  }

  TEST_CASE("BSGS orders") {
    CHECK(s3().order() == IndexValue::finite(6));
    FinitePermDescriptor d{4, {"r", "s"}, {Perm::from_one_based({2, 3, 4, 1}), Perm::from_one_based({3, 2, 1, 4})}};
    CHECK(Group::finite(d).order() == IndexValue::finite(8));
    CHECK(Group::finite(FinitePermDescriptor{5, {}, {}}).order() == IndexValue::finite(1));
    FinitePermDescriptor s6{6, {"x", "y"}, {Perm::from_one_based({2, 3, 4, 5, 6, 1}), Perm::from_one_based({2, 1, 3, 4, 5, 6})}};
    CHECK(Group::finite(s6).order() == IndexValue::finite(720));
  }

  TEST_CASE("BSGS membership agrees with enumeration") {
    const Group g = test::fixture("A4").group;
    const auto& b = g.bsgs();
    const auto elems = b.elements();
    CHECK(elems.size() == 12);
    const std::set<Perm> members(elems.begin(), elems.end());
    std::vector<long long> img{1, 2, 3, 4};
    do {
      const Perm p = Perm::from_one_based(img);
      CHECK(b.contains(p) == (members.count(p) == 1));
    } while (std::next_permutation(img.begin(), img.end()));
  }

  TEST_CASE("generated subgroups, intersections, normality") {
    const Group g = s3();
    const Subgroup a3 = sub(g, {"a"});
    CHECK(a3.order() == IndexValue::finite(3));
    const Subgroup t = sub(g, {"b"});
    CHECK(subgroup_intersect(a3, t).is_trivial());
    CHECK(normalizes(Subgroup::whole(g), a3));
    CHECK_FALSE(normalizes(Subgroup::whole(g), t));
    CHECK(normalizes(Subgroup::whole(g), Subgroup::whole(g)));
    CHECK(Subgroup::generate(g, {}).is_trivial());
    CHECK(subgroup_index(Subgroup::whole(g), a3) == IndexValue::finite(2));
  }

  TEST_CASE("conjugacy class sizes") {
    CHECK(class_sizes(Subgroup::whole(s3())) == std::multiset<std::uint64_t>{1, 2, 3});
    CHECK(class_sizes(Subgroup::whole(d8())) == std::multiset<std::uint64_t>{1, 1, 2, 2, 2});
    FinitePermDescriptor c4{4, {"c"}, {Perm::from_one_based({2, 3, 4, 1})}};
    CHECK(class_sizes(Subgroup::whole(Group::finite(c4))) == std::multiset<std::uint64_t>{1, 1, 1, 1});
  }

  TEST_CASE("centers") {
    const Group s = s3();
    CHECK(center_mod(Subgroup::whole(s), Modulus::trivial(s)).is_trivial());
    const Group g = d8();
    const Subgroup z = center_mod(Subgroup::whole(g), Modulus::trivial(g));
    CHECK(z == sub(g, {"r^2"}));
    const Subgroup whole = Subgroup::whole(g);
    CHECK(center_mod(whole, Modulus::normal(whole)) == whole);
  }

  TEST_CASE("upper central series") {
    const Group g = d8();
    const auto ucs = upper_central_series(Subgroup::whole(g));
    REQUIRE(ucs.terms.size() == 3);
    CHECK(ucs.terms[0].is_trivial());
    CHECK(ucs.terms[1] == sub(g, {"r^2"}));
    CHECK(ucs.terms[2] == Subgroup::whole(g));
    CHECK(ucs.nilpotent);
    CHECK(ucs.nilpotency_class == 2);

    const auto s = upper_central_series(Subgroup::whole(s3()));
    CHECK_FALSE(s.nilpotent);
    CHECK(s.terms.back().is_trivial());

    const Group c12 = test::fixture("C12").group;
    const auto c = upper_central_series(Subgroup::whole(c12));
    CHECK(c.nilpotent);
    CHECK(c.nilpotency_class == 1);
  }

  TEST_CASE("derived subgroups") {
    const Group g = s3();
    CHECK(commutator_subgroup(Subgroup::whole(g), Subgroup::whole(g)) == sub(g, {"a"}));
    const Group d = d8();
    CHECK(commutator_subgroup(Subgroup::whole(d), Subgroup::whole(d)) == sub(d, {"r^2"}));
    const Group c12 = test::fixture("C12").group;
    CHECK(commutator_subgroup(Subgroup::whole(c12), Subgroup::whole(c12)).is_trivial());
  }

  TEST_CASE("words parse conjugation and powers") {
    const Group g = d8();
    CHECK(word(g, "r^-1") == g.inverse(word(g, "r")));
    CHECK(word(g, "r^s") == g.conjugate(word(g, "r"), word(g, "s")));
    CHECK(word(g, "r^4") == g.identity());
    CHECK_THROWS_AS(word(g, "q"), InputError);
    CHECK_THROWS_AS(word(g, "r*"), InputError);
  }
}
