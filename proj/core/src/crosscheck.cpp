#include "fcg/crosscheck.hpp"

#include <algorithm>

#include "fcg/fc_analysis.hpp"
#include "fcg/structure.hpp"

namespace fcg {

namespace {

bool growth_agrees(const oracle::Report& rep) {
  const std::size_t hi = std::min<std::size_t>(5, rep.radius - 1);
  const std::size_t lo = std::min<std::size_t>(3, hi > 0 ? hi - 1 : 0);
  return !rep.stabilized && rep.strictly_growing(lo, hi);
}

bool count_agrees(const IndexValue& closed, const oracle::Report& rep) {
  if (closed.is_finite()) return rep.stabilized && rep.value() == closed.value();
  return growth_agrees(rep);
}

}  // namespace

std::vector<CrossCheck> cross_check(const Subgroup& h, const Modulus& n, const Element& x, std::size_t radius) {
  const Group& g = h.group();
  oracle::Instance in;
  in.acting = h.generators();
  in.element = x;
  in.modulus = n.subgroup().generators();
  std::vector<CrossCheck> out;

  in.property = oracle::Property::ClassSize;
  const IndexValue size = class_size_mod(h, x, n);
  auto rep = oracle::brute_check(g, in, radius);
  out.push_back({in.property, x, size.to_string(), rep.counts, rep.stabilized, count_agrees(size, rep)});

  in.property = oracle::Property::FcMembership;
  const bool member = fc_membership(Subgroup::whole(g), h, n, x);
  rep = oracle::brute_check(g, in, radius);
  out.push_back({in.property, x, member ? "true" : "false", rep.counts, rep.stabilized,
                 member ? rep.stabilized : growth_agrees(rep)});

  in.property = oracle::Property::Centralizer;
  const Subgroup c = centralizer_mod(h, x, n);
  rep = oracle::brute_check(g, in, radius);
  std::vector<Element> members = rep.members;
  std::sort(members.begin(), members.end());
  const bool same = std::all_of(rep.ball.begin(), rep.ball.end(), [&](const Element& b) {
    return c.contains(b) == std::binary_search(members.begin(), members.end(), b);
  });
  out.push_back({in.property, x, c.describe(), rep.counts, rep.stabilized, same});
  return out;
}

CrossCheck cross_check_index(const Subgroup& h, const Subgroup& k, std::size_t radius) {
  oracle::Instance in;
  in.property = oracle::Property::SubgroupIndex;
  in.acting = h.generators();
  in.other = k.generators();
  in.element = h.group().identity();
  const IndexValue idx = subgroup_index(h, k);
  auto rep = oracle::brute_check(h.group(), in, radius);
  return {in.property, in.element, idx.to_string(), rep.counts, rep.stabilized, count_agrees(idx, rep)};
}

}  // namespace fcg
