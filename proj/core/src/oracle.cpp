#include "fcg/oracle.hpp"

#include <algorithm>
#include <cstdlib>

namespace fcg::oracle {

std::span<const Element> Ball::within(std::size_t r) const {
  if (r >= layer_end_.size()) r = layer_end_.size() - 1;
  return std::span<const Element>(elements_.data(), layer_end_[r]);
}

Ball ball_enumerate(const Group& group, const std::vector<Element>& gens, std::size_t radius,
                    std::size_t max_elements) {
  Ball b;
  for (const auto& g : gens) {
    group.require_owned(g);
    for (const Element& x : {g, group.inverse(g)})
      if (std::find(b.generators_.begin(), b.generators_.end(), x) == b.generators_.end())
        b.generators_.push_back(x);
  }
  b.elements_.push_back(group.identity());
  b.members_.insert(group.identity());
  b.layer_end_.push_back(1);
  std::size_t layer_begin = 0;
  for (std::size_t r = 1; r <= radius; ++r) {
    const std::size_t layer_stop = b.elements_.size();
    for (std::size_t i = layer_begin; i < layer_stop; ++i)
      for (const auto& s : b.generators_) {
        Element y = group.multiply(b.elements_[i], s);
        if (b.members_.insert(y).second) {
          if (b.elements_.size() >= max_elements) throw ComputationError("ball enumeration exceeded its budget");
          b.elements_.push_back(std::move(y));
        }
      }
    layer_begin = layer_stop;
    b.layer_end_.push_back(b.elements_.size());
  }
  return b;
}

namespace {

// Inserts v into an integer row echelon form by Euclid on leading entries.
void echelon_insert(std::vector<Vector>& rows, Vector v) {
  const std::size_t n = v.size();
  for (std::size_t c = 0; c < n; ++c) {
    if (v[c] == 0) continue;
    auto it = std::find_if(rows.begin(), rows.end(), [&](const Vector& r) {
      std::size_t lead = 0;
      while (lead < n && r[lead] == 0) ++lead;
      return lead >= c;
    });
    std::size_t lead = n;
    if (it != rows.end()) {
      lead = 0;
      while (lead < n && (*it)[lead] == 0) ++lead;
    }
    if (it == rows.end() || lead > c) {
      rows.insert(it, std::move(v));
      return;
    }
    Vector& row = *it;
    // gcd step between row and v in column c
    while (v[c] != 0) {
      Int q = row[c] / v[c];
      for (std::size_t j = c; j < n; ++j) row[j] = checked::sub(row[j], checked::mul(q, v[j]));
      std::swap(row, v);
    }
  }
}

bool echelon_contains(const std::vector<Vector>& rows, Vector v) {
  const std::size_t n = v.size();
  for (const auto& row : rows) {
    std::size_t lead = 0;
    while (lead < n && row[lead] == 0) ++lead;
    for (std::size_t c = 0; c < lead; ++c)
      if (v[c] != 0) return false;
    if (v[lead] % row[lead] != 0) return false;
    Int q = v[lead] / row[lead];
    for (std::size_t j = lead; j < n; ++j) v[j] = checked::sub(v[j], checked::mul(q, row[j]));
  }
  return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}

}  // namespace

NaiveSubgroup::NaiveSubgroup(const Group& group, const std::vector<Element>& gens) : group_(group) {
  if (group.backend() == Backend::FinitePermutation) {
    std::vector<Element> queue{group.identity()};
    finite_elements_.insert(group.identity());
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (const auto& s : gens) {
        Element y = group.multiply(queue[i], s);
        if (finite_elements_.insert(y).second) {
          if (queue.size() > 2'000'000) throw ComputationError("naive closure too large");
          queue.push_back(std::move(y));
        }
      }
    return;
  }
  std::vector<std::uint32_t> queue{group.finite_identity()};
  transversal_.emplace(group.finite_identity(), group.identity());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Element t = transversal_.at(queue[i]);
    for (const auto& s : gens) {
      Element y = group.multiply(t, s);
      auto [it, fresh] = transversal_.emplace(y.affine().finite, y);
      if (fresh) {
        queue.push_back(y.affine().finite);
      } else {
        Element u = group.multiply(y, group.inverse(it->second));
        echelon_insert(echelon_, u.affine().translation);
      }
    }
  }
}

bool NaiveSubgroup::contains(const Element& e) const {
  if (group_.backend() == Backend::FinitePermutation) return finite_elements_.count(e) > 0;
  auto it = transversal_.find(e.affine().finite);
  if (it == transversal_.end()) return false;
  Element u = group_.multiply(e, group_.inverse(it->second));
  return echelon_contains(echelon_, u.affine().translation);
}

bool NaiveSubgroup::same_coset(const Element& a, const Element& b) const {
  return contains(group_.multiply(group_.inverse(a), b));
}

std::string to_string(Property p) {
  switch (p) {
    case Property::ClassSize: return "class-size";
    case Property::Centralizer: return "centralizer";
    case Property::FcMembership: return "fc-membership";
    case Property::SubgroupIndex: return "subgroup-index";
  }
  return "unknown";
}

bool Report::strictly_growing(std::size_t from, std::size_t to) const {
  if (to >= counts.size()) return false;
  for (std::size_t r = from; r < to; ++r)
    if (counts[r + 1] <= counts[r]) return false;
  return true;
}

namespace {

// Number of classes of `items` under `same`, counted incrementally by radius.
template <typename Same>
std::vector<std::size_t> distinct_counts(const Ball& ball, const std::vector<Element>& images, Same same) {
  std::vector<std::size_t> counts;
  std::vector<Element> reps;
  std::size_t next = 0;
  for (std::size_t r = 0; r <= ball.radius(); ++r) {
    const std::size_t stop = ball.within(r).size();
    for (; next < stop; ++next) {
      const Element& x = images[next];
      if (std::none_of(reps.begin(), reps.end(), [&](const Element& y) { return same(y, x); })) reps.push_back(x);
    }
    counts.push_back(reps.size());
  }
  return counts;
}

}  // namespace

Report brute_check(const Group& group, const Instance& in, std::size_t radius) {
  if (radius == 0) throw InputError("brute_check needs radius >= 1");
  Report rep;
  rep.property = in.property;
  rep.radius = radius;
  const Ball ball = ball_enumerate(group, in.acting, radius);
  const NaiveSubgroup modulus(group, in.modulus);
  const bool trivial_modulus = in.modulus.empty();

  switch (in.property) {
    case Property::ClassSize:
    case Property::FcMembership: {
      std::vector<Element> conj;
      for (const auto& h : ball.elements()) conj.push_back(group.conjugate(in.element, h));
      if (trivial_modulus) {
        std::set<Element> seen;
        std::size_t next = 0;
        for (std::size_t r = 0; r <= radius; ++r) {
          for (; next < ball.within(r).size(); ++next) seen.insert(conj[next]);
          rep.counts.push_back(seen.size());
        }
      } else {
        rep.counts = distinct_counts(ball, conj, [&](const Element& a, const Element& b) {
          return modulus.same_coset(a, b);
        });
      }
      break;
    }
    case Property::Centralizer: {
      std::size_t count = 0, next = 0;
      for (std::size_t r = 0; r <= radius; ++r) {
        for (; next < ball.within(r).size(); ++next) {
          const Element& h = ball.elements()[next];
          if (modulus.contains(group.commutator(h, in.element))) {
            ++count;
            rep.members.push_back(h);
          }
        }
        rep.counts.push_back(count);
      }
      rep.ball.assign(ball.elements().begin(), ball.elements().end());
      break;
    }
    case Property::SubgroupIndex: {
      const NaiveSubgroup other(group, in.other);
      std::vector<Element> items(ball.elements().begin(), ball.elements().end());
      rep.counts = distinct_counts(ball, items, [&](const Element& a, const Element& b) {
        return other.same_coset(a, b);
      });
      break;
    }
  }
  rep.stabilized = rep.counts[radius - 1] == rep.counts[radius];
  return rep;
}

}  // namespace fcg::oracle
