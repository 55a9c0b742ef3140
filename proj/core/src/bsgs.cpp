#include "fcg/bsgs.hpp"

#include <algorithm>

#include "fcg/errors.hpp"
#include "fcg/integer.hpp"

namespace fcg {

Bsgs::Bsgs(std::size_t degree, const std::vector<Perm>& generators) : degree_(degree) {
  for (const auto& g : generators) {
    if (g.degree() != degree) throw InputError("generator degree does not match group degree");
    if (g.is_identity()) continue;
    if (std::find(strong_.begin(), strong_.end(), g) == strong_.end()) strong_.push_back(g);
  }
  for (const auto& g : strong_) {
    bool fixes_base = std::all_of(base_.begin(), base_.end(), [&](std::size_t b) { return g[b] == b; });
    if (fixes_base) base_.push_back(g.first_moved_point());
  }
  for (std::size_t l = 0; l < base_.size(); ++l) {
    Level level;
    level.base_point = base_[l];
    for (const auto& s : strong_) {
      bool fixes = true;
      for (std::size_t j = 0; j < l && fixes; ++j) fixes = s[base_[j]] == base_[j];
      if (fixes) level.generators.push_back(s);
    }
    rebuild_orbit(level);
    levels_.push_back(std::move(level));
  }

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool restarted = false;
    const Level& level = levels_[static_cast<std::size_t>(i)];
    for (std::size_t oi = 0; !restarted && oi < level.orbit.size(); ++oi) {
      const std::size_t beta = level.orbit[oi];
      for (std::size_t si = 0; si < level.generators.size(); ++si) {
        const Level& lv = levels_[static_cast<std::size_t>(i)];
        const Perm& s = lv.generators[si];
        const Perm& u_beta = *lv.transversal[beta];
        const Perm& u_image = *lv.transversal[s[beta]];
        Perm h = u_beta * s * u_image.inverse();
        if (h.is_identity()) continue;
        auto [residue, stop] = strip_from(h, static_cast<std::size_t>(i) + 1);
        if (residue.is_identity()) continue;
        if (stop == levels_.size()) add_level_for(residue);
        strong_.push_back(residue);
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= stop; ++l) {
          levels_[l].generators.push_back(residue);
          rebuild_orbit(levels_[l]);
        }
        i = static_cast<std::ptrdiff_t>(stop);
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }
}

void Bsgs::add_level_for(const Perm& g) {
  Level level;
  level.base_point = g.first_moved_point();
  base_.push_back(level.base_point);
  rebuild_orbit(level);
  levels_.push_back(std::move(level));
}

void Bsgs::rebuild_orbit(Level& level) const {
  level.orbit.clear();
  level.transversal.assign(degree_, std::nullopt);
  level.transversal[level.base_point] = Perm::identity(degree_);
  level.orbit.push_back(level.base_point);
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    const std::size_t x = level.orbit[k];
    for (const auto& s : level.generators) {
      const std::size_t y = s[x];
      if (level.transversal[y]) continue;
      level.transversal[y] = *level.transversal[x] * s;
      level.orbit.push_back(y);
    }
  }
}

std::pair<Perm, std::size_t> Bsgs::strip_from(const Perm& g, std::size_t start) const {
  Perm h = g;
  for (std::size_t l = start; l < levels_.size(); ++l) {
    const std::size_t beta = h[levels_[l].base_point];
    const auto& u = levels_[l].transversal[beta];
    if (!u) return {h, l};
    h = h * u->inverse();
  }
  return {h, levels_.size()};
}

std::pair<Perm, std::size_t> Bsgs::strip(const Perm& g) const { return strip_from(g, 0); }

bool Bsgs::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  auto [residue, stop] = strip(g);
  return stop == levels_.size() && residue.is_identity();
}

std::vector<std::size_t> Bsgs::orbit_lengths() const {
  std::vector<std::size_t> out;
  for (const auto& l : levels_) out.push_back(l.orbit.size());
  return out;
}

std::uint64_t Bsgs::order() const {
  std::uint64_t n = 1;
  for (const auto& l : levels_) n = checked::mul(n, static_cast<std::uint64_t>(l.orbit.size()));
  return n;
}

std::vector<Perm> Bsgs::elements() const {
  std::vector<Perm> current{Perm::identity(degree_)};
  for (std::size_t l = levels_.size(); l-- > 0;) {
    std::vector<Perm> next;
    next.reserve(current.size() * levels_[l].orbit.size());
    for (const auto& c : current)
      for (std::size_t x : levels_[l].orbit) next.push_back(c * *levels_[l].transversal[x]);
    current = std::move(next);
  }
  std::sort(current.begin(), current.end());
  return current;
}

}  // namespace fcg
