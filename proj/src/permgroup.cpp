#include "perfect/permgroup.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "perfect/errors.hpp"

namespace perfect {

Permutation ChainLevel::transversal(Point p) const {
  std::vector<std::int32_t> path;
  // Walk back to the base point.
  Point q = p;
  while (schreier[q] != -2) {
    std::int32_t g = schreier[q];
    path.push_back(g);
    Permutation const& gen = generators[g];
    // preimage of q under gen
    Point pre = 0;
    auto img = gen.images();
    // generators are small in number; a linear scan keeps the level light.
    for (Point x = 0; x < img.size(); ++x) {
      if (img[x] == q) {
        pre = x;
        break;
      }
    }
    q = pre;
  }
  Permutation u(generators.empty() ? schreier.size() : generators.front().degree());
  for (auto it = path.rbegin(); it != path.rend(); ++it) u *= generators[*it];
  return u;
}

StabilizerChain::StabilizerChain(std::size_t degree, std::vector<Permutation> const& gens_in)
    : degree_(degree) {
  std::vector<Permutation> gens;
  for (auto const& g : gens_in) {
    if (g.degree() != degree) throw std::invalid_argument("StabilizerChain: degree mismatch");
    if (!g.is_identity()) gens.push_back(g);
  }
  if (gens.empty()) return;

  auto add_level = [&](Point bp) {
    ChainLevel lvl;
    lvl.base_point = bp;
    lvl.schreier.assign(degree_, -1);
    levels_.push_back(std::move(lvl));
  };

  // Initial base: every generator must move some base point.
  for (auto const& g : gens) {
    bool moves = false;
    for (auto const& l : levels_) {
      if (g[l.base_point] != l.base_point) {
        moves = true;
        break;
      }
    }
    if (!moves) add_level(g.smallest_moved_point());
  }
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    for (auto const& g : gens) {
      bool fixes = true;
      for (std::size_t j = 0; j < i; ++j) {
        if (g[levels_[j].base_point] != levels_[j].base_point) {
          fixes = false;
          break;
        }
      }
      if (fixes) levels_[i].generators.push_back(g);
    }
    rebuild_orbit(levels_[i]);
  }

  std::size_t i = levels_.size();
  while (i > 0) {
    std::size_t lev = i - 1;
    bool changed = false;
    // Schreier generators of level `lev`.
    for (std::size_t oi = 0; oi < levels_[lev].orbit.size() && !changed; ++oi) {
      Point beta = levels_[lev].orbit[oi];
      Permutation u_beta = levels_[lev].transversal(beta);
      for (std::size_t si = 0; si < levels_[lev].generators.size(); ++si) {
        Permutation const& s = levels_[lev].generators[si];
        Point img = s[beta];
        Permutation h = u_beta * s * levels_[lev].transversal(img).inverse();
        if (h.is_identity()) continue;
        auto [y, j] = strip(std::move(h), lev + 1);
        if (j < levels_.size() || !y.is_identity()) {
          if (j == levels_.size()) add_level(y.smallest_moved_point());
          for (std::size_t l = lev + 1; l <= j; ++l) {
            levels_[l].generators.push_back(y);
            rebuild_orbit(levels_[l]);
          }
          i = j + 1;
          changed = true;
          break;
        }
      }
    }
    if (!changed) --i;
  }
}

void StabilizerChain::rebuild_orbit(ChainLevel& lvl) const {
  lvl.schreier.assign(degree_, -1);
  lvl.orbit.clear();
  lvl.orbit.push_back(lvl.base_point);
  lvl.schreier[lvl.base_point] = -2;
  for (std::size_t k = 0; k < lvl.orbit.size(); ++k) {
    Point p = lvl.orbit[k];
    for (std::size_t g = 0; g < lvl.generators.size(); ++g) {
      Point q = lvl.generators[g][p];
      if (lvl.schreier[q] == -1) {
        lvl.schreier[q] = static_cast<std::int32_t>(g);
        lvl.orbit.push_back(q);
      }
    }
  }
}

std::pair<Permutation, std::size_t> StabilizerChain::strip(Permutation h,
                                                            std::size_t start) const {
  for (std::size_t l = start; l < levels_.size(); ++l) {
    Point b = h[levels_[l].base_point];
    if (!levels_[l].in_orbit(b)) return {std::move(h), l};
    h = h * levels_[l].transversal(b).inverse();
  }
  return {std::move(h), levels_.size()};
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> b;
  for (auto const& l : levels_) b.push_back(l.base_point);
  return b;
}

std::uint64_t StabilizerChain::order() const {
  std::uint64_t r = 1;
  for (auto const& l : levels_) {
    std::uint64_t o = l.orbit.size();
    if (__builtin_mul_overflow(r, o, &r)) {
      throw BudgetExceeded("order", "group order exceeds 64 bits");
    }
  }
  return r;
}

Permutation StabilizerChain::sift(Permutation const& g) const {
  if (g.degree() != degree_) return g;
  return strip(g, 0).first;
}

bool StabilizerChain::contains(Permutation const& g) const {
  if (g.degree() != degree_) return false;
  auto [y, j] = strip(g, 0);
  return j == levels_.size() && y.is_identity();
}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> gens)
    : degree_(degree), gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {
  for (auto const& g : gens_) {
    if (g.degree() != degree_) throw std::invalid_argument("PermGroup: generator degree mismatch");
  }
}

StabilizerChain const& PermGroup::chain() const {
  std::call_once(cache_->once, [this] { cache_->chain = StabilizerChain(degree_, gens_); });
  return cache_->chain;
}

bool PermGroup::is_trivial() const {
  return std::all_of(gens_.begin(), gens_.end(), [](auto const& g) { return g.is_identity(); });
}

std::vector<std::vector<Point>> PermGroup::orbits() const {
  std::vector<int> seen(degree_, -1);
  std::vector<std::vector<Point>> result;
  for (Point p = 0; p < degree_; ++p) {
    if (seen[p] >= 0) continue;
    std::vector<Point> orb{p};
    seen[p] = static_cast<int>(result.size());
    for (std::size_t k = 0; k < orb.size(); ++k) {
      for (auto const& g : gens_) {
        Point q = g[orb[k]];
        if (seen[q] < 0) {
          seen[q] = static_cast<int>(result.size());
          orb.push_back(q);
        }
      }
    }
    std::sort(orb.begin(), orb.end());
    result.push_back(std::move(orb));
  }
  return result;
}

PermGroup normal_closure(PermGroup const& group, std::vector<Permutation> const& elements) {
  std::vector<Permutation> gens;
  for (auto const& e : elements) {
    if (!e.is_identity()) gens.push_back(e);
  }
  PermGroup h(group.degree(), gens);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (auto const& g : group.generators()) {
      Permutation c = conjugate(gens[i], g);
      if (!h.contains(c)) {
        gens.push_back(c);
        h = PermGroup(group.degree(), gens);
      }
    }
  }
  return h;
}

PermGroup derived_subgroup(PermGroup const& group) {
  std::vector<Permutation> comms;
  auto const& gs = group.generators();
  for (std::size_t i = 0; i < gs.size(); ++i) {
    for (std::size_t j = i + 1; j < gs.size(); ++j) {
      comms.push_back(gs[i].inverse() * gs[j].inverse() * gs[i] * gs[j]);
    }
  }
  return normal_closure(group, comms);
}

bool is_perfect(PermGroup const& group) {
  return derived_subgroup(group).order() == group.order();
}

PermGroup direct_product(std::vector<PermGroup> const& factors) {
  std::size_t total = 0;
  for (auto const& f : factors) total += f.degree();
  std::vector<Permutation> gens;
  std::size_t offset = 0;
  for (auto const& f : factors) {
    for (auto const& g : f.generators()) {
      std::vector<Point> img(total);
      for (Point i = 0; i < total; ++i) img[i] = i;
      for (Point i = 0; i < f.degree(); ++i) img[offset + i] = static_cast<Point>(offset + g[i]);
      gens.emplace_back(std::move(img));
    }
    offset += f.degree();
  }
  return PermGroup(std::max<std::size_t>(total, 1), gens);
}

PermGroup restricted_action(PermGroup const& group, std::vector<Point> const& points) {
  if (points.empty()) return PermGroup(1, {});
  std::vector<std::int64_t> pos(group.degree(), -1);
  for (std::size_t i = 0; i < points.size(); ++i) pos[points[i]] = static_cast<std::int64_t>(i);
  std::vector<Permutation> gens;
  for (auto const& g : group.generators()) {
    std::vector<Point> img(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      std::int64_t q = pos[g[points[i]]];
      if (q < 0) throw std::invalid_argument("restricted_action: points not invariant");
      img[i] = static_cast<Point>(q);
    }
    gens.emplace_back(std::move(img));
  }
  return PermGroup(std::max<std::size_t>(points.size(), 1), gens);
}

}  // namespace perfect
