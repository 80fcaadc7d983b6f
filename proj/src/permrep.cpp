#include "perfect/permrep.hpp"

#include <algorithm>
#include <deque>
#include <random>

#include "perfect/errors.hpp"
#include "perfect/lowindex.hpp"

namespace perfect {

std::optional<std::vector<std::vector<Scalar>>> separating_functional(
    FpPresentation const& pres, std::vector<std::vector<Point>> const& action,
    std::size_t first_module_generator, unsigned p) {
  std::size_t ng = pres.num_generators();
  PERFECT_CHECK(action.size() == ng, "separating_functional: action size mismatch");
  std::size_t deg = action.empty() ? 1 : action[0].size();
  std::vector<std::vector<Point>> inverse(ng, std::vector<Point>(deg));
  for (std::size_t g = 0; g < ng; ++g) {
    for (std::size_t c = 0; c < deg; ++c) inverse[g][action[g][c]] = static_cast<Point>(c);
  }
  auto var = [&](std::size_t c, std::size_t g) { return static_cast<std::uint32_t>(c * ng + g); };
  SparseSystem sys(p, deg * ng);
  // Schreier tree edges carry the value 0.
  std::vector<char> reached(deg, 0);
  reached[0] = 1;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t c = queue.front();
    queue.pop_front();
    for (std::size_t g = 0; g < ng; ++g) {
      std::size_t d = action[g][c];
      if (reached[d]) continue;
      reached[d] = 1;
      queue.push_back(d);
      sys.add({{var(c, g), 1}});
    }
  }
  PERFECT_CHECK(std::all_of(reached.begin(), reached.end(), [](char x) { return x != 0; }),
                "separating_functional: action is not transitive");
  Scalar minus_one = fp_neg(1, p);
  for (auto const& rel : pres.relators) {
    for (std::size_t c = 0; c < deg; ++c) {
      SparseSystem::Row row;
      std::size_t cur = c;
      for (int x : rel) {
        std::size_t g = static_cast<std::size_t>(std::abs(x) - 1);
        if (x > 0) {
          row.emplace_back(var(cur, g), 1);
          cur = action[g][cur];
        } else {
          cur = inverse[g][cur];
          row.emplace_back(var(cur, g), minus_one);
        }
      }
      if (cur != c) throw InvariantViolation("separating_functional: relator does not act trivially");
      sys.add(std::move(row));
    }
  }
  for (auto const& b : sys.nullspace()) {
    bool hits = false;
    for (std::size_t g = first_module_generator; g < ng; ++g) hits = hits || b[var(0, g)] != 0;
    if (!hits) continue;
    std::vector<std::vector<Scalar>> out(deg, std::vector<Scalar>(ng));
    for (std::size_t c = 0; c < deg; ++c) {
      for (std::size_t g = 0; g < ng; ++g) out[c][g] = b[var(c, g)];
    }
    return out;
  }
  return std::nullopt;
}

namespace {

std::uint64_t checked_power(unsigned p, std::size_t d) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < d; ++i) r *= p;
  return r;
}

PermRep finish(RewritingSystem const& r, std::size_t d, unsigned p,
               std::vector<std::vector<Point>> extra, std::size_t extra_degree, std::size_t index) {
  GroupTable const& g = r.group();
  PERFECT_CHECK(g.has_permutations(), "faithful_perm_rep: factor table has no permutations");
  std::size_t nf = g.permutation(g.identity()).degree();
  std::size_t total = nf + extra_degree;
  std::vector<Permutation> gens;
  std::size_t nl = r.num_letters();
  for (std::size_t a = 0; a < nl + d; ++a) {
    std::vector<Point> img(total);
    for (std::size_t i = 0; i < nf; ++i) {
      img[i] = a < nl ? g.permutation(r.alphabet()[a].element)[static_cast<Point>(i)]
                      : static_cast<Point>(i);
    }
    for (std::size_t i = 0; i < extra_degree; ++i) img[nf + i] = static_cast<Point>(nf + extra[a][i]);
    gens.emplace_back(std::move(img));
  }
  PermRep out{PermGroup(total, std::move(gens)), nf, index};
  std::uint64_t expect = g.order() * checked_power(p, d);
  if (out.group.order() != expect) {
    throw InvariantViolation("faithful_perm_rep: image has order " + std::to_string(out.group.order()) +
                             ", expected " + std::to_string(expect));
  }
  return out;
}

}  // namespace

PermRep faithful_perm_rep(RewritingSystem const& r, FpModule const& m, Vector const& tails,
                          PermRepOptions const& options) {
  GroupTable const& g = r.group();
  std::size_t d = m.dim;
  std::size_t nl = r.num_letters();
  unsigned p = m.p;
  bool trivial_action = std::all_of(m.action.begin(), m.action.end(),
                                    [](Matrix const& a) { return a.is_identity(); });
  if (trivial_action && is_zero(tails)) {
    // Direct product with an elementary abelian group: one p-cycle per basis vector.
    std::vector<std::vector<Point>> extra(nl + d, std::vector<Point>(d * p));
    for (std::size_t a = 0; a < nl + d; ++a) {
      for (std::size_t i = 0; i < d * p; ++i) {
        std::size_t block = i / p, pos = i % p;
        bool moves = a >= nl && a - nl == block;
        extra[a][i] = static_cast<Point>(moves ? block * p + (pos + 1) % p : i);
      }
    }
    return finish(r, d, p, std::move(extra), d * p, 0);
  }

  FpPresentation pres = extension_presentation(r, m, tails);

  std::size_t previous = 0;
  for (std::size_t cap = options.first_index_cap;; cap *= 2) {
    cap = std::min(cap, options.max_index_cap);
    auto classes = low_index_subgroups(g, cap, options.low_index_budget);
    std::stable_sort(classes.begin(), classes.end(),
                     [](LowIndexClass const& a, LowIndexClass const& b) { return a.index < b.index; });
    for (auto const& cls : classes) {
      if (cls.index <= previous || cls.index * p > options.max_points) continue;
      auto ca = coset_action(g, cls.subgroup);
      std::size_t deg = ca.degree();
      std::vector<std::vector<Point>> action(nl + d, std::vector<Point>(deg));
      for (std::size_t a = 0; a < nl + d; ++a) {
        for (std::size_t c = 0; c < deg; ++c) {
          action[a][c] = a < nl ? ca.label[g.mul(ca.representatives[c], r.alphabet()[a].element)]
                                : static_cast<Point>(c);
        }
      }
      auto phi = separating_functional(pres, action, nl, p);
      if (!phi) continue;
      std::vector<std::vector<Point>> extra(nl + d, std::vector<Point>(deg * p));
      for (std::size_t a = 0; a < nl + d; ++a) {
        for (std::size_t c = 0; c < deg; ++c) {
          for (unsigned v = 0; v < p; ++v) {
            extra[a][c * p + v] = static_cast<Point>(action[a][c] * p + fp_add(static_cast<Scalar>(v), (*phi)[c][a], p));
          }
        }
      }
      return finish(r, d, p, std::move(extra), deg * p, deg);
    }
    previous = cap;
    if (cap >= options.max_index_cap) break;
  }
  throw BudgetExceeded("permrep_index", "no subgroup of index <= " + std::to_string(options.max_index_cap) +
                                             " separates the module");
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Point> restrict_images(Permutation const& x, std::vector<Point> const& points,
                                   std::vector<std::int64_t> const& position) {
  std::vector<Point> img(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) img[i] = static_cast<Point>(position[x[points[i]]]);
  return img;
}

// Action on the union of the given orbits.
PermGroup restrict_to(PermGroup const& g, std::vector<std::vector<Point>> const& orbits) {
  std::vector<Point> points;
  for (auto const& o : orbits) points.insert(points.end(), o.begin(), o.end());
  std::vector<std::int64_t> position(g.degree(), -1);
  for (std::size_t i = 0; i < points.size(); ++i) position[points[i]] = static_cast<std::int64_t>(i);
  std::vector<Permutation> gens;
  for (auto const& x : g.generators()) gens.emplace_back(restrict_images(x, points, position));
  return PermGroup(points.size(), std::move(gens));
}

}  // namespace

PermGroup reduce_degree(PermGroup const& input, ReduceOptions const& options) {
  std::uint64_t order = input.order();
  auto orbits = input.orbits();
  // Drop orbits, largest first, while the action stays faithful.
  std::vector<std::size_t> idx(orbits.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return orbits[a].size() > orbits[b].size(); });
  std::vector<char> keep(orbits.size(), 1);
  for (std::size_t i : idx) {
    keep[i] = 0;
    std::vector<std::vector<Point>> rest;
    for (std::size_t j = 0; j < orbits.size(); ++j) {
      if (keep[j]) rest.push_back(orbits[j]);
    }
    if (rest.empty() || restrict_to(input, rest).order() != order) keep[i] = 1;
  }
  std::vector<std::vector<Point>> kept;
  for (std::size_t j = 0; j < orbits.size(); ++j) {
    if (keep[j]) kept.push_back(orbits[j]);
  }
  PermGroup g = restrict_to(input, kept);
  if (order > options.table_cap) return g;

  // Enlarge point stabilizers while the intersection of cores stays trivial.
  GroupTable t = GroupTable::from_perm_group(g);
  std::vector<Subgroup> stabs;
  std::size_t offset = 0;
  for (auto const& o : kept) {
    // kept orbits are numbered consecutively in g
    auto const a = static_cast<Point>(offset);
    offset += o.size();
    std::vector<Elem> fix;
    for (Elem x = 0; x < t.order(); ++x) {
      if (t.permutation(x)[a] == a) fix.push_back(x);
    }
    Subgroup s;
    s.set = ElementSet(t.order(), fix);
    s.generators = fix;
    stabs.push_back(generate(t, fix));
  }
  auto faithful = [&](std::vector<Subgroup> const& list) {
    Subgroup k = whole_group(t);
    for (auto const& s : list) {
      k = intersection(t, k, core(t, s));
      if (k.order() == 1) return true;
    }
    return k.order() == 1;
  };
  std::mt19937_64 rng(0x5eed);
  for (std::size_t i = 0; i < stabs.size(); ++i) {
    for (bool improved = true; improved;) {
      improved = false;
      std::vector<Elem> pool;
      for (Elem x = 0; x < t.order(); ++x) {
        if (!stabs[i].contains(x)) pool.push_back(x);
      }
      std::shuffle(pool.begin(), pool.end(), rng);
      if (pool.size() > options.candidates_per_orbit) pool.resize(options.candidates_per_orbit);
      Subgroup best = stabs[i];
      for (Elem x : pool) {
        Subgroup k = extend(t, stabs[i], x);
        if (k.order() == t.order() || k.order() <= best.order()) continue;
        auto trial = stabs;
        trial[i] = k;
        if (faithful(trial)) best = std::move(k);
      }
      if (best.order() > stabs[i].order()) {
        stabs[i] = std::move(best);
        improved = true;
      }
    }
  }
  std::vector<std::vector<std::vector<Point>>> actions;
  std::size_t degree = 0;
  for (auto const& s : stabs) {
    actions.push_back(coset_action(t, s).generator_action);
    degree += actions.back().empty() ? 0 : actions.back()[0].size();
  }
  if (degree >= g.degree()) return g;
  std::vector<Permutation> gens;
  for (std::size_t k = 0; k < g.num_generators(); ++k) {
    std::vector<Point> img;
    std::size_t offset = 0;
    for (auto const& act : actions) {
      for (Point x : act[k]) img.push_back(static_cast<Point>(offset + x));
      offset += act[k].size();
    }
    gens.emplace_back(std::move(img));
  }
  PermGroup out(degree, std::move(gens));
  PERFECT_CHECK(out.order() == order, "reduce_degree: lost faithfulness");
  return out;
}

}  // namespace perfect
