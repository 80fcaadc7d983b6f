#include "perfect/iso.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace perfect {

ElementMap compose(ElementMap const& first, ElementMap const& second) {
  ElementMap r;
  r.image.resize(first.image.size());
  for (std::size_t x = 0; x < first.image.size(); ++x) r.image[x] = second.image[first.image[x]];
  return r;
}

ElementMap inverse_map(ElementMap const& a) {
  ElementMap r;
  r.image.resize(a.image.size());
  for (std::size_t x = 0; x < a.image.size(); ++x) r.image[a.image[x]] = static_cast<Elem>(x);
  return r;
}

ElementMap inner_automorphism(GroupTable const& g, Elem c) {
  ElementMap r;
  r.image.resize(g.order());
  for (Elem x = 0; x < g.order(); ++x) r.image[x] = g.conj(x, c);
  return r;
}

namespace {

using Invariant = std::pair<std::uint32_t, std::size_t>;

struct InvariantStats {
  std::map<Invariant, std::size_t> classes;
  std::map<Invariant, std::size_t> elements;
};

InvariantStats invariant_stats(ClassData const& cd) {
  InvariantStats st;
  for (auto const& c : cd.classes) {
    Invariant inv{c.element_order, c.size()};
    st.classes[inv] += 1;
    st.elements[inv] += c.size();
  }
  return st;
}

}  // namespace

std::vector<Elem> generating_tuple(GroupTable const& g, ClassData const& cd) {
  std::size_t n = g.order();
  if (n == 1) return {};
  for (auto const& c : cd.classes) {
    if (c.element_order == n) return {c.representative};
  }
  InvariantStats st = invariant_stats(cd);
  auto inv_of = [&](ConjugacyClass const& c) { return Invariant{c.element_order, c.size()}; };

  struct PairCost {
    std::size_t cost;
    std::size_t a, b;
  };
  std::vector<PairCost> pairs;
  for (std::size_t a = 1; a < cd.classes.size(); ++a) {
    for (std::size_t b = 1; b < cd.classes.size(); ++b) {
      std::size_t cost = st.classes[inv_of(cd.classes[a])] * st.elements[inv_of(cd.classes[b])];
      pairs.push_back({cost, a, b});
    }
  }
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](PairCost const& x, PairCost const& y) { return x.cost < y.cost; });
  std::size_t attempts = 0;
  constexpr std::size_t kMaxAttempts = 400;
  constexpr std::size_t kSamplesPerPair = 8;
  for (auto const& pc : pairs) {
    Elem a = cd.classes[pc.a].representative;
    auto const& cb = cd.classes[pc.b].elements;
    std::size_t stride = std::max<std::size_t>(1, cb.size() / kSamplesPerPair);
    for (std::size_t i = 0; i < cb.size() && i / stride < kSamplesPerPair; i += stride) {
      if (++attempts > kMaxAttempts) break;
      if (generate(g, {a, cb[i]}).order() == n) return {a, cb[i]};
    }
    if (attempts > kMaxAttempts) break;
  }

  // Greedy fallback: add elements from the narrowest invariant classes.
  std::vector<std::size_t> by_cost(cd.classes.size() - 1);
  for (std::size_t i = 0; i < by_cost.size(); ++i) by_cost[i] = i + 1;
  std::stable_sort(by_cost.begin(), by_cost.end(), [&](std::size_t x, std::size_t y) {
    return st.elements[inv_of(cd.classes[x])] < st.elements[inv_of(cd.classes[y])];
  });
  std::vector<Elem> tuple{cd.classes[by_cost.front()].representative};
  Subgroup h = generate(g, tuple);
  while (h.order() < n) {
    bool added = false;
    for (std::size_t ci : by_cost) {
      for (Elem x : cd.classes[ci].elements) {
        if (!h.contains(x)) {
          tuple.push_back(x);
          h = extend(g, h, x);
          added = true;
          break;
        }
      }
      if (added) break;
    }
  }
  return tuple;
}

TupleSearch::TupleSearch(GroupTable const& g, ClassData const& cd)
    : g_(g), cd_(cd), tuple_(generating_tuple(g, cd)) {
  tuple_table_ = subgroup_table(g, tuple_, &embedding_);
  PERFECT_CHECK(tuple_table_.order() == g.order(), "generating tuple does not generate");
  pair_orders_.assign(tuple_.size(), std::vector<std::pair<std::uint32_t, std::uint32_t>>(tuple_.size()));
  for (std::size_t i = 0; i < tuple_.size(); ++i) {
    for (std::size_t j = i + 1; j < tuple_.size(); ++j) {
      pair_orders_[i][j] = {g.element_order(g.mul(tuple_[i], tuple_[j])),
                            g.element_order(g.mul(tuple_[i], g.inverse(tuple_[j])))};
    }
  }
}

std::optional<ElementMap> TupleSearch::extend(GroupTable const& h, std::vector<Elem> const& images,
                                              bool require_injective) const {
  constexpr Elem kUnset = static_cast<Elem>(-1);
  std::vector<Elem> letters;
  for (Elem x : images) {
    letters.push_back(x);
    letters.push_back(h.inverse(x));
  }
  GroupTable const& t = tuple_table_;
  std::vector<Elem> im(t.order(), kUnset);
  im[0] = 0;
  for (Elem x = 0; x < t.order(); ++x) {
    for (Letter l = 0; l < t.num_letters(); ++l) {
      Elem y = t.step(x, l);
      Elem v = h.mul(im[x], letters[l]);
      if (im[y] == kUnset) {
        im[y] = v;
      } else if (im[y] != v) {
        return std::nullopt;
      }
    }
  }
  if (require_injective) {
    std::vector<bool> hit(h.order(), false);
    for (Elem v : im) {
      if (hit[v]) return std::nullopt;
      hit[v] = true;
    }
  }
  ElementMap m;
  m.image.resize(g_.order());
  for (Elem x = 0; x < t.order(); ++x) m.image[embedding_[x]] = im[x];
  return m;
}

bool TupleSearch::pair_filters_ok(GroupTable const& h, std::vector<Elem> const& im,
                                  std::size_t upto) const {
  Elem c = im[upto];
  for (std::size_t j = 0; j < upto; ++j) {
    auto [o1, o2] = pair_orders_[j][upto];
    if (h.element_order(h.mul(im[j], c)) != o1) return false;
    if (h.element_order(h.mul(im[j], h.inverse(c))) != o2) return false;
  }
  return true;
}

void TupleSearch::run(GroupTable const& h, ClassData const& ch,
                      std::vector<Elem> const& first_candidates,
                      std::function<bool(std::vector<Elem> const&, ElementMap const&)> const& fn,
                      std::uint64_t node_budget) const {
  std::size_t k = tuple_.size();
  if (k == 0) {
    ElementMap m;
    m.image.assign(g_.order(), 0);
    fn({}, m);
    return;
  }
  std::vector<std::vector<Elem>> cands(k);
  cands[0] = first_candidates;
  for (std::size_t i = 1; i < k; ++i) {
    auto inv = cd_.invariant(tuple_[i]);
    for (Elem x = 0; x < h.order(); ++x) {
      if (ch.invariant(x) == inv) cands[i].push_back(x);
    }
  }
  std::vector<Elem> im(k);
  std::uint64_t nodes = 0;
  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    for (Elem c : cands[i]) {
      if (stop) return;
      if (++nodes > node_budget) throw BudgetExceeded("iso_nodes", "isomorphism search budget");
      im[i] = c;
      if (!pair_filters_ok(h, im, i)) continue;
      if (i + 1 < k) {
        rec(i + 1);
      } else if (auto m = extend(h, im, true)) {
        if (!fn(im, *m)) stop = true;
      }
    }
  };
  rec(0);
}

std::optional<ElementMap> find_isomorphism(GroupTable const& g, ClassData const& cg,
                                           GroupTable const& h, ClassData const& ch,
                                           std::uint64_t node_budget) {
  if (g.order() != h.order() || cg.classes.size() != ch.classes.size()) return std::nullopt;
  auto sg = invariant_stats(cg);
  auto sh = invariant_stats(ch);
  if (sg.classes != sh.classes) return std::nullopt;
  TupleSearch ts(g, cg);
  if (ts.tuple().empty()) {
    ElementMap m;
    m.image.assign(1, 0);
    return m;
  }
  auto inv = cg.invariant(ts.tuple()[0]);
  std::vector<Elem> first;
  for (auto const& c : ch.classes) {
    if (Invariant{c.element_order, c.size()} == inv) first.push_back(c.representative);
  }
  std::optional<ElementMap> found;
  ts.enumerate(
      h, ch, first,
      [&](std::vector<Elem> const&, ElementMap const& m) {
        found = m;
        return false;
      },
      node_budget);
  return found;
}

AutomorphismGroup automorphism_group(GroupTable const& g, ClassData const& cd,
                                     std::uint64_t node_budget) {
  AutomorphismGroup aut;
  std::size_t n = g.order();
  std::size_t zsize = 0;
  for (auto const& c : cd.classes) zsize += c.size() == 1 ? 1 : 0;
  aut.inner_order = n / zsize;
  ElementMap identity;
  identity.image.resize(n);
  for (Elem x = 0; x < n; ++x) identity.image[x] = x;
  TupleSearch ts(g, cd);
  auto const& tuple = ts.tuple();
  if (tuple.empty()) {
    aut.outer.push_back(identity);
    return aut;
  }
  auto inv = cd.invariant(tuple[0]);
  std::set<std::vector<Elem>> keys;
  // Identity first, keyed like every other solution.
  std::vector<std::pair<std::vector<Elem>, ElementMap>> found;
  aut.order = 0;
  for (auto const& c : cd.classes) {
    if (Invariant{c.element_order, c.size()} != inv) continue;
    Elem r = c.representative;
    std::vector<Elem> cent;
    for (Elem x = 0; x < n; ++x) {
      if (g.mul(r, x) == g.mul(x, r)) cent.push_back(x);
    }
    auto key_of = [&](std::vector<Elem> const& im) {
      std::vector<Elem> best;
      for (Elem z : cent) {
        std::vector<Elem> k{r};
        for (std::size_t i = 1; i < im.size(); ++i) k.push_back(g.conj(im[i], z));
        if (best.empty() || k < best) best = std::move(k);
      }
      return best;
    };
    if (r == tuple[0]) {
      keys.insert(key_of(tuple));
      aut.outer.push_back(identity);
    }
    std::uint64_t count = 0;
    ts.enumerate(
        g, cd, {r},
        [&](std::vector<Elem> const& im, ElementMap const& m) {
          ++count;
          auto k = key_of(im);
          if (keys.insert(k).second) aut.outer.push_back(m);
          return true;
        },
        node_budget);
    aut.order += count * c.size();
  }
  PERFECT_CHECK(aut.order == aut.inner_order * aut.outer.size(),
                "automorphism count disagrees with Inn coset count");
  return aut;
}

PermGroup automorphism_permutation_group(GroupTable const& g, ClassData const& cd,
                                         AutomorphismGroup const& aut, std::vector<Elem>* points) {
  std::set<Invariant> invs;
  for (Elem t : generating_tuple(g, cd)) invs.insert(cd.invariant(t));
  std::vector<Elem> pts;
  for (Elem x = 0; x < g.order(); ++x) {
    if (invs.count(cd.invariant(x))) pts.push_back(x);
  }
  if (pts.empty()) pts.push_back(0);
  std::vector<std::int64_t> pos(g.order(), -1);
  for (std::size_t i = 0; i < pts.size(); ++i) pos[pts[i]] = static_cast<std::int64_t>(i);
  auto to_perm = [&](ElementMap const& m) {
    std::vector<Point> img(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) img[i] = static_cast<Point>(pos[m(pts[i])]);
    return Permutation(std::move(img));
  };
  std::vector<Permutation> gens;
  for (Elem s : g.generators()) gens.push_back(to_perm(inner_automorphism(g, s)));
  for (std::size_t i = 1; i < aut.outer.size(); ++i) gens.push_back(to_perm(aut.outer[i]));
  if (points) *points = pts;
  return PermGroup(pts.size(), gens);
}

}  // namespace perfect
