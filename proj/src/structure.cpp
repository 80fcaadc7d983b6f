#include "perfect/structure.hpp"

#include <algorithm>
#include <unordered_set>

namespace perfect {

ClassData conjugacy_classes(GroupTable const& g) {
  constexpr auto kNone = static_cast<std::uint32_t>(-1);
  ClassData cd;
  cd.class_of.assign(g.order(), kNone);
  for (Elem x = 0; x < g.order(); ++x) {
    if (cd.class_of[x] != kNone) continue;
    auto id = static_cast<std::uint32_t>(cd.classes.size());
    ConjugacyClass c;
    c.representative = x;
    c.element_order = g.element_order(x);
    c.elements.push_back(x);
    cd.class_of[x] = id;
    for (std::size_t i = 0; i < c.elements.size(); ++i) {
      for (std::size_t s = 0; s < g.num_generators(); ++s) {
        Elem y = g.conj_letter(c.elements[i], Letter(2 * s));
        if (cd.class_of[y] == kNone) {
          cd.class_of[y] = id;
          c.elements.push_back(y);
        }
      }
    }
    std::sort(c.elements.begin(), c.elements.end());
    c.centralizer_order = g.order() / c.elements.size();
    cd.classes.push_back(std::move(c));
  }
  return cd;
}

namespace {

bool set_less(Subgroup const& a, Subgroup const& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.set.elements() < b.set.elements();
}

std::vector<Subgroup> class_closures(GroupTable const& g, ClassData const& cd) {
  std::vector<Subgroup> out;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  for (auto const& c : cd.classes) {
    if (c.representative == 0) continue;
    Subgroup n = normal_closure(g, std::vector<Elem>{c.representative});
    if (seen.insert(n.set).second) out.push_back(std::move(n));
  }
  return out;
}

}  // namespace

std::vector<NormalSubgroup> normal_subgroups(GroupTable const& g, ClassData const& cd,
                                             std::size_t cap) {
  std::vector<Subgroup> list;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  Subgroup triv = trivial_subgroup(g);
  seen.insert(triv.set);
  list.push_back(triv);
  for (auto& n : class_closures(g, cd)) {
    if (seen.insert(n.set).second) list.push_back(std::move(n));
  }
  std::size_t base_count = list.size();
  // Close under joins with the class closures; every normal subgroup is a
  // join of closures of its own classes.
  for (std::size_t i = 1; i < list.size(); ++i) {
    for (std::size_t j = 1; j < base_count; ++j) {
      if (list[j].set.subset_of(list[i].set)) continue;
      Subgroup jn = join(g, list[i], list[j]);
      if (seen.insert(jn.set).second) {
        list.push_back(std::move(jn));
        if (list.size() > cap) {
          throw BudgetExceeded("normal_cap", "too many normal subgroups");
        }
      }
    }
  }
  std::sort(list.begin(), list.end(), set_less);
  std::vector<NormalSubgroup> out;
  for (auto& s : list) out.push_back({std::move(s), false});
  for (std::size_t i = 1; i < out.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 1; j < i && minimal; ++j) {
      if (out[j].sub.order() < out[i].sub.order() && out[j].sub.set.subset_of(out[i].sub.set)) {
        minimal = false;
      }
    }
    out[i].minimal = minimal;
  }
  return out;
}

std::vector<Subgroup> minimal_normal_subgroups(GroupTable const& g, ClassData const& cd) {
  auto closures = class_closures(g, cd);
  std::sort(closures.begin(), closures.end(), set_less);
  std::vector<Subgroup> out;
  for (auto& n : closures) {
    bool minimal = true;
    for (auto const& m : out) {
      if (m.set.subset_of(n.set)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(std::move(n));
  }
  return out;
}

std::vector<Subgroup> chief_series(GroupTable const& g, std::vector<NormalSubgroup> const& normals) {
  std::vector<Subgroup> series;
  Subgroup cur = whole_group(g);
  for (auto const& n : normals) {
    if (n.sub.order() == g.order()) cur = n.sub;
  }
  series.push_back(cur);
  while (cur.order() > 1) {
    Subgroup const* best = nullptr;
    for (auto const& n : normals) {
      if (n.sub.order() < cur.order() && n.sub.set.subset_of(cur.set)) {
        if (!best || n.sub.order() > best->order()) best = &n.sub;
      }
    }
    PERFECT_CHECK(best != nullptr, "chief_series: missing trivial subgroup");
    cur = *best;
    series.push_back(cur);
  }
  return series;
}

bool is_prime_power(std::uint64_t n, unsigned* p_out, unsigned* a_out) {
  if (n < 2) return false;
  std::uint64_t p = 2;
  while (p * p <= n && n % p != 0) ++p;
  if (n % p != 0) p = n;
  unsigned a = 0;
  while (n % p == 0) {
    n /= p;
    ++a;
  }
  if (n != 1) return false;
  if (p_out) *p_out = static_cast<unsigned>(p);
  if (a_out) *a_out = a;
  return true;
}

Subgroup p_core(GroupTable const& g, std::vector<NormalSubgroup> const& normals, unsigned p) {
  Subgroup best = trivial_subgroup(g);
  for (auto const& n : normals) {
    unsigned q = 0;
    if (is_prime_power(n.sub.order(), &q) && q == p && n.sub.order() > best.order()) best = n.sub;
  }
  return best;
}

bool is_elementary_abelian(GroupTable const& g, Subgroup const& h) {
  unsigned p = 0;
  if (!is_prime_power(h.order(), &p)) return false;
  for (Elem x : h.generators) {
    if (g.element_order(x) != p) return false;
    for (Elem y : h.generators) {
      if (g.mul(x, y) != g.mul(y, x)) return false;
    }
  }
  return true;
}

bool is_perfect(GroupTable const& g) { return derived_subgroup(g).order() == g.order(); }

Subgroup center(GroupTable const& g) { return centralizer(g, whole_group(g)); }

}  // namespace perfect
