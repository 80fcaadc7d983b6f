#include "perfect/isorej.hpp"

#include <algorithm>
#include <map>

#include "perfect/errors.hpp"

namespace perfect {

Fingerprint fingerprint(GroupTable const& g, ClassData const& cd, FingerprintLevel level,
                        FingerprintOptions const& options) {
  Fingerprint fp;
  fp.order = g.order();
  Subgroup h = whole_group(g);
  fp.derived_series.push_back(h.order());
  for (;;) {
    Subgroup next = derived_subgroup(g, h);
    if (next.order() == h.order()) break;
    fp.derived_series.push_back(next.order());
    h = std::move(next);
  }
  fp.class_count = cd.classes.size();
  for (auto const& c : cd.classes) fp.class_invariants.emplace_back(c.element_order, c.size());
  std::sort(fp.class_invariants.begin(), fp.class_invariants.end());
  if (level == FingerprintLevel::cheap) return fp;

  fp.full = true;
  try {
    std::vector<std::pair<std::uint64_t, bool>> ns;
    for (auto const& n : normal_subgroups(g, cd)) {
      ns.emplace_back(n.sub.order(), derived_subgroup(g, n.sub).order() == n.sub.order());
    }
    std::sort(ns.begin(), ns.end());
    fp.normals = std::move(ns);
  } catch (BudgetExceeded const&) {
  }
  try {
    std::map<std::uint64_t, std::uint64_t> counts;
    for (auto const& c : low_index_subgroups(g, options.low_index_cap, options.low_index_budget)) {
      ++counts[c.index];
    }
    fp.low_index = std::vector<std::pair<std::uint64_t, std::uint64_t>>(counts.begin(), counts.end());
  } catch (BudgetExceeded const&) {
  }
  try {
    fp.aut_order = automorphism_group(g, cd, options.aut_budget).order;
  } catch (BudgetExceeded const&) {
  }
  return fp;
}

Fingerprint fingerprint(GroupData& g, FingerprintLevel level, FingerprintOptions const& options) {
  return fingerprint(*g.table(), g.classes(), level, options);
}

Fingerprint fingerprint(PermGroup const& g, FingerprintLevel level, FingerprintOptions const& options) {
  GroupData d(g);
  return fingerprint(d, level, options);
}

namespace {

// -1, 0, 1 if every index is below, equal to or above the reference; 2 if mixed.
int side(std::vector<GroupRecord const*> const& cands, std::size_t reference) {
  bool lo = false, eq = false, hi = false;
  for (auto const* r : cands) {
    lo = lo || r->index < reference;
    eq = eq || r->index == reference;
    hi = hi || r->index > reference;
  }
  if (lo + eq + hi != 1) return 2;
  return lo ? -1 : (eq && cands.size() == 1 ? 0 : (hi ? 1 : 2));
}

std::vector<GroupRecord const*> narrow(GroupTable const& g, ClassData const& cd,
                                       PerfectCatalog const& catalog, std::size_t reference,
                                       int* decided, IsorejStats* stats) {
  std::vector<GroupRecord const*> cands;
  Fingerprint cheap = fingerprint(g, cd, FingerprintLevel::cheap);
  for (auto const& r : catalog.records(g.order())) {
    if (cheap_parts_equal(cheap, r.fingerprint)) cands.push_back(&r);
  }
  if (cands.empty()) throw InvariantViolation("factor group matches no catalog entry");
  *decided = side(cands, reference);
  if (*decided != 2) {
    if (stats) ++stats->fingerprint_decisions;
    return cands;
  }
  Fingerprint full = fingerprint(g, cd, FingerprintLevel::full);
  std::vector<GroupRecord const*> kept;
  for (auto const* r : cands) {
    if (fingerprints_compatible(full, r->fingerprint)) kept.push_back(r);
  }
  if (kept.empty()) throw InvariantViolation("factor group matches no catalog entry");
  *decided = side(kept, reference);
  if (*decided != 2 && stats) ++stats->fingerprint_decisions;
  return kept;
}

std::size_t resolve(GroupTable const& g, ClassData const& cd, std::vector<GroupRecord const*> const& cands,
                    IsorejStats* stats, std::uint64_t node_budget) {
  for (auto const* r : cands) {
    if (stats) ++stats->isomorphism_calls;
    GroupData& d = r->data();
    if (find_isomorphism(g, cd, *d.table(), d.classes(), node_budget)) return r->index;
  }
  throw InvariantViolation("factor group is isomorphic to no catalog entry");
}

}  // namespace

int compare_with_catalog(GroupTable const& g, ClassData const& cd, PerfectCatalog const& catalog,
                         std::size_t reference, IsorejStats* stats, std::uint64_t node_budget) {
  int decided = 2;
  auto cands = narrow(g, cd, catalog, reference, &decided, stats);
  if (decided != 2) return decided;
  std::size_t idx = resolve(g, cd, cands, stats, node_budget);
  return idx < reference ? -1 : (idx == reference ? 0 : 1);
}

std::size_t identify(GroupTable const& g, ClassData const& cd, PerfectCatalog const& catalog,
                     IsorejStats* stats, std::uint64_t node_budget) {
  int decided = 2;
  auto cands = narrow(g, cd, catalog, 0, &decided, stats);
  if (cands.size() == 1) return cands.front()->index;
  return resolve(g, cd, cands, stats, node_budget);
}

CanonicalResult canonical_check(GroupData& e, std::uint64_t module_order, std::size_t factor_index,
                                PerfectCatalog const& catalog, IsorejStats* stats,
                                std::uint64_t node_budget) {
  CanonicalResult out;
  GroupTable const& g = *e.table();
  auto all_minimal = minimal_normal_subgroups(g, e.classes());
  std::vector<Subgroup> minimal;
  for (auto& n : all_minimal) {
    if (is_elementary_abelian(g, n)) minimal.push_back(std::move(n));
  }
  for (auto const& n : minimal) {
    if (n.order() < module_order) {
      out.reason = "minimal normal subgroup of order " + std::to_string(n.order());
      return out;
    }
  }
  for (auto const& n : minimal) {
    if (n.order() != module_order) continue;
    GroupTable q = quotient_table(g, n);
    ClassData cq = conjugacy_classes(q);
    int rel = compare_with_catalog(q, cq, catalog, factor_index, stats, node_budget);
    if (rel < 0) {
      out.reason = "smaller factor type";
      return out;
    }
    if (rel == 0) ++out.matching_factors;
  }
  if (out.matching_factors == 0) {
    throw InvariantViolation("canonical_check: no minimal normal subgroup gives the construction factor");
  }
  out.canonical = true;
  return out;
}

std::vector<Candidate> dedupe(std::vector<Candidate> candidates, IsorejStats* stats, std::uint64_t node_budget) {
  std::vector<Candidate> kept;
  for (auto& c : candidates) {
    bool duplicate = false;
    if (c.matching_factors >= 2) {
      for (auto const& k : kept) {
        if (k.matching_factors < 2 || !fingerprints_compatible(c.fingerprint, k.fingerprint)) continue;
        if (stats) ++stats->isomorphism_calls;
        if (find_isomorphism(*c.data->table(), c.data->classes(), *k.data->table(), k.data->classes(), node_budget)) {
          duplicate = true;
          break;
        }
      }
    }
    if (!duplicate) kept.push_back(std::move(c));
  }
  return kept;
}

std::vector<Candidate> dedupe_pairwise(std::vector<Candidate> candidates, IsorejStats* stats,
                                       std::uint64_t node_budget) {
  std::vector<Candidate> kept;
  for (auto& c : candidates) {
    bool duplicate = false;
    for (auto const& k : kept) {
      if (!cheap_parts_equal(c.fingerprint, k.fingerprint)) continue;
      if (stats) ++stats->isomorphism_calls;
      if (find_isomorphism(*c.data->table(), c.data->classes(), *k.data->table(), k.data->classes(), node_budget)) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) kept.push_back(std::move(c));
  }
  return kept;
}

}  // namespace perfect
