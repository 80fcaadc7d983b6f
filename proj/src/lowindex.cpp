#include "perfect/lowindex.hpp"

#include <algorithm>
#include <unordered_set>

namespace perfect {

namespace {

class Search {
 public:
  Search(GroupTable const& g, std::size_t max_index,
         std::function<bool(Subgroup const&, std::vector<Elem> const&)> const& fn,
         std::uint64_t budget)
      : g_(g), m_(max_index), fn_(fn), budget_(budget), mark_(g.order(), 0) {}

  void run() {
    Subgroup k = trivial_subgroup(g_);
    rec(k, {0});
  }

 private:
  bool feasible(std::size_t korder, std::size_t count) const {
    std::size_t n = g_.order();
    for (std::size_t i = count; i <= m_; ++i) {
      if (n % i == 0 && (n / i) % korder == 0) return true;
    }
    return false;
  }

  // Labels the cosets K*w_d; false if two representatives share a coset.
  bool label(Subgroup const& k, std::vector<Elem> const& reps) {
    ++stamp_;
    for (Elem w : reps) {
      for (Elem x : k.set.elements()) {
        Elem y = g_.mul(x, w);
        if (mark_[y] == stamp_) return false;
        mark_[y] = stamp_;
      }
    }
    return true;
  }

  void rec(Subgroup const& k, std::vector<Elem> const& reps) {
    if (stop_) return;
    if (++nodes_ > budget_) throw BudgetExceeded("lowindex_nodes", "low-index search budget");
    if (!feasible(k.order(), reps.size())) return;
    if (!label(k, reps)) return;
    std::size_t c = 0;
    Elem target = 0;
    bool open = false;
    for (; c < reps.size() && !open; ++c) {
      for (std::size_t s = 0; s < g_.num_generators(); ++s) {
        target = g_.step(reps[c], Letter(2 * s));
        if (mark_[target] != stamp_) {
          open = true;
          break;
        }
      }
    }
    if (!open) {
      if (k.order() * reps.size() == g_.order()) {
        if (!fn_(k, reps)) stop_ = true;
      }
      return;
    }
    for (std::size_t d = 0; d < reps.size() && !stop_; ++d) {
      Elem x = g_.mul(target, g_.inverse(reps[d]));
      Subgroup k2 = extend(g_, k, x);
      rec(k2, reps);
    }
    if (reps.size() < m_ && !stop_) {
      auto reps2 = reps;
      reps2.push_back(target);
      rec(k, reps2);
    }
  }

  GroupTable const& g_;
  std::size_t m_;
  std::function<bool(Subgroup const&, std::vector<Elem> const&)> const& fn_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::uint32_t> mark_;
  std::uint32_t stamp_ = 0;
  bool stop_ = false;
};

}  // namespace

void for_each_low_index_subgroup(
    GroupTable const& g, std::size_t max_index,
    std::function<bool(Subgroup const&, std::vector<Elem> const&)> const& fn,
    std::uint64_t node_budget) {
  if (max_index == 0) return;
  Search s(g, max_index, fn, node_budget);
  s.run();
}

std::vector<LowIndexClass> low_index_subgroups(GroupTable const& g, std::size_t max_index,
                                               std::uint64_t node_budget) {
  std::vector<LowIndexClass> out;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  for_each_low_index_subgroup(
      g, max_index,
      [&](Subgroup const& k, std::vector<Elem> const& reps) {
        if (seen.count(k.set)) return true;
        LowIndexClass cls;
        cls.subgroup = k;
        cls.subgroup.set.sort();
        cls.index = reps.size();
        cls.coset_representatives = reps;
        cls.class_size = 0;
        for (Elem w : reps) {
          Subgroup c = conjugate_subgroup(g, k, w);
          if (seen.insert(c.set).second) ++cls.class_size;
        }
        out.push_back(std::move(cls));
        return true;
      },
      node_budget);
  std::stable_sort(out.begin(), out.end(),
                   [](LowIndexClass const& a, LowIndexClass const& b) { return a.index < b.index; });
  return out;
}

}  // namespace perfect
