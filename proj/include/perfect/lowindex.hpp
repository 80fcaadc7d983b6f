#ifndef PERFECT_LOWINDEX_HPP_
#define PERFECT_LOWINDEX_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include "perfect/table.hpp"

namespace perfect {

struct LowIndexClass {
  Subgroup subgroup;
  std::size_t index = 1;
  std::size_t class_size = 1;            // number of conjugates
  std::vector<Elem> coset_representatives;  // right cosets, identity first
};

// Calls `fn` once for every subgroup of index <= max_index (not up to
// conjugacy), with right coset representatives. Return false to stop.
void for_each_low_index_subgroup(
    GroupTable const& g, std::size_t max_index,
    std::function<bool(Subgroup const&, std::vector<Elem> const&)> const& fn,
    std::uint64_t node_budget = 20000000);

// One representative per conjugacy class, sorted by index, then by order of
// discovery.
std::vector<LowIndexClass> low_index_subgroups(GroupTable const& g, std::size_t max_index,
                                               std::uint64_t node_budget = 20000000);

}  // namespace perfect

#endif  // PERFECT_LOWINDEX_HPP_
