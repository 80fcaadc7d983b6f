#ifndef PERFECT_GROUPCORE_HPP_
#define PERFECT_GROUPCORE_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "perfect/iso.hpp"
#include "perfect/lowindex.hpp"
#include "perfect/permgroup.hpp"
#include "perfect/structure.hpp"
#include "perfect/table.hpp"

namespace perfect {

// Permutation-level entry points; each builds an element table internally
// (capped at kDefaultTableCap elements, BudgetExceeded beyond).

struct GroupHomomorphism {
  PermGroup source;
  PermGroup target;
  std::vector<Permutation> generator_images;  // aligned with source.generators()

  // True when the images define a homomorphism: the graph subgroup of
  // source x target projects isomorphically onto source.
  bool is_well_defined() const;
  Permutation operator()(Permutation const& x) const;
};

struct ClassSummary {
  Permutation representative;
  std::uint32_t element_order = 1;
  std::size_t size = 1;
  std::size_t centralizer_order = 1;
};

struct NormalSubgroupInfo {
  PermGroup group;
  bool minimal = false;
};

struct AutomorphismInfo {
  std::uint64_t order = 1;
  std::uint64_t inner_order = 1;
  PermGroup image;                              // faithful action on generating classes
  std::vector<GroupHomomorphism> generators;    // inner generators, then outer representatives
};

struct SubgroupClassInfo {
  PermGroup subgroup;
  std::size_t index = 1;
  std::size_t class_size = 1;
};

// Shared analysis of one permutation group; results are computed on first
// use and are not synchronized (one instance per worker).
class GroupData {
 public:
  explicit GroupData(PermGroup g, std::size_t table_cap = kDefaultTableCap);

  PermGroup const& group() const noexcept { return group_; }
  std::shared_ptr<GroupTable const> const& table() const noexcept { return table_; }
  std::uint64_t order() const noexcept { return table_->order(); }
  ClassData const& classes();
  std::vector<NormalSubgroup> const& normals();
  AutomorphismGroup const& automorphisms(std::uint64_t node_budget = 50000000);
  // Permutation of a table element.
  Permutation const& element(Elem x) const { return table_->permutation(x); }
  PermGroup subgroup(Subgroup const& s) const;

 private:
  PermGroup group_;
  std::shared_ptr<GroupTable const> table_;
  std::optional<ClassData> classes_;
  std::optional<std::vector<NormalSubgroup>> normals_;
  std::optional<AutomorphismGroup> aut_;
};

std::uint64_t order(PermGroup const& g);
std::vector<ClassSummary> conjugacy_classes(PermGroup const& g);
std::vector<NormalSubgroupInfo> normal_subgroups(PermGroup const& g);
AutomorphismInfo automorphism_group(PermGroup const& g);
std::optional<GroupHomomorphism> isomorphic(PermGroup const& g, PermGroup const& h,
                                            std::uint64_t node_budget = 50000000);
std::vector<SubgroupClassInfo> low_index_subgroups(PermGroup const& g, std::size_t max_index);

// Homomorphism from a table-level element map (tables built from the groups).
GroupHomomorphism to_homomorphism(GroupData const& source, GroupData const& target, ElementMap const& map);

}  // namespace perfect

#endif  // PERFECT_GROUPCORE_HPP_
