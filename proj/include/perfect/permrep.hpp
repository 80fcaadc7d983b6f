#ifndef PERFECT_PERMREP_HPP_
#define PERFECT_PERMREP_HPP_

#include <cstdint>
#include <vector>

#include "perfect/cohomology.hpp"
#include "perfect/permgroup.hpp"

namespace perfect {

struct PermRepOptions {
  std::size_t first_index_cap = 20;
  std::size_t max_index_cap = 320;
  std::size_t max_points = 1000000;
  std::uint64_t low_index_budget = 20000000;
};

// Faithful permutation image of an extension of F by M. Generators follow
// the presentation from `extension`: one per rewriting letter, then one per
// module basis vector. Points [0, factor_degree) carry the action of F.
struct PermRep {
  PermGroup group;
  std::size_t factor_degree = 0;
  std::size_t subgroup_index = 0;  // [F:U] of the subgroup used, 0 for a direct product
};

// The factor F must be a table built from a permutation group. Throws
// BudgetExceeded("permrep_index") when no subgroup up to the cap separates
// M, InvariantViolation when the result has the wrong order.
PermRep faithful_perm_rep(RewritingSystem const& r, FpModule const& m, Vector const& tails,
                          PermRepOptions const& options = {});

// Kernel test on the subgroup U: a homomorphism from the preimage T of U to
// F_p that is nonzero on M, as a value per (coset, generator) pair of the
// extension presentation; nullopt if none exists.
std::optional<std::vector<std::vector<Scalar>>> separating_functional(
    FpPresentation const& pres, std::vector<std::vector<Point>> const& action,
    std::size_t first_module_generator, unsigned p);

struct ReduceOptions {
  std::size_t table_cap = 200000;
  std::size_t candidates_per_orbit = 200;
};

// Smaller faithful action of the same group with the same generator order.
PermGroup reduce_degree(PermGroup const& g, ReduceOptions const& options = {});

}  // namespace perfect

#endif  // PERFECT_PERMREP_HPP_
