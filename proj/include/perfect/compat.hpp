#ifndef PERFECT_COMPAT_HPP_
#define PERFECT_COMPAT_HPP_

#include <cstdint>
#include <vector>

#include "perfect/cohomology.hpp"
#include "perfect/iso.hpp"
#include "perfect/module.hpp"

namespace perfect {

// (kappa, nu) with A(f) * nu = nu * A(kappa(f)) for every generator f.
struct CompatiblePair {
  ElementMap kappa;
  Matrix nu;
};

struct CPGroup {
  std::vector<CompatiblePair> generators;
  std::uint64_t projection_order = 1;  // |{kappa}| as a subgroup of Aut(F)
  std::uint64_t kernel_order = 1;      // module automorphisms
};

bool is_compatible(GroupTable const& g, FpModule const& m, CompatiblePair const& pair);

// Module with F acting through kappa: generator i acts as A(kappa(g_i)).
FpModule twisted_module(GroupTable const& g, FpModule const& m, ElementMap const& kappa);

CPGroup compatible_pairs(GroupTable const& g, AutomorphismGroup const& aut, IrreducibleModule const& m);

// Image of the cocycle z (tails vector) under the pair, as a cocycle in the
// span of h.h2_basis.
Vector cp_action_on_h2(RewritingSystem const& r, FpModule const& m, CohomologyGroup const& h,
                       CompatiblePair const& pair, Vector const& z);
// Same action on H2 coordinates: row i is the image of basis vector i.
Matrix cp_coordinate_action(RewritingSystem const& r, FpModule const& m, CohomologyGroup const& h,
                            CompatiblePair const& pair);

struct H2Orbits {
  std::vector<Vector> representatives;  // coordinates, smallest base-p code first
  std::vector<std::uint64_t> sizes;
  std::uint64_t image_order = 1;        // group induced on H2; 0 when not computed
};

// Orbits on all p^h elements; throws BudgetExceeded("h2_enumeration") past cap.
H2Orbits orbit_representatives(CohomologyGroup const& h, std::vector<Matrix> const& actions,
                               std::uint64_t cap = std::uint64_t(1) << 20);

}  // namespace perfect

#endif  // PERFECT_COMPAT_HPP_
