#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>

#include "helpers.hpp"
#include "perfect/compat.hpp"
#include "perfect/iso.hpp"
#include "perfect/structure.hpp"

using namespace perfect;
using namespace perfect::testing;

namespace {

struct Setup {
  std::shared_ptr<GroupTable const> t;
  RewritingSystem r;
  AutomorphismGroup aut;
  explicit Setup(PermGroup const& g)
      : t(table_of(g)), r(confluent_rws(t)), aut(automorphism_group(*t, conjugacy_classes(*t))) {}
};

H2Orbits orbits_for(Setup const& s, IrreducibleModule const& m, CohomologyGroup const& h) {
  CPGroup cp = compatible_pairs(*s.t, s.aut, m);
  std::vector<Matrix> acts;
  for (auto const& pair : cp.generators) acts.push_back(cp_coordinate_action(s.r, m.module, h, pair));
  return orbit_representatives(h, acts);
}

std::vector<std::uint64_t> sorted_sizes(H2Orbits const& o) {
  auto s = o.sizes;
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

TEST_CASE("compatible pairs are compatible", "[compat]") {
  Setup s(alternating_group(5));
  for (unsigned p : {2u, 5u}) {
    for (auto const& m : irreducible_modules(*s.t, p, 4)) {
      CPGroup cp = compatible_pairs(*s.t, s.aut, m);
      CHECK_FALSE(cp.generators.empty());
      for (auto const& pair : cp.generators) CHECK(is_compatible(*s.t, m.module, pair));
    }
  }
}

TEST_CASE("twisting by an inner automorphism gives an isomorphic module", "[compat]") {
  Setup s(psl2(7));
  for (auto const& m : irreducible_modules(*s.t, 2, 3)) {
    ElementMap kappa;
    kappa.image.resize(s.t->order());
    Elem c = s.t->generator(0);
    for (Elem x = 0; x < s.t->order(); ++x) kappa.image[x] = s.t->conj(x, c);
    CHECK(module_isomorphism(m, twisted_module(*s.t, m.module, kappa)));
  }
}

TEST_CASE("outer automorphism of PSL(2,7) swaps its 3-dim F2 modules", "[compat]") {
  Setup s(psl2(7));
  REQUIRE(s.aut.out_order() == 2);
  std::vector<IrreducibleModule> three;
  for (auto const& m : irreducible_modules(*s.t, 2, 3)) {
    if (m.module.dim == 3) three.push_back(m);
  }
  REQUIRE(three.size() == 2);
  FpModule tw = twisted_module(*s.t, three[0].module, s.aut.outer[1]);
  CHECK(module_isomorphism(three[1], tw));
}

TEST_CASE("orbits on H2 of A5 modules", "[compat]") {
  Setup s(alternating_group(5));
  for (auto const& m : irreducible_modules(*s.t, 3, 4)) {
    if (m.module.dim != 4) continue;
    CohomologyGroup h = h2(s.r, m.module);
    REQUIRE(h.h_dim() == 1);
    auto o = orbits_for(s, m, h);
    CHECK(sorted_sizes(o) == std::vector<std::uint64_t>{1, 2});
  }
  for (auto const& m : irreducible_modules(*s.t, 5, 3)) {
    if (m.module.dim != 3) continue;
    CohomologyGroup h = h2(s.r, m.module);
    auto o = orbits_for(s, m, h);
    CHECK(sorted_sizes(o) == std::vector<std::uint64_t>{1, 4});
  }
  FpModule triv = trivial_module(2, s.t->num_generators());
  auto irr = certify_irreducible(triv);
  CohomologyGroup h = h2(s.r, triv);
  auto o = orbits_for(s, irr, h);
  CHECK(o.representatives.size() == 2);
  CHECK(std::accumulate(o.sizes.begin(), o.sizes.end(), std::uint64_t(0)) == 2);
}

TEST_CASE("coordinate action agrees with the cocycle action", "[compat]") {
  Setup s(alternating_group(5));
  for (auto const& m : irreducible_modules(*s.t, 5, 3)) {
    if (m.module.dim != 3) continue;
    CohomologyGroup h = h2(s.r, m.module);
    CPGroup cp = compatible_pairs(*s.t, s.aut, m);
    for (auto const& pair : cp.generators) {
      Matrix a = cp_coordinate_action(s.r, m.module, h, pair);
      CHECK(a.rank() == h.h_dim());
      Vector z = h.cocycle({1});
      Vector img = cp_action_on_h2(s.r, m.module, h, pair, z);
      CHECK(h.is_cocycle(img));
      CHECK(h.h2_coordinates(img) == vec_mul({1}, a));
    }
  }
}

TEST_CASE("orbit enumeration respects its cap", "[compat]") {
  CohomologyGroup h;
  h.p = 3;
  h.h2_basis.assign(14, Vector{});
  CHECK_THROWS_AS(orbit_representatives(h, {}, 1000), BudgetExceeded);
}
