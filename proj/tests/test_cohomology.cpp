#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "perfect/cohomology.hpp"
#include "perfect/permrep.hpp"

using namespace perfect;
using namespace perfect::testing;

namespace {

std::size_t trivial_h2(PermGroup const& g, unsigned p) {
  auto t = table_of(g);
  RewritingSystem r = confluent_rws(t);
  return h2(r, trivial_module(p, t->num_generators())).h_dim();
}

}  // namespace

TEST_CASE("Schur multiplier of A5", "[cohomology]") {
  auto a5 = alternating_group(5);
  CHECK(trivial_h2(a5, 2) == 1);
  CHECK(trivial_h2(a5, 3) == 0);
  CHECK(trivial_h2(a5, 5) == 0);
}

TEST_CASE("multipliers of other groups", "[cohomology]") {
  CHECK(trivial_h2(psl2(7), 2) == 1);
  CHECK(trivial_h2(psl2(7), 3) == 0);
  CHECK(trivial_h2(alternating_group(6), 2) == 1);
  CHECK(trivial_h2(alternating_group(6), 3) == 1);
  CHECK(trivial_h2(symmetric_group(3), 2) == 1);  // H^2(S3, F2) = F2
  CHECK(trivial_h2(symmetric_group(3), 3) == 0);
}

TEST_CASE("coboundaries are cocycles", "[cohomology]") {
  auto t = table_of(alternating_group(5));
  RewritingSystem r = confluent_rws(t);
  for (auto const& m : irreducible_modules(*t, 3, 4)) {
    CohomologyGroup h = h2(r, m.module);
    CHECK(h.z_dim() == h.b_dim() + h.h_dim());
    for (auto const& b : h.b2_basis) CHECK(h.is_cocycle(b));
    for (auto const& z : h.h2_basis) {
      CHECK(h.is_cocycle(z));
      Vector c = h.h2_coordinates(z);
      CHECK(h.cocycle(c).size() == h.num_vars());
    }
  }
}

TEST_CASE("H2 of A5 with nontrivial modules", "[cohomology]") {
  auto t = table_of(alternating_group(5));
  RewritingSystem r = confluent_rws(t);
  for (auto const& m : irreducible_modules(*t, 2, 4)) {
    if (m.module.dim == 4) CHECK(h2(r, m.module).h_dim() == 0);
  }
  std::size_t f3 = 0, f5 = 0;
  for (auto const& m : irreducible_modules(*t, 3, 4)) {
    if (m.module.dim == 4) f3 = h2(r, m.module).h_dim();
  }
  for (auto const& m : irreducible_modules(*t, 5, 3)) {
    if (m.module.dim == 3) f5 = h2(r, m.module).h_dim();
  }
  CHECK(f3 == 1);
  CHECK(f5 == 1);
}

TEST_CASE("extensions have order |F| p^a", "[cohomology]") {
  auto t = table_of(alternating_group(5));
  RewritingSystem r = confluent_rws(t);
  for (unsigned p : {2u, 3u}) {
    for (auto const& m : irreducible_modules(*t, p, 4)) {
      CohomologyGroup h = h2(r, m.module);
      Vector coords(h.h_dim(), 0);
      if (!coords.empty()) coords[0] = 1;
      Vector z = h.cocycle(coords);
      FpPresentation pres = extension(r, m.module, h, z);
      CHECK(pres.num_generators() == r.num_letters() + m.module.dim);
      PermRep rep = faithful_perm_rep(r, m.module, z);
      std::uint64_t expect = 60;
      for (std::size_t i = 0; i < m.module.dim; ++i) expect *= p;
      CHECK(rep.group.order() == expect);
    }
  }
}

TEST_CASE("non-cocycles are rejected", "[cohomology]") {
  auto t = table_of(alternating_group(5));
  RewritingSystem r = confluent_rws(t);
  FpModule m = trivial_module(2, t->num_generators());
  CohomologyGroup h = h2(r, m);
  bool found = false;
  for (std::size_t i = 0; i < h.num_vars() && !found; ++i) {
    Vector z(h.num_vars(), 0);
    z[i] = 1;
    if (!h.is_cocycle(z)) {
      found = true;
      CHECK_THROWS(extension(r, m, h, z));
    }
  }
  CHECK(found);
}
