#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "helpers.hpp"
#include "perfect/cohomology.hpp"
#include "perfect/groupcore.hpp"
#include "perfect/permrep.hpp"

using namespace perfect;
using namespace perfect::testing;

TEST_CASE("nonsplit central extension gives SL(2,5)", "[permrep]") {
  auto t = table_of(alternating_group(5));
  RewritingSystem r = confluent_rws(t);
  FpModule m = trivial_module(2, t->num_generators());
  CohomologyGroup h = h2(r, m);
  REQUIRE(h.h_dim() == 1);
  PermRep rep = faithful_perm_rep(r, m, h.cocycle({1}));
  CHECK(rep.group.order() == 120);
  CHECK(is_perfect(rep.group));
  PermGroup red = reduce_degree(rep.group);
  CHECK(red.order() == 120);
  CHECK(red.degree() <= rep.group.degree());
  CHECK(red.degree() == 24);  // SL(2,5) has no faithful action on fewer points
}

TEST_CASE("split trivial extension is a direct product", "[permrep]") {
  auto t = table_of(alternating_group(5));
  RewritingSystem r = confluent_rws(t);
  FpModule m = trivial_module(3, t->num_generators());
  CohomologyGroup h = h2(r, m);
  PermRep rep = faithful_perm_rep(r, m, h.cocycle({}));
  CHECK(rep.group.order() == 180);
  CHECK(rep.subgroup_index == 0);
  CHECK_FALSE(is_perfect(rep.group));
}

TEST_CASE("extensions by modules of PSL(2,7)", "[permrep]") {
  auto t = table_of(psl2(7));
  RewritingSystem r = confluent_rws(t);
  for (auto const& m : irreducible_modules(*t, 2, 3)) {
    if (m.module.dim != 3) continue;
    CohomologyGroup h = h2(r, m.module);
    REQUIRE(h.h_dim() == 1);
    for (Scalar c : {Scalar(0), Scalar(1)}) {
      PermRep rep = faithful_perm_rep(r, m.module, h.cocycle({c}));
      CHECK(rep.group.order() == 1344);
      CHECK(is_perfect(rep.group));
      PermGroup red = reduce_degree(rep.group);
      CHECK(red.order() == 1344);
      CHECK(double(red.degree()) <= 10 * std::sqrt(1344.0));
    }
  }
}

TEST_CASE("separating functional exists for a faithful coset action", "[permrep]") {
  auto t = table_of(alternating_group(5));
  RewritingSystem r = confluent_rws(t);
  FpModule m = trivial_module(2, t->num_generators());
  CohomologyGroup h = h2(r, m);
  FpPresentation pres = extension(r, m, h, h.cocycle({1}));
  // Regular action of A5 on the letters; module generator acts trivially.
  std::vector<std::vector<Point>> action;
  for (std::size_t i = 0; i < r.num_letters(); ++i) {
    std::vector<Point> img(t->order());
    for (Elem x = 0; x < t->order(); ++x) img[x] = r.right_multiply(x, static_cast<RwsLetter>(i));
    action.push_back(img);
  }
  std::vector<Point> id(t->order());
  for (Elem x = 0; x < t->order(); ++x) id[x] = x;
  action.push_back(id);
  auto phi = separating_functional(pres, action, r.num_letters(), 2);
  CHECK(phi.has_value());
}

TEST_CASE("reduce_degree drops redundant orbits", "[permrep]") {
  auto a5 = alternating_group(5);
  auto two = direct_product(std::vector<PermGroup>{a5, a5});
  // Diagonal copy of A5 on 10 points.
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < a5.num_generators(); ++i) {
    std::vector<Point> img(10);
    for (Point x = 0; x < 5; ++x) {
      img[x] = a5.generators()[i][x];
      img[5 + x] = 5 + a5.generators()[i][x];
    }
    gens.emplace_back(img);
  }
  PermGroup diag(10, gens);
  CHECK(reduce_degree(diag).degree() == 5);
  CHECK(reduce_degree(two).degree() == 10);
}
