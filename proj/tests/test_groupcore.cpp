#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "perfect/fpgroup.hpp"
#include "perfect/groupcore.hpp"
#include "perfect/iso.hpp"
#include "perfect/structure.hpp"

using namespace perfect;
using namespace perfect::testing;

TEST_CASE("permutation arithmetic", "[groupcore]") {
  auto a = Permutation::from_one_based({2, 3, 1, 4});
  auto b = Permutation::from_one_based({1, 2, 4, 3});
  CHECK(a.order() == 3);
  CHECK((a * b).order() == 4);  // (1 2 3)(3 4) is a 4-cycle
  CHECK((a * a.inverse()).is_identity());
  CHECK(a.pow(3).is_identity());
  CHECK(a.pow(-1) == a.inverse());
  CHECK(Permutation::from_cycles(4, {{1, 2, 3}}) == a);
  CHECK(a.one_based() == std::vector<Point>{2, 3, 1, 4});
}

TEST_CASE("orders of standard groups", "[groupcore]") {
  CHECK(order(symmetric_group(5)) == 120);
  CHECK(order(alternating_group(5)) == 60);
  CHECK(order(alternating_group(7)) == 2520);
  CHECK(order(psl2(7)) == 168);
  CHECK(order(psl2(8)) == 504);
  CHECK(order(psl3(3)) == 5616);
  CHECK(order(mathieu11()) == 7920);
}

TEST_CASE("perfectness", "[groupcore]") {
  CHECK(is_perfect(alternating_group(5)));
  CHECK(is_perfect(psl2(11)));
  CHECK_FALSE(is_perfect(symmetric_group(5)));
  CHECK_FALSE(is_perfect(symmetric_group(3)));
  CHECK(is_perfect(direct_product(std::vector<PermGroup>{alternating_group(5), psl2(7)})));
  CHECK(is_perfect(*table_of(alternating_group(6))));
}

TEST_CASE("conjugacy classes", "[groupcore]") {
  auto cls = conjugacy_classes(alternating_group(5));
  REQUIRE(cls.size() == 5);
  std::size_t total = 0;
  for (auto const& c : cls) {
    total += c.size;
    CHECK(c.size * c.centralizer_order == 60);
    CHECK(c.representative.order() == c.element_order);
  }
  CHECK(total == 60);
  CHECK(conjugacy_classes(psl2(7)).size() == 6);
  CHECK(conjugacy_classes(symmetric_group(4)).size() == 5);
}

TEST_CASE("normal subgroups", "[groupcore]") {
  auto a5 = alternating_group(5);
  CHECK(normal_subgroups(a5).size() == 2);
  auto ns = normal_subgroups(direct_product(std::vector<PermGroup>{a5, a5}));
  REQUIRE(ns.size() == 4);
  CHECK(ns[1].group.order() == 60);
  CHECK(ns[1].minimal);
  CHECK_FALSE(ns[3].minimal);
  auto s4 = normal_subgroups(symmetric_group(4));
  std::vector<std::uint64_t> orders;
  for (auto const& n : s4) orders.push_back(n.group.order());
  CHECK(orders == std::vector<std::uint64_t>{1, 4, 12, 24});
}

TEST_CASE("automorphism groups", "[groupcore]") {
  auto a = automorphism_group(alternating_group(5));
  CHECK(a.order == 120);
  CHECK(a.inner_order == 60);
  CHECK(automorphism_group(psl2(7)).order == 336);
  CHECK(automorphism_group(alternating_group(6)).order == 1440);
  CHECK(automorphism_group(symmetric_group(3)).order == 6);
  for (auto const& h : a.generators) CHECK(h.is_well_defined());
}

TEST_CASE("isomorphism", "[groupcore]") {
  CHECK(isomorphic(alternating_group(5), psl2(4)));
  CHECK(isomorphic(alternating_group(5), psl2(5)));
  CHECK(isomorphic(alternating_group(6), psl2(9)));
  CHECK(isomorphic(psl2(7), psl3(2)));
  CHECK_FALSE(isomorphic(alternating_group(8), psl3(4)));
  CHECK_FALSE(isomorphic(symmetric_group(4), direct_product(std::vector<PermGroup>{symmetric_group(3), symmetric_group(3)})));
  auto h = isomorphic(alternating_group(5), psl2(5));
  REQUIRE(h);
  CHECK(h->is_well_defined());
}

TEST_CASE("homomorphism evaluation", "[groupcore]") {
  auto a5 = alternating_group(5);
  auto h = isomorphic(a5, a5);
  REQUIRE(h);
  for (auto const& g : a5.generators()) CHECK(a5.contains((*h)(g)));
  GroupHomomorphism bad{a5, a5, {a5.generators()[0], a5.identity()}};
  CHECK_FALSE(bad.is_well_defined());
}

TEST_CASE("low index subgroups", "[groupcore]") {
  auto li = low_index_subgroups(alternating_group(5), 12);
  std::vector<std::size_t> idx;
  for (auto const& c : li) idx.push_back(c.index);
  CHECK(idx == std::vector<std::size_t>{1, 5, 6, 10, 12});
  CHECK(li[1].class_size == 5);
  CHECK(li[1].subgroup.order() == 12);
  CHECK(low_index_subgroups(psl2(7), 7).size() == 3);  // index 1 and two classes of index 7
}

TEST_CASE("group data caches agree with free functions", "[groupcore]") {
  GroupData d(psl2(8));
  CHECK(d.order() == 504);
  CHECK(d.classes().classes.size() == 9);
  CHECK(d.normals().size() == 2);
  CHECK(d.automorphisms().order == 1512);
  CHECK(d.automorphisms().out_order() == 3);
}

TEST_CASE("abelian invariants of presentations", "[groupcore]") {
  auto pres = FpPresentation::with_generators(2);
  pres.relators = {{1, 1}, {2, 2, 2}, {1, 2, 1, 2, 1, 2, 1, 2, 1, 2}};
  CHECK(abelian_invariants(pres).empty());  // A5
  auto s3 = FpPresentation::with_generators(2);
  s3.relators = {{1, 1}, {2, 2, 2}, {1, 2, 1, 2}};
  CHECK(abelian_invariants(s3) == std::vector<std::int64_t>{2});
  auto free2 = FpPresentation::with_generators(2);
  CHECK(abelian_invariants(free2) == std::vector<std::int64_t>{0, 0});
  auto z = FpPresentation::with_generators(2);
  z.relators = {{1, 1, 1, 1}, {2, 2, 2, 2, 2, 2}, commutator_word({1}, {2})};
  CHECK(abelian_invariants(z) == std::vector<std::int64_t>{2, 12});
  CHECK(abelian_p_rank(z, 2) == 2);
  CHECK(abelian_p_rank(z, 3) == 1);
  CHECK(free_reduce({1, 2, -2, -1, 2}) == FpWord{2});
}
