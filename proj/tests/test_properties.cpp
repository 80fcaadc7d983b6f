#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>

#include "helpers.hpp"
#include "perfect/cohomology.hpp"
#include "perfect/compat.hpp"
#include "perfect/groupcore.hpp"
#include "perfect/isorej.hpp"
#include "perfect/permrep.hpp"
#include "perfect/pipeline.hpp"

using namespace perfect;
using namespace perfect::testing;

TEST_CASE("group tables are associative with two-sided inverses", "[property]") {
  std::mt19937_64 rng(11);
  for (auto const& g : {symmetric_group(5), psl2(7), alternating_group(6)}) {
    auto t = table_of(g);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(t->order() - 1));
    for (int i = 0; i < 500; ++i) {
      Elem a = pick(rng), b = pick(rng), c = pick(rng);
      REQUIRE(t->mul(t->mul(a, b), c) == t->mul(a, t->mul(b, c)));
      REQUIRE(t->mul(a, t->inverse(a)) == 0);
      REQUIRE(t->permutation(t->mul(a, b)) == t->permutation(a) * t->permutation(b));
    }
  }
}

TEST_CASE("normal forms multiply like the group", "[property]") {
  std::mt19937_64 rng(5);
  for (auto const& g : {alternating_group(5), psl2(8)}) {
    auto t = table_of(g);
    RewritingSystem r = confluent_rws(t);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(t->order() - 1));
    for (int i = 0; i < 300; ++i) {
      Elem a = pick(rng), b = pick(rng);
      RwsWord w = r.normal_form(a);
      auto const& v = r.normal_form(b);
      w.insert(w.end(), v.begin(), v.end());
      REQUIRE(r.rewrite(w) == r.normal_form(t->mul(a, b)));
    }
  }
}

TEST_CASE("random cocycles lift to groups of the right order", "[property]") {
  std::mt19937_64 rng(23);
  auto t = table_of(alternating_group(5));
  RewritingSystem r = confluent_rws(t);
  for (unsigned p : {2u, 3u, 5u}) {
    for (auto const& m : irreducible_modules(*t, p, 5)) {
      if (m.module.dim > 4) continue;
      CohomologyGroup h = h2(r, m.module);
      std::uniform_int_distribution<unsigned> coef(0, p - 1);
      std::uint64_t expect = 60;
      for (std::size_t i = 0; i < m.module.dim; ++i) expect *= p;
      for (int trial = 0; trial < 2; ++trial) {
        Vector z(h.num_vars(), 0);
        for (auto const& b : h.z2_basis) axpy(z, static_cast<Scalar>(coef(rng)), b, p);
        REQUIRE(h.is_cocycle(z));
        PermRep rep = faithful_perm_rep(r, m.module, z);
        CHECK(rep.group.order() == expect);
      }
      for (auto const& b : h.b2_basis) CHECK(is_zero(h.h2_coordinates(b)));
    }
  }
}

TEST_CASE("orbits partition H2", "[property]") {
  for (auto const& g : {alternating_group(5), psl2(7)}) {
    auto t = table_of(g);
    RewritingSystem r = confluent_rws(t);
    AutomorphismGroup aut = automorphism_group(*t, conjugacy_classes(*t));
    for (unsigned p : {2u, 3u, 5u}) {
      for (auto const& m : irreducible_modules(*t, p, 4)) {
        CohomologyGroup h = h2(r, m.module);
        CPGroup cp = compatible_pairs(*t, aut, m);
        std::vector<Matrix> acts;
        for (auto const& pair : cp.generators) acts.push_back(cp_coordinate_action(r, m.module, h, pair));
        auto o = orbit_representatives(h, acts);
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < h.h_dim(); ++i) total *= p;
        CHECK(std::accumulate(o.sizes.begin(), o.sizes.end(), std::uint64_t(0)) == total);
        CHECK(is_zero(o.representatives.front()));
        for (auto s : o.sizes) {
          if (o.image_order) CHECK(o.image_order % s == 0);
        }
      }
    }
  }
}

TEST_CASE("fingerprints are isomorphism invariants", "[property]") {
  std::mt19937_64 rng(99);
  Pipeline p;
  p.enumerate_up_to(1344);
  for (auto const& [n, recs] : p.catalog().orders()) {
    for (auto const& rec : recs) {
      PermGroup g = relabel(rec.group, rng);
      CHECK(fingerprint(g, FingerprintLevel::full) == rec.fingerprint);
      GroupData d(g);
      CHECK(identify(*d.table(), d.classes(), p.catalog()) == rec.index);
    }
  }
}

TEST_CASE("catalog records are perfect with the declared order", "[property]") {
  Pipeline p;
  p.enumerate_up_to(1400);
  for (auto const& [n, recs] : p.catalog().orders()) {
    for (std::size_t i = 0; i < recs.size(); ++i) {
      CHECK(recs[i].order == n);
      CHECK(recs[i].index == i + 1);
      CHECK(recs[i].group.order() == n);
      CHECK(is_perfect(recs[i].group));
      for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(isomorphic(recs[i].group, recs[j].group));
    }
  }
}

TEST_CASE("seed file round trip", "[property]") {
  auto seeds = standard_seeds(10000);
  auto path = std::filesystem::temp_directory_path() / "perfect_seeds.txt";
  {
    std::ofstream out(path);
    out << seed_file_text(seeds);
  }
  auto back = load_seed_file(path);
  REQUIRE(back.size() == seeds.size());
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    CHECK(back[i].name == seeds[i].name);
    CHECK(back[i].order == seeds[i].order);
    CHECK(back[i].group.generators() == seeds[i].group.generators());
    CHECK(back[i].group.order() == seeds[i].order);
  }
  std::filesystem::remove(path);
}

TEST_CASE("seed orders", "[property]") {
  for (auto const& s : standard_seeds(200000)) {
    CHECK(s.group.order() == s.order);
    if (s.order <= 20000) CHECK(normal_subgroups(s.group).size() == 2);
  }
  std::vector<std::uint64_t> orders;
  for (auto const& s : standard_seeds(30000)) orders.push_back(s.order);
  CHECK(orders == std::vector<std::uint64_t>{60, 168, 360, 504, 660, 1092, 2448, 2520, 3420, 4080, 5616,
                                             6048, 6072, 7800, 7920, 9828, 12180, 14880, 20160, 20160,
                                             25308, 25920});
}
