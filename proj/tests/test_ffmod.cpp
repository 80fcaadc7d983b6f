#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "helpers.hpp"
#include "perfect/module.hpp"
#include "perfect/poly.hpp"

using namespace perfect;
using namespace perfect::testing;

namespace {

std::vector<std::size_t> dims(std::vector<IrreducibleModule> const& ms) {
  std::vector<std::size_t> out;
  for (auto const& m : ms) out.push_back(m.module.dim);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("prime field arithmetic", "[ffmod]") {
  for (unsigned p : {2u, 3u, 5u, 7u, 11u}) {
    for (unsigned a = 1; a < p; ++a) CHECK(fp_mul(Scalar(a), fp_inv(Scalar(a), p), p) == 1);
    CHECK(fp_pow(2 % p, p - 1, p) == (p == 2 ? 0 : 1));
  }
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(91));
}

TEST_CASE("matrix algebra", "[ffmod]") {
  Matrix a = Matrix::from_rows(5, {{1, 2}, {3, 4}}, 2);
  auto inv = a.inverse();
  REQUIRE(inv);
  CHECK((a * *inv).is_identity());
  CHECK(a.rank() == 2);
  Matrix s = Matrix::from_rows(3, {{1, 2}, {2, 1}}, 2);  // rows proportional mod 3
  CHECK(s.rank() == 1);
  CHECK_FALSE(s.inverse());
  CHECK(a.pow(24).is_identity());  // |GL_2(5)| = 480, element orders divide 24
  CHECK(a.transpose().transpose() == a);
}

TEST_CASE("echelon form", "[ffmod]") {
  Echelon e(3, 3);
  CHECK(e.add({1, 2, 0}));
  CHECK(e.add({0, 1, 1}));
  CHECK_FALSE(e.add({1, 0, 1}));  // 1*(1,2,0) + 1*(0,1,1) = (1,0,1)
  Vector v{2, 1, 0};
  CHECK(e.reduce(v));
  CHECK(e.rank() == 2);
}

TEST_CASE("polynomial factorization", "[ffmod]") {
  Poly f{2, {1, 1, 0, 0, 1}};  // x^4 + x + 1, irreducible over F2
  auto fs = factor(f);
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].second == 1);
  Poly g{2, {1, 0, 0, 0, 1}};  // x^4 + 1 = (x+1)^4
  auto gs = factor(g);
  REQUIRE(gs.size() == 1);
  CHECK(gs[0].second == 4);
  Matrix c = Matrix::from_rows(2, {{0, 1}, {1, 1}}, 2);
  CHECK(evaluate(char_poly(c), c).is_zero());
}

TEST_CASE("MeatAxe splits the natural permutation module of A5", "[ffmod]") {
  auto a5 = alternating_group(5);
  std::vector<std::vector<Point>> act;
  for (auto const& g : a5.generators()) act.emplace_back(g.images().begin(), g.images().end());
  for (unsigned p : {2u, 3u, 5u}) {
    FpModule m = permutation_module(p, act, 5);
    CHECK_FALSE(meataxe(m).irreducible);
    auto parts = chop(m);
    std::size_t total = 0;
    for (auto const& [irr, mult] : parts) total += irr.module.dim * mult;
    CHECK(total == 5);
  }
}

TEST_CASE("irreducible modules of A5", "[ffmod]") {
  auto t = table_of(alternating_group(5));
  CHECK(dims(irreducible_modules(*t, 2, 6)) == std::vector<std::size_t>{1, 4, 4});
  CHECK(dims(irreducible_modules(*t, 3, 6)) == std::vector<std::size_t>{1, 4, 6});
  CHECK(dims(irreducible_modules(*t, 5, 6)) == std::vector<std::size_t>{1, 3, 5});
  for (auto const& m : irreducible_modules(*t, 2, 6)) {
    CHECK(is_valid_module(m.module, *t));
    CHECK(meataxe(m.module).irreducible);
  }
}

TEST_CASE("irreducible modules of PSL(2,7)", "[ffmod]") {
  auto t = table_of(psl2(7));
  CHECK(dims(irreducible_modules(*t, 2, 8)) == std::vector<std::size_t>{1, 3, 3, 8});
  CHECK(dims(irreducible_modules(*t, 3, 8)) == std::vector<std::size_t>{1, 6, 6, 7});
  CHECK(dims(irreducible_modules(*t, 7, 8)) == std::vector<std::size_t>{1, 3, 5, 7});
}

TEST_CASE("module isomorphism and automorphisms", "[ffmod]") {
  auto t = table_of(psl2(7));
  auto ms = irreducible_modules(*t, 2, 3);
  std::vector<IrreducibleModule> three;
  for (auto const& m : ms) {
    if (m.module.dim == 3) three.push_back(m);
  }
  REQUIRE(three.size() == 2);
  CHECK_FALSE(module_isomorphism(three[0], three[1].module));
  CHECK(module_isomorphism(three[0], dual_module(three[1].module)));
  CHECK(module_automorphisms(three[0]).order == 1);

  auto a5 = table_of(alternating_group(5));
  std::vector<std::uint64_t> orders;
  for (auto const& m : irreducible_modules(*a5, 2, 4)) orders.push_back(module_automorphisms(m).order);
  std::sort(orders.begin(), orders.end());
  CHECK(orders == std::vector<std::uint64_t>{1, 1, 3});  // one 4-dim module has End = F4
}

TEST_CASE("p-regular class counts", "[ffmod]") {
  auto t = table_of(alternating_group(5));
  CHECK(count_p_regular_classes(*t, 2) == 4);
  CHECK(count_p_regular_classes(*t, 3) == 4);
  CHECK(count_p_regular_classes(*t, 5) == 3);
}
