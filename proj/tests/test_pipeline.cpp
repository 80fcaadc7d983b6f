#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "perfect/errors.hpp"
#include "perfect/groupcore.hpp"
#include "perfect/pipeline.hpp"

using namespace perfect;
namespace fs = std::filesystem;

namespace {

std::map<std::uint64_t, std::size_t> nonzero_counts(PerfectCatalog const& c) {
  std::map<std::uint64_t, std::size_t> out;
  for (auto const& [n, k] : c.counts()) {
    if (k) out[n] = k;
  }
  return out;
}

fs::path scratch(std::string const& name) {
  fs::path p = fs::temp_directory_path() / ("perfect_test_" + name);
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("admissible divisor steps", "[pipeline]") {
  auto steps = admissible_steps(120);
  REQUIRE(steps.size() == 3);
  CHECK(steps[0].d == 15);
  CHECK(steps[2].d == 60);
  CHECK(steps[2].a == 1);
  for (std::uint64_t n : {300u, 960u, 1344u, 61440u}) {
    for (auto const& s : admissible_steps(n)) {
      std::uint64_t q = 1;
      for (unsigned i = 0; i < s.a; ++i) q *= s.p;
      CHECK(s.d * q == n);
      CHECK((s.a > 1 || s.d % s.p == 0));
    }
  }
  // 300 = 60 * 5 with 5 | 60 is the only way to reach a perfect factor
  bool has = false;
  for (auto const& s : admissible_steps(300)) has = has || (s.d == 60 && s.p == 5 && s.a == 1);
  CHECK(has);
}

TEST_CASE("GL orders", "[pipeline]") {
  CHECK(gl_order(2, 1) == 1);
  CHECK(gl_order(2, 3) == 168);
  CHECK(gl_order(2, 4) == 20160);
  CHECK(gl_order(3, 2) == 48);
  CHECK(gl_order(2, 40) == UINT64_MAX);
}

TEST_CASE("Fitting-free groups", "[pipeline]") {
  Pipeline p;
  auto a = p.fitting_free(60);
  REQUIRE(a.size() == 1);
  CHECK(a[0].construction.to_string() == "seed A5");
  auto b = p.fitting_free(3600);
  REQUIRE(b.size() == 1);
  CHECK(b[0].construction.to_string() == "product A5*A5");
  CHECK(b[0].group.order() == 3600);
  auto c = p.fitting_free(10080);
  REQUIRE(c.size() == 1);
  CHECK(c[0].construction.to_string() == "product A5*L2(7)");
  CHECK(p.fitting_free(20160).size() == 2);  // A8 and L3(4)
  CHECK(p.fitting_free(120).empty());
  CHECK_THROWS_AS(p.fitting_free(29120), BudgetExceeded);
}

TEST_CASE("single orders", "[pipeline]") {
  Pipeline p;
  p.enumerate_divisors(120);
  CHECK(p.catalog().records(120).size() == 1);
  p.enumerate_divisors(300);
  CHECK(p.catalog().records(300).empty());
  p.enumerate_divisors(960);
  CHECK(p.catalog().records(960).size() == 2);
  for (auto const& r : p.catalog().records(960)) {
    CHECK(r.group.order() == 960);
    CHECK(is_perfect(r.group));
  }
}

TEST_CASE("enumeration to 1000 and 59", "[pipeline]") {
  Pipeline small;
  small.enumerate_up_to(59);
  CHECK(nonzero_counts(small.catalog()).empty());
  Pipeline p;
  p.enumerate_up_to(1000);
  std::map<std::uint64_t, std::size_t> expect{{60, 1},  {120, 1}, {168, 1}, {336, 1}, {360, 1},
                                              {504, 1}, {660, 1}, {720, 1}, {960, 2}};
  CHECK(nonzero_counts(p.catalog()) == expect);
  CHECK(p.catalog().frontier() == 1000);
  auto const& s = p.stats();
  CHECK(s.extensions_lifted == s.extensions_with_exact_order);
  CHECK(s.rewriting_systems == s.rewriting_systems_certified);
}

TEST_CASE("induction reads only divisors", "[pipeline]") {
  Pipeline p;
  p.enumerate_up_to(200);
  PerfectCatalog c = p.catalog();
  c.set_read_guard(240);
  CHECK_NOTHROW(c.records(120));
  CHECK_THROWS_AS(c.records(168), InvariantViolation);
  CHECK_THROWS_AS(c.records(240), InvariantViolation);
}

TEST_CASE("oracle agrees on small orders", "[pipeline]") {
  Pipeline p;
  p.enumerate_up_to(1344);
  for (std::uint64_t n : {60u, 120u, 300u, 720u, 960u, 1344u}) {
    CHECK(p.oracle_count(n) == p.catalog().records(n).size());
  }
}

TEST_CASE("catalog persistence and resume", "[pipeline]") {
  fs::path a = scratch("a"), b = scratch("b");
  {
    PipelineOptions o;
    o.out = a;
    Pipeline p(o);
    p.enumerate_up_to(1000);
  }
  {
    PipelineOptions o;
    o.out = b;
    Pipeline p(o);
    p.enumerate_up_to(700);
  }
  {
    PipelineOptions o;
    o.out = b;
    o.resume = true;
    Pipeline p(o);
    p.enumerate_up_to(1000);
    CHECK(p.catalog().records(960).size() == 2);
  }
  for (auto const& e : fs::directory_iterator(a)) {
    std::ifstream x(e.path()), y(b / e.path().filename());
    std::stringstream sx, sy;
    sx << x.rdbuf();
    sy << y.rdbuf();
    CHECK(sx.str() == sy.str());
  }
  PerfectCatalog loaded = PerfectCatalog::load(a);
  CHECK(loaded.frontier() == 1000);
  CHECK(loaded.records(960).size() == 2);
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST_CASE("budget failure leaves a resumable state", "[pipeline]") {
  fs::path dir = scratch("budget");
  {
    PipelineOptions o;
    o.out = dir;
    o.budgets.set("permrep_index", 4);
    Pipeline p(o);
    CHECK_THROWS_AS(p.enumerate_up_to(200), BudgetExceeded);
  }
  PerfectCatalog partial = PerfectCatalog::load(dir);
  CHECK(partial.frontier() == 119);
  PipelineOptions o;
  o.out = dir;
  o.resume = true;
  Pipeline p(o);
  p.enumerate_up_to(200);
  CHECK(p.catalog().records(120).size() == 1);
  fs::remove_all(dir);
}

TEST_CASE("parallel cells merge deterministically", "[pipeline]") {
  PipelineOptions o;
  o.jobs = 3;
  Pipeline par(o);
  par.enumerate_up_to(1344);
  Pipeline seq;
  seq.enumerate_up_to(1344);
  for (std::uint64_t n : {960u, 1344u}) {
    CHECK(order_file_text(n, par.catalog().records(n)) == order_file_text(n, seq.catalog().records(n)));
  }
}

TEST_CASE("budgets", "[pipeline]") {
  Budgets b;
  CHECK(b.get("closure_cap") == 200);
  b.parse("closure_cap=300");
  CHECK(b.get("closure_cap") == 300);
  CHECK_THROWS(b.parse("closure_cap"));
  CHECK_THROWS(b.parse("closure_cap=abc"));
  CHECK_THROWS(b.parse("unknown=1"));
}

TEST_CASE("isomorphism node budget reaches the oracle", "[pipeline]") {
  PipelineOptions o;
  o.budgets.set("iso_nodes", 1);
  Pipeline p(o);
  p.enumerate_up_to(1344);
  CHECK(p.catalog().orders().at(1344).size() == 2);
  try {
    p.oracle_count(1344);
    FAIL("expected BudgetExceeded");
  } catch (BudgetExceeded const& e) {
    CHECK(e.key() == "iso_nodes");
  }
}

TEST_CASE("Holt bounds", "[pipeline]") {
  BoundsResult b = holt_bounds(2000000);
  CHECK(b.lower() == Catch::Approx(1.8e-15).epsilon(0.05));
  CHECK(b.log10_upper == Catch::Approx(189.0 + std::log10(2.6)).margin(std::log10(1.05)));
  BoundsResult two = holt_bounds(2);
  CHECK(two.lower() <= 1.0);
  CHECK(two.upper() >= 1.0);
  double prev = holt_bounds(16).log10_upper;
  for (std::uint64_t n = 17; n < 5000; n += 7) {
    double u = holt_bounds(n).log10_upper;
    CHECK(u >= prev);
    prev = u;
  }
  CHECK(parse_rational("11/36") == Catch::Approx(11.0 / 36.0));
  CHECK(parse_rational("0.5") == 0.5);
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(holt_bounds(1));
}

TEST_CASE("degree statistics", "[pipeline]") {
  Pipeline p;
  p.enumerate_up_to(60);
  std::string csv = stats_csv(p.catalog());
  CHECK(csv.find("60,1,5,0.6455\n") != std::string::npos);
  CHECK(stats_csv(p.catalog(), 61, 100) == "order,index,degree,degree_over_sqrt_order\n");
  DegreeSummary s = degree_summary(p.catalog());
  CHECK(s.count == 1);
  CHECK(s.max == Catch::Approx(5 / std::sqrt(60.0)));
}
