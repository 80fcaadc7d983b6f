#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"
#include "perfect/rws.hpp"

using namespace perfect;
using namespace perfect::testing;

namespace {

void check_system(PermGroup const& g) {
  auto t = table_of(g);
  RewritingSystem r = confluent_rws(t);
  CHECK(r.count_normal_forms() == t->order());
  CHECK(r.certify_confluence());
  for (Elem x = 0; x < t->order(); ++x) {
    RwsWord const& w = r.normal_form(x);
    REQUIRE(r.evaluate(w) == x);
    REQUIRE(r.rewrite(w) == w);
  }
}

}  // namespace

TEST_CASE("confluent systems for small groups", "[rws]") {
  check_system(symmetric_group(3));
  check_system(symmetric_group(4));
  check_system(alternating_group(5));
  check_system(psl2(7));
  check_system(alternating_group(6));
}

TEST_CASE("rewriting is compatible with multiplication", "[rws]") {
  auto t = table_of(psl2(7));
  RewritingSystem r = confluent_rws(t);
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::size_t> letter(0, r.num_letters() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    RwsWord w(1 + trial % 30);
    for (auto& l : w) l = static_cast<RwsLetter>(letter(rng));
    RwsWord nf = r.rewrite(w);
    CHECK(r.evaluate(nf) == r.evaluate(w));
    CHECK(nf == r.normal_form(r.evaluate(w)));
    CHECK(r.rewrite_rightmost(w) == nf);
  }
}

TEST_CASE("rule applications are recorded", "[rws]") {
  auto t = table_of(alternating_group(5));
  RewritingSystem r = confluent_rws(t);
  RwsWord w;
  for (int i = 0; i < 12; ++i) w.push_back(static_cast<RwsLetter>(i % r.num_letters()));
  std::vector<RuleApplication> apps;
  RwsWord nf = r.rewrite(w, apps);
  CHECK(nf == r.rewrite(w));
  CHECK_FALSE(apps.empty());
  for (auto const& a : apps) CHECK(a.rule < r.num_rules());
}

TEST_CASE("critical pairs resolve", "[rws]") {
  auto t = table_of(symmetric_group(4));
  RewritingSystem r = confluent_rws(t);
  auto cps = r.critical_pairs();
  CHECK_FALSE(cps.empty());
  for (auto const& cp : cps) CHECK(r.rewrite(cp.left_reduct) == r.rewrite(cp.right_reduct));
}

TEST_CASE("levels follow a chief series", "[rws]") {
  auto t = table_of(symmetric_group(4));
  RewritingSystem r = confluent_rws(t);
  auto const& s = r.series();
  REQUIRE(s.size() >= 2);
  CHECK(s.front().order() == 24);
  CHECK(s.back().order() == 1);
  for (std::size_t i = 1; i < s.size(); ++i) CHECK(s[i - 1].order() % s[i].order() == 0);
}

namespace {

std::shared_ptr<GroupTable const> cyclic(unsigned n) {
  std::vector<Point> c(n);
  for (unsigned i = 0; i < n; ++i) c[i] = (i + 1) % n;
  return table_of(PermGroup(n, {Permutation(c)}));
}

RwsLetter letter_named(RewritingSystem const& r, std::string const& name) {
  for (std::size_t i = 0; i < r.num_letters(); ++i) {
    if (r.alphabet()[i].name == name) return static_cast<RwsLetter>(i);
  }
  FAIL("no letter " << name);
  return 0;
}

}  // namespace

TEST_CASE("power generators shorten cyclic levels", "[rws]") {
  auto t = cyclic(151);
  RewritingSystem r0 = confluent_rws(t, 20000, 1000);  // no automatic powers
  RwsLetter x0 = letter_named(r0, "x1_1");
  RewritingSystem r = add_power_generators(r0, x0, 12);
  CHECK(r.count_normal_forms() == 151);
  CHECK(r.certify_confluence());
  CHECK(r.max_rhs_length() < r0.max_rhs_length());
  RwsLetter x = letter_named(r, "x1_1");
  RwsLetter y = static_cast<RwsLetter>(x == 0 ? 1 : 0);
  CHECK(r.alphabet()[y].element == t->pow(t->generator(0), 12));
  CHECK(r.rewrite(RwsWord(50, x)) == RwsWord{y, y, y, y, x, x});  // x^50 = y^4 x^2
}

TEST_CASE("power generators are skipped when they do not help", "[rws]") {
  auto t = cyclic(2);
  RewritingSystem r0 = confluent_rws(t);
  RewritingSystem r = add_power_generators(r0, 0, 2);
  CHECK(r.num_letters() == r0.num_letters());
  CHECK(r.num_rules() == r0.num_rules());
}

TEST_CASE("long cyclic groups keep short normal forms", "[rws]") {
  auto t = cyclic(169);
  RewritingSystem r = confluent_rws(t);
  CHECK(r.count_normal_forms() == 169);
  CHECK(r.certify_confluence());
  for (Elem e = 0; e < t->order(); ++e) CHECK(r.normal_form(e).size() <= 24);
}
