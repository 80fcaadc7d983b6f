#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"
#include "perfect/catalog.hpp"
#include "perfect/groupcore.hpp"
#include "perfect/isorej.hpp"
#include "perfect/pipeline.hpp"

using namespace perfect;
using namespace perfect::testing;

namespace {

Candidate candidate(PermGroup g, std::size_t matching = 1) {
  Candidate c;
  c.group = std::move(g);
  c.data = std::make_shared<GroupData>(c.group);
  c.fingerprint = fingerprint(*c.data, FingerprintLevel::cheap);
  c.matching_factors = matching;
  return c;
}

}  // namespace

TEST_CASE("fingerprint text round trip", "[isorej]") {
  for (auto const& g : {alternating_group(5), psl2(7), symmetric_group(4)}) {
    for (auto level : {FingerprintLevel::cheap, FingerprintLevel::full}) {
      Fingerprint f = fingerprint(g, level);
      CHECK(Fingerprint::parse(f.to_string()) == f);
      CHECK(f.full == (level == FingerprintLevel::full));
    }
  }
}

TEST_CASE("fingerprint contents", "[isorej]") {
  Fingerprint f = fingerprint(alternating_group(5), FingerprintLevel::full);
  CHECK(f.order == 60);
  CHECK(f.derived_series == std::vector<std::uint64_t>{60});
  CHECK(f.class_count == 5);
  REQUIRE(f.aut_order);
  CHECK(*f.aut_order == 120);
  Fingerprint s4 = fingerprint(symmetric_group(4), FingerprintLevel::cheap);
  CHECK(s4.derived_series == std::vector<std::uint64_t>{24, 12, 4, 1});
}

TEST_CASE("fingerprint compatibility treats absent parts as wildcards", "[isorej]") {
  Fingerprint a = fingerprint(psl2(7), FingerprintLevel::cheap);
  Fingerprint b = fingerprint(psl2(7), FingerprintLevel::full);
  CHECK(fingerprints_compatible(a, b));
  CHECK(cheap_parts_equal(a, b));
  Fingerprint c = fingerprint(alternating_group(5), FingerprintLevel::full);
  CHECK_FALSE(fingerprints_compatible(b, c));
}

TEST_CASE("pairwise dedupe merges isomorphic copies", "[isorej]") {
  std::mt19937_64 rng(3);
  std::vector<Candidate> cs;
  cs.push_back(candidate(alternating_group(5)));
  cs.push_back(candidate(psl2(5)));
  cs.push_back(candidate(relabel(alternating_group(5), rng)));
  cs.push_back(candidate(psl2(7)));
  IsorejStats st;
  auto out = dedupe_pairwise(cs, &st);
  CHECK(out.size() == 2);
  CHECK(st.isomorphism_calls >= 1);
}

TEST_CASE("canonical dedupe only compares candidates with several matching factors", "[isorej]") {
  std::vector<Candidate> cs;
  cs.push_back(candidate(alternating_group(5), 1));
  cs.push_back(candidate(psl2(5), 1));
  CHECK(dedupe(cs).size() == 2);
  cs[0].matching_factors = cs[1].matching_factors = 2;
  CHECK(dedupe(cs).size() == 1);
}

TEST_CASE("catalog identification and canonical check", "[isorej]") {
  Pipeline p;
  p.enumerate_up_to(960);
  auto const& cat = p.catalog();
  auto t = table_of(psl2(4));
  ClassData cd = conjugacy_classes(*t);
  CHECK(identify(*t, cd, cat) == 1);
  CHECK(compare_with_catalog(*t, cd, cat, 1) == 0);
  for (auto const& r : cat.records(960)) {
    GroupData d(r.group);
    CanonicalResult cr = canonical_check(d, 16, 1, cat);
    CHECK(cr.canonical);
    CHECK(cr.matching_factors == 1);
  }
  GroupData sl(cat.records(120)[0].group);
  CHECK(canonical_check(sl, 2, 1, cat).canonical);
}

TEST_CASE("catalog order files round trip", "[isorej]") {
  Pipeline p;
  p.enumerate_up_to(1344);
  for (std::uint64_t n : {60u, 960u, 1344u}) {
    auto const& recs = p.catalog().records(n);
    std::string text = order_file_text(n, recs);
    auto back = parse_order_file(text);
    REQUIRE(back.size() == recs.size());
    CHECK(order_file_text(n, back) == text);
    for (std::size_t i = 0; i < recs.size(); ++i) {
      CHECK(back[i].group.order() == n);
      CHECK(back[i].fingerprint == recs[i].fingerprint);
      CHECK(back[i].construction.to_string() == recs[i].construction.to_string());
    }
  }
  CHECK(order_file_text(60, p.catalog().records(60)).rfind("PERFECT v1 order=60 count=1\n", 0) == 0);
}

TEST_CASE("construction text", "[isorej]") {
  Construction c;
  c.kind = Construction::Kind::extension;
  c.d = 60;
  c.factor_index = 1;
  c.p = 2;
  c.a = 4;
  c.orbit = 1;
  CHECK(c.to_string() == "d=60 F=60/1 p=2 a=4 orbit=1");
  CHECK(Construction::parse(c.to_string()).to_string() == c.to_string());
  CHECK(Construction::parse("seed A5").name == "A5");
  CHECK(Construction::parse("product A5*L2(7)").kind == Construction::Kind::product);
}
