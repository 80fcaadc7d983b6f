// Acceptance criteria; one PASS/FAIL line each. Usage: acceptance [k ...]
// With no arguments criteria 1 through 9 run; 10 runs only when named.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>

#include "perfect/cohomology.hpp"
#include "perfect/groupcore.hpp"
#include "perfect/pipeline.hpp"
#include "perfect/structure.hpp"

using namespace perfect;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string counts_text(std::map<std::uint64_t, std::size_t> const& m) {
  std::string s = "{";
  for (auto const& [n, k] : m) {
    if (s.size() > 1) s += ", ";
    s += std::to_string(n) + ":" + std::to_string(k);
  }
  return s + "}";
}

std::map<std::uint64_t, std::size_t> nonzero(PerfectCatalog const& c) {
  std::map<std::uint64_t, std::size_t> out;
  for (auto const& [n, k] : c.counts()) {
    if (k) out[n] = k;
  }
  return out;
}

// Shared run to 2000; criteria 5, 6 and 9 read it.
Pipeline& desk_run() {
  static std::unique_ptr<Pipeline> p;
  if (!p) {
    p = std::make_unique<Pipeline>();
    p->enumerate_up_to(2000);
  }
  return *p;
}

Outcome census() {
  std::map<std::uint64_t, std::size_t> expect{{60, 1},  {120, 1},  {168, 1},  {336, 1},
                                              {360, 1}, {504, 1},  {660, 1},  {960, 2},
                                              {1080, 1}, {1092, 1}, {1320, 1}, {1344, 2}};
  auto t0 = std::chrono::steady_clock::now();
  Pipeline p;
  p.enumerate_up_to(1400);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  auto got = nonzero(p.catalog());
  Outcome o;
  o.pass = got == expect && secs <= 600;
  o.detail = "got " + counts_text(got) + " expected " + counts_text(expect) + " in " +
             std::to_string(int(secs)) + "s";
  for (auto const& [n, k] : got) {
    if (!expect.count(n)) o.detail += "; extra order " + std::to_string(n) + ":" + std::to_string(k);
  }
  for (auto const& [n, k] : expect) {
    if (!got.count(n)) o.detail += "; missing order " + std::to_string(n);
  }
  return o;
}

Outcome oracle() {
  auto t0 = std::chrono::steady_clock::now();
  Pipeline& p = desk_run();
  std::size_t checked = 0, bad = 0;
  std::string where;
  for (std::uint64_t n = 2; n <= 2000; ++n) {
    std::size_t fast = p.catalog().orders().at(n).size();
    std::size_t slow = p.oracle_count(n);
    if (fast || slow) ++checked;
    if (fast != slow) {
      ++bad;
      where += " " + std::to_string(n) + "(" + std::to_string(fast) + " vs " + std::to_string(slow) + ")";
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {bad == 0 && secs <= 1800, std::to_string(checked) + " nonempty orders, " + std::to_string(bad) +
                                        " mismatches" + where + " in " + std::to_string(int(secs)) + "s"};
}

Outcome schur() {
  auto t = std::make_shared<GroupTable const>(GroupTable::from_perm_group(alternating_group(5)));
  RewritingSystem r = confluent_rws(t);
  std::vector<std::size_t> dims;
  for (unsigned p : {2u, 3u, 5u}) dims.push_back(h2(r, trivial_module(p, t->num_generators())).h_dim());
  return {dims == std::vector<std::size_t>{1, 0, 0},
          "dim H2(A5, F_p) for p=2,3,5: " + std::to_string(dims[0]) + "," + std::to_string(dims[1]) + "," +
              std::to_string(dims[2])};
}

// A subgroup of order 60 meeting N trivially. Any such group maps onto E/N = A5,
// so it is generated by x, y with x^2 = y^3 = (xy)^5 = 1.
bool has_complement(GroupTable const& g, ClassData const& cd, Subgroup const& n) {
  std::size_t target = g.order() / n.order();
  for (auto const& cls : cd.classes) {
    if (cls.element_order != 2 || n.contains(cls.representative)) continue;
    Elem x = cls.representative;
    for (Elem y = 0; y < g.order(); ++y) {
      if (g.element_order(y) != 3 || g.element_order(g.mul(x, y)) != 5) continue;
      auto s = generate_bounded(g, {x, y}, target);
      if (!s || s->order() != target) continue;
      if (intersection(g, *s, n).order() == 1) return true;
    }
  }
  return false;
}

Outcome order960() {
  Pipeline p;
  p.enumerate_divisors(960);
  auto const& recs = p.catalog().records(960);
  std::size_t with = 0;
  std::string detail = std::to_string(recs.size()) + " groups;";
  for (auto const& r : recs) {
    GroupData d(r.group);
    auto const& g = *d.table();
    Subgroup const* n16 = nullptr;
    auto minimal = minimal_normal_subgroups(g, d.classes());
    for (auto const& m : minimal) {
      if (m.order() == 16) n16 = &m;
    }
    if (!n16) {
      detail += " group " + std::to_string(r.index) + " has no minimal normal subgroup of order 16;";
      continue;
    }
    bool c = has_complement(g, d.classes(), *n16);
    with += c;
    detail += " group " + std::to_string(r.index) + (c ? " splits;" : " does not split;");
  }
  detail += " complements found in " + std::to_string(with);
  return {recs.size() == 2 && with == 1, detail};
}

Outcome order_law() {
  auto const& s = desk_run().stats();
  std::size_t bad = 0;
  for (auto const& [n, recs] : desk_run().catalog().orders()) {
    for (auto const& r : recs) bad += r.group.order() != n;
  }
  return {s.extensions_lifted > 0 && s.extensions_lifted == s.extensions_with_exact_order && bad == 0,
          std::to_string(s.extensions_with_exact_order) + "/" + std::to_string(s.extensions_lifted) +
              " lifted extensions with order |F| p^a; " + std::to_string(bad) + " catalog records off"};
}

Outcome confluence() {
  auto const& s = desk_run().stats();
  // Rebuild every system independently as well.
  std::size_t total = 0, good = 0;
  for (auto const& [n, recs] : desk_run().catalog().orders()) {
    if (n > 1000) continue;  // factors used below order 2000
    for (auto const& r : recs) {
      auto t = std::make_shared<GroupTable const>(GroupTable::from_perm_group(r.group));
      RewritingSystem rws = confluent_rws(t);
      ++total;
      good += rws.count_normal_forms() == n && rws.certify_confluence();
    }
  }
  return {s.rewriting_systems > 0 && s.rewriting_systems == s.rewriting_systems_certified && total == good,
          std::to_string(s.rewriting_systems_certified) + "/" + std::to_string(s.rewriting_systems) +
              " pipeline systems certified; " + std::to_string(good) + "/" + std::to_string(total) +
              " rebuilt systems with |F| normal forms and resolving critical pairs"};
}

Outcome bounds() {
  BoundsResult b = holt_bounds(2000000);
  double lo = std::stod(b.lower_text()), hi = std::stod(b.upper_text());
  double rlo = std::abs(lo / 1.8e-15 - 1), rhi = std::abs(std::log10(hi) - std::log10(2.6e189));
  bool ok = rlo <= 0.05 && rhi <= std::log10(1.05);
  return {ok, "lower=" + b.lower_text() + " upper=" + b.upper_text()};
}

std::map<std::string, std::string> read_dir(fs::path const& dir) {
  std::map<std::string, std::string> out;
  for (auto const& e : fs::directory_iterator(dir)) {
    std::ifstream in(e.path(), std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    out[e.path().filename().string()] = ss.str();
  }
  return out;
}

Outcome determinism() {
  fs::path base = fs::temp_directory_path() / "perfect_acceptance_det";
  fs::remove_all(base);
  for (char const* sub : {"a", "b"}) {
    PipelineOptions o;
    o.out = base / sub;
    Pipeline p(o);
    p.enumerate_up_to(1400);
  }
  auto a = read_dir(base / "a"), b = read_dir(base / "b");
  fs::remove_all(base);
  return {a == b && !a.empty(), std::to_string(a.size()) + " files, " + (a == b ? "identical" : "different")};
}

Outcome degrees() {
  DegreeSummary s = degree_summary(desk_run().catalog());
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu groups, max degree/sqrt(order) %.3f, median %.3f, %zu above 10", s.count,
                s.max, s.median, s.over_bound);
  return {s.count > 0 && s.over_bound == 0, buf};
}

Outcome order61440() {
  Pipeline p;
  p.enumerate_divisors(61440);
  std::size_t k = p.catalog().records(61440).size();
  return {k == 98, std::to_string(k) + " groups of order 61440"};
}

}  // namespace

int main(int argc, char** argv) {
  std::map<int, std::pair<char const*, std::function<Outcome()>>> criteria{
      {1, {"small-order census to 1400", census}},
      {2, {"oracle equivalence to 2000", oracle}},
      {3, {"Schur multiplier of A5", schur}},
      {4, {"order 960 structure", order960}},
      {5, {"extension order law", order_law}},
      {6, {"confluence certificates", confluence}},
      {7, {"bounds at 2e6", bounds}},
      {8, {"determinism", determinism}},
      {9, {"degree statistics", degrees}},
      {10, {"order 61440", order61440}},
  };
  std::vector<int> run;
  for (int i = 1; i < argc; ++i) run.push_back(std::stoi(argv[i]));
  if (run.empty()) run = {1, 2, 3, 4, 5, 6, 7, 8, 9};
  int failures = 0;
  for (int k : run) {
    auto it = criteria.find(k);
    if (it == criteria.end()) {
      std::cerr << "unknown criterion " << k << '\n';
      return 2;
    }
    Outcome o;
    try {
      o = it->second.second();
    } catch (std::exception const& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << "criterion " << k << " [" << it->second.first << "]: " << (o.pass ? "PASS" : "FAIL") << " - "
              << o.detail << std::endl;
    failures += !o.pass;
  }
  return failures ? 1 : 0;
}
