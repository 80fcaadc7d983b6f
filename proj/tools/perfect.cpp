#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "perfect/errors.hpp"
#include "perfect/pipeline.hpp"

namespace fs = std::filesystem;
using namespace perfect;

namespace {

struct Range {
  std::uint64_t first = 1;
  std::uint64_t last = UINT64_MAX;
};

Range parse_range(std::string const& text) {
  Range r;
  if (text.empty()) return r;
  auto dots = text.find("..");
  if (dots == std::string::npos) throw std::invalid_argument("range must be A..B");
  std::string a = text.substr(0, dots), b = text.substr(dots + 2);
  if (!a.empty()) r.first = std::stoull(a);
  if (!b.empty()) r.last = std::stoull(b);
  if (r.first > r.last) throw std::invalid_argument("empty range " + text);
  return r;
}

PerfectCatalog load_catalog(fs::path const& dir) {
  if (!fs::exists(dir / "frontier.txt")) throw std::runtime_error("no catalog in " + dir.string());
  return PerfectCatalog::load(dir);
}

void print_order(PerfectCatalog const& c, std::uint64_t n) {
  auto const& recs = c.orders().at(n);
  std::cout << "order " << n << " count " << recs.size() << '\n';
  for (auto const& r : recs) {
    std::cout << "  " << n << '/' << r.index << " degree " << r.group.degree() << "  "
              << r.construction.to_string() << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumerate perfect groups by order"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string seed_file;
  std::vector<std::string> budgets;
  bool quiet = false;
  app.add_option("--seed-file", seed_file, "Simple group seeds (replaces the built-in list)")
      ->check(CLI::ExistingFile);
  app.add_option("--budget", budgets, "Cap override KEY=VALUE (repeatable)");
  app.add_flag("-q,--quiet", quiet, "No progress output");

  std::uint64_t max_order = 0;
  unsigned jobs = 1;
  std::string out = "catalog";
  bool resume = false;
  auto* enumerate = app.add_subcommand("enumerate", "Build the catalog for orders 2..N");
  enumerate->add_option("--max-order", max_order)->required();
  enumerate->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  enumerate->add_option("--out", out);
  enumerate->add_flag("--resume", resume);

  std::uint64_t single = 0;
  std::string order_out;
  auto* order_cmd = app.add_subcommand("order", "Perfect groups of one order");
  order_cmd->add_option("N", single)->required();
  order_cmd->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  order_cmd->add_option("--out", order_out);

  std::string range_text;
  std::string counts_dir = "catalog";
  auto* counts = app.add_subcommand("counts", "Counts per order as TSV");
  counts->add_option("--range", range_text, "A..B");
  counts->add_option("--out", counts_dir);

  std::uint64_t bound_n = 0;
  std::string c_text = "11/36";
  auto* bounds = app.add_subcommand("bounds", "Lower and upper bounds for the number of perfect groups");
  bounds->add_option("N", bound_n)->required()->check(CLI::Range(std::uint64_t(2), UINT64_MAX));
  bounds->add_option("--c", c_text, "Rational constant of the lower bound");

  std::string stats_dir = "catalog";
  std::string stats_range;
  auto* stats = app.add_subcommand("stats", "Permutation degree statistics as CSV");
  stats->add_option("--out", stats_dir);
  stats->add_option("--range", stats_range, "A..B");

  bool oracle = false;
  std::uint64_t verify_max = 0;
  auto* verify = app.add_subcommand("verify", "Compare the fast path with the slow oracle path");
  verify->add_flag("--oracle", oracle)->required();
  verify->add_option("--max-order", verify_max)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    PipelineOptions opts;
    for (auto const& b : budgets) opts.budgets.parse(b);
    if (!seed_file.empty()) opts.seeds = load_seed_file(seed_file);
    if (!quiet) opts.log = &std::cerr;
    opts.jobs = jobs;

    if (*enumerate) {
      opts.out = out;
      opts.resume = resume;
      Pipeline p(opts);
      p.enumerate_up_to(max_order);
      std::size_t total = 0;
      for (auto const& [n, k] : p.catalog().counts()) total += k;
      std::cout << "frontier " << p.catalog().frontier() << " total " << total << '\n';
    } else if (*order_cmd) {
      if (!order_out.empty()) opts.out = order_out;
      Pipeline p(opts);
      p.enumerate_divisors(single);
      print_order(p.catalog(), single);
    } else if (*counts) {
      Range r = parse_range(range_text);
      PerfectCatalog c = load_catalog(counts_dir);
      std::size_t total = 0;
      std::cout << "order\tcount\n";
      for (auto const& [n, k] : c.counts()) {
        if (n < r.first || n > r.last || k == 0) continue;
        std::cout << n << '\t' << k << '\n';
        total += k;
      }
      std::cout << "total\t" << total << '\n';
    } else if (*bounds) {
      BoundsResult b = holt_bounds(bound_n, parse_rational(c_text));
      std::cout << "n=" << bound_n << " lower=" << b.lower_text() << " upper=" << b.upper_text() << '\n';
    } else if (*stats) {
      Range r = parse_range(stats_range);
      PerfectCatalog c = load_catalog(stats_dir);
      std::cout << stats_csv(c, r.first, r.last);
      DegreeSummary s = degree_summary(c, r.first, r.last);
      if (s.over_bound) {
        std::cerr << "warning: " << s.over_bound << " group(s) with degree above 10 sqrt(order)\n";
      }
    } else if (*verify) {
      (void)oracle;
      Pipeline p(opts);
      p.enumerate_up_to(verify_max);
      std::size_t mismatches = 0;
      for (std::uint64_t n = 2; n <= verify_max; ++n) {
        std::size_t fast = p.catalog().orders().at(n).size();
        std::size_t slow = p.oracle_count(n);
        if (fast || slow) std::cout << n << "\tfast " << fast << "\toracle " << slow << '\n';
        if (fast != slow) ++mismatches;
      }
      std::cout << (mismatches ? "MISMATCH " : "OK ") << mismatches << '\n';
      if (mismatches) return 3;
    }
  } catch (BudgetExceeded const& e) {
    std::cerr << "budget exceeded [" << e.key() << "]: " << e.what() << '\n';
    return 2;
  } catch (InvariantViolation const& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return 3;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
