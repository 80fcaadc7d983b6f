#ifndef PERFECT_PIPELINE_HPP_
#define PERFECT_PIPELINE_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "perfect/catalog.hpp"
#include "perfect/compat.hpp"
#include "perfect/isorej.hpp"
#include "perfect/permrep.hpp"
#include "perfect/rws.hpp"
#include "perfect/seeds.hpp"

namespace perfect {

// Named caps, set from the command line as KEY=VALUE.
class Budgets {
 public:
  std::uint64_t get(std::string const& key) const;
  void set(std::string const& key, std::uint64_t value);
  // Throws std::invalid_argument on unknown keys or malformed input.
  void parse(std::string const& assignment);
  static std::vector<std::string> keys();

 private:
  std::map<std::string, std::uint64_t> overrides_;
};

struct PipelineOptions {
  std::optional<std::filesystem::path> out;  // catalog and checkpoints
  bool resume = false;
  unsigned jobs = 1;
  Budgets budgets;
  std::optional<std::vector<Seed>> seeds;  // built-in list when absent
  std::ostream* log = nullptr;
};

struct PipelineStats {
  std::uint64_t rewriting_systems = 0;
  std::uint64_t rewriting_systems_certified = 0;
  std::uint64_t extensions_lifted = 0;
  std::uint64_t extensions_with_exact_order = 0;
  std::uint64_t not_perfect = 0;
  std::uint64_t not_canonical = 0;
  std::uint64_t duplicates = 0;
  std::uint64_t cells = 0;
  std::uint64_t cells_resumed = 0;
  std::uint64_t gl_bound_skips = 0;
  std::uint64_t degree_over_bound = 0;  // degree > 10 sqrt(order)
  IsorejStats isorej;

  void merge(PipelineStats const& other);
};

// One (d, p, a) with n = d p^a and (a > 1 or p | d).
struct DivisorStep {
  std::uint64_t d = 0;
  unsigned p = 0;
  unsigned a = 0;
};
std::vector<DivisorStep> admissible_steps(std::uint64_t n);

// |GL_a(p)|, saturating at UINT64_MAX.
std::uint64_t gl_order(unsigned p, unsigned a);

class Pipeline {
 public:
  explicit Pipeline(PipelineOptions options = {});
  ~Pipeline();

  PerfectCatalog const& catalog() const noexcept { return catalog_; }
  PipelineStats const& stats() const noexcept { return stats_; }
  std::vector<Seed> const& seeds() const noexcept { return seeds_; }

  // Direct products of seeds of total order n, ascending by factor list.
  std::vector<GroupRecord> fitting_free(std::uint64_t n);

  // Builds and publishes order n; every proper divisor must already be done.
  std::vector<GroupRecord> const& perfect_groups_of_order(std::uint64_t n);
  void enumerate_up_to(std::uint64_t max_order);
  // Every divisor of n ascending, n included.
  void enumerate_divisors(std::uint64_t n);

  // Every H2 element of every module, lifted, filtered and reduced by pairwise
  // isomorphism. Reads factors from the published catalog.
  std::size_t oracle_count(std::uint64_t n);

  struct Cell;
  struct CellResult;
  struct FactorCache;

 private:
  FactorCache& factor(GroupRecord const& f);
  std::vector<IrreducibleModule> const& modules(GroupRecord const& f, unsigned p, unsigned a,
                                                bool twist_dedupe);
  std::vector<Cell> cells(std::uint64_t n, bool oracle);
  CellResult run_cell(Cell const& cell, bool oracle);
  std::vector<CellResult> run_cells(std::vector<Cell> const& cells, bool oracle);
  void verify_seeds(std::uint64_t n);
  void log(std::string const& line) const;

  PipelineOptions options_;
  std::vector<Seed> seeds_;
  bool builtin_seeds_ = true;
  std::set<std::string> verified_seeds_;
  PerfectCatalog catalog_;
  PipelineStats stats_;
  std::map<std::pair<std::uint64_t, std::size_t>, std::unique_ptr<FactorCache>> factors_;
};

struct BoundsResult {
  double log10_lower = 0;
  double log10_upper = 0;
  double lower() const;
  double upper() const;
  std::string lower_text() const;  // three significant figures, e.g. 1.84e-15
  std::string upper_text() const;
};
// n^(log2(n)^2/108 - c log2(n)) and n^(log2(n)^2/48 + log2(n)).
BoundsResult holt_bounds(std::uint64_t n, double c = 11.0 / 36.0);
// "a/b" or a decimal.
double parse_rational(std::string const& text);

struct DegreeSummary {
  std::size_t count = 0;
  std::size_t over_bound = 0;  // ratio > 10
  double min = 0, q10 = 0, median = 0, q90 = 0, max = 0;
};
DegreeSummary degree_summary(PerfectCatalog const& catalog, std::uint64_t first = 1,
                             std::uint64_t last = UINT64_MAX);
// Header, one row per group, then a '#' summary line when rows exist.
std::string stats_csv(PerfectCatalog const& catalog, std::uint64_t first = 1,
                      std::uint64_t last = UINT64_MAX);

}  // namespace perfect

#endif  // PERFECT_PIPELINE_HPP_
