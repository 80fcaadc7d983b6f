#include "perfect/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "perfect/cohomology.hpp"
#include "perfect/errors.hpp"
#include "perfect/groupcore.hpp"
#include "perfect/module.hpp"
#include "perfect/structure.hpp"

namespace perfect {

namespace {

std::map<std::string, std::uint64_t> const& budget_defaults() {
  static std::map<std::string, std::uint64_t> const d = {
      {"table_cap", kDefaultTableCap},
      {"rule_cap", 20000},
      {"closure_cap", 200},
      {"aut_nodes", 50000000},
      {"iso_nodes", 50000000},
      {"h2_enumeration", std::uint64_t(1) << 20},
      {"permrep_index", 320},
      {"permrep_points", 1000000},
      {"low_index", 20000000},
      {"reduce_table", 200000},
      {"reduce_candidates", 200},
      {"oracle_candidates", 4096},
  };
  return d;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::vector<unsigned> prime_divisors(std::uint64_t n) {
  std::vector<unsigned> out;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    out.push_back(static_cast<unsigned>(q));
    while (n % q == 0) n /= q;
  }
  if (n > 1) out.push_back(static_cast<unsigned>(n));
  return out;
}

std::string cell_file_name(std::uint64_t d, std::size_t fi, unsigned p, std::size_t mi) {
  return "cell_d" + std::to_string(d) + "_F" + std::to_string(fi) + "_p" + std::to_string(p) + "_m" +
         std::to_string(mi) + ".txt";
}

std::string read_file(std::filesystem::path const& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(std::filesystem::path const& path, std::string const& text) {
  std::filesystem::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    out << text;
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

// Whole H2 as coordinate vectors, base-p order.
std::vector<Vector> all_coordinates(unsigned p, std::size_t h, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < h; ++i) {
    total *= p;
    if (total > cap) throw BudgetExceeded("h2_enumeration", "H2 too large to enumerate");
  }
  std::vector<Vector> out;
  out.reserve(total);
  for (std::uint64_t code = 0; code < total; ++code) {
    Vector v(h, 0);
    std::uint64_t c = code;
    for (std::size_t i = 0; i < h; ++i) {
      v[i] = static_cast<Scalar>(c % p);
      c /= p;
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

std::uint64_t Budgets::get(std::string const& key) const {
  if (auto it = overrides_.find(key); it != overrides_.end()) return it->second;
  auto const& d = budget_defaults();
  auto it = d.find(key);
  if (it == d.end()) throw std::invalid_argument("unknown budget key " + key);
  return it->second;
}

void Budgets::set(std::string const& key, std::uint64_t value) {
  if (!budget_defaults().count(key)) throw std::invalid_argument("unknown budget key " + key);
  overrides_[key] = value;
}

void Budgets::parse(std::string const& assignment) {
  auto eq = assignment.find('=');
  if (eq == std::string::npos) throw std::invalid_argument("budget must be KEY=VALUE: " + assignment);
  std::string value = assignment.substr(eq + 1);
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(value, &used);
  } catch (std::exception const&) {
    used = 0;
  }
  if (value.empty() || used != value.size()) throw std::invalid_argument("bad budget value: " + value);
  set(assignment.substr(0, eq), v);
}

std::vector<std::string> Budgets::keys() {
  std::vector<std::string> out;
  for (auto const& [k, v] : budget_defaults()) out.push_back(k);
  return out;
}

void PipelineStats::merge(PipelineStats const& o) {
  rewriting_systems += o.rewriting_systems;
  rewriting_systems_certified += o.rewriting_systems_certified;
  extensions_lifted += o.extensions_lifted;
  extensions_with_exact_order += o.extensions_with_exact_order;
  not_perfect += o.not_perfect;
  not_canonical += o.not_canonical;
  duplicates += o.duplicates;
  cells += o.cells;
  cells_resumed += o.cells_resumed;
  gl_bound_skips += o.gl_bound_skips;
  degree_over_bound += o.degree_over_bound;
  isorej.isomorphism_calls += o.isorej.isomorphism_calls;
  isorej.fingerprint_decisions += o.isorej.fingerprint_decisions;
}

std::vector<DivisorStep> admissible_steps(std::uint64_t n) {
  std::vector<DivisorStep> out;
  for (unsigned p : prime_divisors(n)) {
    std::uint64_t q = 1;
    for (unsigned a = 1; n % (q * p) == 0; ++a) {
      q *= p;
      std::uint64_t d = n / q;
      if (d == 1) continue;
      if (a > 1 || d % p == 0) out.push_back({d, p, a});
    }
  }
  std::sort(out.begin(), out.end(), [](DivisorStep const& x, DivisorStep const& y) {
    return std::tie(x.d, x.p) < std::tie(y.d, y.p);
  });
  return out;
}

std::uint64_t gl_order(unsigned p, unsigned a) {
  std::uint64_t const q = ipow(p, a);
  std::uint64_t r = 1, pi = 1;
  for (unsigned i = 0; i < a; ++i) {
    std::uint64_t f = q - pi;
    if (f != 0 && r > UINT64_MAX / f) return UINT64_MAX;
    r *= f;
    pi *= p;
  }
  return r;
}

// ---------------------------------------------------------------------------

struct Pipeline::FactorCache {
  GroupRecord const* record = nullptr;
  std::shared_ptr<GroupTable const> table;
  std::optional<RewritingSystem> rws;
  AutomorphismGroup const* aut = nullptr;
  std::map<std::pair<unsigned, unsigned>, std::vector<IrreducibleModule>> deduped, all;
};

struct Pipeline::Cell {
  std::uint64_t n = 0;
  DivisorStep step;
  GroupRecord const* factor = nullptr;
  FactorCache* cache = nullptr;
  std::size_t module_index = 0;  // 1-based
  IrreducibleModule const* module = nullptr;
};

struct Pipeline::CellResult {
  std::vector<Candidate> candidates;
  PipelineStats stats;
};

Pipeline::Pipeline(PipelineOptions options) : options_(std::move(options)) {
  if (options_.seeds) {
    seeds_ = *options_.seeds;
    builtin_seeds_ = false;
    std::stable_sort(seeds_.begin(), seeds_.end(), [](Seed const& a, Seed const& b) {
      return std::tie(a.order, a.name) < std::tie(b.order, b.name);
    });
  } else {
    seeds_ = standard_seeds(1000000);
  }
  if (options_.jobs == 0) options_.jobs = 1;
}

Pipeline::~Pipeline() = default;

void Pipeline::log(std::string const& line) const {
  if (options_.log) *options_.log << line << '\n' << std::flush;
}

void Pipeline::verify_seeds(std::uint64_t n) {
  for (std::size_t i = 0; i < seeds_.size(); ++i) {
    Seed const& s = seeds_[i];
    if (n % s.order || verified_seeds_.count(s.name)) continue;
    PERFECT_CHECK(s.group.order() == s.order, "seed " + s.name + " has the wrong order");
    GroupData data(s.group, options_.budgets.get("table_cap"));
    auto const& normals = data.normals();
    PERFECT_CHECK(normals.size() == 2 && is_perfect(*data.table()), "seed " + s.name + " is not simple");
    for (std::size_t j = 0; j < i; ++j) {
      if (seeds_[j].order != s.order) continue;
      PERFECT_CHECK(!isomorphic(seeds_[j].group, s.group, options_.budgets.get("aut_nodes")),
                    "seeds " + seeds_[j].name + " and " + s.name + " are isomorphic");
    }
    verified_seeds_.insert(s.name);
  }
}

std::vector<GroupRecord> Pipeline::fitting_free(std::uint64_t n) {
  PERFECT_CHECK(n < ipow(60, 5), "fitting_free beyond the direct-product regime");
  if (builtin_seeds_ && n >= kSeedsCompleteBelow) {
    for (std::uint64_t m : missing_simple_orders()) {
      if (n % m == 0) {
        throw BudgetExceeded("seed_bound", "no seed for the simple group of order " + std::to_string(m) +
                                               " dividing " + std::to_string(n));
      }
    }
  }
  std::vector<std::vector<std::size_t>> choices;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t from, std::uint64_t rest) -> void {
    if (rest == 1) {
      if (!cur.empty()) choices.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < seeds_.size(); ++i) {
      if (seeds_[i].order > rest) break;
      if (rest % seeds_[i].order) continue;
      cur.push_back(i);
      self(self, i, rest / seeds_[i].order);
      cur.pop_back();
    }
  };
  rec(rec, 0, n);
  if (!choices.empty()) verify_seeds(n);
  std::vector<GroupRecord> out;
  for (auto const& c : choices) {
    GroupRecord r;
    r.order = n;
    std::vector<PermGroup const*> parts;
    std::string name;
    for (std::size_t i : c) {
      parts.push_back(&seeds_[i].group);
      if (!name.empty()) name += '*';
      name += seeds_[i].name;
    }
    r.group = c.size() == 1 ? seeds_[c[0]].group : direct_product(parts);
    r.construction.kind = c.size() == 1 ? Construction::Kind::seed : Construction::Kind::product;
    r.construction.name = name;
    out.push_back(std::move(r));
  }
  return out;
}

Pipeline::FactorCache& Pipeline::factor(GroupRecord const& f) {
  auto key = std::make_pair(f.order, f.index);
  auto& slot = factors_[key];
  if (slot) return *slot;
  auto fc = std::make_unique<FactorCache>();
  fc->record = &f;
  GroupData& data = f.data();
  fc->table = data.table();
  fc->rws.emplace(confluent_rws(fc->table, options_.budgets.get("rule_cap")));
  ++stats_.rewriting_systems;
  PERFECT_CHECK(fc->rws->count_normal_forms() == f.order,
                "rewriting system normal forms differ from |F| for " + std::to_string(f.order));
  PERFECT_CHECK(fc->rws->certify_confluence(), "rewriting system is not confluent");
  ++stats_.rewriting_systems_certified;
  fc->aut = &data.automorphisms(options_.budgets.get("aut_nodes"));
  slot = std::move(fc);
  return *slot;
}

std::vector<IrreducibleModule> const& Pipeline::modules(GroupRecord const& f, unsigned p, unsigned a,
                                                        bool twist_dedupe) {
  FactorCache& fc = factor(f);
  auto key = std::make_pair(p, a);
  auto& all = fc.all;
  if (!all.count(key)) {
    std::vector<IrreducibleModule> list;
    if (a == 1) {
      list.push_back(certify_irreducible(trivial_module(p, fc.table->num_generators(), 1)));
    } else {
      for (auto& m : irreducible_modules(*fc.table, p, a, options_.budgets.get("closure_cap"))) {
        if (m.module.dim == a) list.push_back(std::move(m));
      }
    }
    all.emplace(key, std::move(list));
  }
  if (!twist_dedupe) return all.at(key);
  auto& dd = fc.deduped;
  if (!dd.count(key)) {
    std::vector<IrreducibleModule> kept;
    for (auto const& m : all.at(key)) {
      bool seen = false;
      for (auto const& k : kept) {
        for (auto const& kappa : fc.aut->outer) {
          if (module_isomorphism(m, twisted_module(*fc.table, k.module, kappa))) {
            seen = true;
            break;
          }
        }
        if (seen) break;
      }
      if (!seen) kept.push_back(m);
    }
    dd.emplace(key, std::move(kept));
  }
  return dd.at(key);
}

std::vector<Pipeline::Cell> Pipeline::cells(std::uint64_t n, bool oracle) {
  std::vector<Cell> out;
  for (DivisorStep const& step : admissible_steps(n)) {
    PERFECT_CHECK(step.a > 1 || step.d % step.p == 0, "inadmissible divisor step");
    for (GroupRecord const& f : catalog_.records(step.d)) {
      if (step.a > 1) {
        // F must act through a quotient that fits into GL_a(p).
        std::uint64_t gl = gl_order(step.p, step.a);
        bool fits = false;
        for (auto const& k : f.data().normals()) {
          std::uint64_t index = f.order / k.sub.order();
          if (index > 1 && gl % index == 0) {
            fits = true;
            break;
          }
        }
        if (!fits) {
          ++stats_.gl_bound_skips;
          continue;
        }
      }
      FactorCache& fc = factor(f);
      auto const& mods = modules(f, step.p, step.a, !oracle);
      for (std::size_t i = 0; i < mods.size(); ++i) {
        out.push_back(Cell{n, step, &f, &fc, i + 1, &mods[i]});
      }
    }
  }
  return out;
}

Pipeline::CellResult Pipeline::run_cell(Cell const& cell, bool oracle) {
  static std::mutex catalog_mutex;
  CellResult res;
  ++res.stats.cells;
  RewritingSystem const& r = *cell.cache->rws;
  FpModule const& m = cell.module->module;
  unsigned const p = cell.step.p;
  CohomologyGroup h = h2(r, m);
  std::vector<Vector> reps;
  if (oracle) {
    reps = all_coordinates(p, h.h_dim(), options_.budgets.get("oracle_candidates"));
  } else {
    CPGroup cp = compatible_pairs(*cell.cache->table, *cell.cache->aut, *cell.module);
    std::vector<Matrix> actions;
    for (auto const& pair : cp.generators) actions.push_back(cp_coordinate_action(r, m, h, pair));
    reps = orbit_representatives(h, actions, options_.budgets.get("h2_enumeration")).representatives;
  }
  PermRepOptions popts;
  popts.max_index_cap = options_.budgets.get("permrep_index");
  popts.max_points = options_.budgets.get("permrep_points");
  popts.low_index_budget = options_.budgets.get("low_index");
  ReduceOptions ropts;
  ropts.table_cap = options_.budgets.get("reduce_table");
  ropts.candidates_per_orbit = options_.budgets.get("reduce_candidates");
  std::uint64_t const module_order = ipow(p, cell.step.a);
  for (std::size_t oi = 0; oi < reps.size(); ++oi) {
    Vector z = h.cocycle(reps[oi]);
    PermRep rep = faithful_perm_rep(r, m, z, popts);
    ++res.stats.extensions_lifted;
    PERFECT_CHECK(rep.group.order() == cell.n, "lifted extension has order " +
                                                   std::to_string(rep.group.order()) + ", expected " +
                                                   std::to_string(cell.n));
    ++res.stats.extensions_with_exact_order;
    if (!is_perfect(rep.group)) {
      ++res.stats.not_perfect;
      continue;
    }
    Candidate c;
    c.group = reduce_degree(rep.group, ropts);
    c.data = std::make_shared<GroupData>(c.group, options_.budgets.get("table_cap"));
    c.construction.kind = Construction::Kind::extension;
    c.construction.d = cell.step.d;
    c.construction.factor_index = cell.factor->index;
    c.construction.p = p;
    c.construction.a = cell.step.a;
    c.construction.module_index = cell.module_index;
    c.construction.orbit = oi + 1;
    if (!oracle) {
      std::lock_guard<std::mutex> lock(catalog_mutex);
      CanonicalResult cr = canonical_check(*c.data, module_order, cell.factor->index, catalog_, &res.stats.isorej,
                                           options_.budgets.get("iso_nodes"));
      if (!cr.canonical) {
        ++res.stats.not_canonical;
        continue;
      }
      c.matching_factors = cr.matching_factors;
    }
    c.fingerprint = fingerprint(*c.data, FingerprintLevel::cheap);
    res.candidates.push_back(std::move(c));
  }
  return res;
}

std::vector<Pipeline::CellResult> Pipeline::run_cells(std::vector<Cell> const& cs, bool oracle) {
  std::vector<CellResult> results(cs.size());
  std::optional<std::filesystem::path> dir;
  if (options_.out && !oracle && !cs.empty()) {
    dir = *options_.out / "checkpoints" / ("order_" + std::to_string(cs.front().n));
  }
  std::vector<std::size_t> todo;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    Cell const& c = cs[i];
    if (dir && options_.resume) {
      auto path = *dir / cell_file_name(c.step.d, c.factor->index, c.step.p, c.module_index);
      if (std::filesystem::exists(path)) {
        std::istringstream in(read_file(path));
        std::string head;
        std::getline(in, head);
        std::istringstream hs(head);
        std::string word;
        hs >> word;
        std::vector<std::size_t> matching;
        for (std::size_t k; hs >> k;) matching.push_back(k);
        std::string rest((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        auto recs = parse_order_file(rest);
        PERFECT_CHECK(word == "matching" && matching.size() == recs.size(), "corrupt checkpoint " + path.string());
        for (std::size_t k = 0; k < recs.size(); ++k) {
          Candidate cand;
          cand.group = recs[k].group;
          cand.data = std::make_shared<GroupData>(cand.group, options_.budgets.get("table_cap"));
          cand.fingerprint = recs[k].fingerprint;
          cand.construction = recs[k].construction;
          cand.matching_factors = matching[k];
          results[i].candidates.push_back(std::move(cand));
        }
        ++results[i].stats.cells_resumed;
        continue;
      }
    }
    todo.push_back(i);
  }

  auto save = [&](std::size_t i) {
    if (!dir) return;
    Cell const& c = cs[i];
    std::vector<GroupRecord> recs;
    std::string head = "matching";
    for (auto const& cand : results[i].candidates) {
      GroupRecord r;
      r.order = c.n;
      r.index = recs.size() + 1;
      r.group = cand.group;
      r.fingerprint = cand.fingerprint;
      r.construction = cand.construction;
      recs.push_back(std::move(r));
      head += ' ' + std::to_string(cand.matching_factors);
    }
    write_file_atomic(*dir / cell_file_name(c.step.d, c.factor->index, c.step.p, c.module_index),
                      head + '\n' + order_file_text(c.n, recs));
  };

  unsigned const jobs = std::min<std::size_t>(options_.jobs, std::max<std::size_t>(todo.size(), 1));
  if (jobs <= 1) {
    for (std::size_t i : todo) {
      results[i] = run_cell(cs[i], oracle);
      save(i);
    }
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::mutex save_mutex;
  std::exception_ptr error;
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (;;) {
        std::size_t k = next.fetch_add(1);
        if (k >= todo.size()) return;
        try {
          CellResult r = run_cell(cs[todo[k]], oracle);
          std::lock_guard<std::mutex> lock(save_mutex);
          results[todo[k]] = std::move(r);
          save(todo[k]);
        } catch (...) {
          std::lock_guard<std::mutex> lock(save_mutex);
          if (!error) error = std::current_exception();
          next = todo.size();
        }
      }
    });
  }
  for (auto& t : workers) t.join();
  if (error) std::rethrow_exception(error);
  return results;
}

std::vector<GroupRecord> const& Pipeline::perfect_groups_of_order(std::uint64_t n) {
  PERFECT_CHECK(n >= 2, "orders start at 2");
  PERFECT_CHECK(!catalog_.has_order(n), "order already published");
  struct Guard {
    PerfectCatalog& c;
    ~Guard() { c.set_read_guard(0); }
  } guard{catalog_};
  catalog_.set_read_guard(n);

  std::vector<GroupRecord> ff = fitting_free(n);
  std::vector<Cell> cs = cells(n, false);
  std::vector<CellResult> results = run_cells(cs, false);

  std::vector<Candidate> all;
  for (auto& r : results) {
    stats_.merge(r.stats);
    for (auto& c : r.candidates) all.push_back(std::move(c));
  }
  std::size_t before = all.size();
  all = dedupe(std::move(all), &stats_.isorej, options_.budgets.get("iso_nodes"));
  stats_.duplicates += before - all.size();

  std::vector<GroupRecord> recs;
  for (auto& c : all) {
    GroupRecord r;
    r.order = n;
    r.group = std::move(c.group);
    r.fingerprint = fingerprint(*c.data, FingerprintLevel::full);
    r.construction = std::move(c.construction);
    recs.push_back(std::move(r));
  }
  for (auto& r : ff) {
    r.fingerprint = fingerprint(r.group, FingerprintLevel::full);
    recs.push_back(std::move(r));
  }
  std::stable_sort(recs.begin(), recs.end(),
                   [](GroupRecord const& a, GroupRecord const& b) { return a.fingerprint < b.fingerprint; });
  for (std::size_t i = 0; i < recs.size(); ++i) {
    GroupRecord& r = recs[i];
    r.index = i + 1;
    PERFECT_CHECK(r.group.order() == n, "catalog record with the wrong order");
    if (r.construction.kind == Construction::Kind::extension) {
      PERFECT_CHECK(r.construction.a > 1 || r.construction.d % r.construction.p == 0,
                    "record built from an inadmissible step");
    }
    if (double(r.group.degree()) > 10.0 * std::sqrt(double(n))) {
      ++stats_.degree_over_bound;
      log("warning: order " + std::to_string(n) + " group " + std::to_string(i + 1) + " has degree " +
          std::to_string(r.group.degree()) + " above 10 sqrt(order)");
    }
  }
  catalog_.publish(n, std::move(recs));
  auto const& published = catalog_.orders().at(n);
  if (options_.out) {
    if (!published.empty()) catalog_.save_order(*options_.out, n);
    auto const ck = *options_.out / "checkpoints";
    std::filesystem::remove_all(ck / ("order_" + std::to_string(n)));
    if (std::filesystem::exists(ck) && std::filesystem::is_empty(ck)) std::filesystem::remove(ck);
  }
  if (!published.empty()) {
    log("order " + std::to_string(n) + ": " + std::to_string(published.size()) + " group(s)");
  }
  return published;
}

void Pipeline::enumerate_up_to(std::uint64_t max_order) {
  std::uint64_t start = 2;
  if (options_.out && options_.resume && std::filesystem::exists(*options_.out / "frontier.txt")) {
    factors_.clear();
    catalog_ = PerfectCatalog::load(*options_.out);
    start = std::max<std::uint64_t>(catalog_.frontier() + 1, 2);
    log("resuming after order " + std::to_string(catalog_.frontier()));
  }
  for (std::uint64_t n = start; n <= max_order; ++n) {
    if (!catalog_.has_order(n)) {
      try {
        perfect_groups_of_order(n);
      } catch (...) {
        if (options_.out) catalog_.save_frontier(*options_.out);
        throw;
      }
    }
    PERFECT_CHECK(n > catalog_.frontier(), "frontier must advance");
    catalog_.set_frontier(n);
    if (options_.out && (!catalog_.orders().at(n).empty() || n == max_order || n % 4096 == 0)) {
      catalog_.save_frontier(*options_.out);
    }
  }
}

void Pipeline::enumerate_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> divs;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    divs.push_back(d);
    if (d * d != n) divs.push_back(n / d);
  }
  std::sort(divs.begin(), divs.end());
  for (std::uint64_t d : divs) {
    if (d >= 2 && !catalog_.has_order(d)) perfect_groups_of_order(d);
  }
}

std::size_t Pipeline::oracle_count(std::uint64_t n) {
  struct Guard {
    PerfectCatalog& c;
    ~Guard() { c.set_read_guard(0); }
  } guard{catalog_};
  catalog_.set_read_guard(n);
  std::size_t fitting_free_count = fitting_free(n).size();
  std::vector<Cell> cs = cells(n, true);
  std::vector<Candidate> all;
  for (auto& r : run_cells(cs, true)) {
    for (auto& c : r.candidates) all.push_back(std::move(c));
  }
  IsorejStats local;
  return dedupe_pairwise(std::move(all), &local, options_.budgets.get("iso_nodes")).size() + fitting_free_count;
}

// ---------------------------------------------------------------------------

namespace {

std::string sci3(double log10_value) {
  double e = std::floor(log10_value);
  double mant = std::pow(10.0, log10_value - e);
  if (mant >= 9.995) {
    mant /= 10;
    e += 1;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2fe%+d", mant, static_cast<int>(e));
  return buf;
}

}  // namespace

double BoundsResult::lower() const { return std::pow(10.0, log10_lower); }
double BoundsResult::upper() const { return std::pow(10.0, log10_upper); }
std::string BoundsResult::lower_text() const { return sci3(log10_lower); }
std::string BoundsResult::upper_text() const { return sci3(log10_upper); }

BoundsResult holt_bounds(std::uint64_t n, double c) {
  if (n < 2) throw std::invalid_argument("bounds need n >= 2");
  double const l2 = std::log2(double(n));
  double const l10 = std::log10(double(n));
  BoundsResult b;
  b.log10_lower = l10 * (l2 * l2 / 108.0 - c * l2);
  b.log10_upper = l10 * (l2 * l2 / 48.0 + l2);
  return b;
}

double parse_rational(std::string const& text) {
  auto slash = text.find('/');
  std::size_t used = 0;
  if (slash == std::string::npos) {
    double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("bad number " + text);
    return v;
  }
  std::string a = text.substr(0, slash), b = text.substr(slash + 1);
  double num = std::stod(a, &used);
  if (used != a.size()) throw std::invalid_argument("bad number " + text);
  double den = std::stod(b, &used);
  if (used != b.size() || den == 0) throw std::invalid_argument("bad number " + text);
  return num / den;
}

DegreeSummary degree_summary(PerfectCatalog const& catalog, std::uint64_t first, std::uint64_t last) {
  std::vector<double> ratios;
  for (auto const& [n, recs] : catalog.orders()) {
    if (n < first || n > last) continue;
    for (auto const& r : recs) ratios.push_back(double(r.group.degree()) / std::sqrt(double(n)));
  }
  DegreeSummary s;
  s.count = ratios.size();
  if (ratios.empty()) return s;
  std::sort(ratios.begin(), ratios.end());
  auto q = [&](double f) { return ratios[std::size_t(f * double(ratios.size() - 1) + 0.5)]; };
  s.min = ratios.front();
  s.q10 = q(0.1);
  s.median = q(0.5);
  s.q90 = q(0.9);
  s.max = ratios.back();
  s.over_bound = std::size_t(std::count_if(ratios.begin(), ratios.end(), [](double r) { return r > 10.0; }));
  return s;
}

std::string stats_csv(PerfectCatalog const& catalog, std::uint64_t first, std::uint64_t last) {
  std::ostringstream out;
  out << "order,index,degree,degree_over_sqrt_order\n";
  char buf[128];
  for (auto const& [n, recs] : catalog.orders()) {
    if (n < first || n > last) continue;
    for (auto const& r : recs) {
      std::snprintf(buf, sizeof buf, "%llu,%zu,%zu,%.4f\n", static_cast<unsigned long long>(n), r.index,
                    r.group.degree(), double(r.group.degree()) / std::sqrt(double(n)));
      out << buf;
    }
  }
  DegreeSummary s = degree_summary(catalog, first, last);
  if (s.count) {
    std::snprintf(buf, sizeof buf,
                  "# count=%zu min=%.4f q10=%.4f median=%.4f q90=%.4f max=%.4f over_10=%zu\n", s.count, s.min,
                  s.q10, s.median, s.q90, s.max, s.over_bound);
    out << buf;
  }
  return out.str();
}

}  // namespace perfect
