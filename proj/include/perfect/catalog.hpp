#ifndef PERFECT_CATALOG_HPP_
#define PERFECT_CATALOG_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "perfect/groupcore.hpp"

namespace perfect {

// Isomorphism invariants, compared lexicographically in field order.
// Absent optional components sort first and match anything in equality
// tests (see fingerprints_compatible).
struct Fingerprint {
  std::uint64_t order = 0;
  std::vector<std::uint64_t> derived_series;  // orders along the derived series
  std::size_t class_count = 0;
  std::vector<std::pair<std::uint32_t, std::uint64_t>> class_invariants;  // (element order, class size)
  bool full = false;
  std::optional<std::vector<std::pair<std::uint64_t, bool>>> normals;      // (order, is_perfect)
  std::optional<std::vector<std::pair<std::uint64_t, std::uint64_t>>> low_index;  // (index, class count)
  std::optional<std::uint64_t> aut_order;

  std::string to_string() const;
  static Fingerprint parse(std::string const& text);
  friend bool operator==(Fingerprint const&, Fingerprint const&) = default;
  friend auto operator<=>(Fingerprint const&, Fingerprint const&) = default;
};

// Equal on every component present in both.
bool fingerprints_compatible(Fingerprint const& a, Fingerprint const& b);
bool cheap_parts_equal(Fingerprint const& a, Fingerprint const& b);

struct Construction {
  enum class Kind { seed, product, extension };
  Kind kind = Kind::seed;
  std::string name;  // seed name, or factor names joined by '*'
  std::uint64_t d = 0;
  std::size_t factor_index = 0;  // 1-based position of F in its order's list
  unsigned p = 0;
  unsigned a = 0;
  std::size_t module_index = 0;
  std::size_t orbit = 0;

  std::string to_string() const;
  static Construction parse(std::string const& text);
};

struct GroupRecord {
  std::uint64_t order = 0;
  std::size_t index = 0;  // 1-based
  PermGroup group;
  Fingerprint fingerprint;
  Construction construction;

  // Lazily built element table and caches; not synchronized.
  GroupData& data() const;

 private:
  mutable std::shared_ptr<GroupData> data_;
};

class PerfectCatalog {
 public:
  // Records of one order, sorted by index; empty if none or not yet built.
  std::vector<GroupRecord> const& records(std::uint64_t n) const;
  void publish(std::uint64_t n, std::vector<GroupRecord> records);
  bool has_order(std::uint64_t n) const { return orders_.count(n) > 0; }
  std::uint64_t frontier() const noexcept { return frontier_; }
  void set_frontier(std::uint64_t n) { frontier_ = n; }
  std::map<std::uint64_t, std::vector<GroupRecord>> const& orders() const noexcept { return orders_; }
  // Every order with at least one group.
  std::map<std::uint64_t, std::size_t> counts() const;

  // Divisor-read instrumentation: when set, records() of an order not
  // dividing the guard (or equal to it) throws InvariantViolation.
  void set_read_guard(std::uint64_t n) { guard_ = n; }

  // One text file per order in `dir`, plus a frontier file.
  void save_order(std::filesystem::path const& dir, std::uint64_t n) const;
  void save_frontier(std::filesystem::path const& dir) const;
  static PerfectCatalog load(std::filesystem::path const& dir);

 private:
  std::map<std::uint64_t, std::vector<GroupRecord>> orders_;
  std::uint64_t frontier_ = 0;
  std::uint64_t guard_ = 0;
};

std::string order_file_text(std::uint64_t n, std::vector<GroupRecord> const& records);
std::vector<GroupRecord> parse_order_file(std::string const& text);

}  // namespace perfect

#endif  // PERFECT_CATALOG_HPP_
