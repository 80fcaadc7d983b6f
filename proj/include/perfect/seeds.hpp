#ifndef PERFECT_SEEDS_HPP_
#define PERFECT_SEEDS_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "perfect/permgroup.hpp"

namespace perfect {

struct Seed {
  std::string name;
  std::uint64_t order = 0;
  PermGroup group;
};

// The built-in list covers every nonabelian simple group of order below this
// bound; larger seeds present are a partial selection.
inline constexpr std::uint64_t kSeedsCompleteBelow = 29120;
// Orders of simple groups below 10^6 not in the built-in list.
std::vector<std::uint64_t> const& missing_simple_orders();

// Built-in nonabelian simple groups of order <= max_order, sorted by order
// then name; each order is verified on construction.
std::vector<Seed> standard_seeds(std::uint64_t max_order);

// Text format, repeated: "seed <name> <order> <degree>", one line of 1-based
// images per generator, then "end".
std::vector<Seed> load_seed_file(std::filesystem::path const& path);
std::string seed_file_text(std::vector<Seed> const& seeds);

// Direct product on disjoint point sets, generators concatenated.
PermGroup direct_product(std::vector<PermGroup const*> const& factors);

// Galois field of prime power order, elements coded 0..q-1 (base-p digits of
// the coefficient vector).
class GaloisField {
 public:
  explicit GaloisField(unsigned q);
  unsigned order() const noexcept { return q_; }
  unsigned characteristic() const noexcept { return p_; }
  unsigned add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
  unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
  unsigned neg(unsigned a) const { return neg_[a]; }
  unsigned inv(unsigned a) const { return inv_[a]; }
  unsigned sub(unsigned a, unsigned b) const { return add(a, neg(b)); }
  unsigned pow(unsigned a, std::uint64_t e) const;
  unsigned primitive() const noexcept { return primitive_; }

 private:
  unsigned q_, p_, k_;
  std::vector<unsigned> add_, mul_, neg_, inv_;
  unsigned primitive_ = 1;
};

PermGroup alternating_group(unsigned n);
PermGroup psl2(unsigned q);
PermGroup psl3(unsigned q);
PermGroup psu3_3();
PermGroup psp4_3();
PermGroup mathieu11();
PermGroup mathieu12();

}  // namespace perfect

#endif  // PERFECT_SEEDS_HPP_
