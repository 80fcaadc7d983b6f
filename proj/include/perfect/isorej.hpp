#ifndef PERFECT_ISOREJ_HPP_
#define PERFECT_ISOREJ_HPP_

#include <cstdint>
#include <memory>
#include <vector>

#include "perfect/catalog.hpp"

namespace perfect {

enum class FingerprintLevel { cheap, full };

struct FingerprintOptions {
  std::size_t low_index_cap = 16;
  std::uint64_t low_index_budget = 2000000;
  std::uint64_t aut_budget = 5000000;
};

Fingerprint fingerprint(GroupTable const& g, ClassData const& cd, FingerprintLevel level,
                        FingerprintOptions const& options = {});
Fingerprint fingerprint(GroupData& g, FingerprintLevel level, FingerprintOptions const& options = {});
Fingerprint fingerprint(PermGroup const& g, FingerprintLevel level, FingerprintOptions const& options = {});

struct IsorejStats {
  std::uint64_t isomorphism_calls = 0;
  std::uint64_t fingerprint_decisions = 0;
};

// Position of the group g among the catalog records of its order relative to
// `reference` (1-based index): -1 if smaller, 0 if equal, 1 if larger.
// Fingerprints settle the question when they can; explicit isomorphism tests
// run otherwise. Throws InvariantViolation if g matches no record.
int compare_with_catalog(GroupTable const& g, ClassData const& cd, PerfectCatalog const& catalog,
                         std::size_t reference, IsorejStats* stats = nullptr,
                         std::uint64_t node_budget = 50000000);
// Exact 1-based catalog index of g.
std::size_t identify(GroupTable const& g, ClassData const& cd, PerfectCatalog const& catalog,
                     IsorejStats* stats = nullptr, std::uint64_t node_budget = 50000000);

struct CanonicalResult {
  bool canonical = false;
  // Minimal normal subgroups of order |M| with factor group of type F.
  std::size_t matching_factors = 0;
  std::string reason;
};

// Conditions: M has the least order among minimal normal subgroups, and the
// factor by M has the least catalog index among factors by minimal normal
// subgroups of that order.
CanonicalResult canonical_check(GroupData& e, std::uint64_t module_order, std::size_t factor_index,
                                PerfectCatalog const& catalog, IsorejStats* stats = nullptr,
                                std::uint64_t node_budget = 50000000);

struct Candidate {
  PermGroup group;
  std::shared_ptr<GroupData> data;
  Fingerprint fingerprint;
  Construction construction;
  std::size_t matching_factors = 1;
};

// Keeps the first candidate of each isomorphism type, in input order. Only
// candidates with a second minimal normal subgroup giving the same factor
// type are compared, and only against fingerprint-compatible survivors.
std::vector<Candidate> dedupe(std::vector<Candidate> candidates, IsorejStats* stats = nullptr,
                              std::uint64_t node_budget = 50000000);

// Reference reduction: fingerprint filter, then isomorphism tests between all
// surviving pairs; no structural shortcut.
std::vector<Candidate> dedupe_pairwise(std::vector<Candidate> candidates, IsorejStats* stats = nullptr,
                                       std::uint64_t node_budget = 50000000);

}  // namespace perfect

#endif  // PERFECT_ISOREJ_HPP_
