#ifndef PERFECT_RWS_HPP_
#define PERFECT_RWS_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "perfect/structure.hpp"
#include "perfect/table.hpp"

namespace perfect {

using RwsLetter = std::uint16_t;
using RwsWord = std::vector<RwsLetter>;

struct RwsSymbol {
  std::string name;
  std::size_t level = 0;  // 0 is the top of the series
  Elem element = 0;       // value in the presented group
};

struct RwsRule {
  RwsWord lhs;
  RwsWord rhs;
};

struct CriticalPair {
  std::size_t first_rule = 0;
  std::size_t second_rule = 0;
  std::size_t overlap = 0;  // length of the shared segment
  RwsWord word;             // lhs(first) followed by the rest of lhs(second)
  RwsWord left_reduct;      // rhs(first) + tail of lhs(second)
  RwsWord right_reduct;     // head of lhs(first) + rhs(second)
};

// Letters of one level of the series, listed in increasing order. Each entry
// is an element of the level subgroup; its image in the level factor must be
// nontrivial and distinct from the other entries.
struct RwsLevel {
  std::vector<Elem> letters;
  std::vector<std::string> names;
};

// One application of a rule during tracked rewriting: the module element
// created by the rule is carried past a suffix evaluating to `suffix`.
struct RuleApplication {
  std::uint32_t rule;
  Elem suffix;
};

// A confluent rewriting system for a finite group, layered along a normal
// series. Within a level the normal forms are shortlex-least words in the
// level letters; across levels, letters of deeper levels are moved right.
class RewritingSystem {
 public:
  RewritingSystem(std::shared_ptr<GroupTable const> group, std::vector<Subgroup> series,
                  std::vector<RwsLevel> levels, std::size_t rule_cap = 20000);

  GroupTable const& group() const noexcept { return *group_; }
  std::shared_ptr<GroupTable const> const& group_ptr() const noexcept { return group_; }
  std::vector<Subgroup> const& series() const noexcept { return series_; }
  std::vector<RwsLevel> const& levels() const noexcept { return levels_; }
  std::vector<RwsSymbol> const& alphabet() const noexcept { return alphabet_; }
  std::size_t num_letters() const noexcept { return alphabet_.size(); }
  std::vector<RwsRule> const& rules() const noexcept { return rules_; }
  std::size_t num_rules() const noexcept { return rules_.size(); }

  // Reduces with the leftmost-completing redex first.
  RwsWord rewrite(RwsWord const& w) const;
  RwsWord rewrite(RwsWord const& w, std::vector<RuleApplication>& applications) const;
  // Reduces the rightmost redex first; slower, used for strategy checks.
  RwsWord rewrite_rightmost(RwsWord const& w) const;

  Elem evaluate(RwsWord const& w) const;
  RwsWord const& normal_form(Elem x) const { return normal_forms_[x]; }
  // x * letter and letter * x.
  Elem right_multiply(Elem x, RwsLetter a) const { return rmul_[a][x]; }
  Elem left_multiply(RwsLetter a, Elem x) const { return lmul_[a][x]; }
  std::size_t max_rhs_length() const;

  std::vector<CriticalPair> critical_pairs() const;
  // Calls fn for every critical pair; fn returns false to stop early.
  template <class Fn>
  void for_each_critical_pair(Fn&& fn) const;

  // Number of words containing no left-hand side; throws when infinite.
  std::uint64_t count_normal_forms() const;
  // Normal-form count equals the group order and every critical pair
  // resolves to a common normal form.
  bool certify_confluence() const;

  std::string to_string() const;

 private:
  void build_rules(std::size_t rule_cap);
  void build_automaton();
  bool resolves(CriticalPair const& cp) const;
  std::vector<std::uint32_t> rules_with_prefix(RwsWord const& prefix) const;

  std::shared_ptr<GroupTable const> group_;
  std::vector<Subgroup> series_;
  std::vector<RwsLevel> levels_;
  std::vector<RwsSymbol> alphabet_;
  std::vector<RwsRule> rules_;
  std::vector<RwsWord> normal_forms_;
  std::vector<std::vector<Elem>> lmul_, rmul_;

  // Aho-Corasick automaton over the left-hand sides.
  std::vector<std::uint32_t> goto_;      // state * letters + letter
  std::vector<std::int32_t> match_;      // rule completed at this state, or -1
  std::vector<std::uint32_t> depth_;
  std::vector<std::int32_t> trie_rule_;  // rule whose lhs ends exactly here
  std::vector<std::vector<std::uint32_t>> trie_children_;
};

// Builds a system along a chief series of g, with automatic power letters for
// cyclic levels of order above `power_threshold`.
RewritingSystem confluent_rws(std::shared_ptr<GroupTable const> g, std::size_t rule_cap = 20000,
                              std::size_t power_threshold = 25);

// Same system with letter y = x^k added to the cyclic level of letter x; the
// level is then written with y and x only (no inverse letters).
RewritingSystem add_power_generators(RewritingSystem const& r, RwsLetter x, unsigned k);

// ---------------------------------------------------------------------------

template <class Fn>
void RewritingSystem::for_each_critical_pair(Fn&& fn) const {
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    RwsWord const& l1 = rules_[i].lhs;
    for (std::size_t k = 1; k < l1.size(); ++k) {
      RwsWord suffix(l1.end() - static_cast<std::ptrdiff_t>(k), l1.end());
      for (std::uint32_t j : rules_with_prefix(suffix)) {
        RwsWord const& l2 = rules_[j].lhs;
        CriticalPair cp;
        cp.first_rule = i;
        cp.second_rule = j;
        cp.overlap = k;
        cp.word = l1;
        cp.word.insert(cp.word.end(), l2.begin() + static_cast<std::ptrdiff_t>(k), l2.end());
        cp.left_reduct = rules_[i].rhs;
        cp.left_reduct.insert(cp.left_reduct.end(), l2.begin() + static_cast<std::ptrdiff_t>(k),
                              l2.end());
        cp.right_reduct.assign(l1.begin(), l1.end() - static_cast<std::ptrdiff_t>(k));
        cp.right_reduct.insert(cp.right_reduct.end(), rules_[j].rhs.begin(), rules_[j].rhs.end());
        if (!fn(cp)) return;
      }
    }
  }
}

}  // namespace perfect

#endif  // PERFECT_RWS_HPP_
