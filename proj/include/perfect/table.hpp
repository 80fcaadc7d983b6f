#ifndef PERFECT_TABLE_HPP_
#define PERFECT_TABLE_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <type_traits>
#include <unordered_map>
#include <vector>

#include "perfect/errors.hpp"
#include "perfect/perm.hpp"
#include "perfect/permgroup.hpp"

namespace perfect {

using Elem = std::uint32_t;
using Letter = std::uint16_t;

inline constexpr std::size_t kDefaultTableCap = 1000000;

// Explicit element table of a finite group: every element is numbered
// (identity is 0, numbering in breadth-first order over the Cayley graph)
// and stores a word over the letters. Letter 2i is generator i and letter
// 2i+1 is its inverse. Right multiplication by letters is a table lookup,
// general products walk the word of the right factor.
class GroupTable {
 public:
  GroupTable() = default;

  static GroupTable from_perm_group(PermGroup const& group,
                                    std::size_t cap = kDefaultTableCap);

  // Builds a table from an abstract description: `step(state, letter)` gives
  // state * letter, `key(state)` identifies states exactly.
  template <class State, class StepFn, class KeyFn,
            class Hash = std::hash<std::invoke_result_t<KeyFn, State const&>>>
  static GroupTable build(State identity, std::size_t num_generators, StepFn step,
                          KeyFn key, std::size_t cap = kDefaultTableCap,
                          std::vector<State>* states_out = nullptr, Hash hash = Hash{});

  std::size_t order() const noexcept { return order_; }
  std::size_t num_generators() const noexcept { return num_letters_ / 2; }
  std::size_t num_letters() const noexcept { return num_letters_; }
  static constexpr Elem identity() noexcept { return 0; }

  Elem step(Elem x, Letter l) const noexcept { return right_[std::size_t(x) * num_letters_ + l]; }
  Elem generator(std::size_t i) const noexcept { return step(0, Letter(2 * i)); }
  std::vector<Elem> generators() const;
  Elem inverse(Elem x) const noexcept { return inverse_[x]; }
  Elem mul(Elem x, Elem y) const noexcept;
  Elem mul_word(Elem x, std::span<Letter const> w) const noexcept;
  Elem conj(Elem x, Elem g) const noexcept { return mul(mul(inverse_[g], x), g); }
  Elem conj_letter(Elem x, Letter l) const noexcept {
    return step(inverse_[step(inverse_[x], l)], l);
  }
  Elem commutator(Elem x, Elem y) const noexcept {
    return mul(mul(inverse_[x], inverse_[y]), mul(x, y));
  }
  Elem pow(Elem x, long long k) const noexcept;
  std::span<Letter const> word(Elem x) const noexcept {
    return {words_.data() + word_offset_[x], words_.data() + word_offset_[x + 1]};
  }
  std::uint32_t element_order(Elem x) const noexcept { return orders_[x]; }

  bool has_permutations() const noexcept { return !perms_.empty(); }
  Permutation const& permutation(Elem x) const { return perms_.at(x); }
  std::optional<Elem> find(Permutation const& p) const;

  // Evaluate a word of this table's letters with arbitrary generator images.
  template <class T, class Mul>
  T evaluate(Elem x, std::vector<T> const& letter_images, T identity_value, Mul mul_fn) const {
    T r = identity_value;
    for (Letter l : word(x)) r = mul_fn(r, letter_images[l]);
    return r;
  }

 private:
  void finish();

  std::size_t order_ = 0;
  std::size_t num_letters_ = 0;
  std::vector<Elem> right_;
  std::vector<Elem> inverse_;
  std::vector<Letter> words_;
  std::vector<std::uint32_t> word_offset_;
  std::vector<std::uint32_t> orders_;
  std::vector<Permutation> perms_;
  std::unordered_map<Permutation, Elem, PermutationHash> perm_index_;
};

// A subset of the elements of a table, kept as a bitset plus a sorted list.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : bits_((universe + 63) / 64, 0) {}
  ElementSet(std::size_t universe, std::vector<Elem> const& elems);

  bool contains(Elem x) const noexcept { return (bits_[x >> 6] >> (x & 63)) & 1ULL; }
  bool insert(Elem x);
  std::size_t size() const noexcept { return elems_.size(); }
  std::vector<Elem> const& elements() const noexcept { return elems_; }
  std::vector<std::uint64_t> const& bits() const noexcept { return bits_; }
  void sort() { std::sort(elems_.begin(), elems_.end()); }
  bool subset_of(ElementSet const& other) const;

  friend bool operator==(ElementSet const& a, ElementSet const& b) { return a.bits_ == b.bits_; }

 private:
  std::vector<std::uint64_t> bits_;
  std::vector<Elem> elems_;
};

struct ElementSetHash {
  std::size_t operator()(ElementSet const& s) const noexcept;
};

// Subgroup of a table: elements and a generating set.
struct Subgroup {
  ElementSet set;
  std::vector<Elem> generators;
  std::size_t order() const noexcept { return set.size(); }
  bool contains(Elem x) const noexcept { return set.contains(x); }
};

Subgroup trivial_subgroup(GroupTable const& g);
Subgroup whole_group(GroupTable const& g);
Subgroup generate(GroupTable const& g, std::vector<Elem> const& gens);
// <h, x>; returns h unchanged if x is already contained.
Subgroup extend(GroupTable const& g, Subgroup const& h, Elem x);
// Stops early (returns nullopt) once the subgroup would exceed `limit`.
std::optional<Subgroup> generate_bounded(GroupTable const& g, std::vector<Elem> const& gens,
                                         std::size_t limit);
Subgroup normal_closure(GroupTable const& g, std::vector<Elem> const& elems);
Subgroup normal_closure(GroupTable const& g, Subgroup const& h);
Subgroup join(GroupTable const& g, Subgroup const& a, Subgroup const& b);
Subgroup intersection(GroupTable const& g, Subgroup const& a, Subgroup const& b);
Subgroup derived_subgroup(GroupTable const& g, Subgroup const& h);
Subgroup derived_subgroup(GroupTable const& g);
bool is_normal(GroupTable const& g, Subgroup const& h);
Subgroup core(GroupTable const& g, Subgroup const& h);
Subgroup centralizer(GroupTable const& g, Subgroup const& h);
Subgroup conjugate_subgroup(GroupTable const& g, Subgroup const& h, Elem x);

// Table of the subgroup itself, generated by the given generators.
GroupTable subgroup_table(GroupTable const& g, std::vector<Elem> const& gens,
                          std::vector<Elem>* embedding = nullptr);
// Table of G/N for normal N; letters are those of G. `projection` receives
// the coset index of each element of G.
GroupTable quotient_table(GroupTable const& g, Subgroup const& normal,
                          std::vector<Elem>* projection = nullptr);

// Right coset action of G on H\G: returns per-element coset labels (coset of
// the identity is 0) and the action of each generator (not letter).
struct CosetAction {
  std::vector<std::uint32_t> label;
  std::vector<Elem> representatives;
  std::vector<std::vector<Point>> generator_action;
  std::size_t degree() const noexcept { return representatives.size(); }
};
CosetAction coset_action(GroupTable const& g, Subgroup const& h);

// ---------------------------------------------------------------------------

template <class State, class StepFn, class KeyFn, class Hash>
GroupTable GroupTable::build(State identity, std::size_t num_generators, StepFn step, KeyFn key,
                             std::size_t cap, std::vector<State>* states_out, Hash hash) {
  using Key = std::invoke_result_t<KeyFn, State const&>;
  GroupTable t;
  t.num_letters_ = 2 * num_generators;
  std::unordered_map<Key, Elem, Hash> index(16, hash);
  std::vector<State> states;
  states.push_back(identity);
  index.emplace(key(identity), 0);
  t.word_offset_.push_back(0);
  t.word_offset_.push_back(0);
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (Letter l = 0; l < t.num_letters_; ++l) {
      State nxt = step(states[i], l);
      auto k = key(nxt);
      auto it = index.find(k);
      Elem id;
      if (it == index.end()) {
        if (states.size() >= cap) {
          throw BudgetExceeded("table_cap", "group table exceeds configured element cap");
        }
        id = static_cast<Elem>(states.size());
        index.emplace(std::move(k), id);
        states.push_back(std::move(nxt));
        for (auto k2 = t.word_offset_[i]; k2 < t.word_offset_[i + 1]; ++k2) {
          t.words_.push_back(t.words_[k2]);
        }
        t.words_.push_back(l);
        t.word_offset_.push_back(static_cast<std::uint32_t>(t.words_.size()));
      } else {
        id = it->second;
      }
      t.right_.push_back(id);
    }
  }
  t.order_ = states.size();
  t.finish();
  if (states_out) *states_out = std::move(states);
  return t;
}

}  // namespace perfect

#endif  // PERFECT_TABLE_HPP_
