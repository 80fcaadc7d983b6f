#include "perfect/table.hpp"

#include <bit>

namespace perfect {

GroupTable GroupTable::from_perm_group(PermGroup const& group, std::size_t cap) {
  std::vector<Permutation> letters;
  for (auto const& g : group.generators()) {
    letters.push_back(g);
    letters.push_back(g.inverse());
  }
  std::vector<Permutation> states;
  GroupTable t = build(
      group.identity(), group.num_generators(),
      [&](Permutation const& p, Letter l) { return p * letters[l]; },
      [](Permutation const& p) { return p; }, cap, &states, PermutationHash{});
  t.perm_index_.reserve(states.size());
  for (Elem i = 0; i < states.size(); ++i) t.perm_index_.emplace(states[i], i);
  t.perms_ = std::move(states);
  return t;
}

void GroupTable::finish() {
  inverse_.assign(order_, 0);
  for (Elem x = 0; x < order_; ++x) {
    auto w = word(x);
    Elem y = 0;
    for (auto it = w.rbegin(); it != w.rend(); ++it) y = step(y, Letter(*it ^ 1));
    inverse_[x] = y;
  }
  orders_.assign(order_, 1);
  for (Elem x = 1; x < order_; ++x) {
    std::uint32_t k = 1;
    Elem y = x;
    while (y != 0) {
      y = mul(y, x);
      ++k;
    }
    orders_[x] = k;
  }
}

std::vector<Elem> GroupTable::generators() const {
  std::vector<Elem> r;
  for (std::size_t i = 0; i < num_generators(); ++i) r.push_back(generator(i));
  return r;
}

Elem GroupTable::mul_word(Elem x, std::span<Letter const> w) const noexcept {
  for (Letter l : w) x = step(x, l);
  return x;
}

Elem GroupTable::mul(Elem x, Elem y) const noexcept { return mul_word(x, word(y)); }

Elem GroupTable::pow(Elem x, long long k) const noexcept {
  long long o = orders_[x];
  k %= o;
  if (k < 0) k += o;
  Elem r = 0;
  for (long long i = 0; i < k; ++i) r = mul(r, x);
  return r;
}

std::optional<Elem> GroupTable::find(Permutation const& p) const {
  auto it = perm_index_.find(p);
  if (it == perm_index_.end()) return std::nullopt;
  return it->second;
}

ElementSet::ElementSet(std::size_t universe, std::vector<Elem> const& elems)
    : ElementSet(universe) {
  for (Elem x : elems) insert(x);
}

bool ElementSet::insert(Elem x) {
  auto& w = bits_[x >> 6];
  std::uint64_t m = 1ULL << (x & 63);
  if (w & m) return false;
  w |= m;
  elems_.push_back(x);
  return true;
}

bool ElementSet::subset_of(ElementSet const& other) const {
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] & ~other.bits_[i]) return false;
  }
  return true;
}

std::size_t ElementSetHash::operator()(ElementSet const& s) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto w : s.bits()) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

namespace {

// Closes `h` (elements so far, closed for the old generators from index
// `start` on) under right multiplication by `gens`.
void close_under(GroupTable const& g, Subgroup& h, std::size_t start, std::size_t limit) {
  std::vector<Elem> const& list = h.set.elements();
  for (std::size_t i = start; i < list.size(); ++i) {
    for (Elem s : h.generators) {
      Elem y = g.mul(list[i], s);
      if (h.set.insert(y) && list.size() > limit) return;
    }
  }
}

// Greedy generating set of an already closed set.
Subgroup from_closed_set(GroupTable const& g, ElementSet const& set) {
  Subgroup h = trivial_subgroup(g);
  for (Elem x : set.elements()) {
    if (!h.contains(x)) h = extend(g, h, x);
    if (h.order() == set.size()) break;
  }
  h.set.sort();
  return h;
}

Subgroup normal_closure_under(GroupTable const& g, std::vector<Elem> const& conj_by,
                              std::vector<Elem> const& elems) {
  Subgroup n = generate(g, elems);
  for (std::size_t i = 0; i < n.generators.size(); ++i) {
    for (Elem c : conj_by) {
      Elem y = g.conj(n.generators[i], c);
      if (!n.contains(y)) n = extend(g, n, y);
    }
  }
  n.set.sort();
  return n;
}

}  // namespace

Subgroup trivial_subgroup(GroupTable const& g) {
  Subgroup h;
  h.set = ElementSet(g.order());
  h.set.insert(0);
  return h;
}

Subgroup whole_group(GroupTable const& g) {
  Subgroup h;
  h.set = ElementSet(g.order());
  for (Elem x = 0; x < g.order(); ++x) h.set.insert(x);
  h.generators = g.generators();
  return h;
}

Subgroup generate(GroupTable const& g, std::vector<Elem> const& gens) {
  Subgroup h = trivial_subgroup(g);
  for (Elem x : gens) {
    if (!h.contains(x)) h = extend(g, h, x);
  }
  h.set.sort();
  return h;
}

std::optional<Subgroup> generate_bounded(GroupTable const& g, std::vector<Elem> const& gens,
                                         std::size_t limit) {
  Subgroup h = trivial_subgroup(g);
  for (Elem x : gens) {
    if (x != 0 && !h.contains(x)) h.generators.push_back(x);
  }
  close_under(g, h, 0, limit);
  if (h.order() > limit) return std::nullopt;
  h.set.sort();
  return h;
}

Subgroup extend(GroupTable const& g, Subgroup const& h, Elem x) {
  if (h.contains(x)) return h;
  Subgroup r = h;
  r.generators.push_back(x);
  // Add whole cosets of h at a time: every new element y brings h*y.
  std::vector<Elem> const base = h.set.elements();
  std::vector<Elem> reps{x};
  for (Elem hx : base) r.set.insert(g.mul(hx, x));
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (Elem s : r.generators) {
      Elem y = g.mul(reps[i], s);
      if (r.set.contains(y)) continue;
      reps.push_back(y);
      for (Elem hx : base) r.set.insert(g.mul(hx, y));
    }
  }
  // The union of cosets is closed under right multiplication by every
  // generator, hence a subgroup.
  return r;
}

Subgroup normal_closure(GroupTable const& g, std::vector<Elem> const& elems) {
  return normal_closure_under(g, g.generators(), elems);
}

Subgroup normal_closure(GroupTable const& g, Subgroup const& h) {
  return normal_closure(g, h.generators);
}

Subgroup join(GroupTable const& g, Subgroup const& a, Subgroup const& b) {
  Subgroup r = a;
  for (Elem x : b.generators) r = extend(g, r, x);
  r.set.sort();
  return r;
}

Subgroup intersection(GroupTable const& g, Subgroup const& a, Subgroup const& b) {
  ElementSet s(g.order());
  for (Elem x : a.set.elements()) {
    if (b.contains(x)) s.insert(x);
  }
  return from_closed_set(g, s);
}

Subgroup derived_subgroup(GroupTable const& g, Subgroup const& h) {
  std::vector<Elem> comms;
  auto const& gs = h.generators;
  for (std::size_t i = 0; i < gs.size(); ++i) {
    for (std::size_t j = i + 1; j < gs.size(); ++j) comms.push_back(g.commutator(gs[i], gs[j]));
  }
  return normal_closure_under(g, gs, comms);
}

Subgroup derived_subgroup(GroupTable const& g) { return derived_subgroup(g, whole_group(g)); }

bool is_normal(GroupTable const& g, Subgroup const& h) {
  for (Elem x : h.generators) {
    for (std::size_t i = 0; i < g.num_generators(); ++i) {
      if (!h.contains(g.conj_letter(x, Letter(2 * i)))) return false;
    }
  }
  return true;
}

Subgroup conjugate_subgroup(GroupTable const& g, Subgroup const& h, Elem x) {
  Subgroup r;
  r.set = ElementSet(g.order());
  Elem xi = g.inverse(x);
  for (Elem y : h.set.elements()) r.set.insert(g.mul(g.mul(xi, y), x));
  for (Elem y : h.generators) r.generators.push_back(g.mul(g.mul(xi, y), x));
  r.set.sort();
  return r;
}

Subgroup core(GroupTable const& g, Subgroup const& h) {
  if (is_normal(g, h)) return h;
  CosetAction ca = coset_action(g, h);
  ElementSet cur = h.set;
  for (Elem r : ca.representatives) {
    Subgroup c = conjugate_subgroup(g, h, r);
    ElementSet next(g.order());
    for (Elem x : cur.elements()) {
      if (c.contains(x)) next.insert(x);
    }
    cur = std::move(next);
    if (cur.size() == 1) break;
  }
  cur.sort();
  return from_closed_set(g, cur);
}

Subgroup centralizer(GroupTable const& g, Subgroup const& h) {
  ElementSet s(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (Elem y : h.generators) {
      if (g.mul(x, y) != g.mul(y, x)) {
        ok = false;
        break;
      }
    }
    if (ok) s.insert(x);
  }
  return from_closed_set(g, s);
}

GroupTable subgroup_table(GroupTable const& g, std::vector<Elem> const& gens,
                          std::vector<Elem>* embedding) {
  std::vector<Elem> letters;
  for (Elem x : gens) {
    letters.push_back(x);
    letters.push_back(g.inverse(x));
  }
  std::vector<Elem> states;
  GroupTable t = GroupTable::build(
      Elem{0}, gens.size(), [&](Elem s, Letter l) { return g.mul(s, letters[l]); },
      [](Elem s) { return s; }, g.order() + 1, &states);
  if (embedding) *embedding = std::move(states);
  return t;
}

namespace {

std::vector<std::uint32_t> coset_labels(GroupTable const& g, Subgroup const& h, bool left,
                                        std::vector<Elem>& reps) {
  constexpr std::uint32_t kNone = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> label(g.order(), kNone);
  reps.clear();
  for (Elem x = 0; x < g.order(); ++x) {
    if (label[x] != kNone) continue;
    auto c = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
    for (Elem y : h.set.elements()) label[left ? g.mul(x, y) : g.mul(y, x)] = c;
  }
  return label;
}

}  // namespace

GroupTable quotient_table(GroupTable const& g, Subgroup const& normal,
                          std::vector<Elem>* projection) {
  std::vector<Elem> reps;
  auto label = coset_labels(g, normal, true, reps);
  std::vector<std::uint32_t> states;
  GroupTable t = GroupTable::build(
      std::uint32_t{0}, g.num_generators(),
      [&](std::uint32_t c, Letter l) { return label[g.step(reps[c], l)]; },
      [](std::uint32_t c) { return c; }, reps.size() + 1, &states);
  if (projection) {
    std::vector<Elem> to_table(reps.size());
    for (Elem i = 0; i < states.size(); ++i) to_table[states[i]] = i;
    projection->resize(g.order());
    for (Elem x = 0; x < g.order(); ++x) (*projection)[x] = to_table[label[x]];
  }
  return t;
}

CosetAction coset_action(GroupTable const& g, Subgroup const& h) {
  CosetAction ca;
  ca.label = coset_labels(g, h, false, ca.representatives);
  for (std::size_t i = 0; i < g.num_generators(); ++i) {
    std::vector<Point> img(ca.representatives.size());
    for (std::size_t c = 0; c < img.size(); ++c) {
      img[c] = ca.label[g.step(ca.representatives[c], Letter(2 * i))];
    }
    ca.generator_action.push_back(std::move(img));
  }
  return ca;
}

}  // namespace perfect
