#include "perfect/rws.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "perfect/errors.hpp"
#include "perfect/iso.hpp"

namespace perfect {

namespace {

constexpr std::uint32_t kNone = 0xffffffffu;

// Coset labels of `lower` inside `upper` (both normal in g): label[x] for
// x in upper, kNone elsewhere.
std::vector<std::uint32_t> level_labels(GroupTable const& g, Subgroup const& upper,
                                        Subgroup const& lower, std::size_t& count) {
  std::vector<std::uint32_t> label(g.order(), kNone);
  count = 0;
  for (Elem x : upper.set.elements()) {
    if (label[x] != kNone) continue;
    for (Elem n : lower.set.elements()) label[g.mul(x, n)] = static_cast<std::uint32_t>(count);
    ++count;
  }
  return label;
}

}  // namespace

RewritingSystem::RewritingSystem(std::shared_ptr<GroupTable const> group,
                                 std::vector<Subgroup> series, std::vector<RwsLevel> levels,
                                 std::size_t rule_cap)
    : group_(std::move(group)), series_(std::move(series)), levels_(std::move(levels)) {
  PERFECT_CHECK(series_.size() == levels_.size() + 1, "RewritingSystem: series/level mismatch");
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    auto const& lv = levels_[i];
    PERFECT_CHECK(lv.letters.size() == lv.names.size(), "RewritingSystem: unnamed letters");
    for (std::size_t j = 0; j < lv.letters.size(); ++j) {
      PERFECT_CHECK(series_[i].contains(lv.letters[j]), "RewritingSystem: letter outside its level");
      alphabet_.push_back({lv.names[j], i, lv.letters[j]});
    }
  }
  PERFECT_CHECK(alphabet_.size() < 0xffff, "RewritingSystem: alphabet too large");
  GroupTable const& g = *group_;
  lmul_.assign(alphabet_.size(), std::vector<Elem>(g.order()));
  rmul_.assign(alphabet_.size(), std::vector<Elem>(g.order()));
  for (std::size_t a = 0; a < alphabet_.size(); ++a) {
    Elem e = alphabet_[a].element;
    for (Elem x = 0; x < g.order(); ++x) {
      lmul_[a][x] = g.mul(e, x);
      rmul_[a][x] = g.mul(x, e);
    }
  }
  build_rules(rule_cap);
  build_automaton();
}

void RewritingSystem::build_rules(std::size_t rule_cap) {
  GroupTable const& g = *group_;
  std::size_t nlev = levels_.size();
  std::vector<std::vector<std::uint32_t>> labels(nlev);
  std::vector<std::vector<RwsWord>> level_nf(nlev);
  std::vector<std::vector<Elem>> level_rep(nlev);
  std::vector<RwsLetter> first_letter(nlev + 1, 0);
  for (std::size_t i = 0; i < nlev; ++i) first_letter[i + 1] = static_cast<RwsLetter>(first_letter[i] + levels_[i].letters.size());

  for (std::size_t i = 0; i < nlev; ++i) {
    std::size_t count = 0;
    labels[i] = level_labels(g, series_[i], series_[i + 1], count);
    auto& nf = level_nf[i];
    auto& rep = level_rep[i];
    nf.assign(count, {});
    rep.assign(count, 0);
    std::vector<bool> seen(count, false);
    std::vector<std::uint32_t> queue{labels[i][0]};
    seen[labels[i][0]] = true;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      std::uint32_t c = queue[q];
      for (RwsLetter a = first_letter[i]; a < first_letter[i + 1]; ++a) {
        Elem y = rmul_[a][rep[c]];
        std::uint32_t d = labels[i][y];
        if (seen[d]) continue;
        seen[d] = true;
        rep[d] = y;
        nf[d] = nf[c];
        nf[d].push_back(a);
        queue.push_back(d);
      }
    }
    PERFECT_CHECK(queue.size() == count, "RewritingSystem: level letters do not generate the factor");
    for (RwsLetter a = first_letter[i]; a < first_letter[i + 1]; ++a) {
      auto const& w = nf[labels[i][alphabet_[a].element]];
      PERFECT_CHECK(w.size() == 1 && w[0] == a, "RewritingSystem: letter is not in normal form");
    }
  }

  normal_forms_.assign(g.order(), {});
  for (Elem x = 0; x < g.order(); ++x) {
    Elem e = x;
    RwsWord& out = normal_forms_[x];
    for (std::size_t i = 0; i < nlev; ++i) {
      std::uint32_t c = labels[i][e];
      out.insert(out.end(), level_nf[i][c].begin(), level_nf[i][c].end());
      e = g.mul(g.inverse(level_rep[i][c]), e);
    }
    PERFECT_CHECK(e == g.identity(), "RewritingSystem: series does not end in the trivial group");
  }

  auto add_rule = [&](RwsWord lhs, Elem value) {
    if (rules_.size() >= rule_cap) throw BudgetExceeded("rws_rules", "rewriting system rule cap reached");
    rules_.push_back({std::move(lhs), normal_forms_[value]});
  };

  for (std::size_t i = 0; i < nlev; ++i) {
    auto const& nf = level_nf[i];
    auto const& rep = level_rep[i];
    for (std::uint32_t c = 0; c < nf.size(); ++c) {
      RwsWord const& u = nf[c];
      Elem tail_value = u.empty() ? g.identity() : g.mul(g.inverse(alphabet_[u[0]].element), rep[c]);
      for (RwsLetter a = first_letter[i]; a < first_letter[i + 1]; ++a) {
        Elem y = rmul_[a][rep[c]];
        RwsWord ua = u;
        ua.push_back(a);
        if (nf[labels[i][y]] == ua) continue;
        if (!u.empty()) {
          RwsWord suffix(ua.begin() + 1, ua.end());
          if (nf[labels[i][rmul_[a][tail_value]]] != suffix) continue;
        }
        add_rule(std::move(ua), y);
      }
    }
  }
  for (std::size_t j = 1; j < nlev; ++j) {
    for (RwsLetter m = first_letter[j]; m < first_letter[j + 1]; ++m) {
      for (RwsLetter x = 0; x < first_letter[j]; ++x) {
        add_rule(RwsWord{m, x}, rmul_[x][alphabet_[m].element]);
      }
    }
  }
}

void RewritingSystem::build_automaton() {
  std::size_t nl = alphabet_.size();
  std::vector<std::vector<std::uint32_t>> child(1, std::vector<std::uint32_t>(nl, kNone));
  trie_rule_.assign(1, -1);
  depth_.assign(1, 0);
  for (std::size_t r = 0; r < rules_.size(); ++r) {
    std::uint32_t s = 0;
    for (RwsLetter a : rules_[r].lhs) {
      if (child[s][a] == kNone) {
        child[s][a] = static_cast<std::uint32_t>(child.size());
        child.emplace_back(nl, kNone);
        trie_rule_.push_back(-1);
        depth_.push_back(depth_[s] + 1);
      }
      s = child[s][a];
    }
    PERFECT_CHECK(trie_rule_[s] < 0, "RewritingSystem: duplicate left-hand side");
    trie_rule_[s] = static_cast<std::int32_t>(r);
  }
  std::size_t ns = child.size();
  trie_children_.assign(ns, {});
  for (std::size_t s = 0; s < ns; ++s) {
    for (std::size_t a = 0; a < nl; ++a) {
      if (child[s][a] != kNone) trie_children_[s].push_back(child[s][a]);
    }
  }
  goto_.assign(ns * nl, 0);
  match_.assign(ns, -1);
  std::vector<std::uint32_t> fail(ns, 0), queue;
  for (std::size_t a = 0; a < nl; ++a) {
    std::uint32_t c = child[0][a];
    if (c == kNone) {
      goto_[a] = 0;
    } else {
      goto_[a] = c;
      fail[c] = 0;
      queue.push_back(c);
    }
  }
  match_[0] = trie_rule_[0];
  for (std::size_t q = 0; q < queue.size(); ++q) {
    std::uint32_t s = queue[q];
    match_[s] = trie_rule_[s] >= 0 ? trie_rule_[s] : match_[fail[s]];
    for (std::size_t a = 0; a < nl; ++a) {
      std::uint32_t c = child[s][a];
      if (c == kNone) {
        goto_[s * nl + a] = goto_[fail[s] * nl + a];
      } else {
        goto_[s * nl + a] = c;
        fail[c] = goto_[fail[s] * nl + a];
        queue.push_back(c);
      }
    }
  }
}

RwsWord RewritingSystem::rewrite(RwsWord const& w) const {
  std::vector<RuleApplication> ignored;
  return rewrite(w, ignored);
}

RwsWord RewritingSystem::rewrite(RwsWord const& w, std::vector<RuleApplication>& applications) const {
  std::size_t nl = alphabet_.size();
  RwsWord out;
  std::vector<std::uint32_t> states{0};
  RwsWord in(w.rbegin(), w.rend());
  // suffix[k]: value of in[k], in[k-1], ..., in[0] read left to right
  std::vector<Elem> suffix(in.size());
  for (std::size_t k = 0; k < in.size(); ++k) {
    suffix[k] = lmul_[in[k]][k ? suffix[k - 1] : group_->identity()];
  }
  std::uint64_t steps = 0;
  while (!in.empty()) {
    RwsLetter a = in.back();
    in.pop_back();
    suffix.pop_back();
    std::uint32_t s = goto_[states.back() * nl + a];
    out.push_back(a);
    states.push_back(s);
    std::int32_t r = match_[s];
    if (r < 0) continue;
    if (++steps > 100000000) throw BudgetExceeded("rws_steps", "rewriting did not terminate");
    applications.push_back({static_cast<std::uint32_t>(r), suffix.empty() ? group_->identity() : suffix.back()});
    auto const& rule = rules_[static_cast<std::size_t>(r)];
    out.resize(out.size() - rule.lhs.size());
    states.resize(states.size() - rule.lhs.size());
    for (auto it = rule.rhs.rbegin(); it != rule.rhs.rend(); ++it) {
      suffix.push_back(lmul_[*it][suffix.empty() ? group_->identity() : suffix.back()]);
      in.push_back(*it);
    }
  }
  return out;
}

RwsWord RewritingSystem::rewrite_rightmost(RwsWord const& w) const {
  std::size_t nl = alphabet_.size();
  RwsWord cur = w;
  for (;;) {
    bool found = false;
    for (std::size_t i = cur.size(); i-- > 0 && !found;) {
      std::uint32_t s = 0;
      for (std::size_t j = i; j < cur.size(); ++j) {
        std::uint32_t next = goto_[s * nl + cur[j]];
        if (depth_[next] != depth_[s] + 1) break;  // left the trie
        s = next;
        if (trie_rule_[s] >= 0) {
          auto const& rule = rules_[static_cast<std::size_t>(trie_rule_[s])];
          RwsWord nw(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(i));
          nw.insert(nw.end(), rule.rhs.begin(), rule.rhs.end());
          nw.insert(nw.end(), cur.begin() + static_cast<std::ptrdiff_t>(j + 1), cur.end());
          cur = std::move(nw);
          found = true;
          break;
        }
      }
    }
    if (!found) return cur;
  }
}

Elem RewritingSystem::evaluate(RwsWord const& w) const {
  Elem e = group_->identity();
  for (RwsLetter a : w) e = rmul_[a][e];
  return e;
}

std::size_t RewritingSystem::max_rhs_length() const {
  std::size_t m = 0;
  for (auto const& r : rules_) m = std::max(m, r.rhs.size());
  return m;
}

std::vector<std::uint32_t> RewritingSystem::rules_with_prefix(RwsWord const& prefix) const {
  std::size_t nl = alphabet_.size();
  std::uint32_t s = 0;
  for (RwsLetter a : prefix) {
    std::uint32_t next = goto_[s * nl + a];
    if (depth_[next] != depth_[s] + 1) return {};
    s = next;
  }
  std::vector<std::uint32_t> out, stack{s};
  while (!stack.empty()) {
    std::uint32_t t = stack.back();
    stack.pop_back();
    if (trie_rule_[t] >= 0 && t != s) out.push_back(static_cast<std::uint32_t>(trie_rule_[t]));
    for (auto c : trie_children_[t]) stack.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CriticalPair> RewritingSystem::critical_pairs() const {
  std::vector<CriticalPair> out;
  for_each_critical_pair([&](CriticalPair const& cp) {
    out.push_back(cp);
    return true;
  });
  return out;
}

bool RewritingSystem::resolves(CriticalPair const& cp) const {
  return rewrite(cp.left_reduct) == rewrite(cp.right_reduct);
}

std::uint64_t RewritingSystem::count_normal_forms() const {
  std::size_t nl = alphabet_.size();
  std::size_t ns = match_.size();
  std::vector<std::uint64_t> count(ns, 0);
  std::vector<std::uint8_t> color(ns, 0);  // 0 new, 1 on stack, 2 done
  // Iterative DFS over states that are not inside a match.
  std::vector<std::pair<std::uint32_t, std::size_t>> stack{{0, 0}};
  color[0] = 1;
  count[0] = 1;
  while (!stack.empty()) {
    auto& [s, a] = stack.back();
    if (a == nl) {
      color[s] = 2;
      std::uint64_t c = count[s];
      stack.pop_back();
      if (!stack.empty()) {
        auto parent = stack.back().first;
        count[parent] += c;
      }
      continue;
    }
    std::uint32_t t = goto_[s * nl + a];
    ++a;
    if (match_[t] >= 0) continue;
    if (color[t] == 1) throw std::runtime_error("count_normal_forms: infinitely many normal forms");
    if (color[t] == 2) {
      count[s] += count[t];
      continue;
    }
    color[t] = 1;
    count[t] = 1;
    stack.emplace_back(t, 0);
  }
  return count[0];
}

bool RewritingSystem::certify_confluence() const {
  if (count_normal_forms() != group_->order()) return false;
  bool ok = true;
  for_each_critical_pair([&](CriticalPair const& cp) {
    ok = resolves(cp);
    return ok;
  });
  return ok;
}

std::string RewritingSystem::to_string() const {
  std::ostringstream os;
  os << "alphabet";
  for (auto const& s : alphabet_) os << ' ' << s.name << ':' << s.level;
  os << '\n';
  auto word = [&](RwsWord const& w) {
    if (w.empty()) return std::string("1");
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "*" : "") + alphabet_[w[i]].name;
    return out;
  };
  for (auto const& r : rules_) os << word(r.lhs) << " -> " << word(r.rhs) << '\n';
  return os.str();
}

namespace {

std::string letter_name(std::size_t level, std::size_t index, bool inverse, char base = 'x') {
  char c = inverse ? static_cast<char>(base - 'a' + 'A') : base;
  return std::string(1, c) + std::to_string(level + 1) + "_" + std::to_string(index + 1);
}

// Smallest m > 0 with x^m in n.
std::uint32_t relative_order(GroupTable const& g, Elem x, Subgroup const& n) {
  Elem y = x;
  std::uint32_t m = 1;
  while (!n.contains(y)) {
    y = g.mul(y, x);
    ++m;
  }
  return m;
}

RwsLevel power_level(GroupTable const& g, Elem x, std::uint32_t k, std::size_t level,
                     std::size_t index, std::string const& x_name) {
  RwsLevel lv;
  lv.letters = {g.pow(x, k), x};
  lv.names = {letter_name(level, index, false, 'y'), x_name};
  return lv;
}

}  // namespace

RewritingSystem confluent_rws(std::shared_ptr<GroupTable const> gp, std::size_t rule_cap,
                              std::size_t power_threshold) {
  GroupTable const& g = *gp;
  auto cd = conjugacy_classes(g);
  auto normals = normal_subgroups(g, cd);
  auto series = chief_series(g, normals);
  std::vector<RwsLevel> levels;
  for (std::size_t i = 0; i + 1 < series.size(); ++i) {
    Subgroup const& upper = series[i];
    Subgroup const& lower = series[i + 1];
    std::vector<Elem> upper_gens = upper.generators;
    std::vector<Elem> emb;
    GroupTable sub = subgroup_table(g, upper_gens, &emb);
    std::vector<Elem> back(g.order(), kNone);
    for (Elem s = 0; s < sub.order(); ++s) back[emb[s]] = s;
    std::vector<Elem> lower_in_sub;
    for (Elem x : lower.set.elements()) lower_in_sub.push_back(back[x]);
    std::vector<Elem> proj;
    GroupTable q = quotient_table(sub, Subgroup{ElementSet(sub.order(), lower_in_sub), {}}, &proj);
    std::vector<Elem> lift(q.order(), kNone);
    for (Elem s = 0; s < sub.order(); ++s) {
      if (lift[proj[s]] == kNone) lift[proj[s]] = emb[s];
    }
    // Generators of the factor: an involution plus one more element when
    // that suffices, otherwise a greedy generating set.
    std::vector<Elem> qgens;
    bool abelian = true;
    for (Elem a : q.generators()) {
      for (Elem b : q.generators()) {
        if (q.mul(a, b) != q.mul(b, a)) abelian = false;
      }
    }
    if (!abelian) {
      Elem inv = 0;
      for (Elem x = 1; x < q.order(); ++x) {
        if (q.element_order(x) == 2) {
          inv = x;
          break;
        }
      }
      if (inv) {
        for (Elem y = 1; y < q.order() && qgens.empty(); ++y) {
          if (generate(q, {inv, y}).order() == q.order()) qgens = {inv, y};
        }
      }
    }
    if (qgens.empty()) {
      Subgroup h = trivial_subgroup(q);
      for (Elem x = 1; x < q.order() && h.order() < q.order(); ++x) {
        if (h.contains(x)) continue;
        h = generate(q, [&] {
          auto v = h.generators;
          v.push_back(x);
          return v;
        }());
        qgens.push_back(x);
      }
    }
    if (abelian && qgens.size() == 1 && q.order() > power_threshold) {
      auto k = static_cast<std::uint32_t>(std::ceil(std::sqrt(double(q.order()))));
      levels.push_back(power_level(g, lift[qgens[0]], k, i, 0, letter_name(i, 0, false)));
      continue;
    }
    RwsLevel lv;
    for (std::size_t j = 0; j < qgens.size(); ++j) {
      Elem x = lift[qgens[j]];
      lv.letters.push_back(x);
      lv.names.push_back(letter_name(i, j, false));
      if (q.element_order(qgens[j]) > 2) {
        lv.letters.push_back(lift[q.inverse(qgens[j])]);
        lv.names.push_back(letter_name(i, j, true));
      }
    }
    levels.push_back(std::move(lv));
  }
  return RewritingSystem(std::move(gp), std::move(series), std::move(levels), rule_cap);
}

RewritingSystem add_power_generators(RewritingSystem const& r, RwsLetter x, unsigned k) {
  auto const& sym = r.alphabet().at(x);
  std::size_t level = sym.level;
  GroupTable const& g = r.group();
  auto const& series = r.series();
  std::uint32_t n = relative_order(g, sym.element, series[level + 1]);
  std::size_t factor_order = series[level].order() / series[level + 1].order();
  if (k < 2 || n != factor_order || std::uint64_t(k) * k > n) return r;
  auto levels = r.levels();
  std::size_t index = 0;
  for (std::size_t j = 0; j < levels[level].letters.size(); ++j) {
    if (levels[level].letters[j] == sym.element) index = j;
  }
  levels[level] = power_level(g, sym.element, k, level, index, sym.name);
  return RewritingSystem(r.group_ptr(), series, std::move(levels));
}

}  // namespace perfect
