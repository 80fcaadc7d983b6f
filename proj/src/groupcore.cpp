#include "perfect/groupcore.hpp"

#include "perfect/errors.hpp"

namespace perfect {

bool GroupHomomorphism::is_well_defined() const {
  if (generator_images.size() != source.num_generators()) return false;
  std::size_t ns = source.degree(), nt = target.degree();
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < generator_images.size(); ++i) {
    if (!target.contains(generator_images[i])) return false;
    std::vector<Point> img(ns + nt);
    for (std::size_t x = 0; x < ns; ++x) img[x] = source.generators()[i][static_cast<Point>(x)];
    for (std::size_t x = 0; x < nt; ++x) {
      img[ns + x] = static_cast<Point>(ns + generator_images[i][static_cast<Point>(x)]);
    }
    gens.emplace_back(std::move(img));
  }
  return PermGroup(ns + nt, std::move(gens)).order() == source.order();
}

Permutation GroupHomomorphism::operator()(Permutation const& x) const {
  GroupTable t = GroupTable::from_perm_group(source);
  auto e = t.find(x);
  if (!e) throw std::invalid_argument("GroupHomomorphism: element not in source");
  return t.evaluate(*e, [&] {
    std::vector<Permutation> letters;
    for (auto const& y : generator_images) {
      letters.push_back(y);
      letters.push_back(y.inverse());
    }
    return letters;
  }(), target.identity(), [](Permutation const& a, Permutation const& b) { return a * b; });
}

GroupData::GroupData(PermGroup g, std::size_t table_cap)
    : group_(std::move(g)),
      table_(std::make_shared<GroupTable const>(GroupTable::from_perm_group(group_, table_cap))) {}

ClassData const& GroupData::classes() {
  if (!classes_) classes_ = perfect::conjugacy_classes(*table_);
  return *classes_;
}

std::vector<NormalSubgroup> const& GroupData::normals() {
  if (!normals_) normals_ = perfect::normal_subgroups(*table_, classes());
  return *normals_;
}

AutomorphismGroup const& GroupData::automorphisms(std::uint64_t node_budget) {
  if (!aut_) aut_ = perfect::automorphism_group(*table_, classes(), node_budget);
  return *aut_;
}

PermGroup GroupData::subgroup(Subgroup const& s) const {
  std::vector<Permutation> gens;
  for (Elem x : s.generators) gens.push_back(element(x));
  return PermGroup(group_.degree(), std::move(gens));
}

GroupHomomorphism to_homomorphism(GroupData const& source, GroupData const& target, ElementMap const& map) {
  GroupHomomorphism h{source.group(), target.group(), {}};
  for (Elem x : source.table()->generators()) h.generator_images.push_back(target.element(map(x)));
  return h;
}

std::uint64_t order(PermGroup const& g) { return g.order(); }

std::vector<ClassSummary> conjugacy_classes(PermGroup const& g) {
  GroupData d(g);
  std::vector<ClassSummary> out;
  for (auto const& c : d.classes().classes) {
    out.push_back({d.element(c.representative), c.element_order, c.size(), c.centralizer_order});
  }
  return out;
}

std::vector<NormalSubgroupInfo> normal_subgroups(PermGroup const& g) {
  GroupData d(g);
  std::vector<NormalSubgroupInfo> out;
  for (auto const& n : d.normals()) out.push_back({d.subgroup(n.sub), n.minimal});
  return out;
}

AutomorphismInfo automorphism_group(PermGroup const& g) {
  GroupData d(g);
  auto const& aut = d.automorphisms();
  AutomorphismInfo out;
  out.order = aut.order;
  out.inner_order = aut.inner_order;
  out.image = automorphism_permutation_group(*d.table(), d.classes(), aut);
  for (Elem c : d.table()->generators()) {
    out.generators.push_back(to_homomorphism(d, d, inner_automorphism(*d.table(), c)));
  }
  for (std::size_t i = 1; i < aut.outer.size(); ++i) out.generators.push_back(to_homomorphism(d, d, aut.outer[i]));
  return out;
}

std::optional<GroupHomomorphism> isomorphic(PermGroup const& g, PermGroup const& h,
                                            std::uint64_t node_budget) {
  if (g.order() != h.order()) return std::nullopt;
  GroupData a(g), b(h);
  auto m = find_isomorphism(*a.table(), a.classes(), *b.table(), b.classes(), node_budget);
  if (!m) return std::nullopt;
  return to_homomorphism(a, b, *m);
}

std::vector<SubgroupClassInfo> low_index_subgroups(PermGroup const& g, std::size_t max_index) {
  GroupData d(g);
  std::vector<SubgroupClassInfo> out;
  for (auto const& c : low_index_subgroups(*d.table(), max_index)) {
    out.push_back({d.subgroup(c.subgroup), c.index, c.class_size});
  }
  return out;
}

}  // namespace perfect
