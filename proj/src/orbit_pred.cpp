#include "forge/orbit_pred.hpp"

#include <algorithm>
#include <map>

namespace forge {

OrbitPredicate::OrbitPredicate(AtomSort sort, int arity, std::vector<Atom> support,
                               std::vector<Descriptor> included)
    : sort_(sort), arity_(arity) {
  if (arity < 1 || arity > 3) throw Error("orbit predicates are capped at arity 3");
  support_ = canonical_support(sort, std::move(support));
  std::sort(included.begin(), included.end());
  included.erase(std::unique(included.begin(), included.end()), included.end());
  std::vector<Descriptor> all = orbits_over(sort, support_, arity);
  for (const Descriptor& d : included)
    if (!std::binary_search(all.begin(), all.end(), d))
      throw Error("descriptor is not canonical over the declared support");
  included_ = std::move(included);
}

OrbitPredicate OrbitPredicate::trusted(AtomSort sort, int arity, std::vector<Atom> support,
                                       std::vector<Descriptor> included) {
  OrbitPredicate p;
  p.sort_ = sort;
  p.arity_ = arity;
  p.support_ = std::move(support);
  std::sort(included.begin(), included.end());
  p.included_ = std::move(included);
  return p;
}

OrbitPredicate OrbitPredicate::empty(AtomSort sort, int arity) {
  return trusted(sort, arity, {}, {});
}

OrbitPredicate OrbitPredicate::full(AtomSort sort, int arity) {
  return trusted(sort, arity, {}, orbits_over(sort, {}, arity));
}

bool OrbitPredicate::contains(const std::vector<Atom>& tuple) const {
  if (static_cast<int>(tuple.size()) != arity_) throw Error("tuple arity mismatch");
  Descriptor d = describe_tuple(sort_, support_, tuple);
  return std::binary_search(included_.begin(), included_.end(), d);
}

nlohmann::json OrbitPredicate::to_json() const {
  nlohmann::json sup = nlohmann::json::array();
  for (const Atom& a : support_) sup.push_back(atom_name(sort_, a));
  nlohmann::json descs = nlohmann::json::array();
  for (const Descriptor& d : included_) descs.push_back(d.constraints(sort_));
  return nlohmann::json{
      {"sort", sort_name(sort_)}, {"arity", arity_}, {"support", sup}, {"descriptors", descs}};
}

OrbitPredicate OrbitPredicate::from_json(const nlohmann::json& j) {
  AtomSort sort = sort_from_name(j.at("sort").get<std::string>());
  int arity = j.at("arity").get<int>();
  std::vector<Atom> support;
  for (const auto& name : j.at("support")) support.push_back(atom_parse(sort, name));
  support = canonical_support(sort, std::move(support));
  std::vector<Descriptor> included;
  for (const auto& cons : j.at("descriptors"))
    included.push_back(Descriptor::from_constraints(sort, arity,
                                                    static_cast<int>(support.size()),
                                                    cons.get<std::vector<std::string>>()));
  return OrbitPredicate(sort, arity, std::move(support), std::move(included));
}

PredicateRel to_finite(const OrbitPredicate& p, const Truncation& t) {
  if (t.sort != p.sort()) throw Error("truncation sort mismatch");
  for (const Atom& s : p.support()) t.index_of(s);  // throws when missing
  int k = t.size();
  PredicateRel out(p.arity(), k);
  std::vector<int> idx(static_cast<std::size_t>(p.arity()), 0);
  std::vector<Atom> tuple(static_cast<std::size_t>(p.arity()));
  for (std::int64_t code = 0; code < out.table_size(); ++code) {
    for (int i = 0; i < p.arity(); ++i)
      tuple[static_cast<std::size_t>(i)] = t.atom(idx[static_cast<std::size_t>(i)]);
    if (p.contains(tuple)) out.set(code, true);
    for (int i = 0; i < p.arity(); ++i) {
      if (++idx[static_cast<std::size_t>(i)] < k) break;
      idx[static_cast<std::size_t>(i)] = 0;
    }
  }
  return out;
}

OrbitPredicate symbolic_act(const PermSpec& pi, const OrbitPredicate& p) {
  if (pi.sort != p.sort()) throw Error("group element sort mismatch");
  pi.validate();
  std::vector<Atom> old_support = p.support();
  std::vector<Atom> new_support;
  for (const Atom& s : old_support) new_support.push_back(pi.apply(s));
  sort_atoms(p.sort(), new_support);
  // position of each old support atom's image in the new sorted support
  std::vector<int> relabel(old_support.size());
  for (std::size_t j = 0; j < old_support.size(); ++j) {
    Atom image = pi.apply(old_support[j]);
    auto it = std::find(new_support.begin(), new_support.end(), image);
    relabel[j] = static_cast<int>(it - new_support.begin());
  }
  std::vector<Descriptor> moved;
  for (Descriptor d : p.descriptors()) {
    for (DescriptorSlot& s : d.slots)
      if (s.is_support) s.ref = relabel[static_cast<std::size_t>(s.ref)];
    moved.push_back(std::move(d));
  }
  return OrbitPredicate::trusted(p.sort(), p.arity(), std::move(new_support), std::move(moved));
}

std::optional<OrbitPredicate> express_over(const OrbitPredicate& p,
                                           const std::vector<Atom>& new_support) {
  AtomSort sort = p.sort();
  std::vector<Atom> target = canonical_support(sort, new_support);
  std::vector<Atom> combined = target;
  combined.insert(combined.end(), p.support().begin(), p.support().end());
  combined = canonical_support(sort, std::move(combined));
  Truncation t = make_rich_truncation(sort, combined, p.arity());

  std::map<Descriptor, bool> value;
  int k = t.size();
  std::vector<int> idx(static_cast<std::size_t>(p.arity()), 0);
  std::vector<Atom> tuple(static_cast<std::size_t>(p.arity()));
  std::int64_t total = 1;
  for (int i = 0; i < p.arity(); ++i) total *= k;
  for (std::int64_t code = 0; code < total; ++code) {
    for (int i = 0; i < p.arity(); ++i)
      tuple[static_cast<std::size_t>(i)] = t.atom(idx[static_cast<std::size_t>(i)]);
    bool v = p.contains(tuple);
    Descriptor d = describe_tuple(sort, target, tuple);
    auto [it, inserted] = value.insert({std::move(d), v});
    if (!inserted && it->second != v) return std::nullopt;  // not invariant
    for (int i = 0; i < p.arity(); ++i) {
      if (++idx[static_cast<std::size_t>(i)] < k) break;
      idx[static_cast<std::size_t>(i)] = 0;
    }
  }
  std::vector<Descriptor> included;
  for (const auto& [d, v] : value)
    if (v) included.push_back(d);
  return OrbitPredicate::trusted(sort, p.arity(), std::move(target), std::move(included));
}

std::vector<Atom> minimal_support(const OrbitPredicate& p) {
  AtomSort sort = p.sort();
  OrbitPredicate current = p;
  bool dropped = true;
  while (dropped) {
    dropped = false;
    const std::vector<Atom>& sup = current.support();
    for (std::size_t i = 0; i < sup.size(); ++i) {
      std::vector<Atom> reduced;
      for (std::size_t j = 0; j < sup.size(); ++j) {
        if (j == i) continue;
        if (sort == AtomSort::Paired && sup[j].n == sup[i].n) continue;  // drop the pair
        reduced.push_back(sup[j]);
      }
      if (auto q = express_over(current, reduced)) {
        current = *q;
        dropped = true;
        break;
      }
    }
  }
  if (sort != AtomSort::Paired) return current.support();
  std::vector<Atom> reps;
  for (const Atom& a : current.support())
    if (a.aux == 0) reps.push_back(a);
  return reps;
}

Truncation transport_truncation(const PermSpec& pi, const Truncation& t) {
  std::vector<Atom> moved;
  for (const Atom& a : t.atoms) moved.push_back(pi.apply(a));
  return make_truncation_from_atoms(pi.sort, std::move(moved));
}

Permutation induced_permutation(const PermSpec& pi, const Truncation& from,
                                const Truncation& to) {
  if (pi.sort != from.sort || pi.sort != to.sort) throw Error("truncation sort mismatch");
  if (from.size() != to.size()) throw Error("truncation sizes differ");
  std::vector<int> img(static_cast<std::size_t>(from.size()));
  for (int i = 0; i < from.size(); ++i)
    img[static_cast<std::size_t>(i)] = to.index_of(pi.apply(from.atom(i)));
  return Permutation(std::move(img));
}

}  // namespace forge
