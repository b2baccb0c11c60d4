#include "forge/group.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "forge/predicate.hpp"

namespace forge {

PermGroup PermGroup::generate(int degree, const std::vector<Permutation>& generators, int cap) {
  for (const auto& g : generators)
    if (g.degree() != degree) throw Error("generator degree mismatch");
  std::set<Permutation> seen;
  std::deque<Permutation> todo;
  Permutation id = Permutation::identity(degree);
  seen.insert(id);
  todo.push_back(id);
  for (const auto& g : generators) {
    if (seen.insert(g).second) todo.push_back(g);
    Permutation gi = g.inverse();
    if (seen.insert(gi).second) todo.push_back(gi);
  }
  while (!todo.empty()) {
    Permutation cur = todo.front();
    todo.pop_front();
    for (const auto& g : generators) {
      Permutation prod = cur * g;
      if (seen.insert(prod).second) todo.push_back(prod);
      prod = g * cur;
      if (seen.insert(prod).second) todo.push_back(prod);
    }
    if (static_cast<int>(seen.size()) > cap)
      throw Error("group closure exceeds cap of " + std::to_string(cap) + " elements");
  }
  PermGroup out;
  out.degree_ = degree;
  out.elems_.assign(seen.begin(), seen.end());
  out.gens_ = generators;
  if (out.gens_.empty()) out.gens_.push_back(id);
  return out;
}

PermGroup PermGroup::trivial(int degree) { return generate(degree, {}); }

PermGroup PermGroup::symmetric(int degree) {
  std::vector<Permutation> gens;
  if (degree >= 2) gens.push_back(Permutation::transposition(degree, 0, 1));
  if (degree >= 3) {
    std::vector<int> entries(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) entries[static_cast<std::size_t>(i)] = i;
    gens.push_back(Permutation::cycle(degree, entries));
  }
  return generate(degree, gens);
}

PermGroup PermGroup::from_elements(std::vector<Permutation> elements) {
  if (elements.empty()) throw Error("element set must contain at least the identity");
  int degree = elements.front().degree();
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  std::set<Permutation> set(elements.begin(), elements.end());
  for (const auto& p : elements) {
    if (p.degree() != degree) throw Error("element degree mismatch");
    if (!set.count(p.inverse())) throw Error("element set not closed under inverse");
  }
  for (const auto& p : elements)
    for (const auto& q : elements)
      if (!set.count(p * q)) throw Error("element set not closed under composition");
  if (!set.count(Permutation::identity(degree)))
    throw Error("element set does not contain the identity");
  PermGroup out;
  out.degree_ = degree;
  out.elems_ = std::move(elements);
  out.gens_ = out.elems_;
  return out;
}

bool PermGroup::contains(const Permutation& p) const {
  return std::binary_search(elems_.begin(), elems_.end(), p);
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (degree_ != other.degree()) return false;
  for (const auto& p : elems_)
    if (!other.contains(p)) return false;
  return true;
}

std::vector<int> PermGroup::fixed_points() const {
  std::vector<int> out;
  for (int x = 0; x < degree_; ++x) {
    bool fixed = true;
    for (const auto& p : elems_)
      if (p(x) != x) {
        fixed = false;
        break;
      }
    if (fixed) out.push_back(x);
  }
  return out;
}

PermGroup pointwise_stabilizer(const PermGroup& g, const std::vector<int>& atoms) {
  return pointwise_stabilizer(g, atoms, {});
}

PermGroup pointwise_stabilizer(const PermGroup& g, const std::vector<int>& atoms,
                               const std::vector<PredicateRel>& preds) {
  for (int a : atoms)
    if (a < 0 || a >= g.degree()) throw Error("stabilizer atom out of domain");
  std::vector<Permutation> kept;
  for (const auto& p : g.elements()) {
    bool ok = true;
    for (int a : atoms)
      if (p(a) != a) {
        ok = false;
        break;
      }
    if (ok)
      for (const auto& alpha : preds)
        if (act_on_predicate(p, alpha) != alpha) {
          ok = false;
          break;
        }
    if (ok) kept.push_back(p);
  }
  return PermGroup::from_elements(std::move(kept));
}

PermGroup conjugate_subgroup(const PermGroup& h, const Permutation& pi) {
  if (pi.degree() != h.degree()) throw Error("conjugating permutation degree mismatch");
  Permutation inv = pi.inverse();
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(h.order()));
  for (const auto& p : h.elements()) out.push_back(pi * p * inv);
  return PermGroup::from_elements(std::move(out));
}

std::vector<int> orbit_of_atom(const PermGroup& g, int x) {
  if (x < 0 || x >= g.degree()) throw Error("orbit point out of domain");
  std::set<int> seen;
  for (const auto& p : g.elements()) seen.insert(p(x));
  return {seen.begin(), seen.end()};
}

std::vector<std::vector<int>> orbit_of_tuple(const PermGroup& g, const std::vector<int>& tuple) {
  for (int x : tuple)
    if (x < 0 || x >= g.degree()) throw Error("orbit tuple entry out of domain");
  std::set<std::vector<int>> seen;
  for (const auto& p : g.elements()) seen.insert(p.apply(tuple));
  return {seen.begin(), seen.end()};
}

PermGroup intersect(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree()) throw Error("group intersection degree mismatch");
  std::vector<Permutation> out;
  for (const auto& p : a.elements())
    if (b.contains(p)) out.push_back(p);
  return PermGroup::from_elements(std::move(out));
}

std::vector<PermGroup> all_subgroups(const PermGroup& g, int order_cap) {
  if (g.order() > order_cap)
    throw Error("subgroup enumeration capped at order " + std::to_string(order_cap) +
                ", group has " + std::to_string(g.order()));
  std::set<std::vector<Permutation>> found;
  std::deque<std::vector<Permutation>> todo;
  PermGroup triv = PermGroup::trivial(g.degree());
  found.insert(triv.elements());
  todo.push_back(triv.elements());
  while (!todo.empty()) {
    std::vector<Permutation> base = todo.front();
    todo.pop_front();
    for (const auto& p : g.elements()) {
      if (std::binary_search(base.begin(), base.end(), p)) continue;
      std::vector<Permutation> gens = base;
      gens.push_back(p);
      PermGroup ext = PermGroup::generate(g.degree(), gens);
      if (found.insert(ext.elements()).second) todo.push_back(ext.elements());
    }
  }
  std::vector<PermGroup> out;
  out.reserve(found.size());
  for (const auto& elems : found) out.push_back(PermGroup::from_elements(elems));
  return out;
}

}  // namespace forge
