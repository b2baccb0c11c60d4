#ifndef FORGE_GROUP_HPP
#define FORGE_GROUP_HPP

#include <optional>
#include <vector>

#include "forge/perm.hpp"

namespace forge {

class PredicateRel;

/// A permutation group over {0,..,degree-1}, kept as a generator list plus
/// the fully materialized, sorted element set. Materialization is by naive
/// closure with a hard cap; anything needing more than the cap fails loudly.
/// Immutable after construction.
class PermGroup {
 public:
  static constexpr int kDefaultClosureCap = 10080;  // |S_7|

  /// Closure of generators plus the identity under composition and inverse.
  static PermGroup generate(int degree, const std::vector<Permutation>& generators,
                            int cap = kDefaultClosureCap);
  static PermGroup trivial(int degree);
  static PermGroup symmetric(int degree);
  /// Wraps an element set that is already closed (checked).
  static PermGroup from_elements(std::vector<Permutation> elements);
  /// Trusts the caller that the set is closed; internal fast path for
  /// stabilizers, symmetry subgroups and intersections.
  static PermGroup from_closed(std::vector<Permutation> elements);

  int degree() const { return degree_; }
  int order() const { return static_cast<int>(elems_.size()); }
  const std::vector<Permutation>& elements() const { return elems_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  const Permutation& element(int i) const { return elems_[static_cast<std::size_t>(i)]; }

  bool contains(const Permutation& p) const;
  bool is_subgroup_of(const PermGroup& other) const;
  bool operator==(const PermGroup& other) const {
    return degree_ == other.degree_ && elems_ == other.elems_;
  }

  /// Atoms fixed by every element.
  std::vector<int> fixed_points() const;

 private:
  PermGroup() = default;
  int degree_ = 0;
  std::vector<Permutation> elems_;  // sorted by image array
  std::vector<Permutation> gens_;
};

/// {pi in G | pi(x) = x for all x in atoms}.
PermGroup pointwise_stabilizer(const PermGroup& g, const std::vector<int>& atoms);

/// Extended stabilizer: additionally every listed predicate must be fixed
/// under the action on predicates.
PermGroup pointwise_stabilizer(const PermGroup& g, const std::vector<int>& atoms,
                               const std::vector<PredicateRel>& preds);

/// {pi h pi^-1 | h in H}.
PermGroup conjugate_subgroup(const PermGroup& h, const Permutation& pi);

std::vector<int> orbit_of_atom(const PermGroup& g, int x);
std::vector<std::vector<int>> orbit_of_tuple(const PermGroup& g, const std::vector<int>& tuple);

PermGroup intersect(const PermGroup& a, const PermGroup& b);

/// Every subgroup of g, found by closing element subsets one generator at a
/// time. Only valid for small groups; the cap guards the order of g.
std::vector<PermGroup> all_subgroups(const PermGroup& g, int order_cap = 24);

}  // namespace forge

#endif
