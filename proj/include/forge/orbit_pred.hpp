#ifndef FORGE_ORBIT_PRED_HPP
#define FORGE_ORBIT_PRED_HPP

#include <optional>
#include <vector>

#include <json.hpp>

#include "forge/atoms.hpp"
#include "forge/predicate.hpp"

namespace forge {

/// A finitely supported predicate over an infinite atom sort, stored as the
/// support plus the set of orbit descriptors it contains. The denoted
/// relation is invariant under the pointwise stabilizer of the support by
/// construction. Immutable.
class OrbitPredicate {
 public:
  OrbitPredicate() = default;
  /// Validates that every descriptor is canonical over the support.
  OrbitPredicate(AtomSort sort, int arity, std::vector<Atom> support,
                 std::vector<Descriptor> included);
  /// Trusts the caller that descriptors are canonical (internal fast path
  /// for candidate enumeration).
  static OrbitPredicate trusted(AtomSort sort, int arity, std::vector<Atom> support,
                                std::vector<Descriptor> included);

  static OrbitPredicate empty(AtomSort sort, int arity);
  static OrbitPredicate full(AtomSort sort, int arity);

  AtomSort sort() const { return sort_; }
  int arity() const { return arity_; }
  const std::vector<Atom>& support() const { return support_; }
  const std::vector<Descriptor>& descriptors() const { return included_; }

  bool contains(const std::vector<Atom>& tuple) const;
  bool operator==(const OrbitPredicate& other) const = default;

  nlohmann::json to_json() const;
  static OrbitPredicate from_json(const nlohmann::json& j);

 private:
  AtomSort sort_ = AtomSort::Equality;
  int arity_ = 1;
  std::vector<Atom> support_;         // canonical; paired: closed under mates
  std::vector<Descriptor> included_;  // sorted
};

/// Materializes the predicate over the truncation's atoms.
PredicateRel to_finite(const OrbitPredicate& p, const Truncation& t);

/// Transports the predicate along a group element: support mapped, slot
/// references relabelled. Exact; validated against the sort's group.
OrbitPredicate symbolic_act(const PermSpec& pi, const OrbitPredicate& p);

/// Re-expresses p over another support when the denotation allows it
/// (checked exactly on a truncation realizing every combined orbit).
std::optional<OrbitPredicate> express_over(const OrbitPredicate& p,
                                           const std::vector<Atom>& new_support);

/// The least support. Unique for the equality and ordered sorts; for the
/// paired sort uniqueness holds at pair granularity and the side-0 atom
/// represents its pair; the two-sorted sort behaves per half.
std::vector<Atom> minimal_support(const OrbitPredicate& p);

/// Moves a truncation along a group element (atom-wise image, re-sorted).
Truncation transport_truncation(const PermSpec& pi, const Truncation& t);

/// The finite permutation the group element induces between two truncations;
/// throws when some image leaves the target truncation.
Permutation induced_permutation(const PermSpec& pi, const Truncation& from,
                                const Truncation& to);

}  // namespace forge

#endif
