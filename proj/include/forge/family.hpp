#ifndef FORGE_FAMILY_HPP
#define FORGE_FAMILY_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "forge/group.hpp"
#include "forge/predicate.hpp"

namespace forge {

/// One member of an ideal: a finite set of atoms, optionally together with
/// predicates (for ideals over the individuals extended by a predicate part).
struct IdealMember {
  std::vector<int> atoms;
  std::vector<PredicateRel> preds;

  void canonicalize();
  bool operator==(const IdealMember& other) const = default;
  bool operator<(const IdealMember& other) const;
  bool subset_of(const IdealMember& other) const;
  static IdealMember union_of(const IdealMember& a, const IdealMember& b);
  bool empty() const { return atoms.empty() && preds.empty(); }
};

/// A normal ideal: downward/union closed system of finite sets, closed under
/// the group action, containing every finite atom set. Kept intensionally;
/// explicit lists carry a generalized flag when the finite-subset axiom is
/// deliberately waived to make finite experiments non-trivial.
class NormalIdeal {
 public:
  enum class Kind { FiniteSupports, ExtendedFiniteSupports, Explicit };

  static NormalIdeal finite_supports();
  /// Finite subsets of I together with predicates drawn from the given part.
  /// The part must be closed under the ambient group; the axiom audit checks
  /// this rather than assuming it.
  static NormalIdeal extended_finite_supports(std::vector<PredicateRel> predicate_part);
  static NormalIdeal explicit_list(std::vector<IdealMember> members, bool generalized);

  Kind kind() const { return kind_; }
  bool generalized() const { return generalized_; }
  const std::vector<IdealMember>& members() const { return members_; }
  const std::vector<PredicateRel>& predicate_part() const { return predicate_part_; }

  bool contains(const IdealMember& m) const;
  /// Candidate members to try when searching for a stabilizer witness.
  std::vector<IdealMember> search_candidates(int domain_size) const;

 private:
  Kind kind_ = Kind::FiniteSupports;
  bool generalized_ = false;
  std::vector<IdealMember> members_;
  std::vector<PredicateRel> predicate_part_;
};

/// A normal filter of subgroups, kept as a membership oracle plus payload.
/// Subgroup lattices are never enumerated here; only the axiom audit does
/// that, under a size cap.
class NormalFilter {
 public:
  enum class Kind { AllSubgroups, Induced, ExplicitSubgroups };

  static NormalFilter all_subgroups();  // every subgroup
  static NormalFilter induced(NormalIdeal ideal);
  static NormalFilter explicit_subgroups(std::vector<PermGroup> subgroups, bool generalized);

  Kind kind() const { return kind_; }
  bool generalized() const;
  const NormalIdeal& ideal() const { return ideal_; }
  const std::vector<PermGroup>& subgroups() const { return subgroups_; }

  /// Membership as used downstream when building models. Explicit lists are
  /// read as generating data: a subgroup belongs when it contains a listed
  /// one (upward closure).
  bool contains(const PermGroup& g, const PermGroup& h,
                IdealMember* witness = nullptr) const;

  /// Membership as written: explicit lists are taken literally. This is what
  /// the axiom audit checks, so that non-upward-closed lists fail (ii).
  bool contains_literal(const PermGroup& g, const PermGroup& h) const;

 private:
  Kind kind_ = Kind::AllSubgroups;
  bool generalized_ = false;
  NormalIdeal ideal_;
  std::vector<PermGroup> subgroups_;
};

struct AxiomVerdict {
  std::string axiom;  // "i" .. "v"
  bool pass = true;
  nlohmann::json witness;  // structured violation data, null when passing
  std::string detail;
};

struct AxiomReport {
  std::vector<AxiomVerdict> verdicts;
  bool generalized = false;
  bool all_pass() const;
  const AxiomVerdict& verdict(const std::string& axiom) const;
  nlohmann::json to_json() const;
};

AxiomReport check_normal_ideal_axioms(const PermGroup& g, const NormalIdeal& ideal);
AxiomReport check_normal_filter_axioms(const PermGroup& g, const NormalFilter& filter);

/// Replays a failed verdict's witness against the family; true when the
/// witness still demonstrates the violation.
bool recheck_ideal_witness(const PermGroup& g, const NormalIdeal& ideal,
                           const AxiomVerdict& verdict);
bool recheck_filter_witness(const PermGroup& g, const NormalFilter& filter,
                            const AxiomVerdict& verdict);

/// True when h belongs to the filter over g. Pre: h is a subgroup of g.
bool filter_contains(const PermGroup& g, const NormalFilter& filter, const PermGroup& h,
                     IdealMember* witness = nullptr);

/// A filter member inside the symmetry subgroup of alpha, preferring small
/// ideal witnesses so the resulting stabilizer bound is non-trivial.
/// Empty when alpha is not symmetric for the filter.
std::optional<PermGroup> filter_witness_subgroup(const PermGroup& g, const NormalFilter& filter,
                                                 const PermGroup& sym_alpha);

nlohmann::json permutation_to_json(const Permutation& p);
nlohmann::json group_to_json(const PermGroup& g);
nlohmann::json ideal_member_to_json(const IdealMember& m);

}  // namespace forge

#endif
