#ifndef FORGE_ATOMS_HPP
#define FORGE_ATOMS_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "forge/error.hpp"
#include "forge/perm.hpp"

namespace forge {

/// The infinite atom sorts. Each sort fixes its automorphism group:
///   Equality  - counted atoms a0,a1,..       all permutations
///   Ordered   - rational points              order automorphisms
///   Paired    - pairs {a_n,b_n}              flips of individual pairs
///   TwoSorted - halves u0,u1,../v0,v1,..     permutations preserving halves
enum class AtomSort { Equality, Ordered, Paired, TwoSorted };

std::string sort_name(AtomSort sort);
AtomSort sort_from_name(const std::string& name);

/// Exact rational with reduced num/den, den > 0.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d);
  static Rational of(long long n) { return Rational(n, 1); }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  std::strong_ordering operator<=>(const Rational& o) const;
  bool operator==(const Rational& o) const = default;

  static Rational midpoint(const Rational& a, const Rational& b);
  std::string str() const;
  static Rational parse(const std::string& text);
};

/// One atom of some sort. Field use depends on the sort:
///   Equality:  n = index               Paired:    n = pair index, aux = side
///   TwoSorted: n = index, aux = half   Ordered:   q = value
struct Atom {
  long long n = 0;
  int aux = 0;
  Rational q;

  bool operator==(const Atom& other) const = default;
  static Atom counted(long long n) { return Atom{n, 0, {}}; }
  static Atom rational(Rational q) { return Atom{0, 0, q}; }
  static Atom paired(long long pair, int side) { return Atom{pair, side, {}}; }
  static Atom half(int half, long long n) { return Atom{n, half, {}}; }
};

bool atom_less(AtomSort sort, const Atom& a, const Atom& b);
std::string atom_name(AtomSort sort, const Atom& a);
Atom atom_parse(AtomSort sort, const std::string& name);
void sort_atoms(AtomSort sort, std::vector<Atom>& atoms);

/// Canonical support list: sorted, duplicate-free; for the paired sort also
/// closed under pairmates (the stabilizer pins whole pairs).
std::vector<Atom> canonical_support(AtomSort sort, std::vector<Atom> atoms);

/// One coordinate of an orbit descriptor: either a pinned support atom or a
/// fresh class. For the paired sort `bit` distinguishes the class anchor (0)
/// from its pairmate (1).
struct DescriptorSlot {
  bool is_support = false;
  int ref = 0;  // support position or fresh class id
  int bit = 0;

  auto operator<=>(const DescriptorSlot&) const = default;
};

/// Per-class payload: ordered atoms carry the interval between neighbouring
/// support points plus the rank among classes sharing that interval;
/// two-sorted atoms carry their half.
struct FreshClass {
  int region = 0;
  int rank = 0;

  auto operator<=>(const FreshClass&) const = default;
};

/// Canonical orbit type of an n-tuple relative to a support. Descriptors over
/// the same support are mutually exclusive and jointly cover all n-tuples.
struct Descriptor {
  std::vector<DescriptorSlot> slots;
  std::vector<FreshClass> classes;

  auto operator<=>(const Descriptor&) const = default;

  /// Constraint vocabulary: "eq(i,j)", "eq(i,s_k)", "lt(i,j)", "lt(i,s_k)",
  /// "gt(i,s_k)", "half(i,h)", "pairmate(i,j)". Absent relations are negative.
  std::vector<std::string> constraints(AtomSort sort) const;
  static Descriptor from_constraints(AtomSort sort, int arity, int support_size,
                                     const std::vector<std::string>& constraints);
};

/// The canonical descriptor of a concrete tuple relative to the support.
Descriptor describe_tuple(AtomSort sort, const std::vector<Atom>& support,
                          const std::vector<Atom>& tuple);

/// The complete duplicate-free orbit decomposition of n-tuples under the
/// pointwise stabilizer of the support. Arity is capped at 3.
std::vector<Descriptor> orbits_over(AtomSort sort, const std::vector<Atom>& support, int arity);

/// A finite slice of an atom sort, bridging to the finite machinery: the
/// chosen atoms in canonical order together with the induced Domain.
struct Truncation {
  AtomSort sort;
  std::vector<Atom> atoms;
  Domain domain;

  int index_of(const Atom& a) const;
  const Atom& atom(int i) const { return atoms.at(static_cast<std::size_t>(i)); }
  int size() const { return static_cast<int>(atoms.size()); }
};

/// A truncation of the given size containing the support. Equality-like
/// sorts take the smallest fresh atoms; the ordered sort fills every region
/// with a deterministic chain of rational sample points; the paired sort
/// always includes complete pairs (size is rounded up if needed).
Truncation make_truncation(AtomSort sort, const std::vector<Atom>& support, int size);

/// A truncation rich enough that every descriptor over the support is
/// realized by some tuple of the given arity (used by exact drop-tests).
Truncation make_rich_truncation(AtomSort sort, const std::vector<Atom>& support, int arity);

/// Wraps an explicit atom list (sorted and deduplicated) as a truncation.
Truncation make_truncation_from_atoms(AtomSort sort, std::vector<Atom> atoms);

/// Fresh atoms outside `used`, one representative per single-atom orbit
/// (ordered: one per interval; two-sorted: one per half; else one).
std::vector<Atom> fresh_representatives(AtomSort sort, const std::vector<Atom>& used);

/// A finitely described element of the sort's group:
///   Equality/TwoSorted: a finite atom permutation extended by the identity;
///   Ordered: strictly increasing breakpoints extended piecewise linearly;
///   Paired: a set of pair indices to flip.
struct PermSpec {
  AtomSort sort = AtomSort::Equality;
  std::vector<std::pair<Atom, Atom>> map;
  std::vector<long long> flips;

  static PermSpec identity(AtomSort sort);
  static PermSpec swap_atoms(AtomSort sort, const Atom& a, const Atom& b);
  static PermSpec flip_pairs(std::vector<long long> pairs);

  void validate() const;  // throws Error for specs outside the sort's group
  Atom apply(const Atom& a) const;
  PermSpec inverse() const;
};

}  // namespace forge

#endif
