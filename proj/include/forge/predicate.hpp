#ifndef FORGE_PREDICATE_HPP
#define FORGE_PREDICATE_HPP

#include <cstdint>
#include <vector>

#include "forge/group.hpp"
#include "forge/perm.hpp"

namespace forge {

/// An n-ary predicate over a finite domain of k atoms, stored as a dense
/// boolean table indexed by the base-k encoding of tuples. The encoding is
/// an internal detail and is never serialized.
class PredicateRel {
 public:
  static constexpr std::int64_t kMaxTableBits = 1 << 25;

  PredicateRel() = default;
  PredicateRel(int arity, int domain_size);
  static PredicateRel from_tuples(int arity, int domain_size,
                                  const std::vector<std::vector<int>>& tuples);
  static PredicateRel full(int arity, int domain_size);
  /// Unary predicate from a set of atom indices.
  static PredicateRel from_set(int domain_size, const std::vector<int>& atoms);

  int arity() const { return arity_; }
  int domain_size() const { return dsize_; }
  std::int64_t table_size() const { return static_cast<std::int64_t>(bits_.size()); }

  std::int64_t encode(const std::vector<int>& tuple) const;
  std::vector<int> decode(std::int64_t code) const;

  bool test(std::int64_t code) const { return bits_[static_cast<std::size_t>(code)]; }
  bool contains(const std::vector<int>& tuple) const { return test(encode(tuple)); }
  void set(std::int64_t code, bool value) { bits_[static_cast<std::size_t>(code)] = value; }
  void insert(const std::vector<int>& tuple) { set(encode(tuple), true); }

  std::int64_t count() const;
  bool is_empty() const { return count() == 0; }
  std::vector<std::vector<int>> tuples() const;  // in encoding order

  PredicateRel complement() const;

  auto operator<=>(const PredicateRel& other) const = default;

  const std::vector<bool>& table() const { return bits_; }
  void assign_table(std::vector<bool> bits);

 private:
  int arity_ = 0;
  int dsize_ = 0;
  std::vector<bool> bits_;
};

/// Image of every tuple code under pi, as a table-sized index map:
/// out[encode(t)] = encode(pi(t)).
std::vector<std::int64_t> code_action(const Permutation& pi, int arity);

/// The left action on predicates: result holds pi(t) exactly when alpha
/// holds t.
PredicateRel act_on_predicate(const Permutation& pi, const PredicateRel& alpha);

/// {pi in G | alpha acted by pi equals alpha}.
PermGroup sym_subgroup(const PermGroup& g, const PredicateRel& alpha);

/// True when the pointwise stabilizer of the atom set lies inside the
/// symmetry subgroup of alpha.
bool is_support(const PermGroup& g, const std::vector<int>& atoms, const PredicateRel& alpha);

}  // namespace forge

#endif
