#ifndef FORGE_PERM_HPP
#define FORGE_PERM_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "forge/error.hpp"

namespace forge {

/// A finite individual domain: opaque atom labels with a dense 0-based index.
/// All arithmetic elsewhere runs on indices; labels only matter at the I/O
/// boundary. Optional per-atom sort tags support two-sorted truncations.
class Domain {
 public:
  Domain() = default;
  explicit Domain(int n);  // labels "0".."n-1", all tag 0
  Domain(std::vector<std::string> labels, std::vector<int> tags = {});

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::string>& labels() const { return labels_; }
  int tag(int i) const { return tags_.empty() ? 0 : tags_.at(static_cast<std::size_t>(i)); }
  bool has_tags() const { return !tags_.empty(); }

  /// Index of a label; throws Error for unknown labels.
  int index_of(const std::string& label) const;
  bool operator==(const Domain& other) const = default;

 private:
  std::vector<std::string> labels_;
  std::vector<int> tags_;  // empty means "all zero"
};

/// A permutation of {0,..,n-1}, stored as its image array.
/// Composition convention: (p * q)(x) = p(q(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int degree);
  /// Transposition (a b) on a domain of the given degree.
  static Permutation transposition(int degree, int a, int b);
  /// Single cycle (c0 c1 .. ck) on a domain of the given degree.
  static Permutation cycle(int degree, const std::vector<int>& entries);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[static_cast<std::size_t>(x)]; }
  std::vector<int> apply(const std::vector<int>& tuple) const;

  Permutation operator*(const Permutation& rhs) const;  // this after rhs
  Permutation inverse() const;
  bool is_identity() const;

  auto operator<=>(const Permutation& other) const = default;

  const std::vector<int>& images() const { return img_; }

  /// Cycle notation over domain indices, e.g. "(0 1)(2 3)"; identity is "()".
  std::string cycles() const;
  static Permutation parse_cycles(const std::string& text, int degree);

 private:
  std::vector<int> img_;
};

}  // namespace forge

#endif
