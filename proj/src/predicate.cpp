#include "forge/predicate.hpp"

#include <algorithm>

namespace forge {

namespace {

std::int64_t pow_checked(int base, int exp) {
  std::int64_t out = 1;
  for (int i = 0; i < exp; ++i) {
    out *= base;
    if (out > PredicateRel::kMaxTableBits)
      throw Error("predicate table size exceeds cap (domain^arity too large)");
  }
  return out;
}

}  // namespace

PredicateRel::PredicateRel(int arity, int domain_size) : arity_(arity), dsize_(domain_size) {
  if (arity < 1) throw Error("predicate arity must be at least 1");
  if (domain_size < 1) throw Error("predicate domain must be non-empty");
  bits_.assign(static_cast<std::size_t>(pow_checked(domain_size, arity)), false);
}

PredicateRel PredicateRel::from_tuples(int arity, int domain_size,
                                       const std::vector<std::vector<int>>& tuples) {
  PredicateRel out(arity, domain_size);
  for (const auto& t : tuples) out.insert(t);
  return out;
}

PredicateRel PredicateRel::full(int arity, int domain_size) {
  PredicateRel out(arity, domain_size);
  out.bits_.assign(out.bits_.size(), true);
  return out;
}

PredicateRel PredicateRel::from_set(int domain_size, const std::vector<int>& atoms) {
  PredicateRel out(1, domain_size);
  for (int a : atoms) out.set(a, true);
  return out;
}

std::int64_t PredicateRel::encode(const std::vector<int>& tuple) const {
  if (static_cast<int>(tuple.size()) != arity_) throw Error("tuple length does not match arity");
  std::int64_t code = 0;
  for (int i = arity_ - 1; i >= 0; --i) {
    int v = tuple[static_cast<std::size_t>(i)];
    if (v < 0 || v >= dsize_) throw Error("tuple entry out of domain");
    code = code * dsize_ + v;
  }
  return code;
}

std::vector<int> PredicateRel::decode(std::int64_t code) const {
  std::vector<int> tuple(static_cast<std::size_t>(arity_));
  for (int i = 0; i < arity_; ++i) {
    tuple[static_cast<std::size_t>(i)] = static_cast<int>(code % dsize_);
    code /= dsize_;
  }
  return tuple;
}

std::int64_t PredicateRel::count() const {
  return std::count(bits_.begin(), bits_.end(), true);
}

std::vector<std::vector<int>> PredicateRel::tuples() const {
  std::vector<std::vector<int>> out;
  for (std::int64_t c = 0; c < table_size(); ++c)
    if (test(c)) out.push_back(decode(c));
  return out;
}

PredicateRel PredicateRel::complement() const {
  PredicateRel out = *this;
  out.bits_.flip();
  return out;
}

void PredicateRel::assign_table(std::vector<bool> bits) {
  if (bits.size() != bits_.size()) throw Error("table size mismatch");
  bits_ = std::move(bits);
}

std::vector<std::int64_t> code_action(const Permutation& pi, int arity) {
  int k = pi.degree();
  std::int64_t size = pow_checked(k, arity);
  std::vector<std::int64_t> map(static_cast<std::size_t>(size));
  std::vector<int> tuple(static_cast<std::size_t>(arity), 0);
  for (std::int64_t code = 0; code < size; ++code) {
    std::int64_t image = 0;
    for (int i = arity - 1; i >= 0; --i)
      image = image * k + pi(tuple[static_cast<std::size_t>(i)]);
    map[static_cast<std::size_t>(code)] = image;
    for (int i = 0; i < arity; ++i) {
      if (++tuple[static_cast<std::size_t>(i)] < k) break;
      tuple[static_cast<std::size_t>(i)] = 0;
    }
  }
  return map;
}

PredicateRel act_on_predicate(const Permutation& pi, const PredicateRel& alpha) {
  if (pi.degree() != alpha.domain_size()) throw Error("permutation/predicate domain mismatch");
  std::vector<std::int64_t> map = code_action(pi, alpha.arity());
  PredicateRel out(alpha.arity(), alpha.domain_size());
  for (std::int64_t code = 0; code < alpha.table_size(); ++code)
    if (alpha.test(code)) out.set(map[static_cast<std::size_t>(code)], true);
  return out;
}

PermGroup sym_subgroup(const PermGroup& g, const PredicateRel& alpha) {
  if (g.degree() != alpha.domain_size()) throw Error("group/predicate domain mismatch");
  std::vector<Permutation> kept;
  for (const auto& p : g.elements())
    if (act_on_predicate(p, alpha) == alpha) kept.push_back(p);
  return PermGroup::from_elements(std::move(kept));
}

bool is_support(const PermGroup& g, const std::vector<int>& atoms, const PredicateRel& alpha) {
  PermGroup stab = pointwise_stabilizer(g, atoms);
  for (const auto& p : stab.elements())
    if (act_on_predicate(p, alpha) != alpha) return false;
  return true;
}

}  // namespace forge
