#include "forge/perm.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace forge {

Domain::Domain(int n) {
  if (n < 0) throw Error("domain size must be non-negative");
  labels_.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
}

Domain::Domain(std::vector<std::string> labels, std::vector<int> tags)
    : labels_(std::move(labels)), tags_(std::move(tags)) {
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size()) throw Error("domain labels must be pairwise distinct");
  if (!tags_.empty() && tags_.size() != labels_.size())
    throw Error("sort tag list must match domain size");
}

int Domain::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  throw Error("unknown atom label: " + label);
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> hit(img_.size(), false);
  for (int v : img_) {
    if (v < 0 || v >= degree() || hit[static_cast<std::size_t>(v)])
      throw Error("permutation image array is not a bijection");
    hit[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> img(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) img[static_cast<std::size_t>(i)] = i;
  return Permutation(std::move(img));
}

Permutation Permutation::transposition(int degree, int a, int b) {
  Permutation p = identity(degree);
  if (a < 0 || b < 0 || a >= degree || b >= degree) throw Error("transposition out of range");
  std::swap(p.img_[static_cast<std::size_t>(a)], p.img_[static_cast<std::size_t>(b)]);
  return p;
}

Permutation Permutation::cycle(int degree, const std::vector<int>& entries) {
  Permutation p = identity(degree);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    int from = entries[i];
    int to = entries[(i + 1) % entries.size()];
    if (from < 0 || from >= degree) throw Error("cycle entry out of range");
    p.img_[static_cast<std::size_t>(from)] = to;
  }
  // re-validate: overlapping entries would break bijectivity
  return Permutation(std::move(p.img_));
}

std::vector<int> Permutation::apply(const std::vector<int>& tuple) const {
  std::vector<int> out(tuple.size());
  for (std::size_t i = 0; i < tuple.size(); ++i) out[i] = (*this)(tuple[i]);
  return out;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) throw Error("permutation degree mismatch in composition");
  std::vector<int> img(img_.size());
  for (int x = 0; x < degree(); ++x) img[static_cast<std::size_t>(x)] = (*this)(rhs(x));
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(img_.size());
  for (int x = 0; x < degree(); ++x) img[static_cast<std::size_t>((*this)(x))] = x;
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (int x = 0; x < degree(); ++x)
    if ((*this)(x) != x) return false;
  return true;
}

std::string Permutation::cycles() const {
  std::string out;
  std::vector<bool> seen(img_.size(), false);
  for (int i = 0; i < degree(); ++i) {
    if (seen[static_cast<std::size_t>(i)] || (*this)(i) == i) continue;
    out += '(';
    int j = i;
    bool first = true;
    do {
      if (!first) out += ' ';
      out += std::to_string(j);
      seen[static_cast<std::size_t>(j)] = true;
      j = (*this)(j);
      first = false;
    } while (j != i);
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

Permutation Permutation::parse_cycles(const std::string& text, int degree) {
  Permutation p = Permutation::identity(degree);
  std::vector<bool> used(static_cast<std::size_t>(degree), false);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  bool any = false;
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation", i);
    ++i;
    std::vector<int> entries;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected domain index in cycle", i);
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + (text[i++] - '0');
      if (v >= degree) throw ParseError("cycle entry " + std::to_string(v) + " out of range", i);
      if (used[static_cast<std::size_t>(v)])
        throw ParseError("repeated entry in cycle notation", i);
      used[static_cast<std::size_t>(v)] = true;
      entries.push_back(v);
      skip_ws();
    }
    if (i >= text.size()) throw ParseError("unterminated cycle", i);
    ++i;  // ')'
    skip_ws();
    if (!entries.empty()) p = p * Permutation::cycle(degree, entries);
    any = true;
  }
  if (!any) throw ParseError("empty permutation string", 0);
  return p;
}

}  // namespace forge
