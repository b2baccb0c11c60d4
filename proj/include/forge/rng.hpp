#ifndef FORGE_RNG_HPP
#define FORGE_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace forge {

/// Seeded PRNG wrapper. The raw stream is std::mt19937_64 (a named, versioned
/// algorithm with identical output on every conforming platform); bounded
/// draws use rejection sampling rather than std distributions, which are not
/// portable across standard libraries. Reports record both choices.
class SeededRng {
 public:
  static constexpr const char* kAlgorithm = "mt19937_64";
  static constexpr const char* kBoundedDraw = "rejection";

  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do {
      v = engine_();
    } while (v >= limit);
    return v % bound;
  }

  int below_int(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }

  bool coin() { return (engine_() & 1) != 0; }

  /// Derive an independent child stream (used to keep per-check sampling
  /// stable when checks are reordered).
  SeededRng fork(std::uint64_t salt) {
    return SeededRng(next_u64() ^ (salt * 0x9e3779b97f4a7c15ULL));
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace forge

#endif
