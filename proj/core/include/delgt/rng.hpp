#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "delgt/errors.hpp"

namespace delgt {

/// Identifier recorded in output headers so independent implementations can
/// reproduce per-trial randomness. The generator is std::mt19937_64 (whose
/// output sequence is fixed by the C++ standard); bounded draws use rejection
/// sampling as implemented in Rng::uniform_below, never the unspecified
/// standard-library distributions.
inline constexpr std::string_view kRngAlgorithm = "mt19937_64+rejection";

/// Seedable deterministic generator. Same seed, same draw sequence, on every
/// platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform value in [0, bound). Rejection sampling: draw 64-bit words,
  /// discard those >= bound * floor(2^64 / bound), reduce modulo bound.
  std::uint64_t uniform_below(std::uint64_t bound) {
    if (bound == 0) throw ContractViolation("uniform_below: bound must be positive");
    const std::uint64_t limit = bound * (~std::uint64_t{0} / bound);
    std::uint64_t draw;
    do {
      draw = engine_();
    } while (limit != 0 && draw >= limit);
    return draw % bound;
  }

  /// Bernoulli event with probability exactly 1/k.
  bool one_in(std::uint64_t k) { return uniform_below(k) == 0; }

  /// Uniform size-`count` subset of {0,...,universe-1}, sorted ascending.
  /// Floyd's sampling algorithm.
  std::vector<std::size_t> sample_subset(std::size_t universe, std::size_t count) {
    if (count > universe) throw ContractViolation("sample_subset: count exceeds universe");
    std::vector<std::size_t> chosen;
    chosen.reserve(count);
    for (std::size_t j = universe - count; j < universe; ++j) {
      const std::size_t t = static_cast<std::size_t>(uniform_below(j + 1));
      bool present = false;
      for (std::size_t v : chosen) {
        if (v == t) {
          present = true;
          break;
        }
      }
      chosen.push_back(present ? j : t);
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace delgt
