#ifndef LBPR_RNG_HPP
#define LBPR_RNG_HPP

#include <cstdint>
#include <random>
#include <stdexcept>

namespace lbpr {

/**
 * @brief Seedable random stream with a platform-independent output sequence.
 *
 * Wraps std::mt19937_64, whose raw output is fixed by the standard. The
 * standard distributions are implementation-defined, so integer and unit
 * interval draws are derived here directly from the raw words.
 */
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). Rejection sampling, no modulo bias.
  std::uint64_t index(std::uint64_t bound) {
    if (bound == 0) {
      throw std::invalid_argument("Rng::index: empty range");
    }
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t r = next();
    while (r >= limit) {
      r = next();
    }
    return r % bound;
  }

  /// Uniform integer in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) {
      throw std::invalid_argument("Rng::between: hi < lo");
    }
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(index(span));
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
  std::mt19937_64 engine_;
};

} // namespace lbpr

#endif
