#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include "seqdist/core.hpp"

namespace seqdist {

/**
 * xorshift64* (Vigna): shifts 12, 25, 27 and output multiplier
 * 0x2545F4914F6CDD1D. A zero seed would lock the state at zero, so it is
 * replaced by default_seed. Bits are taken from the top of each output.
 */
class SeededGenerator {
public:
  using result_type = std::uint64_t;

  static constexpr std::uint64_t default_seed = 88172645463325252ULL;

  explicit SeededGenerator(std::uint64_t seed = default_seed) noexcept
      : state_(seed == 0 ? default_seed : seed) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept {
    state_ ^= state_ >> 12U;
    state_ ^= state_ << 25U;
    state_ ^= state_ >> 27U;
    return state_ * 0x2545F4914F6CDD1DULL;
  }

  bool next_bit() noexcept { return ((*this)() >> 63U) != 0; }

  /// Uniform index below `n` via the high 32 bits (multiply-shift).
  std::size_t below(std::size_t n) noexcept {
    return static_cast<std::size_t>((((*this)() >> 32U) * n) >> 32U);
  }

  std::string bits(std::size_t n) {
    std::string out(n, '0');
    for (auto& c : out) {
      c = next_bit() ? '1' : '0';
    }
    return out;
  }

  std::string symbols(std::size_t n, const Alphabet& alphabet) {
    std::string out(n, alphabet[0]);
    for (auto& c : out) {
      c = alphabet[below(alphabet.size())];
    }
    return out;
  }

private:
  std::uint64_t state_;
};

} // namespace seqdist
