#pragma once

// k-subsets of {0..n-1} as 64-bit masks, in colex order (increasing integer
// value), with ranking so a rank range can be handed to one worker.

#include <bit>
#include <cstdint>
#include <stdexcept>

#include "klfree/exact.hpp"

namespace klfree {

/// Next integer with the same popcount (Gosper's hack). Undefined for 0.
constexpr std::uint64_t next_bit_permutation(std::uint64_t v) {
  const std::uint64_t t = v | (v - 1);
  return (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
}

constexpr std::uint64_t first_combination(unsigned k) { return k == 0 ? 0 : (k >= 64 ? ~0ULL : (1ULL << k) - 1); }

/// The combination of colex rank `rank` among k-subsets (combinatorial number system).
inline std::uint64_t unrank_combination(std::uint64_t rank, unsigned k) {
  std::uint64_t mask = 0;
  for (unsigned i = k; i >= 1; --i) {
    std::uint64_t c = i - 1;
    // largest c with C(c, i) <= rank
    while (binomial(c + 1, i) <= rank) ++c;
    mask |= 1ULL << c;
    rank -= static_cast<std::uint64_t>(binomial(c, i));
  }
  return mask;
}

/// Calls fn(mask) for the k-subsets of {0..n-1} with colex rank in [begin, end).
template <class Fn>
void for_each_combination(unsigned n, unsigned k, std::uint64_t begin, std::uint64_t end, Fn&& fn) {
  if (n > 64 || k > n) throw std::invalid_argument("combination parameters out of range");
  if (begin >= end) return;
  if (k == 0) {
    fn(std::uint64_t{0});
    return;
  }
  std::uint64_t mask = unrank_combination(begin, k);
  for (std::uint64_t r = begin; r < end; ++r) {
    fn(mask);
    if (r + 1 < end) mask = next_bit_permutation(mask);
  }
}

}  // namespace klfree
