#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oblivnet/network.hpp"
#include "oblivnet/random.hpp"

namespace oblivnet {

enum class VerifyMode { exhaustive, sampled };

std::string to_string(VerifyMode mode);

struct VerificationReport {
  bool passed = true;
  /// A 0-1 input the network fails to sort; present iff !passed.
  std::optional<std::vector<std::uint8_t>> witness;
  std::uint64_t inputs_checked = 0;
  VerifyMode mode = VerifyMode::exhaustive;
};

inline constexpr std::size_t kDefaultExhaustiveLimit = 24;
inline constexpr std::uint64_t kDefaultSampleCount = 100000;

/// Zero-one check. Widths up to `exhaustive_limit` enumerate all 2^width
/// binary inputs, and the reported witness is then the failing input with the
/// smallest index (wire 0 is the least significant bit). Wider networks are
/// checked on `sample_count` seeded random binary inputs whose number of ones
/// is drawn uniformly from [0, width].
VerificationReport verify_zero_one(const Network& net,
                                   std::size_t exhaustive_limit = kDefaultExhaustiveLimit,
                                   std::uint64_t sample_count = kDefaultSampleCount,
                                   std::uint64_t seed = 0, unsigned jobs = 1);

/// Fills bit `lane` of `wires` with a random binary input of `ones` ones.
void random_binary_lane(std::span<std::uint64_t> wires, unsigned lane, std::size_t ones,
                        std::vector<std::uint32_t>& scratch, Rng& rng);

/// Fills all 64 lanes with random binary inputs, each with a uniformly drawn
/// number of ones.
void random_binary_lanes(std::span<std::uint64_t> wires, std::vector<std::uint32_t>& scratch,
                         Rng& rng);

/// Number of worker threads: explicit value if non-zero, otherwise the
/// OBLIVNET_JOBS environment variable, otherwise 1.
unsigned resolve_jobs(unsigned requested);

}  // namespace oblivnet
