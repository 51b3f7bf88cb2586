#include "oblivnet/verify.hpp"

#include <bit>
#include <cstdlib>
#include <limits>
#include <numeric>

#include "oblivnet/parallel.hpp"

namespace oblivnet {

std::string to_string(VerifyMode mode) {
  return mode == VerifyMode::exhaustive ? "exhaustive" : "sampled";
}

unsigned resolve_jobs(unsigned requested) {
  if (requested != 0) return requested;
  if (const char* env = std::getenv("OBLIVNET_JOBS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

void random_binary_lane(std::span<std::uint64_t> wires, unsigned lane, std::size_t ones,
                        std::vector<std::uint32_t>& scratch, Rng& rng) {
  const std::size_t n = wires.size();
  if (scratch.size() != n) {
    scratch.resize(n);
    std::iota(scratch.begin(), scratch.end(), 0u);
  }
  const std::uint64_t bit = std::uint64_t{1} << lane;
  for (std::uint64_t& w : wires) w &= ~bit;
  // Partial Fisher-Yates: the first `ones` slots become a uniform subset.
  for (std::size_t i = 0; i < ones; ++i) {
    const std::size_t j = i + uniform_below(rng, n - i);
    std::swap(scratch[i], scratch[j]);
    wires[scratch[i]] |= bit;
  }
}

void random_binary_lanes(std::span<std::uint64_t> wires, std::vector<std::uint32_t>& scratch,
                         Rng& rng) {
  const std::size_t n = wires.size();
  for (unsigned lane = 0; lane < 64; ++lane)
    random_binary_lane(wires, lane, uniform_below(rng, n + 1), scratch, rng);
}

namespace {

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

// Lane patterns for the six low bits of the input index.
constexpr std::uint64_t kLowPattern[6] = {
    0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
    0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL,
};

std::vector<std::uint8_t> lane_input(std::span<const std::uint64_t> wires, unsigned lane) {
  std::vector<std::uint8_t> input(wires.size());
  for (std::size_t w = 0; w < wires.size(); ++w) input[w] = (wires[w] >> lane) & 1U;
  return input;
}

VerificationReport verify_exhaustive(const Network& net, unsigned jobs) {
  const std::size_t width = net.width();
  const std::uint64_t total = std::uint64_t{1} << width;
  const std::uint64_t blocks = width >= 6 ? total >> 6 : 1;
  const std::uint64_t valid_mask = width >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << total) - 1;

  std::vector<std::uint64_t> first_bad(std::max(1u, jobs), kNone);
  parallel_chunks(blocks, jobs, [&](std::size_t begin, std::size_t end, unsigned worker) {
    std::vector<std::uint64_t> wires(width);
    for (std::size_t block = begin; block < end; ++block) {
      const std::uint64_t base = static_cast<std::uint64_t>(block) << 6;
      for (std::size_t w = 0; w < width; ++w)
        wires[w] = w < 6 ? kLowPattern[w] : (((base >> w) & 1U) ? ~std::uint64_t{0} : 0);
      apply_lanes(net, wires);
      const std::uint64_t bad = unsorted_lanes(wires) & valid_mask;
      if (bad) {
        first_bad[worker] = base + static_cast<std::uint64_t>(std::countr_zero(bad));
        return;
      }
    }
  });

  VerificationReport report;
  report.mode = VerifyMode::exhaustive;
  report.inputs_checked = total;
  for (std::uint64_t idx : first_bad) {
    if (idx == kNone) continue;
    report.passed = false;
    std::vector<std::uint8_t> witness(width);
    for (std::size_t w = 0; w < width; ++w) witness[w] = (idx >> w) & 1U;
    report.witness = std::move(witness);
    break;
  }
  return report;
}

VerificationReport verify_sampled(const Network& net, std::uint64_t samples, std::uint64_t seed,
                                  unsigned jobs) {
  const std::size_t width = net.width();
  const std::uint64_t blocks = (samples + 63) / 64;

  struct Failure {
    std::uint64_t block = kNone;
    std::vector<std::uint8_t> input;
  };
  std::vector<Failure> failures(std::max(1u, jobs));
  parallel_chunks(blocks, jobs, [&](std::size_t begin, std::size_t end, unsigned worker) {
    std::vector<std::uint64_t> wires(width);
    std::vector<std::uint64_t> input(width);
    std::vector<std::uint32_t> scratch;
    for (std::size_t block = begin; block < end; ++block) {
      Rng rng = derive_rng(seed, block);
      std::fill(wires.begin(), wires.end(), 0);
      random_binary_lanes(wires, scratch, rng);
      input = wires;
      apply_lanes(net, wires);
      const std::uint64_t lanes_in_block = std::min<std::uint64_t>(64, samples - block * 64);
      const std::uint64_t mask =
          lanes_in_block == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << lanes_in_block) - 1;
      const std::uint64_t bad = unsorted_lanes(wires) & mask;
      if (bad) {
        failures[worker].block = block;
        failures[worker].input = lane_input(input, static_cast<unsigned>(std::countr_zero(bad)));
        return;
      }
    }
  });

  VerificationReport report;
  report.mode = VerifyMode::sampled;
  report.inputs_checked = samples;
  for (auto& f : failures) {
    if (f.block == kNone) continue;
    report.passed = false;
    report.witness = std::move(f.input);
    break;
  }
  return report;
}

}  // namespace

VerificationReport verify_zero_one(const Network& net, std::size_t exhaustive_limit,
                                   std::uint64_t sample_count, std::uint64_t seed, unsigned jobs) {
  exhaustive_limit = std::min<std::size_t>(exhaustive_limit, 40);
  if (net.width() <= exhaustive_limit) return verify_exhaustive(net, jobs);
  return verify_sampled(net, sample_count, seed, jobs);
}

}  // namespace oblivnet
