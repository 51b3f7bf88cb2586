#include "oblivnet/zigzag.hpp"

namespace oblivnet {

std::string to_string(ZigZagRealization r) {
  return r == ZigZagRealization::swap ? "swap" : "revcmp";
}

std::string to_string(Phase p) {
  switch (p) {
    case Phase::split:
      return "split";
    case Phase::zig:
      return "zig";
    case Phase::zag:
      return "zag";
  }
  return "?";
}

void ZigZagConfig::validate() const {
  if (!is_power_of_two(n))
    throw std::invalid_argument("width must be a power of two, got " + std::to_string(n));
  if (base_threshold < 2 || !is_power_of_two(base_threshold))
    throw std::invalid_argument("base threshold must be a power of two >= 2, got " +
                                std::to_string(base_threshold));
  if (halver.kind == HalverKind::expander && halver.degree == 0)
    throw std::invalid_argument("expander halver degree must be at least 1");
}

Network emit_zigzag_network(const ZigZagConfig& config) {
  RecordingSink sink(config.n);
  ZigZagEmitter<RecordingSink> emitter(config, sink);
  emitter.run();
  return sink.take();
}

Network emit_phase_slice(const ZigZagConfig& config, unsigned level, Phase phase) {
  RecordingSink sink(config.n);
  ZigZagEmitter<RecordingSink> emitter(config, sink);
  if (level < 1 || level > emitter.levels())
    throw std::invalid_argument("level out of range: " + std::to_string(level));
  switch (phase) {
    case Phase::split:
      emitter.split(level);
      break;
    case Phase::zig:
      emitter.zig(level);
      break;
    case Phase::zag:
      emitter.zag(level);
      break;
  }
  return sink.take();
}

GateCounts count_zigzag(const ZigZagConfig& config) {
  CountingSink sink;
  ZigZagEmitter<CountingSink> emitter(config, sink);
  emitter.run();
  return sink.counts();
}

namespace {

ZigZagConfig widened(ZigZagConfig config, std::size_t per_side) {
  config.n = 2 * per_side;
  return config;
}

}  // namespace

GateCounts count_reduce(const ZigZagConfig& config, std::size_t per_side) {
  CountingSink sink;
  ZigZagEmitter<CountingSink> emitter(widened(config, per_side), sink);
  emitter.reduce(0, per_side, per_side);
  return sink.counts();
}

GateCounts count_attenuate(const ZigZagConfig& config, std::size_t per_side) {
  CountingSink sink;
  ZigZagEmitter<CountingSink> emitter(widened(config, per_side), sink);
  emitter.attenuate(0, per_side, per_side);
  return sink.counts();
}

PredictedCounts predicted_counts(const Fraction& c, std::size_t n) {
  const Fraction m(n);
  PredictedCounts p;
  p.attenuate = 9 * c * m;
  p.reduce = 10 * c * m;
  p.total_bound = n >= 2 ? 50 * c * m * Fraction(log2_floor(n)) : Fraction(0);
  return p;
}

std::uint64_t predicted_zigzag_comparators(std::uint64_t k, std::size_t n) {
  // A level with 2^j subarrays runs 2^(j-1) + 2(2^j - 1) Reduce calls, each
  // costing 10 halver passes of k * n_j edges.
  std::uint64_t total = 0;
  for (unsigned j = 1; j <= log2_floor(n); ++j) {
    const std::uint64_t nj = n >> j;
    const std::uint64_t calls = (std::uint64_t{1} << (j - 1)) + 2 * ((std::uint64_t{1} << j) - 1);
    total += calls * 10 * k * nj;
  }
  return total;
}

}  // namespace oblivnet
