#include "oblivnet/baselines.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace oblivnet {

bool is_power_of_two(std::size_t n) { return std::has_single_bit(n); }

std::size_t next_power_of_two(std::size_t n) { return n <= 1 ? 1 : std::bit_ceil(n); }

unsigned log2_floor(std::size_t n) { return static_cast<unsigned>(std::bit_width(n) - 1); }

namespace {

void require_power_of_two(std::size_t n) {
  if (!is_power_of_two(n))
    throw std::invalid_argument("width must be a power of two, got " + std::to_string(n));
}

template <class Emitter>
Network build(std::size_t n, Emitter emitter) {
  RecordingSink sink(n);
  emitter(sink, 0, n);
  return sink.take();
}

}  // namespace

Network batcher_network(std::size_t n) {
  require_power_of_two(n);
  return batcher_network_any(n);
}

Network bitonic_network(std::size_t n) {
  require_power_of_two(n);
  return bitonic_network_any(n);
}

Network batcher_network_any(std::size_t n) {
  return build(n, [](RecordingSink& s, std::size_t b, std::size_t w) { emit_batcher(s, b, w); });
}

Network bitonic_network_any(std::size_t n) {
  return build(n, [](RecordingSink& s, std::size_t b, std::size_t w) { emit_bitonic(s, b, w); });
}

std::uint64_t batcher_count(unsigned p) {
  if (p == 0) return 0;
  if (p == 1) return 1;
  const std::uint64_t pp = p;
  return (pp * pp - pp + 4) * (std::uint64_t{1} << (p - 2)) - 1;
}

std::vector<std::size_t> pratt_gaps(std::size_t n) {
  std::vector<std::size_t> gaps;
  for (std::size_t p2 = 1; p2 < n; p2 *= 2)
    for (std::size_t g = p2; g < n; g *= 3) gaps.push_back(g);
  std::sort(gaps.begin(), gaps.end());
  return gaps;
}

Network pratt_network(std::size_t n) {
  if (n == 0) throw std::invalid_argument("width must be positive");
  return build(n, [](RecordingSink& s, std::size_t b, std::size_t w) { emit_pratt(s, b, w); });
}

CountRow make_count_row(std::string algorithm, std::size_t n, const Network& net) {
  CountRow row;
  row.algorithm = std::move(algorithm);
  row.n = n;
  const GateCounts counts = gate_counts(net);
  row.comparators = counts.comparators;
  row.swaps = counts.swaps;
  row.depth = depth(net);
  if (n >= 2) {
    const double lg = std::log2(static_cast<double>(n));
    row.per_n_log_n = static_cast<double>(row.comparators) / (static_cast<double>(n) * lg);
    row.per_n_log2_n = row.per_n_log_n / lg;
  }
  return row;
}

CountReport count_comparisons(const std::string& algorithm,
                              const std::function<Network(std::size_t)>& build_fn,
                              const std::vector<std::size_t>& sizes) {
  CountReport report;
  for (std::size_t n : sizes) report.rows.push_back(make_count_row(algorithm, n, build_fn(n)));
  return report;
}

std::string CountReport::to_text() const {
  std::string out = "algorithm n comparators swaps depth per_nlogn per_nlog2n\n";
  char buf[256];
  for (const CountRow& r : rows) {
    std::snprintf(buf, sizeof buf, "%s %zu %llu %llu %zu %.4f %.4f\n", r.algorithm.c_str(), r.n,
                  static_cast<unsigned long long>(r.comparators),
                  static_cast<unsigned long long>(r.swaps), r.depth, r.per_n_log_n,
                  r.per_n_log2_n);
    out += buf;
  }
  return out;
}

}  // namespace oblivnet
