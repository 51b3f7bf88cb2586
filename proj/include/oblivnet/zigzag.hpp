#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "oblivnet/baselines.hpp"
#include "oblivnet/halvers.hpp"
#include "oblivnet/network.hpp"

namespace oblivnet {

/// How the inner zig-zag exchanges two neighbouring subarrays.
enum class ZigZagRealization {
  swap,    // unconditional swap gates
  revcmp,  // reverse comparators: the larger value of each pair moves down
};

std::string to_string(ZigZagRealization r);

struct ZigZagConfig {
  std::size_t n = 1;
  HalverSpec halver;
  /// Per-side size at or below which Reduce and Attenuate sort outright.
  std::size_t base_threshold = 8;
  ZigZagRealization realization = ZigZagRealization::swap;
  /// Keep every halver at its raw degree-k edge set and replace the base
  /// sorts by halver passes, so gate counts follow the closed forms. The
  /// result is not guaranteed to sort.
  bool counting_mode = false;

  /// Throws std::invalid_argument on a non-power-of-two n or threshold,
  /// threshold < 2, or an expander of degree 0.
  void validate() const;
};

/// Subarray i (1-based) of level j: cells [start, start + length).
struct SubarrayView {
  unsigned level = 0;
  std::size_t index = 1;
  std::size_t start = 0;
  std::size_t length = 0;

  static SubarrayView at(std::size_t n, unsigned level, std::size_t index) {
    const std::size_t len = n >> level;
    return {level, index, (index - 1) * len, len};
  }
};

enum class Phase { split, zig, zag };
std::string to_string(Phase p);

/// No-op hooks; instrumented runs supply their own type with the same
/// members.
struct NullObserver {
  void after_split(unsigned) {}
  /// Zig step i reduces (A_i, A_{i+1}); zag step i reduces (A_{i-1}, A_i).
  void after_step(Phase, unsigned, std::size_t) {}
  void after_phase(Phase, unsigned) {}
};

/// Walks the algorithm once, emitting every gate into a sink.
template <GateSink S>
class ZigZagEmitter {
 public:
  ZigZagEmitter(const ZigZagConfig& config, S& sink) : cfg_(config), sink_(sink) {
    cfg_.validate();
  }

  std::size_t levels() const { return log2_floor(cfg_.n); }

  template <class Observer = NullObserver>
  void run(Observer&& obs = {}) {
    for (unsigned j = 1; j <= levels(); ++j) {
      split(j);
      obs.after_split(j);
      zig(j, obs);
      obs.after_phase(Phase::zig, j);
      zag(j, obs);
      obs.after_phase(Phase::zag, j);
    }
  }

  void split(unsigned j) {
    const std::size_t len = cfg_.n >> j;
    for (std::size_t i = 1; i <= (std::size_t{1} << (j - 1)); ++i)
      reduce((2 * i - 2) * len, (2 * i - 1) * len, len);
  }

  template <class Observer = NullObserver>
  void zig(unsigned j, Observer&& obs = {}) {
    const std::size_t len = cfg_.n >> j;
    const std::size_t count = std::size_t{1} << j;
    for (std::size_t i = 1; i < count; ++i) {
      cross((i - 1) * len, i * len, len);
      reduce((i - 1) * len, i * len, len);
      obs.after_step(Phase::zig, j, i);
    }
  }

  template <class Observer = NullObserver>
  void zag(unsigned j, Observer&& obs = {}) {
    const std::size_t len = cfg_.n >> j;
    for (std::size_t i = std::size_t{1} << j; i >= 2; --i) {
      cross((i - 2) * len, (i - 1) * len, len);
      reduce((i - 2) * len, (i - 1) * len, len);
      obs.after_step(Phase::zag, j, i);
    }
  }

  /// Reduce(A, B) with A = [a, a+s), B = [b, b+s).
  void reduce(std::size_t a, std::size_t b, std::size_t s) {
    if (s <= cfg_.base_threshold && !cfg_.counting_mode) {
      sort_pair(a, b, s);
      return;
    }
    halver(a, b, s);
    attenuate(a, b, s);
  }

  void attenuate(std::size_t a, std::size_t b, std::size_t s) {
    if (s <= cfg_.base_threshold) {
      if (cfg_.counting_mode) {
        for (int pass = 0; pass < 9; ++pass) halver(a, b, s);
      } else {
        sort_pair(a, b, s);
      }
      return;
    }
    const std::size_t h = s / 2;
    const std::size_t a2 = a + h;
    halver(a, a2, h);
    halver(b, b + h, h);
    halver(a2, b, h);
    attenuate(a2, b, h);
    const std::size_t q = h / 2;
    halver(a2, a2 + q, q);
    halver(b, b + q, q);
    halver(a2 + q, b, q);
    attenuate(a2 + q, b, q);
  }

  void halver(std::size_t a, std::size_t b, std::size_t s) {
    const HalverSpec& h = cfg_.halver;
    if (h.kind == HalverKind::exact) {
      emit_exact_halver(sink_, h.exact_sorter, s, a, b);
    } else if (cfg_.counting_mode) {
      emit_matchings(sink_, expander_matchings(s, h.degree, h.seed, false), a, b);
    } else if (h.degree >= s) {
      emit_exact_halver(sink_, ExactSorter::batcher, s, a, b);
    } else {
      emit_matchings(sink_, expander_matchings(s, h.degree, h.seed, true), a, b);
    }
  }

  /// Inner zig-zag on neighbouring subarrays A = [a, a+s), B = [b, b+s).
  void cross(std::size_t a, std::size_t b, std::size_t s) {
    for (std::size_t t = 0; t < s; ++t) {
      const auto lo = static_cast<Wire>(a + t);
      const auto hi = static_cast<Wire>(b + t);
      sink_(cfg_.realization == ZigZagRealization::swap ? Gate::swap(lo, hi)
                                                       : Gate::reverse(lo, hi));
    }
  }

 private:
  void sort_pair(std::size_t a, std::size_t b, std::size_t s) {
    emit_exact_halver(sink_, ExactSorter::batcher, s, a, b);
  }

  ZigZagConfig cfg_;
  S& sink_;
};

/// Sorts `data` in place by executing the algorithm directly.
template <class T, class Less = std::less<>, class Observer = NullObserver>
void zigzag_sort_in_place(std::span<T> data, const ZigZagConfig& config, Less less = {},
                          Observer&& obs = {}) {
  if (data.size() != config.n) throw WidthMismatch(config.n, data.size());
  ExecutingSink<T, Less> sink(data, less);
  ZigZagEmitter<ExecutingSink<T, Less>> emitter(config, sink);
  emitter.run(obs);
}

/// Throws std::invalid_argument when the input length is not a power of two.
template <class T, class Less = std::less<>>
std::vector<T> zigzag_sort(std::span<const T> input, ZigZagConfig config, Less less = {}) {
  if (!is_power_of_two(input.size()))
    throw std::invalid_argument("zig-zag sort needs a power-of-two length, got " +
                                std::to_string(input.size()));
  config.n = input.size();
  std::vector<T> out(input.begin(), input.end());
  zigzag_sort_in_place(std::span<T>(out), config, less);
  return out;
}

template <class T, class Less = std::less<>>
std::vector<T> zigzag_sort(const std::vector<T>& input, const ZigZagConfig& config,
                           Less less = {}) {
  return zigzag_sort(std::span<const T>(input), config, less);
}

Network emit_zigzag_network(const ZigZagConfig& config);

/// Gates of one phase of one level only, on the full width.
Network emit_phase_slice(const ZigZagConfig& config, unsigned level, Phase phase);

/// Gate tallies without materialising a network.
GateCounts count_zigzag(const ZigZagConfig& config);
GateCounts count_reduce(const ZigZagConfig& config, std::size_t per_side);
GateCounts count_attenuate(const ZigZagConfig& config, std::size_t per_side);

struct PredictedCounts {
  /// c in edges per combined element; m = combined size for the first two.
  Fraction attenuate;  // 9cm
  Fraction reduce;     // 10cm
  Fraction total_bound;  // 50 c n log2 n
};

/// c may be fractional (c = k/2 for odd k).
PredictedCounts predicted_counts(const Fraction& c, std::size_t n);

/// Exact comparator count of a counting-mode run with a degree-k halver:
/// sum over levels of (50cn - 40cn_j), c = k/2.
std::uint64_t predicted_zigzag_comparators(std::uint64_t k, std::size_t n);

}  // namespace oblivnet
