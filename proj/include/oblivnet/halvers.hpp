#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oblivnet/baselines.hpp"
#include "oblivnet/fraction.hpp"
#include "oblivnet/network.hpp"

namespace oblivnet {

enum class HalverKind { exact, expander };
enum class ExactSorter { batcher, bitonic };

std::string to_string(HalverKind kind);
std::string to_string(ExactSorter sorter);

struct HalverSpec {
  HalverKind kind = HalverKind::exact;
  /// Regular degree k of the bipartite graph (expander only).
  unsigned degree = 0;
  std::uint64_t seed = 0;
  ExactSorter exact_sorter = ExactSorter::batcher;

  static HalverSpec exact(ExactSorter sorter = ExactSorter::batcher) {
    return {HalverKind::exact, 0, 0, sorter};
  }
  static HalverSpec expander(unsigned degree, std::uint64_t seed) {
    return {HalverKind::expander, degree, seed, ExactSorter::batcher};
  }
};

/// B-side partner of every A-side vertex, one row per perfect matching.
struct Matchings {
  std::size_t n = 0;
  std::vector<std::vector<std::uint32_t>> partner;
  std::size_t degree() const { return partner.size(); }
};

/// k seeded uniform perfect matchings between two sides of n vertices.
/// Duplicate edges across matchings are kept. Deterministic in (n, k, seed).
Matchings random_matchings(std::size_t n, unsigned k, std::uint64_t seed);

/// The n cyclic-shift matchings whose union is the complete bipartite graph.
Matchings complete_matchings(std::size_t n);

/// Matchings used by the expander halver: random_matchings, or the complete
/// set once k >= n when `clamp` is set. Results are cached and shared.
const Matchings& expander_matchings(std::size_t n, unsigned k, std::uint64_t seed, bool clamp);

/// Emits one halver pass on A = wires a_base.., B = wires b_base.. (n each).
/// Expander edges are forward comparators with the A wire receiving the
/// minimum when a_base < b_base (min_to otherwise).
template <GateSink S>
void emit_matchings(S& sink, const Matchings& m, std::size_t a_base, std::size_t b_base) {
  for (const auto& row : m.partner)
    for (std::size_t a = 0; a < m.n; ++a)
      sink(min_to(static_cast<Wire>(a_base + a), static_cast<Wire>(b_base + row[a])));
}

/// Sorts the 2n values on A then B (A holds the smallest n afterwards).
template <GateSink S>
void emit_exact_halver(S& sink, ExactSorter sorter, std::size_t n, std::size_t a_base,
                       std::size_t b_base) {
  const std::size_t width = 2 * n;
  auto wire = [&](std::size_t x) {
    return static_cast<Wire>(x < n ? a_base + x : b_base + (x - n));
  };
  auto emit = [&](std::size_t i, std::size_t j) {
    if (j < width) sink(min_to(wire(i), wire(j)));
  };
  if (sorter == ExactSorter::bitonic)
    detail::bitonic_sort(emit, 0, next_power_of_two(width));
  else
    detail::oddeven_sort(emit, 0, next_power_of_two(width));
}

template <GateSink S>
void emit_halver_into(S& sink, const HalverSpec& spec, std::size_t n, std::size_t a_base,
                      std::size_t b_base) {
  if (spec.kind == HalverKind::exact)
    emit_exact_halver(sink, spec.exact_sorter, n, a_base, b_base);
  else
    emit_matchings(sink, expander_matchings(n, spec.degree, spec.seed, true), a_base, b_base);
}

/// Halver fragment on wires [base_wire, base_wire + 2n); A is the lower half.
/// Throws std::invalid_argument when n = 0 or an expander has degree 0.
Network emit_halver(const HalverSpec& spec, std::size_t n, std::size_t base_wire = 0);

inline constexpr std::size_t kMaxMeasuredWidth = 24;

/// Exhaustive 0-1 profile of a fragment on 2n wires (A = wires [0, n)).
/// Indexed by k in [0, 2n]: the worst number of the k largest left in A and
/// of the k smallest left in B, plus the worst attenuation ratios.
struct HalverMeasurement {
  std::size_t n = 0;
  std::vector<std::uint32_t> worst_ones_in_a;
  std::vector<std::uint32_t> worst_zeros_in_b;
  /// Worst (after, before) pair maximising after/before among inputs with k
  /// ones (top) or k zeros (bottom), both less the k - n forced when k > n.
  /// before = 0 with after > 0 means the fragment creates misplacement from
  /// none and no finite ratio exists.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> worst_top_attenuation;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> worst_bottom_attenuation;

  /// Ratios for k = 1..n.
  std::vector<Fraction> per_k_top() const;
  std::vector<Fraction> per_k_bottom() const;

  /// Least ε satisfying the halver definition for every k <= n.
  Fraction epsilon() const { return epsilon_up_to(n); }
  /// Restricted to k <= floor(lambda * n).
  Fraction lambda_limited(const Fraction& lambda) const;
  /// Restricted to 1 <= k <= k_max (k_max may exceed n, up to 2n). For k > n
  /// the ratio is (worst - (k - n)) / k.
  Fraction epsilon_up_to(std::size_t k_max) const;
  /// Least δ satisfying the attenuator definition for k <= k_max; nullopt
  /// when no finite δ exists.
  std::optional<Fraction> attenuation_up_to(std::size_t k_max) const;
};

/// Throws std::invalid_argument if the width is not 2n and std::domain_error
/// when 2n exceeds kMaxMeasuredWidth.
HalverMeasurement measure_epsilon(const Network& fragment, std::size_t n, unsigned jobs = 1);

/// εn + (1-ε)(k-n).
Fraction overflow_bound(const Fraction& epsilon, std::size_t n, std::size_t k);

/// Whether every k in (n, 2n] respects overflow_bound in both families.
bool overflow_holds(const HalverMeasurement& m, const Fraction& epsilon);
bool check_overflow(const Network& fragment, std::size_t n, const Fraction& epsilon,
                    unsigned jobs = 1);

struct DegreeEstimate {
  double k_real = 0;   // formula value
  std::uint64_t k = 0; // ceil(k_real)
  std::uint64_t c = 0; // edges per combined element, ceil(k_real / 2)
};

/// k = 2(1-ε)(1-ε+sqrt(1-2ε))/ε², 0 < ε <= 1/2.
DegreeEstimate degree_constructive(double epsilon);
/// k = 2 ln ε / ln(1-ε) + 2/ε - 1, 0 < ε < 1.
DegreeEstimate degree_paterson(double epsilon);

}  // namespace oblivnet
