#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "oblivnet/network.hpp"

namespace oblivnet {

bool is_power_of_two(std::size_t n);
std::size_t next_power_of_two(std::size_t n);
/// floor(log2 n) for n >= 1.
unsigned log2_floor(std::size_t n);

namespace detail {

template <class Emit>
void oddeven_merge(Emit& emit, std::size_t lo, std::size_t n, std::size_t r) {
  const std::size_t step = r * 2;
  if (step < n) {
    oddeven_merge(emit, lo, n, step);
    oddeven_merge(emit, lo + r, n, step);
    for (std::size_t i = lo + r; i + r < lo + n; i += step) emit(i, i + r);
  } else {
    emit(lo, lo + r);
  }
}

template <class Emit>
void oddeven_sort(Emit& emit, std::size_t lo, std::size_t n) {
  if (n < 2) return;
  const std::size_t m = n / 2;
  oddeven_sort(emit, lo, m);
  oddeven_sort(emit, lo + m, m);
  oddeven_merge(emit, lo, n, 1);
}

template <class Emit>
void half_clean(Emit& emit, std::size_t lo, std::size_t n) {
  if (n < 2) return;
  const std::size_t m = n / 2;
  for (std::size_t i = lo; i < lo + m; ++i) emit(i, i + m);
  half_clean(emit, lo, m);
  half_clean(emit, lo + m, m);
}

template <class Emit>
void bitonic_sort(Emit& emit, std::size_t lo, std::size_t n) {
  if (n < 2) return;
  const std::size_t m = n / 2;
  bitonic_sort(emit, lo, m);
  bitonic_sort(emit, lo + m, m);
  // Comparing mirror positions merges two ascending runs with forward
  // comparators only.
  for (std::size_t i = 0; i < m; ++i) emit(lo + i, lo + n - 1 - i);
  half_clean(emit, lo, m);
  half_clean(emit, lo + m, m);
}

}  // namespace detail

/// Batcher odd-even mergesort on wires [base, base + n) for any n >= 1.
/// Widths that are not powers of two use the next power of two with every
/// comparator touching a wire >= n dropped (those wires act as +infinity).
template <GateSink S>
void emit_batcher(S& sink, std::size_t base, std::size_t n) {
  auto emit = [&](std::size_t i, std::size_t j) {
    if (j < n) sink(Gate::forward(static_cast<Wire>(base + i), static_cast<Wire>(base + j)));
  };
  detail::oddeven_sort(emit, 0, next_power_of_two(n));
}

/// Bitonic sorter using forward comparators only; same pruning rule as
/// emit_batcher.
template <GateSink S>
void emit_bitonic(S& sink, std::size_t base, std::size_t n) {
  auto emit = [&](std::size_t i, std::size_t j) {
    if (j < n) sink(Gate::forward(static_cast<Wire>(base + i), static_cast<Wire>(base + j)));
  };
  detail::bitonic_sort(emit, 0, next_power_of_two(n));
}

/// Power-of-two n only; throws std::invalid_argument otherwise.
Network batcher_network(std::size_t n);
Network bitonic_network(std::size_t n);
/// Any n >= 1.
Network batcher_network_any(std::size_t n);
Network bitonic_network_any(std::size_t n);

/// Closed-form comparator count of the odd-even mergesort on 2^p wires.
std::uint64_t batcher_count(unsigned p);

/// 3-smooth numbers below n, ascending.
std::vector<std::size_t> pratt_gaps(std::size_t n);

/// One compare-exchange pass (i, i+g) per gap, gaps in descending order.
template <GateSink S>
void emit_pratt(S& sink, std::size_t base, std::size_t n) {
  const auto gaps = pratt_gaps(n);
  for (auto it = gaps.rbegin(); it != gaps.rend(); ++it)
    for (std::size_t i = 0; i + *it < n; ++i)
      sink(Gate::forward(static_cast<Wire>(base + i), static_cast<Wire>(base + i + *it)));
}

Network pratt_network(std::size_t n);

struct CountRow {
  std::string algorithm;
  std::size_t n = 0;
  std::uint64_t comparators = 0;
  std::uint64_t swaps = 0;
  std::size_t depth = 0;
  /// comparators / (n log2 n) and comparators / (n log2^2 n); 0 for n < 2.
  double per_n_log_n = 0;
  double per_n_log2_n = 0;
};

struct CountReport {
  std::vector<CountRow> rows;
  std::string to_text() const;
};

CountRow make_count_row(std::string algorithm, std::size_t n, const Network& net);

CountReport count_comparisons(const std::string& algorithm,
                              const std::function<Network(std::size_t)>& build,
                              const std::vector<std::size_t>& sizes);

}  // namespace oblivnet
