#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oblivnet {

using Wire = std::uint32_t;

enum class GateKind : std::uint8_t {
  forward,  // minimum to lo
  reverse,  // maximum to lo
  swap,     // unconditional exchange
};

char gate_letter(GateKind kind);

struct Gate {
  GateKind kind = GateKind::forward;
  Wire lo = 0;
  Wire hi = 1;

  static constexpr Gate forward(Wire lo, Wire hi) { return {GateKind::forward, lo, hi}; }
  static constexpr Gate reverse(Wire lo, Wire hi) { return {GateKind::reverse, lo, hi}; }
  static constexpr Gate swap(Wire lo, Wire hi) { return {GateKind::swap, lo, hi}; }

  bool is_comparator() const { return kind != GateKind::swap; }

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Compare-exchange that routes the minimum to wire `min_wire`, whichever
/// side of the pair it sits on.
constexpr Gate min_to(Wire min_wire, Wire max_wire) {
  return min_wire < max_wire ? Gate::forward(min_wire, max_wire)
                             : Gate::reverse(max_wire, min_wire);
}

class WidthMismatch : public std::invalid_argument {
 public:
  WidthMismatch(std::size_t expected, std::size_t actual);
};

class InvalidGate : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An ordered sequence of oriented comparators and swaps over `width` wires.
class Network {
 public:
  explicit Network(std::size_t width);
  Network(std::size_t width, std::vector<Gate> gates);

  std::size_t width() const { return width_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }
  std::span<const Gate> gates() const { return gates_; }
  const Gate& operator[](std::size_t i) const { return gates_[i]; }

  void add(Gate g);
  void add_forward(Wire lo, Wire hi) { add(Gate::forward(lo, hi)); }
  void add_reverse(Wire lo, Wire hi) { add(Gate::reverse(lo, hi)); }
  void add_swap(Wire lo, Wire hi) { add(Gate::swap(lo, hi)); }

  /// Appends every gate of `other`, shifted up by `offset` wires.
  void append(const Network& other, std::size_t offset = 0);
  void reserve(std::size_t n) { gates_.reserve(n); }

  /// Copy with the gate at `index` removed.
  Network without_gate(std::size_t index) const;

  friend bool operator==(const Network&, const Network&) = default;

 private:
  void check(const Gate& g) const;

  std::size_t width_;
  std::vector<Gate> gates_;
};

struct GateCounts {
  std::uint64_t comparators = 0;
  std::uint64_t swaps = 0;
  friend bool operator==(const GateCounts&, const GateCounts&) = default;
};

GateCounts gate_counts(const Network& net);

/// Greedy left-to-right layer index of every gate: a gate lands one layer
/// after the latest layer touching either of its wires.
std::vector<std::size_t> layer_of(const Network& net);
std::size_t depth(const Network& net);

template <class T, class Less = std::less<>>
inline void execute_gate(const Gate& g, std::span<T> data, Less less = {}) {
  T& a = data[g.lo];
  T& b = data[g.hi];
  switch (g.kind) {
    case GateKind::forward:
      if (less(b, a)) std::swap(a, b);
      break;
    case GateKind::reverse:
      if (less(a, b)) std::swap(a, b);
      break;
    case GateKind::swap:
      std::swap(a, b);
      break;
  }
}

template <class T, class Less = std::less<>>
void apply_in_place(const Network& net, std::span<T> data, Less less = {}) {
  if (data.size() != net.width()) throw WidthMismatch(net.width(), data.size());
  for (const Gate& g : net.gates()) execute_gate(g, data, less);
}

template <class T, class Less = std::less<>>
std::vector<T> apply(const Network& net, std::span<const T> input, Less less = {}) {
  std::vector<T> out(input.begin(), input.end());
  apply_in_place(net, std::span<T>(out), less);
  return out;
}

template <class T, class Less = std::less<>>
std::vector<T> apply(const Network& net, const std::vector<T>& input, Less less = {}) {
  return apply(net, std::span<const T>(input), less);
}

/// Executes the network on 64 binary inputs at once: bit `l` of `wires[w]`
/// is wire `w` of input `l`.
void apply_lanes(const Network& net, std::span<std::uint64_t> wires);

/// Integer keys only; branch-free compare-exchange for the hot paths.
void apply_keys(const Network& net, std::span<std::int64_t> data);

/// `batch` inputs at once, interleaved: input b on wire w is data[w * batch + b].
void apply_keys_batch(const Network& net, std::span<std::int64_t> data, std::size_t batch);

/// Lanes whose wire values are not non-decreasing.
std::uint64_t unsorted_lanes(std::span<const std::uint64_t> wires);

template <class T, class Less = std::less<>>
bool is_sorted_span(std::span<const T> v, Less less = {}) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (less(v[i], v[i - 1])) return false;
  return true;
}

// Gate sinks: the algorithms in this library are written once against a
// callable taking a Gate, then run with an executing, recording or counting
// sink.

template <class S>
concept GateSink = requires(S& s, Gate g) { s(g); };

template <class T, class Less = std::less<>>
class ExecutingSink {
 public:
  explicit ExecutingSink(std::span<T> data, Less less = {}) : data_(data), less_(less) {}
  void operator()(Gate g) { execute_gate(g, data_, less_); }
  std::span<T> data() const { return data_; }

 private:
  std::span<T> data_;
  Less less_;
};

class RecordingSink {
 public:
  explicit RecordingSink(std::size_t width) : net_(width) {}
  void operator()(Gate g) { net_.add(g); }
  Network& network() { return net_; }
  Network take() { return std::move(net_); }

 private:
  Network net_;
};

class CountingSink {
 public:
  void operator()(Gate g) {
    if (g.is_comparator())
      ++counts_.comparators;
    else
      ++counts_.swaps;
  }
  const GateCounts& counts() const { return counts_; }

 private:
  GateCounts counts_;
};

/// Greedy layering on the fly, without storing the gates.
class DepthSink {
 public:
  explicit DepthSink(std::size_t width) : last_(width, 0) {}
  void operator()(Gate g) {
    const std::size_t layer = std::max(last_[g.lo], last_[g.hi]) + 1;
    last_[g.lo] = last_[g.hi] = layer;
    depth_ = std::max(depth_, layer);
  }
  std::size_t depth() const { return depth_; }

 private:
  std::vector<std::size_t> last_;
  std::size_t depth_ = 0;
};

/// Forwards every gate to two sinks.
template <GateSink A, GateSink B>
class TeeSink {
 public:
  TeeSink(A& a, B& b) : a_(a), b_(b) {}
  void operator()(Gate g) {
    a_(g);
    b_(g);
  }

 private:
  A& a_;
  B& b_;
};

}  // namespace oblivnet
