#include "oblivnet/network.hpp"

#include <algorithm>

namespace oblivnet {

char gate_letter(GateKind kind) {
  switch (kind) {
    case GateKind::forward:
      return 'c';
    case GateKind::reverse:
      return 'r';
    case GateKind::swap:
      return 'x';
  }
  return '?';
}

WidthMismatch::WidthMismatch(std::size_t expected, std::size_t actual)
    : std::invalid_argument("width mismatch: network has " + std::to_string(expected) +
                            " wires, input has " + std::to_string(actual) + " values") {}

Network::Network(std::size_t width) : width_(width) {
  if (width == 0) throw std::invalid_argument("network width must be positive");
}

Network::Network(std::size_t width, std::vector<Gate> gates) : Network(width) {
  for (const Gate& g : gates) check(g);
  gates_ = std::move(gates);
}

void Network::check(const Gate& g) const {
  if (g.lo >= g.hi)
    throw InvalidGate("gate wires must satisfy lo < hi (got " + std::to_string(g.lo) + ", " +
                      std::to_string(g.hi) + ")");
  if (g.hi >= width_)
    throw InvalidGate("gate wire " + std::to_string(g.hi) + " out of range for width " +
                      std::to_string(width_));
}

void Network::add(Gate g) {
  check(g);
  gates_.push_back(g);
}

void Network::append(const Network& other, std::size_t offset) {
  if (other.width() + offset > width_)
    throw InvalidGate("appended network does not fit: " + std::to_string(other.width()) +
                      " wires at offset " + std::to_string(offset));
  gates_.reserve(gates_.size() + other.size());
  const auto shift = static_cast<Wire>(offset);
  for (Gate g : other.gates()) gates_.push_back({g.kind, g.lo + shift, g.hi + shift});
}

Network Network::without_gate(std::size_t index) const {
  Network copy = *this;
  copy.gates_.erase(copy.gates_.begin() + static_cast<std::ptrdiff_t>(index));
  return copy;
}

GateCounts gate_counts(const Network& net) {
  GateCounts counts;
  for (const Gate& g : net.gates()) {
    if (g.is_comparator())
      ++counts.comparators;
    else
      ++counts.swaps;
  }
  return counts;
}

std::vector<std::size_t> layer_of(const Network& net) {
  // last[w] = 1 + layer of the latest gate on wire w, 0 if none yet.
  std::vector<std::size_t> last(net.width(), 0);
  std::vector<std::size_t> layers;
  layers.reserve(net.size());
  for (const Gate& g : net.gates()) {
    const std::size_t layer = std::max(last[g.lo], last[g.hi]);
    last[g.lo] = last[g.hi] = layer + 1;
    layers.push_back(layer);
  }
  return layers;
}

std::size_t depth(const Network& net) {
  std::vector<std::size_t> last(net.width(), 0);
  std::size_t d = 0;
  for (const Gate& g : net.gates()) {
    const std::size_t next = std::max(last[g.lo], last[g.hi]) + 1;
    last[g.lo] = last[g.hi] = next;
    d = std::max(d, next);
  }
  return d;
}

void apply_lanes(const Network& net, std::span<std::uint64_t> wires) {
  if (wires.size() != net.width()) throw WidthMismatch(net.width(), wires.size());
  std::uint64_t* w = wires.data();
  for (const Gate& g : net.gates()) {
    const std::uint64_t a = w[g.lo];
    const std::uint64_t b = w[g.hi];
    switch (g.kind) {
      case GateKind::forward:
        w[g.lo] = a & b;
        w[g.hi] = a | b;
        break;
      case GateKind::reverse:
        w[g.lo] = a | b;
        w[g.hi] = a & b;
        break;
      case GateKind::swap:
        w[g.lo] = b;
        w[g.hi] = a;
        break;
    }
  }
}

void apply_keys(const Network& net, std::span<std::int64_t> data) {
  if (data.size() != net.width()) throw WidthMismatch(net.width(), data.size());
  std::int64_t* d = data.data();
  for (const Gate& g : net.gates()) {
    const std::int64_t a = d[g.lo];
    const std::int64_t b = d[g.hi];
    const std::int64_t lo = a < b ? a : b;
    const std::int64_t hi = a < b ? b : a;
    switch (g.kind) {
      case GateKind::forward:
        d[g.lo] = lo;
        d[g.hi] = hi;
        break;
      case GateKind::reverse:
        d[g.lo] = hi;
        d[g.hi] = lo;
        break;
      case GateKind::swap:
        d[g.lo] = b;
        d[g.hi] = a;
        break;
    }
  }
}

void apply_keys_batch(const Network& net, std::span<std::int64_t> data, std::size_t batch) {
  if (batch == 0 || data.size() != net.width() * batch)
    throw WidthMismatch(net.width() * std::max<std::size_t>(batch, 1), data.size());
  std::int64_t* d = data.data();
  for (const Gate& g : net.gates()) {
    std::int64_t* x = d + g.lo * batch;
    std::int64_t* y = d + g.hi * batch;
    switch (g.kind) {
      case GateKind::forward:
        for (std::size_t i = 0; i < batch; ++i) {
          const std::int64_t a = x[i], b = y[i];
          x[i] = std::min(a, b);
          y[i] = std::max(a, b);
        }
        break;
      case GateKind::reverse:
        for (std::size_t i = 0; i < batch; ++i) {
          const std::int64_t a = x[i], b = y[i];
          x[i] = std::max(a, b);
          y[i] = std::min(a, b);
        }
        break;
      case GateKind::swap:
        std::swap_ranges(x, x + batch, y);
        break;
    }
  }
}

std::uint64_t unsorted_lanes(std::span<const std::uint64_t> wires) {
  std::uint64_t bad = 0;
  for (std::size_t i = 1; i < wires.size(); ++i) bad |= wires[i - 1] & ~wires[i];
  return bad;
}

}  // namespace oblivnet
