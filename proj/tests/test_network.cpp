#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "oblivnet/baselines.hpp"
#include "oblivnet/network.hpp"
#include "oblivnet/network_io.hpp"
#include "oblivnet/random.hpp"
#include "oblivnet/verify.hpp"

using namespace oblivnet;

namespace {

// Independent brute force: does the network sort every permutation of 0..n-1?
bool sorts_all_permutations(const Network& net) {
  std::vector<int> p(net.width());
  std::iota(p.begin(), p.end(), 0);
  do {
    const auto out = oblivnet::apply(net, p);
    if (!std::is_sorted(out.begin(), out.end())) return false;
  } while (std::next_permutation(p.begin(), p.end()));
  return true;
}

Network random_network(std::size_t width, std::size_t gates, Rng& rng, bool with_swaps) {
  Network net(width);
  for (std::size_t g = 0; g < gates; ++g) {
    Wire a = static_cast<Wire>(uniform_below(rng, width));
    Wire b = static_cast<Wire>(uniform_below(rng, width - 1));
    if (b >= a) ++b;
    if (a > b) std::swap(a, b);
    const auto kind = uniform_below(rng, with_swaps ? 3 : 2);
    net.add({kind == 0 ? GateKind::forward : kind == 1 ? GateKind::reverse : GateKind::swap, a, b});
  }
  return net;
}

}  // namespace

TEST_CASE("apply executes single gates") {
  Network fwd(2);
  fwd.add_forward(0, 1);
  CHECK(oblivnet::apply(fwd, std::vector<int>{1, 0}) == std::vector<int>{0, 1});
  Network rev(2);
  rev.add_reverse(0, 1);
  CHECK(oblivnet::apply(rev, std::vector<int>{0, 1}) == std::vector<int>{1, 0});
  Network sw(2);
  sw.add_swap(0, 1);
  CHECK(oblivnet::apply(sw, std::vector<int>{0, 1}) == std::vector<int>{1, 0});
  Network empty(3);
  CHECK(oblivnet::apply(empty, std::vector<int>{3, 1, 2}) == std::vector<int>{3, 1, 2});
}

TEST_CASE("apply rejects a length mismatch") {
  Network net(3);
  CHECK_THROWS_AS(oblivnet::apply(net, std::vector<int>{1, 2}), WidthMismatch);
}

TEST_CASE("gates must satisfy lo < hi < width") {
  Network net(4);
  CHECK_THROWS_AS(net.add_forward(2, 2), InvalidGate);
  CHECK_THROWS_AS(net.add_forward(3, 1), InvalidGate);
  CHECK_THROWS_AS(net.add_forward(1, 4), InvalidGate);
  CHECK_THROWS(Network(0));
}

TEST_CASE("gate_counts tallies by kind") {
  CHECK(gate_counts(Network(4)) == GateCounts{0, 0});
  Network net(4);
  net.add_forward(0, 1);
  net.add_swap(2, 3);
  CHECK(gate_counts(net) == GateCounts{1, 1});
  CHECK(gate_counts(batcher_network(4)) == GateCounts{5, 0});
}

TEST_CASE("depth layers greedily") {
  CHECK(depth(Network(4)) == 0);
  Network disjoint(4);
  disjoint.add_forward(0, 1);
  disjoint.add_forward(2, 3);
  CHECK(depth(disjoint) == 1);
  Network chained(3);
  chained.add_forward(0, 1);
  chained.add_forward(1, 2);
  CHECK(depth(chained) == 2);
}

TEST_CASE("no wire appears twice within a layer") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Network net = random_network(9, 60, rng, true);
    const auto layers = layer_of(net);
    std::vector<std::vector<int>> seen(depth(net) + 1, std::vector<int>(9, 0));
    for (std::size_t g = 0; g < net.size(); ++g) {
      CHECK(++seen[layers[g]][net[g].lo] == 1);
      CHECK(++seen[layers[g]][net[g].hi] == 1);
    }
    DepthSink sink(9);
    for (const Gate& g : net.gates()) sink(g);
    CHECK(sink.depth() == depth(net));
  }
}

TEST_CASE("apply preserves the multiset") {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Network net = random_network(12, 80, rng, true);
    std::vector<std::int64_t> x(12);
    for (auto& v : x) v = static_cast<std::int64_t>(uniform_below(rng, 5));
    auto y = oblivnet::apply(net, x);
    auto z = x;
    apply_keys(net, z);
    CHECK(y == z);
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    CHECK(x == y);
  }
}

TEST_CASE("touched positions do not depend on the data") {
  Rng rng(3);
  const Network net = random_network(10, 70, rng, true);
  struct Touch {
    std::vector<std::pair<Wire, Wire>> log;
    std::vector<int>* data;
    void operator()(Gate g) {
      log.emplace_back(g.lo, g.hi);
      execute_gate(g, std::span<int>(*data));
    }
  };
  std::vector<int> a{9, 8, 7, 6, 5, 4, 3, 2, 1, 0}, b{0, 0, 1, 1, 0, 1, 0, 1, 1, 0};
  Touch ta{{}, &a}, tb{{}, &b};
  for (const Gate& g : net.gates()) {
    ta(g);
    tb(g);
  }
  CHECK(ta.log == tb.log);
}

TEST_CASE("bit-sliced execution agrees with scalar execution") {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Network net = random_network(8, 40, rng, true);
    std::vector<std::uint64_t> lanes(8);
    for (auto& w : lanes) w = rng();
    auto out = lanes;
    apply_lanes(net, out);
    for (unsigned lane = 0; lane < 64; ++lane) {
      std::vector<int> x(8);
      for (int w = 0; w < 8; ++w) x[w] = (lanes[w] >> lane) & 1;
      const auto y = oblivnet::apply(net, x);
      for (int w = 0; w < 8; ++w) CHECK(y[w] == static_cast<int>((out[w] >> lane) & 1));
    }
  }
}

TEST_CASE("verify: Batcher 4 passes exhaustively") {
  const auto r = verify_zero_one(batcher_network(4));
  CHECK(r.passed);
  CHECK(r.mode == VerifyMode::exhaustive);
  CHECK(r.inputs_checked == 16);
  CHECK_FALSE(r.witness.has_value());
}

TEST_CASE("verify: Batcher 4 without its last comparator fails") {
  const Network full = batcher_network(4);
  REQUIRE(full[4] == Gate::forward(1, 2));
  const Network broken = full.without_gate(4);
  const auto r = verify_zero_one(broken);
  CHECK_FALSE(r.passed);
  REQUIRE(r.witness.has_value());
  // The witness must really fail.
  const auto out = oblivnet::apply(broken, *r.witness);
  CHECK_FALSE(std::is_sorted(out.begin(), out.end()));
  // [0,1,1,0] is one failing input: traced by hand it leaves [0,1,0,1].
  CHECK(oblivnet::apply(broken, std::vector<std::uint8_t>{0, 1, 1, 0}) ==
        std::vector<std::uint8_t>{0, 1, 0, 1});
}

TEST_CASE("verify: width 1 passes with 2 inputs") {
  const auto r = verify_zero_one(Network(1));
  CHECK(r.passed);
  CHECK(r.inputs_checked == 2);
}

TEST_CASE("verify: exhaustive result is independent of the worker count") {
  const Network broken = batcher_network(16).without_gate(40);
  const auto one = verify_zero_one(broken, 24, 0, 0, 1);
  const auto four = verify_zero_one(broken, 24, 0, 0, 4);
  CHECK_FALSE(one.passed);
  CHECK(one.witness == four.witness);
}

TEST_CASE("verify: sampled mode reports its weaker guarantee") {
  const auto r = verify_zero_one(batcher_network(32), 24, 1000, 9);
  CHECK(r.passed);
  CHECK(r.mode == VerifyMode::sampled);
  CHECK(r.inputs_checked == 1000);
  const auto bad = verify_zero_one(batcher_network(32).without_gate(100), 24, 20000, 9);
  CHECK_FALSE(bad.passed);
  REQUIRE(bad.witness.has_value());
  const auto out = oblivnet::apply(batcher_network(32).without_gate(100), *bad.witness);
  CHECK_FALSE(std::is_sorted(out.begin(), out.end()));
}

TEST_CASE("0-1 verdict matches brute force over permutations (width <= 6)") {
  Rng rng(21);
  int sorters = 0, non_sorters = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t width = 2 + uniform_below(rng, 5);
    Network net = trial % 3 == 0 ? batcher_network_any(width)
                                 : random_network(width, 4 + uniform_below(rng, 16), rng, false);
    if (trial % 3 == 0 && net.size() > 0 && trial % 2 == 0)
      net = net.without_gate(uniform_below(rng, net.size()));
    const bool by_permutations = sorts_all_permutations(net);
    CHECK(verify_zero_one(net).passed == by_permutations);
    (by_permutations ? sorters : non_sorters)++;
  }
  CHECK(sorters > 0);
  CHECK(non_sorters > 0);
}

TEST_CASE("serialize format") {
  Network net(2);
  net.add_forward(0, 1);
  CHECK(serialize(net) == "width 2\nc 0 1\n");
  CHECK(serialize(net, "hello") == "# hello\nwidth 2\nc 0 1\n");
}

TEST_CASE("parse round-trips") {
  Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const Network net = random_network(17, 90, rng, true);
    CHECK(parse(serialize(net, "comment\nsecond line")) == net);
  }
}

TEST_CASE("parse reports line and reason") {
  try {
    parse("width 4\nx 0 0\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.reason() == "gate requires i < j");
  }
  CHECK_THROWS_AS(parse("c 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse("width 4\nc 0 4\n"), ParseError);
  CHECK_THROWS_AS(parse("width 4\nq 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse("width 4\nc a 1\n"), ParseError);
  CHECK_THROWS_AS(parse("width 4\r\nc 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK(parse("# c\n\nwidth 3\nr 1 2\n").size() == 1);
}

TEST_CASE("batched key execution matches one input at a time") {
  const Network net = batcher_network_any(11);
  Network mixed(11, std::vector<Gate>(net.gates().begin(), net.gates().end()));
  mixed.add_reverse(0, 10);
  mixed.add_swap(3, 4);
  Rng rng(17);
  const std::size_t batch = 5;
  std::vector<std::int64_t> data(11 * batch);
  std::vector<std::vector<std::int64_t>> singles(batch, std::vector<std::int64_t>(11));
  for (std::size_t b = 0; b < batch; ++b)
    for (std::size_t w = 0; w < 11; ++w)
      data[w * batch + b] = singles[b][w] = static_cast<std::int64_t>(uniform_below(rng, 7));
  apply_keys_batch(mixed, data, batch);
  for (std::size_t b = 0; b < batch; ++b) {
    apply_keys(mixed, singles[b]);
    for (std::size_t w = 0; w < 11; ++w) CHECK(data[w * batch + b] == singles[b][w]);
  }
  CHECK_THROWS_AS(apply_keys_batch(mixed, data, 4), WidthMismatch);
}
