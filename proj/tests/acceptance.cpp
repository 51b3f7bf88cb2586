// Acceptance run: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "oblivnet/analysis.hpp"
#include "oblivnet/baselines.hpp"
#include "oblivnet/halvers.hpp"
#include "oblivnet/parallel.hpp"
#include "oblivnet/random.hpp"
#include "oblivnet/verify.hpp"
#include "oblivnet/zigzag.hpp"

using namespace oblivnet;

namespace {

using Clock = std::chrono::steady_clock;

unsigned g_jobs = 1;
int g_failed = 0;

struct Criterion {
  Criterion(std::string id_, std::string title_, double limit)
      : id(std::move(id_)), title(std::move(title_)), limit_s(limit) {}

  std::string id;
  std::string title;
  double limit_s;
  bool ok = true;
  std::vector<std::string> notes;
  Clock::time_point start = Clock::now();

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back("failed: " + what);
    }
  }
  void info(const std::string& what) { notes.push_back(what); }

  void finish() {
    const double s = std::chrono::duration<double>(Clock::now() - start).count();
    if (limit_s > 0 && s >= limit_s) {
      ok = false;
      notes.push_back("over time limit");
    }
    for (const auto& n : notes) std::printf("    %s\n", n.c_str());
    if (limit_s > 0)
      std::printf("%s %s %s (%.2fs, limit %.0fs)\n", ok ? "PASS" : "FAIL", id.c_str(),
                  title.c_str(), s, limit_s);
    else
      std::printf("%s %s %s (%.2fs)\n", ok ? "PASS" : "FAIL", id.c_str(), title.c_str(), s);
    std::fflush(stdout);
    if (!ok) ++g_failed;
  }
};

ZigZagConfig exact_config(std::size_t n) {
  ZigZagConfig cfg;
  cfg.n = n;
  return cfg;
}

std::string str(const Fraction& f) { return to_string(f) + " (" + std::to_string(to_double(f)) + ")"; }

bool sorts_permutations(const Network& net, std::size_t count, std::uint64_t seed) {
  constexpr std::size_t kBatch = 16;
  const std::size_t n = net.width();
  const std::size_t batches = (count + kBatch - 1) / kBatch;
  std::vector<int> bad(std::max(1u, g_jobs), 0);
  parallel_chunks(batches, g_jobs, [&](std::size_t b, std::size_t e, unsigned w) {
    std::vector<std::int64_t> one(n), data(n * kBatch);
    for (std::size_t batch = b; batch < e; ++batch) {
      for (std::size_t l = 0; l < kBatch; ++l) {
        const std::size_t i = std::min(batch * kBatch + l, count - 1);
        Rng rng = derive_rng(seed, i);
        std::iota(one.begin(), one.end(), 0);
        shuffle(std::span<std::int64_t>(one), rng);
        for (std::size_t x = 0; x < n; ++x) data[x * kBatch + l] = one[x];
      }
      apply_keys_batch(net, data, kBatch);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t l = 0; l < kBatch; ++l)
          if (data[x * kBatch + l] != static_cast<std::int64_t>(x)) {
            bad[w] = 1;
            return;
          }
    }
  });
  return std::none_of(bad.begin(), bad.end(), [](int x) { return x; });
}

void criterion1() {
  Criterion c{"C1", "exhaustive 0-1 correctness of the exact-halver zig-zag network", 10};
  for (std::size_t n : {2, 4, 8, 16}) {
    for (auto r : {ZigZagRealization::swap, ZigZagRealization::revcmp}) {
      auto cfg = exact_config(n);
      cfg.realization = r;
      const auto rep = verify_zero_one(emit_zigzag_network(cfg), 40, 0, 0, g_jobs);
      c.expect(rep.passed && rep.mode == VerifyMode::exhaustive &&
                   rep.inputs_checked == (std::uint64_t{1} << n),
               "n=" + std::to_string(n) + " " + to_string(r));
    }
  }
  c.info("n=16: 65536 inputs per realization");
  c.finish();

  Criterion slow{"C1-slow", "exhaustive 0-1 correctness at 24 values (2^24 inputs)", 600};
  // The n = 32 network with the top 8 wires held at 1 sorts 24 values.
  const Network net = emit_zigzag_network(exact_config(32));
  const std::size_t blocks = std::size_t{1} << (24 - 6);
  std::vector<int> bad(std::max(1u, g_jobs), 0);
  parallel_chunks(blocks, g_jobs, [&](std::size_t b, std::size_t e, unsigned w) {
    static constexpr std::uint64_t low[6] = {
        0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
        0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL};
    std::vector<std::uint64_t> wires(32);
    for (std::size_t block = b; block < e; ++block) {
      for (std::size_t x = 0; x < 32; ++x)
        wires[x] = x < 6 ? low[x] : x >= 24 ? ~std::uint64_t{0} : (((block >> (x - 6)) & 1U) ? ~std::uint64_t{0} : 0);
      apply_lanes(net, wires);
      if (unsorted_lanes(wires)) {
        bad[w] = 1;
        return;
      }
    }
  });
  slow.expect(std::none_of(bad.begin(), bad.end(), [](int x) { return x; }), "all 2^24 inputs sorted");
  slow.finish();
}

void criterion2() {
  Criterion c{"C2", "sampled correctness for n = 32..1024 (1e5 binary + 1e4 permutations)", 60};
  for (std::size_t n = 32; n <= 1024; n *= 2) {
    const Network net = emit_zigzag_network(exact_config(n));
    const auto rep = verify_zero_one(net, 0, 100000, 1000 + n, g_jobs);
    c.expect(rep.passed && rep.inputs_checked == 100000, "binary n=" + std::to_string(n));
    c.expect(sorts_permutations(net, 10000, 2000 + n), "permutations n=" + std::to_string(n));
  }
  c.finish();
}

void criterion3() {
  Criterion c{"C3", "Reduce as (beta, 5/6)-halver and attenuator at per-side 8", 0};
  const std::size_t s = 8;
  const std::size_t k_max = 5 * 2 * s / 6;  // 13
  // Smallest degree and seed whose measured halver has alpha <= 1/15.
  unsigned degree = 0;
  std::uint64_t seed = 0;
  Fraction alpha = 1;
  for (unsigned k = 1; k <= 8 && degree == 0; ++k)
    for (std::uint64_t sd = 1; sd <= 16 && degree == 0; ++sd) {
      const auto m = measure_epsilon(emit_halver(HalverSpec::expander(k, sd), s), s, g_jobs);
      if (m.epsilon() <= Fraction(1, 15)) {
        degree = k;
        seed = sd;
        alpha = m.epsilon();
      }
    }
  c.expect(degree != 0, "found a seeded expander with alpha <= 1/15");
  if (degree != 0) {
    ZigZagConfig cfg = exact_config(2 * s);
    cfg.halver = HalverSpec::expander(degree, seed);
    const auto r = measure_reduce(cfg, s, k_max, g_jobs);
    const double a = to_double(r.alpha);
    const double dfix = delta_fixpoint(a);
    c.info("degree " + std::to_string(degree) + " seed " + std::to_string(seed) + " alpha " +
           str(r.alpha) + " (2^16 inputs)");
    c.info("k <= " + std::to_string(k_max) + ": beta " + str(r.beta) + ", delta " +
           (r.delta ? str(*r.delta) : std::string("unbounded")) + ", delta_fixpoint " +
           std::to_string(dfix) + ", beta_of " + std::to_string(beta_of(a)));
    c.expect(r.alpha == alpha, "Reduce alpha matches halver alpha");
    c.expect(r.alpha <= Fraction(1, 15), "alpha <= 1/15");
    c.expect(to_double(r.beta) <= beta_of(a) + 1e-15, "beta <= alpha * delta_fixpoint(alpha)");
    c.expect(beta_of(a) <= 1.0 / 180, "alpha * delta_fixpoint(alpha) <= 1/180");
    c.expect(r.delta && to_double(*r.delta) <= dfix + 1e-15, "delta <= delta_fixpoint(alpha)");
    c.expect(dfix <= 1.0 / 12, "delta_fixpoint(alpha) <= 1/12");

    // Threshold 2 keeps the recursion visible at this size.
    ZigZagConfig t2 = cfg;
    t2.base_threshold = 2;
    t2.halver = HalverSpec::expander(4, 3);
    const auto i = measure_reduce(t2, s, k_max, g_jobs);
    c.info("info, threshold 2, degree 4 seed 3: alpha " + str(i.alpha) + ", beta " + str(i.beta) +
           ", delta " + (i.delta ? str(*i.delta) : std::string("unbounded")));
  }
  c.finish();
}

void criterion4() {
  Criterion c{"C4", "overflow bound for every shipped halver at per-side n <= 10", 0};
  c.expect(overflow_bound(Fraction(1, 32), 64, 80) == Fraction(35, 2), "spot value 17.5");
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 10; ++n) {
    std::vector<HalverSpec> specs;
    for (auto sorter : {ExactSorter::batcher, ExactSorter::bitonic}) {
      HalverSpec h = HalverSpec::exact();
      h.exact_sorter = sorter;
      specs.push_back(h);
    }
    for (unsigned k : {1u, 2u, 3u, 4u, 6u, 8u})
      for (std::uint64_t seed : {1u, 2u, 42u}) specs.push_back(HalverSpec::expander(k, seed));
    for (const auto& spec : specs) {
      if (spec.kind == HalverKind::exact && !is_power_of_two(n)) continue;
      const Network frag = emit_halver(spec, n);
      const auto m = measure_epsilon(frag, n, g_jobs);
      const bool ok = overflow_holds(m, m.epsilon());
      c.expect(ok, "n=" + std::to_string(n) + " " + to_string(spec.kind) + " degree " +
                       std::to_string(spec.degree) + " seed " + std::to_string(spec.seed));
      ++checked;
    }
  }
  c.info(std::to_string(checked) + " halvers checked over all 2^(2n) inputs");
  c.finish();
}

void criterion5() {
  Criterion c{"C5", "counting-mode comparator counts and headline constants", 0};
  for (unsigned k : {1u, 2u, 4u, 7u}) {
    ZigZagConfig cfg;
    cfg.n = 2;
    cfg.halver = HalverSpec::expander(k, 1);
    cfg.counting_mode = true;
    for (std::size_t m = 32; m <= 2048; m *= 2) {
      const auto p = predicted_counts(Fraction(k, 2), m);
      c.expect(Fraction(count_attenuate(cfg, m / 2).comparators) == p.attenuate,
               "Attenuate 9cm k=" + std::to_string(k) + " m=" + std::to_string(m));
      c.expect(Fraction(count_reduce(cfg, m / 2).comparators) == p.reduce,
               "Reduce 10cm k=" + std::to_string(k) + " m=" + std::to_string(m));
    }
    for (std::size_t n = 64; n <= 4096; n *= 2) {
      cfg.n = n;
      const auto total = count_zigzag(cfg).comparators;
      c.expect(total == predicted_zigzag_comparators(k, n), "closed form n=" + std::to_string(n));
      c.expect(Fraction(total) <= predicted_counts(Fraction(k, 2), n).total_bound,
               "50 c n log n bound k=" + std::to_string(k) + " n=" + std::to_string(n));
    }
  }
  const auto r = constants_report();
  c.expect(r.rows.size() == 4, "four constants rows");
  if (r.rows.size() == 4) {
    c.expect(std::llround(r.rows[0].coefficient) == 19600, "19,600");
    c.expect(std::llround(r.rows[1].coefficient) == 2700, "2,700");
    c.expect(r.rows[0].c == 392, "392");
    c.expect(r.rows[1].c == 54, "54");
    c.expect(std::llround(r.rows[3].coefficient) == 119025, "119,025");
    c.info("constructive degree at epsilon 1/402.15: computed " + std::to_string(r.rows[2].k));
    c.expect(r.rows[2].k == 642883, "642,883 from the constructive degree formula");
  }
  c.finish();
}

void criterion6() {
  Criterion c{"C6", "dirtiness invariant suite, 1000 inputs at n = 1024, exact halver", 300};
  SuiteOptions opt;
  opt.inputs = 1000;
  opt.jobs = g_jobs;
  const auto report = run_invariant_suite(exact_config(1024), opt);
  c.expect(report.traces == 1000, "1000 traces");
  c.expect(report.passed(), "all checks pass");
  for (const auto& [tag, st] : report.stats)
    c.info(tag + ": " + std::to_string(st.checked) + " checked, " + std::to_string(st.failed) +
           " failed");

  // Sensitivity: corrupt one trace per checker family.
  const auto base = trace(random_binary_input(1024, 1, 0), exact_config(1024), 0);
  const Fraction d(1, 12), e(1, 32), b(1, 180);
  auto t1 = base;
  auto& L = t1.levels[4];
  const std::size_t far = L.m1 + 2 <= L.d_split.size() ? L.m1 + 2 : 1;
  L.d_split[far - 1] = static_cast<std::uint32_t>(L.n_j);
  c.expect(!check_invariants(t1, d, b).passed(), "injected far-subarray violation detected");
  c.expect(!check_concentration(t1, d, b).passed(), "injected concentration violation detected");
  auto t2 = base;
  for (auto& s : t2.levels[5].zig_steps) s.lower = s.upper = 1000;
  for (auto& s : t2.levels[5].zag_steps) s.lower = s.upper = 1000;
  t2.levels[5].d_zig.assign(t2.levels[5].d_zig.size(), 1000);
  t2.levels[5].d_zag.assign(t2.levels[5].d_zag.size(), 1000);
  c.expect(!check_phase_bounds(t2, d, e, b).passed(), "injected phase violation detected");
  auto t3 = base;
  t3.output[0] = 1;
  InvariantReport sr;
  check_structure(t3, sr);
  c.expect(!sr.passed(), "injected unsorted output detected");
  c.finish();
}

void criterion7() {
  Criterion c{"C7", "baseline parity", 0};
  c.expect(verify_zero_one(batcher_network(16), 40, 0, 0, g_jobs).passed, "Batcher n=16");
  c.expect(verify_zero_one(bitonic_network(16), 40, 0, 0, g_jobs).passed, "bitonic n=16");
  c.expect(verify_zero_one(pratt_network(16), 40, 0, 0, g_jobs).passed, "Pratt n=16");
  for (std::size_t n : {16, 100, 4096}) {
    std::vector<std::size_t> sieve;
    for (std::size_t m = 1; m < n; ++m) {
      std::size_t r = m;
      while (r % 2 == 0) r /= 2;
      while (r % 3 == 0) r /= 3;
      if (r == 1) sieve.push_back(m);
    }
    c.expect(pratt_gaps(n) == sieve, "Pratt gaps n=" + std::to_string(n));
  }
  double lo = 1e300, hi = 0;
  for (std::size_t n = 64; n <= 4096; n *= 2) {
    const double lg = std::log2(static_cast<double>(n));
    const double ratio = static_cast<double>(pratt_network(n).size()) / (n * lg * lg);
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  c.info("Pratt count/(n log2^2 n) in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  c.expect(hi <= 2 * lo, "Pratt ratio within a factor of 2");
  c.finish();
}

void criterion8() {
  Criterion c{"C8", "emitted network agrees with direct execution (1e4 inputs per config)", 0};
  std::size_t configs = 0;
  for (std::size_t n : {8, 16, 32, 64}) {
    std::vector<ZigZagConfig> cfgs;
    for (auto r : {ZigZagRealization::swap, ZigZagRealization::revcmp}) {
      auto a = exact_config(n);
      a.realization = r;
      cfgs.push_back(a);
      a.halver.exact_sorter = ExactSorter::bitonic;
      cfgs.push_back(a);
      auto x = exact_config(n);
      x.realization = r;
      x.halver = HalverSpec::expander(3, 11);
      cfgs.push_back(x);
      x.base_threshold = 2;
      cfgs.push_back(x);
    }
    for (const auto& cfg : cfgs) {
      const Network net = emit_zigzag_network(cfg);
      std::vector<int> bad(std::max(1u, g_jobs), 0);
      parallel_chunks(10000, g_jobs, [&](std::size_t b, std::size_t e, unsigned w) {
        std::vector<std::int64_t> v(n);
        for (std::size_t i = b; i < e; ++i) {
          Rng rng = derive_rng(n * 31 + configs, i);
          for (auto& x : v) x = static_cast<std::int64_t>(uniform_below(rng, 2 * n));
          auto direct = zigzag_sort(v, cfg);
          apply_keys(net, v);
          if (direct != v) {
            bad[w] = 1;
            return;
          }
        }
      });
      c.expect(std::none_of(bad.begin(), bad.end(), [](int x) { return x; }),
               "n=" + std::to_string(n) + " " + to_string(cfg.halver.kind) + " " +
                   to_string(cfg.realization) + " threshold " + std::to_string(cfg.base_threshold));
      ++configs;
    }
  }
  c.info(std::to_string(configs) + " configurations");
  c.finish();
}

}  // namespace

int main() {
  g_jobs = std::max(resolve_jobs(0), std::min(8u, std::max(1u, std::thread::hardware_concurrency())));
  std::printf("acceptance run, %u worker threads\n", g_jobs);
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  std::printf("%d criteria failed\n", g_failed);
  return g_failed == 0 ? 0 : 1;
}
