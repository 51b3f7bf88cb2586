#include "oblivnet/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include "oblivnet/halvers.hpp"
#include "oblivnet/parallel.hpp"
#include "oblivnet/random.hpp"

namespace oblivnet {

const StepRecord* LevelTrace::zig_step(std::size_t i) const {
  for (const auto& s : zig_steps)
    if (s.step == i) return &s;
  return nullptr;
}

const StepRecord* LevelTrace::zag_step(std::size_t i) const {
  for (const auto& s : zag_steps)
    if (s.step == i) return &s;
  return nullptr;
}

std::pair<double, double> uncertainty_interval(std::size_t K, std::size_t n_j) {
  const double half = static_cast<double>(n_j) / 2;
  return {static_cast<double>(K) - half, static_cast<double>(K) + 1 + half};
}

std::pair<std::size_t, std::size_t> straddling_pair(std::size_t K, std::size_t n_j,
                                                    std::size_t subarrays) {
  if (K == 0 || subarrays < 2) return {1, 2};
  const std::size_t p = (K + n_j - 1) / n_j;
  const std::size_t offset = K - (p - 1) * n_j;
  std::size_t m0 = 2 * offset <= n_j ? p - 1 : p;
  if (m0 < 1) m0 = 1;
  if (m0 + 1 > subarrays) m0 = subarrays - 1;
  return {m0, m0 + 1};
}

bool indexes_cell_in(std::int64_t quarters, std::size_t i, std::size_t n_j) {
  const auto lo = static_cast<std::int64_t>(4 * (i - 1) * n_j);
  const auto hi = static_cast<std::int64_t>(4 * i * n_j);
  return lo < quarters && quarters <= hi;
}

std::uint32_t dirtiness(std::size_t ones, std::size_t start, std::size_t len, std::size_t K) {
  const std::size_t zeros_due = K <= start ? 0 : std::min(K - start, len);
  const std::size_t ones_due = len - zeros_due;
  return static_cast<std::uint32_t>(ones > ones_due ? ones - ones_due : ones_due - ones);
}

namespace {

class TraceObserver {
 public:
  TraceObserver(std::span<std::uint8_t> data, DirtinessTrace& t) : data_(data), t_(t) {}

  void after_split(unsigned j) {
    LevelTrace level;
    level.level = j;
    level.n_j = t_.n >> j;
    const std::size_t count = std::size_t{1} << j;
    level.depth.assign(count, 0);
    if (!t_.trivial) {
      std::tie(level.m0, level.m1) = straddling_pair(t_.K, level.n_j, count);
      level.k_block = (t_.K + level.n_j - 1) / level.n_j;
      const std::vector<unsigned>* parent = t_.levels.empty() ? nullptr : &t_.levels.back().depth;
      for (std::size_t i = 1; i <= count; ++i) {
        if (i == level.m0 || i == level.m1) continue;
        level.depth[i - 1] = (parent ? (*parent)[(i + 1) / 2 - 1] : 0) + 1;
      }
    }
    snapshot(level, level.ones_split, level.d_split);
    t_.levels.push_back(std::move(level));
  }

  void after_step(Phase phase, unsigned, std::size_t i) {
    LevelTrace& level = t_.levels.back();
    const std::size_t lower = phase == Phase::zig ? i : i - 1;
    StepRecord r{i, dirt_of(level, lower), dirt_of(level, lower + 1)};
    (phase == Phase::zig ? level.zig_steps : level.zag_steps).push_back(r);
  }

  void after_phase(Phase phase, unsigned) {
    LevelTrace& level = t_.levels.back();
    if (phase == Phase::zig)
      snapshot(level, level.ones_zig, level.d_zig);
    else
      snapshot(level, level.ones_zag, level.d_zag);
  }

 private:
  std::size_t ones_of(const LevelTrace& level, std::size_t i) const {
    const auto begin = data_.begin() + static_cast<std::ptrdiff_t>((i - 1) * level.n_j);
    return static_cast<std::size_t>(
        std::count(begin, begin + static_cast<std::ptrdiff_t>(level.n_j), std::uint8_t{1}));
  }

  std::uint32_t dirt_of(const LevelTrace& level, std::size_t i) const {
    return dirtiness(ones_of(level, i), (i - 1) * level.n_j, level.n_j, t_.K);
  }

  void snapshot(const LevelTrace& level, std::vector<std::uint32_t>& ones,
                std::vector<std::uint32_t>& dirt) const {
    const std::size_t count = t_.n / level.n_j;
    ones.resize(count);
    dirt.resize(count);
    for (std::size_t i = 1; i <= count; ++i) {
      ones[i - 1] = static_cast<std::uint32_t>(ones_of(level, i));
      dirt[i - 1] = dirtiness(ones[i - 1], (i - 1) * level.n_j, level.n_j, t_.K);
    }
  }

  std::span<std::uint8_t> data_;
  DirtinessTrace& t_;
};

}  // namespace

DirtinessTrace trace(const std::vector<std::uint8_t>& input, const ZigZagConfig& config,
                     std::uint64_t seed) {
  config.validate();
  if (input.size() != config.n) throw WidthMismatch(config.n, input.size());
  for (std::uint8_t v : input)
    if (v > 1) throw std::invalid_argument("trace needs a 0/1 input");
  DirtinessTrace t;
  t.n = config.n;
  t.seed = seed;
  t.K = static_cast<std::size_t>(std::count(input.begin(), input.end(), std::uint8_t{0}));
  t.trivial = t.K == 0 || t.K == t.n;
  std::vector<std::uint8_t> data = input;
  TraceObserver obs(data, t);
  zigzag_sort_in_place(std::span<std::uint8_t>(data), config, std::less<>{}, obs);
  t.output = std::move(data);
  return t;
}

// ---- reports -------------------------------------------------------------

bool InvariantReport::passed() const { return failures() == 0; }

std::uint64_t InvariantReport::failures() const {
  std::uint64_t f = 0;
  for (const auto& [tag, s] : stats) f += s.failed;
  return f;
}

void InvariantReport::record(CheckEntry entry) {
  TagStats& s = stats[entry.tag];
  ++s.checked;
  if (!entry.passed) ++s.failed;
  if (!entry.passed || keep_passes) entries.push_back(std::move(entry));
}

void InvariantReport::merge(const InvariantReport& other) {
  for (const auto& [tag, s] : other.stats) {
    stats[tag].checked += s.checked;
    stats[tag].failed += s.failed;
  }
  entries.insert(entries.end(), other.entries.begin(), other.entries.end());
  traces += other.traces;
}

std::string InvariantReport::to_text() const {
  std::string out;
  char buf[512];
  for (const CheckEntry& e : entries) {
    std::snprintf(buf, sizeof buf, "%s %s level=%u index=%zu observed=%lld bound=%s (%.6g) K=%zu seed=%llu\n",
                  e.passed ? "PASS" : "FAIL", e.tag.c_str(), e.level, e.index,
                  static_cast<long long>(e.observed), e.bound.c_str(), e.bound_value, e.K,
                  static_cast<unsigned long long>(e.seed));
    out += buf;
  }
  for (const auto& [tag, s] : stats) {
    std::snprintf(buf, sizeof buf, "summary %s checked=%llu failed=%llu\n", tag.c_str(),
                  static_cast<unsigned long long>(s.checked),
                  static_cast<unsigned long long>(s.failed));
    out += buf;
  }
  std::snprintf(buf, sizeof buf, "traces=%llu result=%s\n", static_cast<unsigned long long>(traces),
                passed() ? "pass" : "fail");
  out += buf;
  return out;
}

std::string InvariantReport::to_key_value() const {
  std::string out;
  char buf[512];
  std::snprintf(buf, sizeof buf, "traces=%llu\nfailures=%llu\nresult=%s\n",
                static_cast<unsigned long long>(traces),
                static_cast<unsigned long long>(failures()), passed() ? "pass" : "fail");
  out += buf;
  for (const auto& [tag, s] : stats) {
    std::snprintf(buf, sizeof buf, "check.%s.checked=%llu\ncheck.%s.failed=%llu\n", tag.c_str(),
                  static_cast<unsigned long long>(s.checked), tag.c_str(),
                  static_cast<unsigned long long>(s.failed));
    out += buf;
  }
  std::size_t n = 0;
  for (const CheckEntry& e : entries) {
    if (e.passed) continue;
    std::snprintf(buf, sizeof buf,
                  "failure.%zu.tag=%s\nfailure.%zu.level=%u\nfailure.%zu.index=%zu\n"
                  "failure.%zu.observed=%lld\nfailure.%zu.bound=%s\nfailure.%zu.K=%zu\n"
                  "failure.%zu.seed=%llu\n",
                  n, e.tag.c_str(), n, e.level, n, e.index, n, static_cast<long long>(e.observed),
                  n, e.bound.c_str(), n, e.K, n, static_cast<unsigned long long>(e.seed));
    out += buf;
    ++n;
  }
  return out;
}

// ---- bounds --------------------------------------------------------------

BoundContext::BoundContext(Fraction delta, Fraction epsilon, Fraction beta)
    : delta_(std::move(delta)), epsilon_(std::move(epsilon)), beta_(std::move(beta)) {}

const Fraction& BoundContext::invariant_bound(unsigned d, std::size_t n_j) {
  auto [it, fresh] = invariant_.try_emplace({d, n_j});
  if (fresh) {
    Fraction v = beta_ * Fraction(n_j);
    for (unsigned t = 0; t < d; ++t) v *= 4;
    for (unsigned t = 1; t < d; ++t) v *= delta_;
    it->second = v;
  }
  return it->second;
}

const Fraction& BoundContext::geometric(std::size_t e, std::size_t n_j) {
  auto it = geometric_.find({e, n_j});
  if (it != geometric_.end()) return it->second;
  Fraction v = e == 0 ? beta_ * Fraction(n_j) : geometric(e - 1, n_j) * delta_;
  return geometric_.emplace(std::make_pair(e, n_j), std::move(v)).first->second;
}

namespace {

std::string bound_text(const Fraction& f) {
  const std::string exact = to_string(f);
  if (exact.size() <= 40) return exact;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", to_double(f));
  return buf;
}

struct Checker {
  const DirtinessTrace& t;
  InvariantReport& report;
  const LevelTrace* level = nullptr;

  // observed <= base + extra, with extra >= 0.
  void operator()(const char* tag, std::size_t index, std::int64_t observed, const Fraction& base,
                  const Fraction& extra = Fraction(0)) {
    bool ok = observed == 0 && base >= 0;
    if (!ok) {
      const Fraction lhs = Fraction(observed) - base;
      ok = lhs <= 0 || lhs <= extra;
    }
    CheckEntry e;
    e.tag = tag;
    e.level = level ? level->level : 0;
    e.index = index;
    e.passed = ok;
    e.observed = observed;
    e.seed = t.seed;
    e.K = t.K;
    if (!ok || report.keep_passes) {
      const Fraction bound = base + extra;
      e.bound = bound_text(bound);
      e.bound_value = to_double(bound);
    }
    report.record(std::move(e));
  }
};

Fraction nj_over(std::size_t n_j, int d) { return Fraction(n_j, d); }

}  // namespace

void check_invariants(const DirtinessTrace& t, BoundContext& ctx, InvariantReport& report) {
  if (t.trivial) return;
  Checker check{t, report};
  for (const LevelTrace& L : t.levels) {
    check.level = &L;
    for (std::size_t i = 1; i <= L.subarrays(); ++i) {
      if (i == L.m0 || i == L.m1) continue;
      check("far_subarray", i, L.d_split[i - 1], ctx.invariant_bound(L.depth[i - 1], L.n_j));
    }
    if (L.k_block == L.m0) check("straddling_upper", L.m1, L.d_split[L.m1 - 1], nj_over(L.n_j, 6));
    if (L.k_block == L.m1) check("straddling_lower", L.m0, L.d_split[L.m0 - 1], nj_over(L.n_j, 6));
  }
}

InvariantReport check_invariants(const DirtinessTrace& t, const Fraction& delta,
                                  const Fraction& beta) {
  BoundContext ctx(delta, Fraction(1, 32), beta);
  InvariantReport report;
  report.traces = 1;
  check_invariants(t, ctx, report);
  return report;
}

void check_concentration(const DirtinessTrace& t, BoundContext& ctx, InvariantReport& report) {
  if (!(ctx.delta() < Fraction(1, 8)))
    throw std::domain_error("concentration bound needs delta < 1/8");
  if (t.trivial) return;
  Checker check{t, report};
  for (const LevelTrace& L : t.levels) {
    check.level = &L;
    const Fraction bound = 8 * ctx.beta() * Fraction(L.n_j) / (1 - 8 * ctx.delta());
    std::int64_t low = 0, high = 0;
    for (std::size_t i = 1; i < L.m0; ++i) low += L.d_split[i - 1];
    for (std::size_t i = L.m1 + 1; i <= L.subarrays(); ++i) high += L.d_split[i - 1];
    check("concentration_low", 0, low, bound);
    check("concentration_high", 0, high, bound);
  }
}

InvariantReport check_concentration(const DirtinessTrace& t, const Fraction& delta,
                                    const Fraction& beta) {
  BoundContext ctx(delta, Fraction(1, 32), beta);
  InvariantReport report;
  report.traces = 1;
  check_concentration(t, ctx, report);
  return report;
}

void require_phase_regime(const Fraction& delta, const Fraction& epsilon, const Fraction& beta) {
  if (delta < 0 || epsilon < 0 || beta < 0 || delta > Fraction(1, 12) ||
      epsilon > Fraction(1, 32) || beta > Fraction(1, 180))
    throw std::domain_error("phase bounds need delta <= 1/12, epsilon <= 1/32, beta <= 1/180");
}

void check_phase_bounds(const DirtinessTrace& t, BoundContext& ctx, InvariantReport& report) {
  require_phase_regime(ctx.delta(), ctx.epsilon(), ctx.beta());
  if (t.trivial) return;
  Checker check{t, report};
  const Fraction& delta = ctx.delta();
  for (const LevelTrace& L : t.levels) {
    check.level = &L;
    const std::size_t count = L.subarrays();
    const std::size_t m0 = L.m0, m1 = L.m1;
    const std::size_t nj = L.n_j;
    const Fraction beta_n = ctx.beta() * Fraction(nj);
    const auto K4 = static_cast<std::int64_t>(4 * t.K);
    const auto q = static_cast<std::int64_t>(nj);  // n_j / 4 in quarter cells
    const bool k_in_m0 = L.k_block == m0;
    const bool k_in_m1 = L.k_block == m1;

    // Outer zig.
    for (std::size_t i = 1; i + 2 <= m0; ++i)
      check("low_side_zig", i, L.d_zig[i - 1], delta * Fraction(L.d_split[i]));
    if (m0 >= 2) check("left_neighbor_zig", m0 - 1, L.d_zig[m0 - 2], beta_n);
    if (const StepRecord* s = L.zig_step(m0)) {
      if (k_in_m0) check("straddling_zig", m1, s->upper, nj_over(nj, 6) - beta_n);
      if (k_in_m1) check("straddling_zig", m0, s->lower, nj_over(nj, 6));
    }
    if (m1 + 1 <= count) {
      if (const StepRecord* s = L.zig_step(m1)) {
        check("right_neighbor_zig", m1 + 1, s->upper, beta_n);
        if (k_in_m0) check("right_neighbor_zig", m1, s->lower, nj_over(nj, 6));
      }
    }
    for (std::size_t i = m1 + 1; i < count; ++i)
      check("high_side_zig", i, L.d_zig[i - 1], Fraction(L.d_split[i]),
            ctx.geometric(i - m1 - 1, nj));

    // Outer zag.
    for (std::size_t i = m1 + 2; i <= count; ++i)
      check("high_side_zag", i, L.d_zag[i - 1], delta * Fraction(L.d_split[i - 1]),
            ctx.geometric(i - m1 - 1, nj));
    if (m1 + 1 <= count) check("right_neighbor_zag", m1 + 1, L.d_zag[m1], beta_n);
    if (indexes_cell_in(K4 + q, m0, nj)) {
      check("straddling_zag", m1, L.d_zag[m1 - 1], beta_n);
    } else if (indexes_cell_in(K4 - q, m1, nj)) {
      check("straddling_zag", m0, L.d_zag[m0 - 1], beta_n);
    } else if (const StepRecord* s = L.zag_step(m1)) {
      if (k_in_m1) check("straddling_zag", m0, s->lower, nj_over(nj, 12) - beta_n);
      if (k_in_m0) check("straddling_zag", m1, s->upper, nj_over(nj, 12));
    }
    if (m0 >= 2) {
      if (const StepRecord* s = L.zag_step(m0)) {
        check("left_neighbor_zag", m0 - 1, s->lower, beta_n);
        if (k_in_m1) {
          if (indexes_cell_in(K4 - q, m1, nj))
            check("left_neighbor_zag", m0, s->upper, 2 * beta_n);
          else if (indexes_cell_in(K4 - q, m0, nj))
            check("left_neighbor_zag", m0, s->upper, nj_over(nj, 12));
        }
      }
    }
    for (std::size_t i = 1; i < m0; ++i)
      check("low_side_zag", i, L.d_zag[i - 1], delta * Fraction(L.d_split[i - 1]),
            ctx.geometric(m0 - i - 1, nj));
  }
}

InvariantReport check_phase_bounds(const DirtinessTrace& t, const Fraction& delta,
                                   const Fraction& epsilon, const Fraction& beta) {
  BoundContext ctx(delta, epsilon, beta);
  InvariantReport report;
  report.traces = 1;
  check_phase_bounds(t, ctx, report);
  return report;
}

void check_structure(const DirtinessTrace& t, InvariantReport& report) {
  Checker check{t, report};
  const auto expect = [&](const char* tag, std::size_t index, bool ok) {
    check(tag, index, ok ? 0 : 1, Fraction(0));
  };
  const std::uint64_t ones = t.n - t.K;
  for (const LevelTrace& L : t.levels) {
    check.level = &L;
    for (const auto* v : {&L.ones_split, &L.ones_zig, &L.ones_zag})
      expect("conservation", 0, std::accumulate(v->begin(), v->end(), std::uint64_t{0}) == ones);
    if (t.trivial) continue;
    const std::size_t count = L.subarrays();
    const auto intersects = [&](std::size_t i) {
      // Cells (i-1)n_j + 1 .. i n_j against [K - n_j/2, K + n_j/2], doubled.
      const auto first = static_cast<std::int64_t>(2 * ((i - 1) * L.n_j + 1));
      const auto last = static_cast<std::int64_t>(2 * i * L.n_j);
      const auto lo = static_cast<std::int64_t>(2 * t.K) - static_cast<std::int64_t>(L.n_j);
      const auto hi = static_cast<std::int64_t>(2 * t.K + L.n_j);
      return first <= hi && last >= lo;
    };
    bool pair_ok = L.m1 == L.m0 + 1 && L.m0 >= 1 && L.m1 <= count &&
                   (L.k_block == L.m0 || L.k_block == L.m1);
    for (std::size_t i = 1; i <= count; ++i)
      if (intersects(i) && i != L.m0 && i != L.m1) pair_ok = false;
    expect("straddling_pair", L.m0, pair_ok);
    std::map<unsigned, std::size_t> per_depth;
    for (unsigned d : L.depth) ++per_depth[d];
    bool depth_ok = per_depth[0] == 2;
    for (const auto& [d, c] : per_depth)
      if (d > 0 && d < 63 && c > (std::size_t{1} << d)) depth_ok = false;
    expect("depth_count", 0, depth_ok);
  }
  check.level = t.levels.empty() ? nullptr : &t.levels.back();
  bool sorted = std::is_sorted(t.output.begin(), t.output.end());
  if (!t.levels.empty())
    for (std::uint32_t d : t.levels.back().d_zag) sorted = sorted && d == 0;
  expect("sorted_output", 0, sorted);
}

// ---- calculators ---------------------------------------------------------

double delta_fixpoint(double alpha) {
  if (!(alpha >= 0 && alpha <= 1.0 / 6))
    throw std::domain_error("delta_fixpoint needs 0 <= alpha <= 1/6");
  const long double a = alpha;
  const long double disc = (1 - a) * (1 - a) - 4 * a;
  if (disc < 0) throw std::domain_error("no admissible delta: negative discriminant");
  return static_cast<double>(((1 - a) - std::sqrt(disc)) / 2);
}

double beta_of(double alpha) { return alpha * delta_fixpoint(alpha); }

Fraction epsilon_manos(const Fraction& alpha) {
  if (alpha == 0) return 0;
  if (alpha < 0 || alpha > Fraction(1, 8))
    throw std::domain_error("epsilon_manos needs 0 <= alpha <= 1/8");
  unsigned t = 0;
  Fraction p = alpha;
  while (p < 1) {
    p *= 2;
    ++t;
  }
  return alpha * alpha * Fraction(t + 3);
}

std::vector<std::uint8_t> random_binary_input(std::size_t n, std::uint64_t seed,
                                              std::uint64_t index) {
  if (n < 2) throw std::invalid_argument("random binary input needs n >= 2");
  Rng rng = derive_rng(seed, index);
  const std::size_t K = 1 + static_cast<std::size_t>(uniform_below(rng, n - 1));
  std::vector<std::uint8_t> v(n, 1);
  std::fill(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(K), 0);
  shuffle(std::span<std::uint8_t>(v), rng);
  return v;
}

InvariantReport run_invariant_suite(const ZigZagConfig& config, const SuiteOptions& options) {
  config.validate();
  if (options.phases) require_phase_regime(options.delta, options.epsilon, options.beta);
  if (options.concentration && !(options.delta < Fraction(1, 8)))
    throw std::domain_error("concentration bound needs delta < 1/8");
  const unsigned workers = std::max(1u, options.jobs);
  std::vector<InvariantReport> partial(workers);
  parallel_chunks(options.inputs, workers, [&](std::size_t begin, std::size_t end, unsigned w) {
    BoundContext ctx(options.delta, options.epsilon, options.beta);
    InvariantReport& report = partial[w];
    for (std::size_t idx = begin; idx < end; ++idx) {
      const auto input = random_binary_input(config.n, options.seed, idx);
      const DirtinessTrace t = trace(input, config, options.seed + idx);
      ++report.traces;
      if (options.structure) check_structure(t, report);
      if (options.invariants) check_invariants(t, ctx, report);
      if (options.concentration) check_concentration(t, ctx, report);
      if (options.phases) check_phase_bounds(t, ctx, report);
    }
  });
  InvariantReport merged;
  for (const auto& r : partial) merged.merge(r);
  return merged;
}

ReduceMeasurement measure_reduce(const ZigZagConfig& config, std::size_t per_side,
                                 std::size_t k_max, unsigned jobs) {
  ZigZagConfig cfg = config;
  cfg.n = 2 * per_side;
  RecordingSink halver_sink(cfg.n);
  ZigZagEmitter<RecordingSink>(cfg, halver_sink).halver(0, per_side, per_side);
  RecordingSink reduce_sink(cfg.n);
  ZigZagEmitter<RecordingSink>(cfg, reduce_sink).reduce(0, per_side, per_side);

  const HalverMeasurement h = measure_epsilon(halver_sink.network(), per_side, jobs);
  const HalverMeasurement r = measure_epsilon(reduce_sink.network(), per_side, jobs);
  ReduceMeasurement m;
  m.per_side = per_side;
  m.k_max = k_max;
  m.alpha = h.epsilon();
  m.epsilon = r.epsilon();
  m.beta = r.epsilon_up_to(k_max);
  m.delta = r.attenuation_up_to(k_max);
  return m;
}

ConstantsReport constants_report() {
  constexpr double kSeiferasPerHalver = 6.05 * 7 / 2;
  ConstantsReport report;
  {
    const auto d = degree_constructive(1.0 / 15);
    report.rows.push_back({"zigzag", "1/15", "constructive", d.k_real, d.k, d.c,
                           50.0 * static_cast<double>(d.c), 19600, "coefficient 50c"});
  }
  {
    const auto d = degree_paterson(1.0 / 15);
    report.rows.push_back({"zigzag", "1/15", "non-constructive", d.k_real, d.k, d.c,
                           50.0 * static_cast<double>(d.c), 2700, "coefficient 50c"});
  }
  {
    const auto d = degree_constructive(1 / 402.15);
    report.rows.push_back({"seiferas", "1/402.15", "constructive", d.k_real, d.k, d.c,
                           kSeiferasPerHalver * static_cast<double>(d.k), 13613047,
                           "coefficient 6.05*7*k/2; published degree 642883"});
  }
  {
    const auto d = degree_paterson(1 / 402.15);
    report.rows.push_back({"seiferas", "1/402.15", "non-constructive", d.k_real, d.k, d.c,
                           kSeiferasPerHalver * static_cast<double>(d.k), 119025,
                           "coefficient 6.05*7*k/2"});
  }
  return report;
}

std::string ConstantsReport::to_text() const {
  std::string out =
      "# c = edges per element of the combined input (c = k/2 for a k-regular halver)\n"
      "method epsilon degree_source k_formula k c coefficient quoted note\n";
  char buf[512];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%s %s %s %.4f %llu %llu %.3f %llu %s\n", r.method.c_str(),
                  r.epsilon.c_str(), r.degree_source.c_str(), r.k_real,
                  static_cast<unsigned long long>(r.k), static_cast<unsigned long long>(r.c),
                  r.coefficient, static_cast<unsigned long long>(r.quoted), r.note.c_str());
    out += buf;
  }
  return out;
}

}  // namespace oblivnet
