#include "oblivnet/halvers.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "oblivnet/parallel.hpp"
#include "oblivnet/random.hpp"

namespace oblivnet {

std::string to_string(HalverKind kind) {
  return kind == HalverKind::exact ? "exact" : "expander";
}

std::string to_string(ExactSorter sorter) {
  return sorter == ExactSorter::batcher ? "batcher" : "bitonic";
}

Matchings random_matchings(std::size_t n, unsigned k, std::uint64_t seed) {
  Matchings m;
  m.n = n;
  m.partner.reserve(k);
  Rng rng = derive_rng(seed, n);
  for (unsigned t = 0; t < k; ++t) {
    std::vector<std::uint32_t> row(n);
    std::iota(row.begin(), row.end(), 0u);
    shuffle(std::span<std::uint32_t>(row), rng);
    m.partner.push_back(std::move(row));
  }
  return m;
}

Matchings complete_matchings(std::size_t n) {
  Matchings m;
  m.n = n;
  for (std::size_t t = 0; t < n; ++t) {
    std::vector<std::uint32_t> row(n);
    for (std::size_t a = 0; a < n; ++a) row[a] = static_cast<std::uint32_t>((a + t) % n);
    m.partner.push_back(std::move(row));
  }
  return m;
}

const Matchings& expander_matchings(std::size_t n, unsigned k, std::uint64_t seed, bool clamp) {
  static std::mutex mutex;
  static std::map<std::tuple<std::size_t, unsigned, std::uint64_t, bool>,
                  std::unique_ptr<Matchings>>
      cache;
  const bool complete = clamp && k >= n;
  const auto key = std::make_tuple(n, complete ? 0u : k, complete ? 0 : seed, complete);
  std::lock_guard lock(mutex);
  auto& slot = cache[key];
  if (!slot)
    slot = std::make_unique<Matchings>(complete ? complete_matchings(n)
                                                : random_matchings(n, k, seed));
  return *slot;
}

Network emit_halver(const HalverSpec& spec, std::size_t n, std::size_t base_wire) {
  if (n == 0) throw std::invalid_argument("halver needs a non-empty input (n >= 1)");
  if (spec.kind == HalverKind::expander && spec.degree == 0)
    throw std::invalid_argument("expander halver degree must be at least 1");
  RecordingSink sink(base_wire + 2 * n);
  emit_halver_into(sink, spec, n, base_wire, base_wire + n);
  return sink.take();
}

namespace {

// Bit-sliced counter: bit b of the per-lane count lives in plane b.
struct LaneCounter {
  std::uint64_t plane[5] = {};
  void add(std::uint64_t word) {
    for (auto& p : plane) {
      const std::uint64_t carry = p & word;
      p ^= word;
      word = carry;
    }
  }
  std::uint32_t at(unsigned lane) const {
    std::uint32_t v = 0;
    for (unsigned b = 0; b < 5; ++b) v |= static_cast<std::uint32_t>((plane[b] >> lane) & 1U) << b;
    return v;
  }
};

constexpr std::uint64_t kLowPattern[6] = {
    0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
    0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL,
};

using Ratio = std::pair<std::uint32_t, std::uint32_t>;

// Orders (after, before) ratios; before = 0 with after > 0 is infinite.
bool ratio_greater(const Ratio& x, const Ratio& y) {
  const auto [xa, xb] = x;
  const auto [ya, yb] = y;
  const bool x_inf = xb == 0 && xa > 0;
  const bool y_inf = yb == 0 && ya > 0;
  if (x_inf || y_inf) return x_inf && !y_inf;
  if (xa == 0) return false;
  if (ya == 0) return true;
  return std::uint64_t{xa} * yb > std::uint64_t{ya} * xb;
}

void merge_into(HalverMeasurement& into, const HalverMeasurement& from) {
  for (std::size_t k = 0; k < into.worst_ones_in_a.size(); ++k) {
    into.worst_ones_in_a[k] = std::max(into.worst_ones_in_a[k], from.worst_ones_in_a[k]);
    into.worst_zeros_in_b[k] = std::max(into.worst_zeros_in_b[k], from.worst_zeros_in_b[k]);
    if (ratio_greater(from.worst_top_attenuation[k], into.worst_top_attenuation[k]))
      into.worst_top_attenuation[k] = from.worst_top_attenuation[k];
    if (ratio_greater(from.worst_bottom_attenuation[k], into.worst_bottom_attenuation[k]))
      into.worst_bottom_attenuation[k] = from.worst_bottom_attenuation[k];
  }
}

HalverMeasurement empty_measurement(std::size_t n) {
  HalverMeasurement m;
  m.n = n;
  m.worst_ones_in_a.assign(2 * n + 1, 0);
  m.worst_zeros_in_b.assign(2 * n + 1, 0);
  m.worst_top_attenuation.assign(2 * n + 1, {0, 1});
  m.worst_bottom_attenuation.assign(2 * n + 1, {0, 1});
  return m;
}

}  // namespace

HalverMeasurement measure_epsilon(const Network& fragment, std::size_t n, unsigned jobs) {
  const std::size_t width = 2 * n;
  if (n == 0 || fragment.width() != width)
    throw std::invalid_argument("halver fragment must have width 2n = " + std::to_string(width));
  if (width > kMaxMeasuredWidth)
    throw std::domain_error("exact measurement refused: 2n = " + std::to_string(width) +
                            " exceeds " + std::to_string(kMaxMeasuredWidth) + " wires");

  const std::uint64_t total = std::uint64_t{1} << width;
  const std::uint64_t lanes = std::min<std::uint64_t>(64, total);
  const std::uint64_t blocks = total / lanes;
  const std::uint64_t a_mask = (std::uint64_t{1} << n) - 1;

  const unsigned workers = std::max(1u, jobs);
  std::vector<HalverMeasurement> partial(workers, empty_measurement(n));
  parallel_chunks(blocks, workers, [&](std::size_t begin, std::size_t end, unsigned worker) {
    HalverMeasurement& m = partial[worker];
    std::vector<std::uint64_t> wires(width);
    for (std::size_t block = begin; block < end; ++block) {
      const std::uint64_t base = static_cast<std::uint64_t>(block) * lanes;
      for (std::size_t w = 0; w < width; ++w)
        wires[w] = w < 6 ? kLowPattern[w] : (((base >> w) & 1U) ? ~std::uint64_t{0} : 0);
      apply_lanes(fragment, wires);
      LaneCounter ones_a;
      for (std::size_t w = 0; w < n; ++w) ones_a.add(wires[w]);
      for (unsigned lane = 0; lane < lanes; ++lane) {
        const std::uint64_t idx = base + lane;
        const auto k = static_cast<std::uint32_t>(std::popcount(idx));
        const auto before_a = static_cast<std::uint32_t>(std::popcount(idx & a_mask));
        const std::uint32_t after_a = ones_a.at(lane);
        const std::uint32_t zeros = static_cast<std::uint32_t>(width) - k;
        // zeros in B = n - ones in B, ones in B = k - ones in A.
        const std::uint32_t before_b = static_cast<std::uint32_t>(n) - (k - before_a);
        const std::uint32_t after_b = static_cast<std::uint32_t>(n) - (k - after_a);
        m.worst_ones_in_a[k] = std::max(m.worst_ones_in_a[k], after_a);
        m.worst_zeros_in_b[zeros] = std::max(m.worst_zeros_in_b[zeros], after_b);
        // Beyond n, k - n misplaced elements are forced; only the excess counts.
        const std::uint32_t top_forced = k > n ? k - static_cast<std::uint32_t>(n) : 0;
        const std::uint32_t bottom_forced = zeros > n ? zeros - static_cast<std::uint32_t>(n) : 0;
        const std::pair<std::uint32_t, std::uint32_t> top{after_a - top_forced, before_a - top_forced};
        const std::pair<std::uint32_t, std::uint32_t> bottom{after_b - bottom_forced,
                                                             before_b - bottom_forced};
        if (ratio_greater(top, m.worst_top_attenuation[k])) m.worst_top_attenuation[k] = top;
        if (ratio_greater(bottom, m.worst_bottom_attenuation[zeros]))
          m.worst_bottom_attenuation[zeros] = bottom;
      }
    }
  });
  HalverMeasurement result = std::move(partial[0]);
  for (unsigned w = 1; w < workers; ++w) merge_into(result, partial[w]);
  return result;
}

std::vector<Fraction> HalverMeasurement::per_k_top() const {
  std::vector<Fraction> out;
  for (std::size_t k = 1; k <= n; ++k) out.emplace_back(worst_ones_in_a[k], k);
  return out;
}

std::vector<Fraction> HalverMeasurement::per_k_bottom() const {
  std::vector<Fraction> out;
  for (std::size_t k = 1; k <= n; ++k) out.emplace_back(worst_zeros_in_b[k], k);
  return out;
}

Fraction HalverMeasurement::epsilon_up_to(std::size_t k_max) const {
  k_max = std::min(k_max, 2 * n);
  Fraction eps = 0;
  for (std::size_t k = 1; k <= k_max; ++k) {
    const std::size_t forced = k > n ? k - n : 0;
    eps = std::max(eps, Fraction(worst_ones_in_a[k] - forced, k));
    eps = std::max(eps, Fraction(worst_zeros_in_b[k] - forced, k));
  }
  return eps;
}

Fraction HalverMeasurement::lambda_limited(const Fraction& lambda) const {
  return epsilon_up_to(static_cast<std::size_t>(floor_of(lambda * Fraction(n))));
}

std::optional<Fraction> HalverMeasurement::attenuation_up_to(std::size_t k_max) const {
  k_max = std::min(k_max, 2 * n);
  Fraction delta = 0;
  for (std::size_t k = 1; k <= k_max; ++k) {
    for (const auto& [after, before] : {worst_top_attenuation[k], worst_bottom_attenuation[k]}) {
      if (after == 0) continue;
      if (before == 0) return std::nullopt;
      delta = std::max(delta, Fraction(after, before));
    }
  }
  return delta;
}

Fraction overflow_bound(const Fraction& epsilon, std::size_t n, std::size_t k) {
  return epsilon * Fraction(n) + (Fraction(1) - epsilon) * (Fraction(k) - Fraction(n));
}

bool overflow_holds(const HalverMeasurement& m, const Fraction& epsilon) {
  for (std::size_t k = m.n + 1; k <= 2 * m.n; ++k) {
    const Fraction bound = overflow_bound(epsilon, m.n, k);
    if (!within(m.worst_ones_in_a[k], bound) || !within(m.worst_zeros_in_b[k], bound))
      return false;
  }
  return true;
}

bool check_overflow(const Network& fragment, std::size_t n, const Fraction& epsilon,
                    unsigned jobs) {
  return overflow_holds(measure_epsilon(fragment, n, jobs), epsilon);
}

DegreeEstimate degree_constructive(double epsilon) {
  if (!(epsilon > 0 && epsilon <= 0.5))
    throw std::domain_error("constructive degree needs 0 < epsilon <= 1/2");
  const long double e = epsilon;
  const long double k = 2 * (1 - e) * (1 - e + std::sqrt(std::max(0.0L, 1 - 2 * e))) / (e * e);
  DegreeEstimate d;
  d.k_real = static_cast<double>(k);
  d.k = static_cast<std::uint64_t>(std::ceil(k - 1e-9L));
  d.c = static_cast<std::uint64_t>(std::ceil(k / 2 - 1e-9L));
  return d;
}

DegreeEstimate degree_paterson(double epsilon) {
  if (!(epsilon > 0 && epsilon < 1))
    throw std::domain_error("Paterson degree needs 0 < epsilon < 1");
  const long double e = epsilon;
  const long double k = 2 * std::log(e) / std::log1p(-e) + 2 / e - 1;
  DegreeEstimate d;
  d.k_real = static_cast<double>(k);
  d.k = static_cast<std::uint64_t>(std::ceil(k - 1e-9L));
  d.c = (d.k + 1) / 2;
  return d;
}

}  // namespace oblivnet
