#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oblivnet/fraction.hpp"
#include "oblivnet/zigzag.hpp"

namespace oblivnet {

/// Dirtiness of the two subarrays touched by one zig or zag step, read right
/// after that step's Reduce.
struct StepRecord {
  std::size_t step = 0;
  std::uint32_t lower = 0;  // A_i for zig step i, A_{i-1} for zag step i
  std::uint32_t upper = 0;  // A_{i+1} for zig step i, A_i for zag step i
};

/// One level j. Subarray vectors are indexed by i - 1.
struct LevelTrace {
  unsigned level = 0;
  std::size_t n_j = 0;
  /// Subarrays straddling the uncertainty interval (1-based, m1 = m0 + 1);
  /// 0 when the trace is trivial.
  std::size_t m0 = 0;
  std::size_t m1 = 0;
  /// Block that holds cell K (1-based).
  std::size_t k_block = 0;
  std::vector<unsigned> depth;  // d_{i,j}
  std::vector<std::uint32_t> d_split;
  std::vector<std::uint32_t> d_zig;
  std::vector<std::uint32_t> d_zag;
  std::vector<std::uint32_t> ones_split;
  std::vector<std::uint32_t> ones_zig;
  std::vector<std::uint32_t> ones_zag;
  std::vector<StepRecord> zig_steps;  // in execution order
  std::vector<StepRecord> zag_steps;  // in execution order (descending i)

  std::size_t subarrays() const { return d_split.size(); }
  const StepRecord* zig_step(std::size_t i) const;
  const StepRecord* zag_step(std::size_t i) const;
};

struct DirtinessTrace {
  std::size_t n = 0;
  /// Number of zeros, so cells 1..K should hold 0.
  std::size_t K = 0;
  std::uint64_t seed = 0;
  bool trivial = false;  // K = 0 or K = n
  std::vector<LevelTrace> levels;
  std::vector<std::uint8_t> output;
};

/// Uncertainty interval [K - n_j/2, K + 1 + n_j/2] as doubles, for reports.
std::pair<double, double> uncertainty_interval(std::size_t K, std::size_t n_j);

/// The two straddling subarrays (m0, m1) at a level with 2^j subarrays of
/// length n_j: the block p holding cell K and its neighbour on the side of
/// the nearer block edge, clamped at the ends of the array.
std::pair<std::size_t, std::size_t> straddling_pair(std::size_t K, std::size_t n_j,
                                                    std::size_t subarrays);

/// Whether the cell position quarters / 4 (1-based, possibly fractional)
/// lies in subarray i of length n_j.
bool indexes_cell_in(std::int64_t quarters, std::size_t i, std::size_t n_j);

/// |ones present - ones in the sorted array| for cells [start, start + len).
std::uint32_t dirtiness(std::size_t ones, std::size_t start, std::size_t len, std::size_t K);

/// Runs the algorithm on a binary input, recording dirtiness after the
/// splitting step, after every zig and zag step, and after both passes.
/// Throws std::invalid_argument on a non-binary input or length mismatch.
DirtinessTrace trace(const std::vector<std::uint8_t>& input, const ZigZagConfig& config,
                     std::uint64_t seed = 0);

struct CheckEntry {
  std::string tag;
  unsigned level = 0;
  std::size_t index = 0;  // 1-based subarray, 0 for whole-level checks
  bool passed = true;
  std::string bound;  // exact value
  double bound_value = 0;
  std::int64_t observed = 0;
  std::uint64_t seed = 0;
  std::size_t K = 0;
};

struct TagStats {
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
};

struct InvariantReport {
  std::map<std::string, TagStats> stats;
  /// Failures always; passes too when keep_passes is set.
  std::vector<CheckEntry> entries;
  bool keep_passes = false;
  std::uint64_t traces = 0;

  bool passed() const;
  std::uint64_t failures() const;
  void record(CheckEntry entry);
  void merge(const InvariantReport& other);
  /// One line per entry followed by a per-tag summary.
  std::string to_text() const;
  /// key=value lines, stable order.
  std::string to_key_value() const;
};

/// Regime parameters shared by the checks; bound values are cached.
class BoundContext {
 public:
  BoundContext(Fraction delta, Fraction epsilon, Fraction beta);
  const Fraction& delta() const { return delta_; }
  const Fraction& epsilon() const { return epsilon_; }
  const Fraction& beta() const { return beta_; }
  /// 4^d δ^(d-1) β n_j for d >= 1.
  const Fraction& invariant_bound(unsigned d, std::size_t n_j);
  /// δ^e β n_j.
  const Fraction& geometric(std::size_t e, std::size_t n_j);

 private:
  Fraction delta_, epsilon_, beta_;
  std::map<std::pair<unsigned, std::size_t>, Fraction> invariant_;
  std::map<std::pair<std::size_t, std::size_t>, Fraction> geometric_;
};

/// Dirtiness invariants after every splitting step.
void check_invariants(const DirtinessTrace& t, BoundContext& ctx, InvariantReport& report);
InvariantReport check_invariants(const DirtinessTrace& t, const Fraction& delta,
                                 const Fraction& beta);

/// Total dirtiness on each side of the straddling pair after splitting is at
/// most 8βn_j/(1-8δ). Throws std::domain_error unless δ < 1/8.
void check_concentration(const DirtinessTrace& t, BoundContext& ctx, InvariantReport& report);
InvariantReport check_concentration(const DirtinessTrace& t, const Fraction& delta,
                                    const Fraction& beta);

/// Per-phase bounds for the zig and zag passes. Throws std::domain_error
/// outside δ <= 1/12, ε <= 1/32, β <= 1/180.
void check_phase_bounds(const DirtinessTrace& t, BoundContext& ctx, InvariantReport& report);
InvariantReport check_phase_bounds(const DirtinessTrace& t, const Fraction& delta,
                                   const Fraction& epsilon, const Fraction& beta);

/// Structural properties of a trace that need no parameters: conservation
/// of ones, straddling pair shape, depth counts and final sortedness.
void check_structure(const DirtinessTrace& t, InvariantReport& report);

void require_phase_regime(const Fraction& delta, const Fraction& epsilon, const Fraction& beta);

/// Smallest δ with δ = α + αδ + δ². Domain: 0 <= α <= 1/6.
double delta_fixpoint(double alpha);
/// α · delta_fixpoint(α), α <= 1/6.
double beta_of(double alpha);
/// α²(ceil(log2(1/α)) + 3), 0 < α <= 1/8 (α = 0 gives 0).
Fraction epsilon_manos(const Fraction& alpha);

/// Binary input with K zeros, K uniform in [1, n - 1] (n >= 2).
std::vector<std::uint8_t> random_binary_input(std::size_t n, std::uint64_t seed,
                                              std::uint64_t index);

struct SuiteOptions {
  std::size_t inputs = 1000;
  std::uint64_t seed = 1;
  Fraction delta{1, 12};
  Fraction epsilon{1, 32};
  Fraction beta{1, 180};
  unsigned jobs = 1;
  bool structure = true;
  bool invariants = true;
  bool concentration = true;
  bool phases = true;
};

/// Traces `inputs` seeded binary inputs and checks each; the merged report
/// does not depend on the number of workers.
InvariantReport run_invariant_suite(const ZigZagConfig& config, const SuiteOptions& options);

struct ReduceMeasurement {
  std::size_t per_side = 0;
  std::size_t k_max = 0;
  Fraction alpha;    // halver, k <= per_side
  Fraction epsilon;  // Reduce as a halver, k <= per_side
  Fraction beta;     // Reduce as a halver restricted to k <= k_max
  std::optional<Fraction> delta;  // Reduce as an attenuator, k <= k_max
};

/// Exhaustive over all 2^(2·per_side) binary inputs (2·per_side <= 24).
ReduceMeasurement measure_reduce(const ZigZagConfig& config, std::size_t per_side,
                                 std::size_t k_max, unsigned jobs = 1);

struct ConstantsRow {
  std::string method;
  std::string epsilon;
  std::string degree_source;  // constructive or non-constructive
  double k_real = 0;
  std::uint64_t k = 0;
  std::uint64_t c = 0;
  /// Computed coefficient of n log n.
  double coefficient = 0;
  /// Published figure the row is compared against.
  std::uint64_t quoted = 0;
  std::string note;
};

struct ConstantsReport {
  std::vector<ConstantsRow> rows;
  std::string to_text() const;
};

ConstantsReport constants_report();

}  // namespace oblivnet
