#include "oblivnet/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "oblivnet/analysis.hpp"
#include "oblivnet/baselines.hpp"
#include "oblivnet/fraction.hpp"
#include "oblivnet/halvers.hpp"
#include "oblivnet/network_io.hpp"
#include "oblivnet/render.hpp"
#include "oblivnet/verify.hpp"
#include "oblivnet/zigzag.hpp"

namespace oblivnet {

namespace {

// Raised for bad flag values and I/O problems; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZigZagFlags {
  std::string halver = "exact";
  unsigned degree = 4;
  std::uint64_t seed = 1;
  std::string exact_sorter = "batcher";
  std::size_t threshold = 8;
  std::string mode = "swap";
  bool counting = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--halver", halver, "Halver kind")
        ->check(CLI::IsMember({"exact", "expander"}))
        ->capture_default_str();
    cmd->add_option("--degree", degree, "Expander degree k")->check(CLI::PositiveNumber)->capture_default_str();
    cmd->add_option("--seed", seed, "Seed for the expander graphs and inputs")->capture_default_str();
    cmd->add_option("--exact-sorter", exact_sorter, "Sorter backing the exact halver")
        ->check(CLI::IsMember({"batcher", "bitonic"}))
        ->capture_default_str();
    cmd->add_option("--threshold", threshold, "Per-side size sorted outright")->capture_default_str();
    cmd->add_option("--zigzag-mode", mode, "Inner zig-zag realization")
        ->check(CLI::IsMember({"swap", "revcmp"}))
        ->capture_default_str();
    cmd->add_flag("--counting", counting, "Counting mode: raw degree-k halvers, no base sorts");
  }

  ZigZagConfig config(std::size_t n) const {
    ZigZagConfig cfg;
    cfg.n = n;
    cfg.halver = halver == "exact"
                     ? HalverSpec::exact(exact_sorter == "bitonic" ? ExactSorter::bitonic
                                                                   : ExactSorter::batcher)
                     : HalverSpec::expander(degree, seed);
    cfg.base_threshold = threshold;
    cfg.realization = mode == "revcmp" ? ZigZagRealization::revcmp : ZigZagRealization::swap;
    cfg.counting_mode = counting;
    try {
      cfg.validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    return cfg;
  }
};

void require_power_of_two(std::size_t n) {
  if (!is_power_of_two(n))
    throw UsageError("width must be a power of two, got " + std::to_string(n));
}

template <GateSink S>
void emit_algorithm(const std::string& algo, const ZigZagConfig& cfg, S& sink) {
  if (algo == "zigzag") {
    ZigZagEmitter<S>(cfg, sink).run();
  } else if (algo == "batcher") {
    emit_batcher(sink, 0, cfg.n);
  } else if (algo == "bitonic") {
    emit_bitonic(sink, 0, cfg.n);
  } else if (algo == "pratt") {
    emit_pratt(sink, 0, cfg.n);
  } else {
    throw UsageError("unknown algorithm '" + algo + "'");
  }
}

Fraction fraction_flag(const std::string& name, const std::string& text) {
  try {
    return parse_fraction(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError("--" + name + ": " + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << text)) throw UsageError("cannot write " + path);
}

Network load_network(const std::string& path) {
  try {
    return parse(read_file(path));
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::string join(const std::vector<std::uint32_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(v[i]);
  }
  return s;
}

// ---- commands ------------------------------------------------------------

struct GenCmd {
  std::size_t n = 16;
  std::string algo = "zigzag";
  std::string out;
  ZigZagFlags zz;

  int run(std::ostream& os) const {
    if (algo != "pratt") require_power_of_two(n);
    if (n == 0) throw UsageError("width must be positive");
    const ZigZagConfig cfg = zz.config(algo == "pratt" ? next_power_of_two(n) : n);
    RecordingSink sink(n);
    if (algo == "pratt")
      emit_pratt(sink, 0, n);
    else
      emit_algorithm(algo, cfg, sink);
    const Network net = sink.take();
    std::string comment = "algo=" + algo;
    if (algo == "zigzag")
      comment += " halver=" + zz.halver + (zz.halver == "expander"
                                               ? " degree=" + std::to_string(zz.degree) +
                                                     " seed=" + std::to_string(zz.seed)
                                               : "") +
                 " mode=" + zz.mode + (zz.counting ? " counting" : "");
    const std::string text = serialize(net, comment);
    const GateCounts c = gate_counts(net);
    std::ostringstream summary;
    summary << "width " << net.width() << " comparators " << c.comparators << " swaps " << c.swaps
            << " depth " << depth(net) << '\n';
    if (out.empty() || out == "-") {
      os << text;
    } else {
      write_file(out, text);
      os << summary.str();
    }
    return kExitOk;
  }
};

struct VerifyCmd {
  std::string net;
  std::size_t exhaustive_max = kDefaultExhaustiveLimit;
  std::uint64_t samples = kDefaultSampleCount;
  std::uint64_t seed = 0;
  unsigned jobs = 0;

  int run(std::ostream& os) const {
    const Network network = load_network(net);
    const auto report = verify_zero_one(network, exhaustive_max, samples, seed, resolve_jobs(jobs));
    os << "mode " << to_string(report.mode) << '\n'
       << "inputs_checked " << report.inputs_checked << '\n'
       << "result " << (report.passed ? "pass" : "fail") << '\n';
    if (report.mode == VerifyMode::sampled)
      os << "note sampled check: passing is evidence, not proof\n";
    if (report.witness) {
      os << "witness";
      for (auto b : *report.witness) os << ' ' << int(b);
      os << '\n';
    }
    return report.passed ? kExitOk : kExitFailure;
  }
};

struct SortCmd {
  std::string in;
  std::string out;
  std::string algo = "zigzag";
  ZigZagFlags zz;

  int run(std::ostream& os) const {
    const std::string text = read_file(in);
    std::vector<std::int64_t> values;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string::npos) end = text.size();
      const std::string_view line(text.data() + pos, end - pos);
      pos = end + 1;
      ++line_no;
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), v);
      if (line.empty() || ec != std::errc{} || ptr != line.data() + line.size())
        throw UsageError(in + ": line " + std::to_string(line_no) + ": not a 64-bit integer");
      values.push_back(v);
    }
    const std::size_t count = values.size();
    if (count > 0) {
      const std::size_t width = next_power_of_two(count);
      values.resize(width, std::numeric_limits<std::int64_t>::max());
      const ZigZagConfig cfg = zz.config(width);
      ExecutingSink<std::int64_t> sink(values);
      emit_algorithm(algo, cfg, sink);
      values.resize(count);
    }
    std::string result;
    for (std::int64_t v : values) {
      result += std::to_string(v);
      result += '\n';
    }
    if (out.empty() || out == "-")
      os << result;
    else
      write_file(out, result);
    return kExitOk;
  }
};

struct BenchCmd {
  std::vector<std::string> algos{"zigzag", "batcher", "bitonic", "pratt"};
  std::vector<std::size_t> sizes{64, 128, 256, 512, 1024, 2048, 4096};
  ZigZagFlags zz;

  int run(std::ostream& os) const {
    for (std::size_t n : sizes) require_power_of_two(n);
    CountReport report;
    for (const auto& algo : algos) {
      for (std::size_t n : sizes) {
        const ZigZagConfig cfg = zz.config(n);
        CountingSink counter;
        DepthSink layers(n);
        TeeSink<CountingSink, DepthSink> tee(counter, layers);
        emit_algorithm(algo, cfg, tee);
        CountRow row;
        row.algorithm = algo;
        row.n = n;
        row.comparators = counter.counts().comparators;
        row.swaps = counter.counts().swaps;
        row.depth = layers.depth();
        if (n >= 2) {
          const double lg = std::log2(static_cast<double>(n));
          row.per_n_log_n = static_cast<double>(row.comparators) / (static_cast<double>(n) * lg);
          row.per_n_log2_n = row.per_n_log_n / lg;
        }
        report.rows.push_back(row);
      }
    }
    os << report.to_text();
    if (zz.halver == "expander" && zz.counting) {
      os << "# zigzag counting-mode bound 50c n log2 n with c = k/2 = " << zz.degree / 2.0 << '\n';
      for (std::size_t n : sizes)
        os << "# n=" << n << " predicted=" << predicted_zigzag_comparators(zz.degree, n)
           << " bound=" << to_string(predicted_counts(Fraction(zz.degree, 2), n).total_bound)
           << '\n';
    }
    return kExitOk;
  }
};

struct TraceCmd {
  std::size_t n = 16;
  std::uint64_t index = 0;
  std::string input;
  std::string format = "text";
  ZigZagFlags zz;

  int run(std::ostream& os) const {
    require_power_of_two(n);
    std::vector<std::uint8_t> bits;
    if (!input.empty()) {
      std::istringstream in(read_file(input));
      int b;
      while (in >> b) {
        if (b != 0 && b != 1) throw UsageError(input + ": values must be 0 or 1");
        bits.push_back(static_cast<std::uint8_t>(b));
      }
      if (bits.size() != n)
        throw UsageError(input + ": expected " + std::to_string(n) + " values, got " +
                         std::to_string(bits.size()));
    } else {
      if (n < 2) throw UsageError("random trace input needs --n >= 2");
      bits = random_binary_input(n, zz.seed, index);
    }
    const ZigZagConfig cfg = zz.config(n);
    const DirtinessTrace t = trace(bits, cfg, zz.seed);
    if (format == "kv") {
      os << "n=" << t.n << "\nK=" << t.K << "\ntrivial=" << (t.trivial ? 1 : 0) << '\n';
      for (const auto& L : t.levels) {
        const std::string p = "level." + std::to_string(L.level) + ".";
        os << p << "n_j=" << L.n_j << '\n' << p << "m0=" << L.m0 << '\n' << p << "m1=" << L.m1
           << '\n' << p << "depth=" << join(std::vector<std::uint32_t>(L.depth.begin(), L.depth.end()))
           << '\n' << p << "d_split=" << join(L.d_split) << '\n' << p << "d_zig=" << join(L.d_zig)
           << '\n' << p << "d_zag=" << join(L.d_zag) << '\n';
      }
      return kExitOk;
    }
    os << "n " << t.n << " K " << t.K << (t.trivial ? " (trivial)" : "") << '\n';
    for (const auto& L : t.levels) {
      const auto [lo, hi] = uncertainty_interval(t.K, L.n_j);
      os << "level " << L.level << " n_j " << L.n_j << " m0 " << L.m0 << " m1 " << L.m1
         << " interval [" << lo << ", " << hi << "]\n";
      os << "  depth   " << join(std::vector<std::uint32_t>(L.depth.begin(), L.depth.end())) << '\n';
      os << "  d_split " << join(L.d_split) << '\n';
      os << "  d_zig   " << join(L.d_zig) << '\n';
      os << "  d_zag   " << join(L.d_zag) << '\n';
    }
    return kExitOk;
  }
};

struct CheckCmd {
  std::size_t n = 1024;
  std::size_t seeds = 1000;
  std::string delta = "1/12";
  std::string epsilon = "1/32";
  std::string beta = "1/180";
  std::string format = "text";
  unsigned jobs = 0;
  bool verbose = false;
  ZigZagFlags zz;

  int run(std::ostream& os) const {
    require_power_of_two(n);
    if (n < 2) throw UsageError("check needs --n >= 2");
    SuiteOptions opt;
    opt.inputs = seeds;
    opt.seed = zz.seed;
    opt.delta = fraction_flag("delta", delta);
    opt.epsilon = fraction_flag("epsilon", epsilon);
    opt.beta = fraction_flag("beta", beta);
    opt.jobs = resolve_jobs(jobs);
    try {
      require_phase_regime(opt.delta, opt.epsilon, opt.beta);
    } catch (const std::domain_error& e) {
      throw UsageError(e.what());
    }
    const ZigZagConfig cfg = zz.config(n);
    InvariantReport report = run_invariant_suite(cfg, opt);
    if (format == "kv") {
      os << report.to_key_value();
    } else {
      if (!verbose && report.entries.size() > 50) report.entries.resize(50);
      os << report.to_text();
    }
    return report.passed() ? kExitOk : kExitFailure;
  }
};

struct RenderCmd {
  std::string net;
  std::string svg;

  int run(std::ostream& os) const {
    const std::string text = render_svg(load_network(net));
    if (svg.empty() || svg == "-")
      os << text;
    else
      write_file(svg, text);
    return kExitOk;
  }
};

struct ConstantsCmd {
  std::string alpha = "1/15";

  int run(std::ostream& os) const {
    const Fraction a = fraction_flag("alpha", alpha);
    os << constants_report().to_text();
    const double ad = to_double(a);
    try {
      char buf[256];
      std::snprintf(buf, sizeof buf, "alpha %s delta_fixpoint %.10f beta %.10f\n", alpha.c_str(),
                    delta_fixpoint(ad), beta_of(ad));
      os << buf;
      const Fraction e = epsilon_manos(a);
      std::snprintf(buf, sizeof buf, "alpha %s epsilon %s (%.10f)\n", alpha.c_str(),
                    to_string(e).c_str(), to_double(e));
      os << buf;
    } catch (const std::domain_error& e) {
      throw UsageError(e.what());
    }
    return kExitOk;
  }
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Data-oblivious sorting networks: zig-zag sort, halvers, baselines"};
  app.name("oblivnet");
  app.require_subcommand(1);

  GenCmd gen;
  auto* gen_cmd = app.add_subcommand("gen", "Emit a sorting network");
  gen_cmd->add_option("--n", gen.n, "Width")->required();
  gen_cmd->add_option("--algo", gen.algo, "Algorithm")
      ->check(CLI::IsMember({"zigzag", "batcher", "bitonic", "pratt"}))
      ->capture_default_str();
  gen_cmd->add_option("--out", gen.out, "Output file (stdout if omitted)");
  gen.zz.attach(gen_cmd);

  VerifyCmd verify;
  auto* verify_cmd = app.add_subcommand("verify", "0-1 check of a network file");
  verify_cmd->add_option("--net", verify.net, "Network file")->required();
  verify_cmd->add_option("--exhaustive-max", verify.exhaustive_max, "Widest exhaustive check")
      ->capture_default_str();
  verify_cmd->add_option("--samples", verify.samples, "Random inputs beyond that")->capture_default_str();
  verify_cmd->add_option("--seed", verify.seed, "Sampling seed")->capture_default_str();
  verify_cmd->add_option("--jobs", verify.jobs, "Worker threads (default OBLIVNET_JOBS or 1)");

  SortCmd sort;
  auto* sort_cmd = app.add_subcommand("sort", "Sort a file of 64-bit integers");
  sort_cmd->add_option("--in", sort.in, "Input file")->required();
  sort_cmd->add_option("--out", sort.out, "Output file (stdout if omitted)");
  sort_cmd->add_option("--algo", sort.algo, "Algorithm")
      ->check(CLI::IsMember({"zigzag", "batcher", "bitonic", "pratt"}))
      ->capture_default_str();
  sort.zz.attach(sort_cmd);

  BenchCmd bench;
  auto* bench_cmd = app.add_subcommand("bench", "Comparator counts and depths");
  bench_cmd->add_option("--algos", bench.algos, "Algorithms")
      ->delimiter(',')
      ->check(CLI::IsMember({"zigzag", "batcher", "bitonic", "pratt"}));
  bench_cmd->add_option("--sizes", bench.sizes, "Widths")->delimiter(',');
  bench.zz.attach(bench_cmd);

  TraceCmd tr;
  auto* trace_cmd = app.add_subcommand("trace", "Dirtiness trace of one binary input");
  trace_cmd->add_option("--n", tr.n, "Width")->capture_default_str();
  trace_cmd->add_option("--index", tr.index, "Index of the seeded random input")->capture_default_str();
  trace_cmd->add_option("--input", tr.input, "File of n whitespace-separated 0/1 values");
  trace_cmd->add_option("--format", tr.format, "Output format")
      ->check(CLI::IsMember({"text", "kv"}))
      ->capture_default_str();
  tr.zz.attach(trace_cmd);

  CheckCmd check;
  auto* check_cmd = app.add_subcommand("check", "Dirtiness invariant and phase-bound suite");
  check_cmd->add_option("--n", check.n, "Width")->capture_default_str();
  check_cmd->add_option("--seeds", check.seeds, "Number of seeded inputs")->capture_default_str();
  check_cmd->add_option("--delta", check.delta, "Attenuation parameter")->capture_default_str();
  check_cmd->add_option("--epsilon", check.epsilon, "Halver parameter")->capture_default_str();
  check_cmd->add_option("--beta", check.beta, "Restricted halver parameter")->capture_default_str();
  check_cmd->add_option("--format", check.format, "Output format")
      ->check(CLI::IsMember({"text", "kv"}))
      ->capture_default_str();
  check_cmd->add_option("--jobs", check.jobs, "Worker threads (default OBLIVNET_JOBS or 1)");
  check_cmd->add_flag("--verbose", check.verbose, "Print every failure");
  check.zz.attach(check_cmd);

  RenderCmd render;
  auto* render_cmd = app.add_subcommand("render", "Draw a network as SVG");
  render_cmd->add_option("--net", render.net, "Network file")->required();
  render_cmd->add_option("--svg", render.svg, "Output file (stdout if omitted)");

  ConstantsCmd constants;
  auto* constants_cmd = app.add_subcommand("constants", "Degree formulas and headline constants");
  constants_cmd->add_option("--alpha", constants.alpha, "Halver parameter for the calculators")
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen_cmd) return gen.run(out);
    if (*verify_cmd) return verify.run(out);
    if (*sort_cmd) return sort.run(out);
    if (*bench_cmd) return bench.run(out);
    if (*trace_cmd) return tr.run(out);
    if (*check_cmd) return check.run(out);
    if (*render_cmd) return render.run(out);
    if (*constants_cmd) return constants.run(out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace oblivnet
