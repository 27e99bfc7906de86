/**
 * @brief The `logcave` command line: classify, iterate, region, witness,
 *        sweep and surface subcommands.
 *
 * run() takes explicit streams so the whole front end can be driven from
 * tests without spawning a process.
 */
#pragma once

#include "logcave/classify.hpp"
#include "logcave/parse.hpp"
#include "logcave/region.hpp"
#include "logcave/sweep.hpp"
#include "logcave/witness.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace logcave::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitUnknown = 3;

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline json rationals_json(std::span<const Rational> values) {
  json arr = json::array();
  for (const auto& v : values) arr.push_back(to_fraction_string(v));
  return arr;
}

inline Parity parse_parity(const std::string& s) {
  if (s == "even") return Parity::Even;
  if (s == "odd") return Parity::Odd;
  throw UsageError("parity must be 'even' or 'odd', got '" + s + "'");
}

/// Bit budget default, overridable by LOGCAVE_BIT_BUDGET.
inline std::size_t default_bit_budget() {
  if (const char* env = std::getenv("LOGCAVE_BIT_BUDGET"); env && *env) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string_view(env).size()) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("LOGCAVE_BIT_BUDGET is not a nonnegative integer: ") + env);
  }
  return kDefaultBitBudget;
}

/// Sequence source shared by classify / iterate / region.
struct SequenceInput {
  std::string positional;
  std::string even;
  std::string odd;

  void attach(CLI::App* sub) {
    sub->add_option("sequence", positional, "Sequence such as \"1,2,1\" or '-' for stdin");
    auto* e = sub->add_option("--even", even, "Even half-form x0,...,xn");
    auto* o = sub->add_option("--odd", odd, "Odd half-form x0,...,xn");
    e->excludes(o);
  }

  FiniteSequence read(std::istream& in) const {
    const int given = !positional.empty() + !even.empty() + !odd.empty();
    if (given != 1) throw UsageError("give exactly one of SEQUENCE, --even, --odd");
    if (!even.empty()) return parse_half(even, Parity::Even).expand();
    if (!odd.empty()) return parse_half(odd, Parity::Odd).expand();
    if (positional == "-") {
      std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      return parse_sequence(text);
    }
    return parse_sequence(positional);
  }
};

/// "lo:hi:step" with exact rationals.
inline sweep::Axis parse_axis(const std::string& text) {
  auto first = text.find(':');
  auto second = first == std::string::npos ? std::string::npos : text.find(':', first + 1);
  if (second == std::string::npos) throw UsageError("axis must be lo:hi:step, got '" + text + "'");
  try {
    return {parse_rational(text.substr(0, first)), parse_rational(text.substr(first + 1, second - first - 1)),
            parse_rational(text.substr(second + 1))};
  } catch (const std::invalid_argument& e) {
    throw UsageError("axis '" + text + "': " + e.what());
  }
}

/// "lo:hi:steps" in floating point, steps a positive integer.
inline sweep::SampleRange parse_sample_range(const std::string& text) {
  std::istringstream is(text);
  sweep::SampleRange r;
  char c1 = 0, c2 = 0;
  long long steps = 0;
  if (!(is >> r.lo >> c1 >> r.hi >> c2 >> steps) || c1 != ':' || c2 != ':' || steps < 1 || !is.eof())
    throw UsageError("range must be lo:hi:steps, got '" + text + "'");
  r.steps = static_cast<std::uint32_t>(steps);
  return r;
}

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : path_(path), out_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw IoError("cannot open '" + path + "' for writing");
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }
  void finish() {
    out_->flush();
    if (!*out_) throw IoError("write failed" + (path_.empty() ? std::string() : " for '" + path_ + "'"));
  }

 private:
  std::string path_;
  std::ofstream file_;
  std::ostream* out_;
};

}  // namespace detail

inline json certificate_json(const Certificate& cert, const FiniteSequence& input) {
  json j;
  j["verdict"] = to_string(cert.verdict);
  j["iterate"] = cert.iterate;
  if (cert.verdict == Verdict::NotLogconcave) j["negative_iterate"] = cert.negative_iterate;
  if (cert.verdict == Verdict::Unknown) j["reason"] = cert.reason;
  const FiniteSequence normalized = sgn(input[0]) > 0 ? input.scaled(1 / input[0]) : input;
  j["input_normalized"] = detail::rationals_json(normalized.values());
  if (cert.captured) {
    j["captured"] = {{"parity", to_string(cert.captured->parity)},
                     {"half", detail::rationals_json(cert.captured->half)}};
  }
  return j;
}

inline json membership_json(const region::Membership& m) {
  json j;
  j["in_region"] = m.in_region;
  j["per_surface"] = json::array();
  for (auto s : m.per_surface) j["per_surface"].push_back(region::to_string(s));
  j["failed_conditions"] = m.failed_conditions;
  return j;
}

/// Runs one invocation; argv[0] is the program name.
inline int run(const std::vector<std::string>& argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact certification of infinite logconcavity for symmetric sequences", "logcave"};
  app.require_subcommand(1);

  std::uint32_t max_iter = kDefaultMaxIter;
  std::optional<std::size_t> bit_budget;
  std::string out_path;
  bool strict = false;

  auto add_budget_opts = [&](CLI::App* sub) {
    sub->add_option("--max-iter", max_iter, "Iteration cap")->capture_default_str();
    sub->add_option("--bit-budget", bit_budget, "Total bit cap per iterate (default 1000000 or $LOGCAVE_BIT_BUDGET)");
  };

  // classify
  detail::SequenceInput classify_in;
  auto* classify_cmd = app.add_subcommand("classify", "Certify, refute, or give up on a sequence");
  classify_in.attach(classify_cmd);
  add_budget_opts(classify_cmd);
  classify_cmd->add_flag("--strict", strict, "Exit 3 on an unknown verdict");
  classify_cmd->add_option("--out", out_path, "Output file (default stdout)");

  // iterate
  detail::SequenceInput iterate_in;
  std::uint32_t steps = 1;
  auto* iterate_cmd = app.add_subcommand("iterate", "Print L^0 .. L^k of a sequence exactly");
  iterate_in.attach(iterate_cmd);
  iterate_cmd->add_option("-k,--steps", steps, "Number of applications of L")->capture_default_str();
  iterate_cmd->add_option("--out", out_path, "Output file (default stdout)");

  // region
  detail::SequenceInput region_in;
  auto* region_cmd = app.add_subcommand("region", "Test membership of a symmetric sequence in the trapping region");
  region_in.attach(region_cmd);
  region_cmd->add_option("--out", out_path, "Output file (default stdout)");

  // witness
  std::size_t witness_n = 1;
  std::string witness_parity = "even";
  std::string witness_C, witness_a, witness_base;
  auto* witness_cmd = app.add_subcommand("witness", "Construct an explicit member of the region");
  witness_cmd->add_option("--n", witness_n, "Index of the last half coordinate (>= 1)")->capture_default_str();
  witness_cmd->add_option("--parity", witness_parity, "even | odd")->capture_default_str();
  witness_cmd->add_option("--C", witness_C, "Contraction 0 < C < 2/(1+sqrt5) (default 3/5)");
  witness_cmd->add_option("--a", witness_a, "Amplitude (default 3*C^(T(n-1)-T(n)))");
  witness_cmd->add_option("--base", witness_base, "1-logconcave half-form b0,...,bn (default binomial row)");
  witness_cmd->add_option("--out", out_path, "Output file (default stdout)");

  // sweep
  std::string sweep_parity = "even";
  std::size_t sweep_n = 1;
  std::vector<std::string> sweep_axes;
  std::string sweep_format = "csv";
  unsigned sweep_workers = 0;
  auto* sweep_cmd = app.add_subcommand("sweep", "Classify every cell of a rational grid");
  sweep_cmd->add_option("--parity", sweep_parity, "even | odd")->capture_default_str();
  sweep_cmd->add_option("--n", sweep_n, "Index of the last half coordinate; n+1 axes")->capture_default_str();
  sweep_cmd->add_option("--axis", sweep_axes, "lo:hi:step per axis, in coordinate order");
  sweep_cmd->add_option("--format", sweep_format, "csv | pgm")->capture_default_str();
  sweep_cmd->add_option("--workers", sweep_workers, "Worker threads (0 = all cores)")->capture_default_str();
  add_budget_opts(sweep_cmd);
  sweep_cmd->add_option("--out", out_path, "Output file (default stdout)");

  // surface
  sweep::SurfaceSampleSpec surface_spec;
  std::string surface_parity = "even";
  std::string surface_x = "1:4:16";
  std::vector<std::string> surface_d;
  auto* surface_cmd = app.add_subcommand("surface", "Sample a boundary surface H_j for plotting");
  surface_cmd->add_option("--j", surface_spec.j, "Surface index 0..n")->capture_default_str();
  surface_cmd->add_option("--n", surface_spec.n, "Index of the last half coordinate (>= 1)")->capture_default_str();
  surface_cmd->add_option("--parity", surface_parity, "even | odd")->capture_default_str();
  surface_cmd->add_option("--x", surface_x, "lo:hi:steps for the base parameter")->capture_default_str();
  surface_cmd->add_option("--d", surface_d, "lo:hi:steps per free exponent, in index order");
  surface_cmd->add_option("--precision", surface_spec.precision, "Decimal digits")
      ->capture_default_str()
      ->check(CLI::Range(0, 18));
  surface_cmd->add_option("--out", out_path, "Output file (default stdout)");

  std::vector<std::string> args(argv.rbegin(), std::prev(argv.rend()));
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    ClassifyOptions opts{max_iter, bit_budget ? *bit_budget : detail::default_bit_budget()};

    if (*classify_cmd) {
      const FiniteSequence seq = classify_in.read(in);
      const Certificate cert = seqops::classify(seq, opts);
      detail::Output o(out_path, out);
      o.stream() << certificate_json(cert, seq).dump() << '\n';
      o.finish();
      return strict && cert.verdict == Verdict::Unknown ? kExitUnknown : kExitOk;
    }

    if (*iterate_cmd) {
      FiniteSequence seq = iterate_in.read(in);
      detail::Output o(out_path, out);
      for (std::uint32_t k = 0; k <= steps; ++k) {
        if (k) seq = seqops::apply_L(seq);
        o.stream() << k << ": " << render(seq) << '\n';
      }
      o.finish();
      return kExitOk;
    }

    if (*region_cmd) {
      const FiniteSequence seq = region_in.read(in);
      const auto norm = seqops::normalize(seq);
      if (!norm.symmetric) throw UsageError("sequence is not symmetric after normalization");
      const auto m = region::check_membership(region::RegionPoint::from(*norm.symmetric));
      json j;
      j["parity"] = to_string(norm.symmetric->parity);
      j["half"] = detail::rationals_json(norm.symmetric->half);
      j.update(membership_json(m));
      detail::Output o(out_path, out);
      o.stream() << j.dump() << '\n';
      o.finish();
      return kExitOk;
    }

    if (*witness_cmd) {
      const Parity parity = detail::parse_parity(witness_parity);
      if (witness_n < 1) throw UsageError("--n must be at least 1");
      witness::WitnessParams p;
      p.n = witness_n;
      p.parity = parity;
      p.C = witness_C.empty() ? witness::default_C() : parse_rational(witness_C);
      if (sgn(p.C) <= 0) throw UsageError("--C must be positive");
      p.a = witness_a.empty() ? witness::default_a(witness_n, p.C) : parse_rational(witness_a);
      p.base = witness_base.empty() ? witness::default_base(witness_n, parity) : parse_half(witness_base, parity);
      if (auto problem = witness::validate(p); !problem.empty()) throw UsageError(problem);
      const SymmetricSeq s = witness::build_witness(p);
      const auto m = region::check_membership(region::RegionPoint::from(s));
      json j;
      j["n"] = p.n;
      j["parity"] = to_string(parity);
      j["C"] = to_fraction_string(p.C);
      j["a"] = to_fraction_string(p.a);
      j["base"] = detail::rationals_json(p.base.half);
      j["half"] = detail::rationals_json(s.half);
      j["in_region"] = m.in_region;
      detail::Output o(out_path, out);
      o.stream() << j.dump() << '\n';
      o.finish();
      return kExitOk;
    }

    if (*sweep_cmd) {
      sweep::GridSpec spec;
      spec.parity = detail::parse_parity(sweep_parity);
      spec.classify = opts;
      if (sweep_axes.empty()) {
        if (sweep_n != 1) throw UsageError("--axis is required unless --n is 1");
        // Windows bracketing the binomial points (5,10) and (4,6).
        sweep_axes = spec.parity == Parity::Even ? std::vector<std::string>{"0:20:1/2", "0:40:1/2"}
                                                 : std::vector<std::string>{"0:15:1/2", "0:25:1/2"};
      }
      if (sweep_axes.size() != sweep_n + 1)
        throw UsageError("expected " + std::to_string(sweep_n + 1) + " --axis values");
      for (const auto& a : sweep_axes) spec.axes.push_back(detail::parse_axis(a));
      if (sweep_format != "csv" && sweep_format != "pgm") throw UsageError("--format must be csv or pgm");
      try {
        sweep::validate(spec);
        if (sweep::cell_count(spec) > sweep::kMaxCells) throw UsageError("grid exceeds 10^8 cells");
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      if (sweep_format == "pgm" && spec.axes.size() != 2) throw UsageError("pgm output needs exactly two axes");
      const auto cells = sweep::classify_grid(spec, sweep_workers);
      detail::Output o(out_path, out);
      if (sweep_format == "csv") sweep::write_csv(o.stream(), cells, spec.axes.size());
      else sweep::write_pgm(o.stream(), spec, cells);
      o.finish();
      return kExitOk;
    }

    if (*surface_cmd) {
      surface_spec.parity = detail::parse_parity(surface_parity);
      surface_spec.x = detail::parse_sample_range(surface_x);
      for (const auto& d : surface_d) surface_spec.d.push_back(detail::parse_sample_range(d));
      std::vector<sweep::SurfaceSample> samples;
      try {
        samples = sweep::sample_surface(surface_spec);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      detail::Output o(out_path, out);
      sweep::write_surface_csv(o.stream(), surface_spec, samples);
      o.finish();
      return kExitOk;
    }
  } catch (const IoError& e) {
    err << "logcave: " << e.what() << '\n';
    return kExitIo;
  } catch (const UsageError& e) {
    err << "logcave: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "logcave: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace logcave::cli
