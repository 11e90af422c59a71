#include "longmul/cli.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "longmul/harness.hpp"
#include "longmul/oracle.hpp"

namespace longmul::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::uint64_t seed = 1;
  std::size_t count = 200'000;
  std::string shapes;
  bool json = false;
  std::string out_path;
  std::string sizes;
  std::size_t reps = 5;
  std::string band = "1.7,2.3";
  std::uint64_t max = 999;
  unsigned threads = 0;
  std::string fault;
  std::string left;
  std::string right;
  std::string task_file;
};

template <class T>
T parse_number(std::string_view s, const char* what) {
  T v{};
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || p != s.data() + s.size())
    throw UsageError(std::string("invalid ") + what + ": '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split_commas(std::string_view s) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    const std::size_t c = s.find(',', pos);
    parts.push_back(s.substr(pos, c == s.npos ? s.npos : c - pos));
    if (c == s.npos) break;
    pos = c + 1;
  }
  return parts;
}

std::string dump(const nlohmann::json& j) {
  return j.dump(2, ' ', false, nlohmann::json::error_handler_t::replace);
}

MultiplicationTable table_from(const Config& c) {
  MultiplicationTable t = MultiplicationTable::build();
  if (c.fault.empty()) return t;
  const auto parts = split_commas(c.fault);
  if (parts.size() != 3) throw UsageError("--fault expects i,j,value");
  const int i = parse_number<int>(parts[0], "fault row");
  const int j = parse_number<int>(parts[1], "fault column");
  const int v = parse_number<int>(parts[2], "fault value");
  if (i < 0 || i > 9 || j < 0 || j > 9) throw UsageError("--fault cell must be in [0,9]x[0,9]");
  if (v < 0 || v > 81) throw UsageError("--fault value must be in [0,81]");
  return t.with_fault(static_cast<Digit>(i), static_cast<Digit>(j), v);
}

std::vector<ShapeSpec> shapes_from(const Config& c) {
  if (c.count == 0) throw UsageError("--count must be >= 1");
  if (c.shapes.empty()) return standard_shapes(c.count);
  try {
    return parse_shapes(c.shapes, c.count);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::string join_positions(const std::vector<std::size_t>& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  return s;
}

int cmd_mul(const Config& c, std::ostream& out) {
  DigitVector a, b;
  try {
    a = parse_decimal(c.left);
    b = parse_decimal(c.right);
  } catch (const ParseError& e) {
    throw UsageError(std::string("cannot parse operand: ") + e.what());
  }
  const std::string product = format_decimal(multiply(a, b));
  if (c.json)
    out << dump({{"left", format_decimal(a)}, {"right", format_decimal(b)}, {"product", product}}) << '\n';
  else
    out << product << '\n';
  return kOk;
}

int cmd_verify(const Config& c, std::ostream& out) {
  const MultiplicationTable table = table_from(c);
  ExperimentOptions opts;
  opts.threads = c.threads;
  opts.table = table;

  const GoldenReport golden = golden_check(table);
  const SweepReport sweep = oracle_sweep(c.max, opts);
  const std::size_t golden_ok = golden.results.size() - golden.failures();
  const bool ok = golden.passed() && sweep.mismatches == 0;

  if (c.json) {
    nlohmann::json g = nlohmann::json::array();
    for (const auto& r : golden.results)
      g.push_back({{"label", r.golden.label},
                   {"left", r.golden.left},
                   {"right", r.golden.right},
                   {"expected", r.golden.expected},
                   {"multiply", r.main_product},
                   {"oracle", r.oracle_product},
                   {"passed", r.passed}});
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& f : sweep.samples)
      samples.push_back({{"left", f.left}, {"right", f.right}, {"expected", f.expected}, {"actual", f.actual}});
    out << dump({{"golden", std::move(g)},
                 {"sweep",
                  {{"max", sweep.max_operand},
                   {"cases", sweep.cases},
                   {"mismatches", sweep.mismatches},
                   {"samples", std::move(samples)}}},
                 {"passed", ok}})
        << '\n';
  } else {
    for (const auto& r : golden.results) {
      out << "golden " << r.golden.label << ": " << r.golden.left << " x " << r.golden.right << " = "
          << r.golden.expected;
      if (r.passed)
        out << " ok\n";
      else
        out << " MISMATCH (multiply " << r.main_product << ", oracle " << r.oracle_product << ")\n";
    }
    out << "golden: " << golden_ok << "/" << golden.results.size() << " ok\n";
    for (const auto& f : sweep.samples)
      out << "MISMATCH " << f.left << " x " << f.right << ": expected " << f.expected << ", got " << f.actual
          << '\n';
    out << "sweep [0, " << sweep.max_operand << "]^2: " << (sweep.cases - sweep.mismatches) << "/" << sweep.cases
        << " ok\n";
  }
  return ok ? kOk : kCheckFailed;
}

int cmd_experiment(const Config& c, std::ostream& out) {
  const auto shapes = shapes_from(c);
  ExperimentOptions opts;
  opts.threads = c.threads;
  opts.table = table_from(c);
  const ExperimentReport report = run_experiment(shapes, c.seed, opts);
  const bool ok = report.total_matches() == report.total_tasks();

  if (c.json) {
    out << dump(to_json(report)) << '\n';
  } else {
    out << "seed " << report.seed << '\n';
    for (const auto& r : report.shapes) {
      out << r.shape.left_digits << "x" << r.shape.right_digits << ": " << r.matches << "/" << r.tasks_run
          << " ok, accuracy " << std::setprecision(6) << r.accuracy() << " (" << std::fixed
          << std::setprecision(3) << r.wall_time_s << " s)\n"
          << std::defaultfloat;
      for (const auto& f : r.failures)
        out << "  FAIL task " << f.task_index << ": " << f.left << " x " << f.right << " expected " << f.expected
            << ", got " << f.actual << '\n';
    }
    out << "overall: " << report.total_matches() << "/" << report.total_tasks() << " ok, accuracy "
        << std::setprecision(6) << report.overall_accuracy() << '\n';
  }
  return ok ? kOk : kCheckFailed;
}

int cmd_score(const Config& c, std::ostream& out) {
  std::ifstream in(c.task_file, std::ios::binary);
  if (!in) throw UsageError("cannot read task file '" + c.task_file + "'");
  const auto inputs = read_task_file(in);
  if (in.bad()) throw UsageError("error while reading task file '" + c.task_file + "'");
  const ScoreReport report = score_answers(inputs);

  if (c.json) {
    out << dump(to_json(report)) << '\n';
    return kOk;
  }
  for (const auto& t : report.tasks) {
    out << "line " << t.input.line << ": " << to_string(t.verdict);
    switch (t.verdict) {
      case Verdict::Correct:
        out << " " << t.input.left << " x " << t.input.right << " = " << *t.expected;
        break;
      case Verdict::Wrong:
        out << " " << t.input.left << " x " << t.input.right << ": claimed " << t.input.claimed << ", expected "
            << *t.expected << ", diff positions " << join_positions(t.diff->positions);
        if (t.diff->length_mismatch) out << ", length mismatch";
        break;
      case Verdict::Malformed:
        out << " (" << t.reason << ")";
        break;
    }
    out << '\n';
  }
  const auto& s = report.summary;
  out << "summary: " << s.total << " tasks, " << s.correct << " correct, " << s.wrong << " wrong, " << s.malformed
      << " malformed, accuracy ";
  if (s.accuracy)
    out << std::setprecision(6) << *s.accuracy << '\n';
  else
    out << "n/a\n";
  return kOk;
}

int cmd_bench(const Config& c, std::ostream& out, std::ostream& err) {
  TimingOptions opts;
  if (!c.sizes.empty()) {
    opts.sizes.clear();
    for (auto p : split_commas(c.sizes)) opts.sizes.push_back(parse_number<std::size_t>(p, "size"));
  }
  opts.repetitions = c.reps;
  opts.seed = c.seed;
  const auto band = split_commas(c.band);
  if (band.size() != 2) throw UsageError("--band expects lo,hi");
  const double lo = parse_number<double>(band[0], "band bound");
  const double hi = parse_number<double>(band[1], "band bound");
  if (lo > hi) throw UsageError("--band lower bound exceeds upper bound");

  TimingReport report;
  try {
    report = run_timing(opts);
  } catch (const ContractViolation& e) {
    throw UsageError(e.what());
  }
  for (const auto& w : report.warnings) err << "warning: " << w << '\n';
  const bool ok = report.slope_within(lo, hi);

  if (c.json) {
    nlohmann::json j = to_json(report);
    j["band"] = {lo, hi};
    j["passed"] = ok;
    out << dump(j) << '\n';
  } else {
    out << std::setw(8) << "digits" << std::setw(16) << "seconds/call" << std::setw(8) << "batch" << '\n';
    for (const auto& p : report.points) {
      out << std::setw(8) << p.digits << std::setw(16) << std::scientific << std::setprecision(4) << p.seconds
          << std::defaultfloat << std::setw(8) << p.batch << (p.dropped ? "  (dropped)" : "") << '\n';
    }
    out << "slope ";
    if (report.slope)
      out << std::fixed << std::setprecision(3) << *report.slope << std::defaultfloat;
    else
      out << "n/a";
    out << " (band [" << lo << ", " << hi << "]) " << (ok ? "ok" : "OUT OF BAND") << '\n';
  }
  return ok ? kOk : kCheckFailed;
}

int cmd_gen(const Config& c, std::ostream& out) {
  const auto shapes = shapes_from(c);
  for (std::size_t si = 0; si < shapes.size(); ++si)
    for (std::size_t i = 0; i < shapes[si].count; ++i) {
      const TaskRecord t = make_task(shapes[si], c.seed, si, i);
      out << format_decimal(t.left) << '\t' << format_decimal(t.right) << '\t' << format_decimal(t.expected)
          << '\n';
    }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Exact decimal multiplication through a digit-table partial-product matrix", "longmul"};
  app.require_subcommand(1);

  auto add_output = [&](CLI::App* sub) {
    sub->add_flag("--json", c.json, "Emit JSON");
    sub->add_option("--out", c.out_path, "Write output to this file instead of standard output");
  };
  auto add_fault = [&](CLI::App* sub) {
    sub->add_option("--fault", c.fault, "Corrupt one multiplication-table cell: i,j,value (testing aid)");
    sub->add_option("--threads", c.threads, "Worker threads (0 = all cores)");
  };

  auto* mul = app.add_subcommand("mul", "Multiply two non-negative decimal numerals");
  mul->add_option("left", c.left)->required();
  mul->add_option("right", c.right)->required();
  add_output(mul);

  auto* verify = app.add_subcommand("verify", "Golden products plus an exhaustive sweep against the oracle");
  verify->add_option("--max", c.max, "Sweep every pair in [0, max]^2")->capture_default_str();
  add_output(verify);
  add_fault(verify);

  auto* experiment = app.add_subcommand("experiment", "Randomized accuracy experiment over digit shapes");
  experiment->add_option("--shapes", c.shapes, "Shapes as LxR[,LxR...] (default: 3x3,4x4,5x5,3x4,3x5,4x5)");
  experiment->add_option("--count", c.count, "Tasks per shape")->capture_default_str();
  experiment->add_option("--seed", c.seed, "PRNG seed")->capture_default_str();
  add_output(experiment);
  add_fault(experiment);

  auto* score = app.add_subcommand("score", "Score claimed answers from a TSV task file");
  score->add_option("file", c.task_file, "Lines of left<TAB>right<TAB>claimed")->required();
  add_output(score);

  auto* bench = app.add_subcommand("bench", "Time multiply on n-digit operands and fit the log-log slope");
  bench->add_option("--sizes", c.sizes, "Digit counts n,... (default: 64,128,...,4096)");
  bench->add_option("--reps", c.reps, "Repetitions per size")->capture_default_str();
  bench->add_option("--seed", c.seed, "PRNG seed")->capture_default_str();
  bench->add_option("--band", c.band, "Accepted slope band lo,hi")->capture_default_str();
  add_output(bench);

  auto* gen = app.add_subcommand("gen", "Emit a task corpus as left<TAB>right<TAB>expected");
  gen->add_option("--shapes", c.shapes, "Shapes as LxR[,LxR...] (default: the six standard shapes)");
  gen->add_option("--count", c.count, "Tasks per shape")->capture_default_str();
  gen->add_option("--seed", c.seed, "PRNG seed")->capture_default_str();
  gen->add_option("--out", c.out_path, "Write output to this file instead of standard output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    std::ofstream file;
    std::ostringstream buffer;
    const bool to_file = !c.out_path.empty();
    std::ostream& sink = to_file ? static_cast<std::ostream&>(buffer) : out;

    int code = kOk;
    if (*mul) code = cmd_mul(c, sink);
    else if (*verify) code = cmd_verify(c, sink);
    else if (*experiment) code = cmd_experiment(c, sink);
    else if (*score) code = cmd_score(c, sink);
    else if (*bench) code = cmd_bench(c, sink, err);
    else if (*gen) code = cmd_gen(c, sink);

    if (to_file) {
      file.open(c.out_path, std::ios::binary | std::ios::trunc);
      if (!(file << buffer.str()) || !file.flush()) throw UsageError("cannot write '" + c.out_path + "'");
    }
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace longmul::cli
