#pragma once

// Accuracy experiments, answer scoring and the runtime scaling benchmark.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "longmul/digit_core.hpp"
#include "longmul/splitmix64.hpp"

namespace longmul {

// ---------------------------------------------------------------------------
// Task generation

struct ShapeSpec {
  std::size_t left_digits = 1;
  std::size_t right_digits = 1;
  std::size_t count = 1;

  friend bool operator==(const ShapeSpec&, const ShapeSpec&) = default;
};

/// 3x3, 4x4, 5x5, 3x4, 3x5, 4x5, each with `count` tasks.
std::vector<ShapeSpec> standard_shapes(std::size_t count = 200'000);

/// Parses "LxR[,LxR...]" into shapes carrying `count`. Throws
/// std::invalid_argument on bad syntax or a zero digit count.
std::vector<ShapeSpec> parse_shapes(std::string_view text, std::size_t count);

struct TaskRecord {
  DigitVector left;
  DigitVector right;
  DigitVector expected;
  /// Externally supplied answer, verbatim; may be malformed.
  std::optional<std::string> claimed;
};

/// Uniform operand of exactly `digits` digits: leading digit in [1, 9], the
/// rest in [0, 9], one draw per digit.
DigitVector random_operand(SplitMix64& rng, std::size_t digits);

/// Task `task_index` of shape `shape_index`. Left operand digits are drawn
/// first, then right, from the stream seeded by task_stream_seed().
TaskRecord make_task(const ShapeSpec& shape, std::uint64_t seed, std::size_t shape_index,
                     std::size_t task_index);

std::vector<TaskRecord> generate_tasks(const ShapeSpec& shape, std::uint64_t seed,
                                       std::size_t shape_index = 0);

// ---------------------------------------------------------------------------
// Experiments

struct TaskFailure {
  std::size_t task_index = 0;
  std::string left;
  std::string right;
  std::string expected;
  std::string actual;
};

struct ShapeResult {
  ShapeSpec shape;
  std::size_t tasks_run = 0;
  std::size_t matches = 0;
  double wall_time_s = 0.0;
  /// Lowest task indices that failed, at most ExperimentOptions::max_failures.
  std::vector<TaskFailure> failures;

  double accuracy() const { return tasks_run == 0 ? 0.0 : double(matches) / double(tasks_run); }
};

struct ExperimentReport {
  std::uint64_t seed = 0;
  std::vector<ShapeResult> shapes;
  double wall_time_s = 0.0;

  std::size_t total_tasks() const;
  std::size_t total_matches() const;
  double overall_accuracy() const;
};

struct ExperimentOptions {
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
  std::size_t max_failures = 10;
  MultiplicationTable table = MultiplicationTable::build();
};

ExperimentReport run_experiment(std::span<const ShapeSpec> shapes, std::uint64_t seed,
                                const ExperimentOptions& options = {});

/// Report JSON: seed, shapes[], overall_accuracy, failures[], and `timing`
/// (wall-clock seconds) unless `include_timing` is false.
nlohmann::json to_json(const ExperimentReport& report, bool include_timing = true);

// ---------------------------------------------------------------------------
// Exhaustive sweep against the oracle

struct SweepReport {
  std::uint64_t max_operand = 0;
  std::uint64_t cases = 0;
  std::uint64_t mismatches = 0;
  std::vector<TaskFailure> samples;
};

/// multiply vs oracle_multiply for every (x, y) in [0, max_operand]^2.
SweepReport oracle_sweep(std::uint64_t max_operand, const ExperimentOptions& options = {});

// ---------------------------------------------------------------------------
// Digit diffs and scoring

struct DigitDiff {
  /// 0-based indices from the most significant digit after left-padding the
  /// shorter numeral with zeros. Ascending.
  std::vector<std::size_t> positions;
  bool length_mismatch = false;

  bool empty() const { return positions.empty() && !length_mismatch; }
  friend bool operator==(const DigitDiff&, const DigitDiff&) = default;
};

DigitDiff digit_diff(const DigitVector& correct, const DigitVector& claimed);

/// One line of a task file, split but not yet validated.
struct ScoreInput {
  std::size_t line = 0;
  std::string left;
  std::string right;
  std::string claimed;
  /// Non-empty when the line did not split into exactly three fields.
  std::string field_error;
};

/// Reads `left TAB right TAB claimed` lines. Blank lines and lines starting
/// with '#' are skipped; a trailing CR is dropped.
std::vector<ScoreInput> read_task_file(std::istream& in);

enum class Verdict { Correct, Wrong, Malformed };

std::string_view to_string(Verdict v);

struct ScoredTask {
  ScoreInput input;
  Verdict verdict = Verdict::Malformed;
  std::optional<std::string> expected;
  std::optional<DigitDiff> diff;
  std::string reason;
};

struct ScoreSummary {
  std::size_t total = 0;
  std::size_t correct = 0;
  std::size_t wrong = 0;
  std::size_t malformed = 0;
  /// correct / total; empty when there are no tasks.
  std::optional<double> accuracy;
};

struct ScoreReport {
  std::vector<ScoredTask> tasks;
  ScoreSummary summary;
};

ScoreReport score_answers(std::span<const ScoreInput> inputs);

/// Every record must carry a claimed answer (ContractViolation otherwise).
ScoreReport score_answers(std::span<const TaskRecord> records);

nlohmann::json to_json(const ScoreReport& report);

// ---------------------------------------------------------------------------
// Runtime scaling

using Multiplier = std::function<DigitVector(const DigitVector&, const DigitVector&)>;

struct TimingOptions {
  /// Strictly increasing, each >= 8, at least two entries.
  std::vector<std::size_t> sizes{64, 128, 256, 512, 1024, 2048, 4096};
  /// >= 3; one fresh operand pair per repetition.
  std::size_t repetitions = 5;
  std::uint64_t seed = 1;
  /// Each sample repeats the call until it lasts at least this long, up to
  /// max_batch calls.
  std::chrono::nanoseconds min_sample{std::chrono::milliseconds(2)};
  std::size_t max_batch = 1 << 16;
};

struct TimingPoint {
  std::size_t digits = 0;
  /// Median seconds per call across repetitions.
  double seconds = 0.0;
  std::size_t batch = 1;
  bool dropped = false;
};

struct TimingReport {
  std::vector<TimingPoint> points;
  /// Least-squares slope of log(seconds) on log(digits) over kept points;
  /// empty when fewer than two points survive.
  std::optional<double> slope;
  std::vector<std::string> warnings;

  bool slope_within(double lo, double hi) const { return slope && *slope >= lo && *slope <= hi; }
};

/// Least-squares slope of log(y) on log(x). Empty for < 2 points or when
/// all x coincide.
std::optional<double> fit_loglog_slope(std::span<const double> x, std::span<const double> y);

/// Smallest nonzero step observed on the steady clock.
std::chrono::nanoseconds measured_clock_resolution();

TimingReport run_timing(const TimingOptions& options, const Multiplier& multiplier = nullptr);

nlohmann::json to_json(const TimingReport& report);

}  // namespace longmul
