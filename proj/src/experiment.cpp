#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "longmul/harness.hpp"
#include "longmul/oracle.hpp"

namespace longmul {

namespace {

using Clock = std::chrono::steady_clock;

void check_shape(const ShapeSpec& s) {
  if (s.left_digits == 0 || s.right_digits == 0)
    throw ContractViolation("shape digit counts must be >= 1");
  if (s.count == 0) throw ContractViolation("shape task count must be >= 1");
}

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Splits [0, n) into contiguous chunks, one per worker, and runs
// fn(chunk_index, begin, end) for each. Chunk order follows index order so
// callers can merge per-chunk results deterministically.
template <class Fn>
void for_chunks(std::uint64_t n, unsigned threads, Fn&& fn) {
  const std::uint64_t workers = std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, n));
  if (workers == 1) {
    fn(std::size_t{0}, std::uint64_t{0}, n);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t begin = n * w / workers;
    const std::uint64_t end = n * (w + 1) / workers;
    pool.emplace_back([&fn, w, begin, end] { fn(static_cast<std::size_t>(w), begin, end); });
  }
}

struct ChunkTally {
  std::uint64_t matches = 0;
  std::vector<TaskFailure> failures;
};

void merge_failures(std::vector<ChunkTally>& tallies, std::size_t limit, std::vector<TaskFailure>& out) {
  for (auto& t : tallies)
    for (auto& f : t.failures) {
      if (out.size() >= limit) return;
      out.push_back(std::move(f));
    }
}

}  // namespace

std::vector<ShapeSpec> standard_shapes(std::size_t count) {
  return {{3, 3, count}, {4, 4, count}, {5, 5, count}, {3, 4, count}, {3, 5, count}, {4, 5, count}};
}

std::vector<ShapeSpec> parse_shapes(std::string_view text, std::size_t count) {
  auto parse_count = [&](std::string_view part) {
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc{} || p != part.data() + part.size() || v == 0)
      throw std::invalid_argument("invalid digit count '" + std::string(part) + "' in shape list");
    return v;
  };

  std::vector<ShapeSpec> shapes;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view item = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    const std::size_t x = item.find_first_of("xX");
    if (x == std::string_view::npos)
      throw std::invalid_argument("shape '" + std::string(item) + "' is not of the form LxR");
    shapes.push_back({parse_count(item.substr(0, x)), parse_count(item.substr(x + 1)), count});
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return shapes;
}

DigitVector random_operand(SplitMix64& rng, std::size_t digits) {
  if (digits == 0) throw ContractViolation("operand needs at least one digit");
  std::vector<Digit> d(digits);
  d[0] = static_cast<Digit>(rng.next_digit(1, 9));
  for (std::size_t i = 1; i < digits; ++i) d[i] = static_cast<Digit>(rng.next_digit(0, 9));
  return DigitVector::from_digits(std::move(d));
}

TaskRecord make_task(const ShapeSpec& shape, std::uint64_t seed, std::size_t shape_index,
                     std::size_t task_index) {
  check_shape(shape);
  SplitMix64 rng(task_stream_seed(seed, shape_index, task_index));
  TaskRecord t;
  t.left = random_operand(rng, shape.left_digits);
  t.right = random_operand(rng, shape.right_digits);
  t.expected = oracle_multiply(t.left, t.right);
  return t;
}

std::vector<TaskRecord> generate_tasks(const ShapeSpec& shape, std::uint64_t seed, std::size_t shape_index) {
  check_shape(shape);
  std::vector<TaskRecord> tasks;
  tasks.reserve(shape.count);
  for (std::size_t i = 0; i < shape.count; ++i) tasks.push_back(make_task(shape, seed, shape_index, i));
  return tasks;
}

std::size_t ExperimentReport::total_tasks() const {
  return std::accumulate(shapes.begin(), shapes.end(), std::size_t{0},
                         [](std::size_t s, const ShapeResult& r) { return s + r.tasks_run; });
}

std::size_t ExperimentReport::total_matches() const {
  return std::accumulate(shapes.begin(), shapes.end(), std::size_t{0},
                         [](std::size_t s, const ShapeResult& r) { return s + r.matches; });
}

double ExperimentReport::overall_accuracy() const {
  const std::size_t n = total_tasks();
  return n == 0 ? 0.0 : double(total_matches()) / double(n);
}

ExperimentReport run_experiment(std::span<const ShapeSpec> shapes, std::uint64_t seed,
                                const ExperimentOptions& options) {
  if (shapes.empty()) throw ContractViolation("experiment needs at least one shape");
  for (const auto& s : shapes) check_shape(s);

  const unsigned threads = resolve_threads(options.threads);
  ExperimentReport report;
  report.seed = seed;
  const auto start = Clock::now();

  for (std::size_t si = 0; si < shapes.size(); ++si) {
    const ShapeSpec& shape = shapes[si];
    const auto shape_start = Clock::now();
    std::vector<ChunkTally> tallies(std::min<std::uint64_t>(threads, shape.count));

    for_chunks(shape.count, threads, [&](std::size_t chunk, std::uint64_t begin, std::uint64_t end) {
      ChunkTally& tally = tallies[chunk];
      for (std::uint64_t i = begin; i < end; ++i) {
        const TaskRecord t = make_task(shape, seed, si, i);
        const DigitVector got = multiply(t.left, t.right, options.table);
        if (got == t.expected) {
          ++tally.matches;
        } else if (tally.failures.size() < options.max_failures) {
          tally.failures.push_back({static_cast<std::size_t>(i), format_decimal(t.left), format_decimal(t.right),
                                    format_decimal(t.expected), format_decimal(got)});
        }
      }
    });

    ShapeResult r;
    r.shape = shape;
    r.tasks_run = shape.count;
    for (const auto& t : tallies) r.matches += t.matches;
    merge_failures(tallies, options.max_failures, r.failures);
    r.wall_time_s = std::chrono::duration<double>(Clock::now() - shape_start).count();
    report.shapes.push_back(std::move(r));
  }
  report.wall_time_s = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

namespace {

nlohmann::json failure_json(const TaskFailure& f) {
  return {{"task_index", f.task_index}, {"left", f.left}, {"right", f.right},
          {"expected", f.expected},     {"actual", f.actual}};
}

}  // namespace

nlohmann::json to_json(const ExperimentReport& report, bool include_timing) {
  nlohmann::json shapes = nlohmann::json::array();
  nlohmann::json failures = nlohmann::json::array();
  nlohmann::json per_shape_time = nlohmann::json::array();
  for (const auto& r : report.shapes) {
    shapes.push_back({{"left_digits", r.shape.left_digits},
                      {"right_digits", r.shape.right_digits},
                      {"count", r.tasks_run},
                      {"matches", r.matches},
                      {"accuracy", r.accuracy()}});
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& f : r.failures) samples.push_back(failure_json(f));
    failures.push_back({{"left_digits", r.shape.left_digits},
                        {"right_digits", r.shape.right_digits},
                        {"samples", std::move(samples)}});
    per_shape_time.push_back(r.wall_time_s);
  }
  nlohmann::json j = {{"seed", report.seed},
                      {"shapes", std::move(shapes)},
                      {"total_tasks", report.total_tasks()},
                      {"overall_accuracy", report.overall_accuracy()},
                      {"failures", std::move(failures)}};
  if (include_timing)
    j["timing"] = {{"wall_time_s", report.wall_time_s}, {"shape_wall_time_s", std::move(per_shape_time)}};
  return j;
}

SweepReport oracle_sweep(std::uint64_t max_operand, const ExperimentOptions& options) {
  const std::uint64_t side = max_operand + 1;
  const std::uint64_t cases = side * side;
  const unsigned threads = resolve_threads(options.threads);
  std::vector<ChunkTally> tallies(std::min<std::uint64_t>(threads, cases));

  // Operands are parsed once; index k covers (x, y) = (k / side, k % side).
  std::vector<DigitVector> operands;
  operands.reserve(side);
  for (std::uint64_t v = 0; v < side; ++v) operands.push_back(parse_decimal(std::to_string(v)));

  for_chunks(cases, threads, [&](std::size_t chunk, std::uint64_t begin, std::uint64_t end) {
    ChunkTally& tally = tallies[chunk];
    for (std::uint64_t k = begin; k < end; ++k) {
      const DigitVector& x = operands[k / side];
      const DigitVector& y = operands[k % side];
      const DigitVector got = multiply(x, y, options.table);
      const DigitVector want = oracle_multiply(x, y);
      if (got == want) {
        ++tally.matches;
      } else if (tally.failures.size() < options.max_failures) {
        tally.failures.push_back({static_cast<std::size_t>(k), format_decimal(x), format_decimal(y),
                                  format_decimal(want), format_decimal(got)});
      }
    }
  });

  SweepReport report;
  report.max_operand = max_operand;
  report.cases = cases;
  std::uint64_t matches = 0;
  for (const auto& t : tallies) matches += t.matches;
  report.mismatches = cases - matches;
  merge_failures(tallies, options.max_failures, report.samples);
  return report;
}

}  // namespace longmul
