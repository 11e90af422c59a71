#include <algorithm>
#include <cmath>

#include "longmul/harness.hpp"

namespace longmul {

namespace {

using Clock = std::chrono::steady_clock;

// Defeats dead-code elimination of the timed call.
volatile std::size_t g_sink = 0;

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

void check_options(const TimingOptions& o) {
  if (o.sizes.size() < 2) throw ContractViolation("slope fit needs at least two sizes");
  for (std::size_t i = 0; i < o.sizes.size(); ++i) {
    if (o.sizes[i] < 8) throw ContractViolation("timing sizes must be >= 8 digits");
    if (i > 0 && o.sizes[i] <= o.sizes[i - 1]) throw ContractViolation("timing sizes must be strictly increasing");
  }
  if (o.repetitions < 3) throw ContractViolation("timing needs at least 3 repetitions");
  if (o.max_batch == 0) throw ContractViolation("max_batch must be >= 1");
}

}  // namespace

std::optional<double> fit_loglog_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) return std::nullopt;
  const double n = double(x.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += std::log(x[i]);
    sy += std::log(y[i]);
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(y[i]) - my);
  }
  if (sxx == 0.0) return std::nullopt;
  return sxy / sxx;
}

std::chrono::nanoseconds measured_clock_resolution() {
  auto best = std::chrono::nanoseconds::max();
  for (int trial = 0; trial < 200; ++trial) {
    const auto t0 = Clock::now();
    auto t1 = Clock::now();
    while (t1 == t0) t1 = Clock::now();
    best = std::min(best, std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0));
  }
  return std::max(best, std::chrono::nanoseconds(1));
}

TimingReport run_timing(const TimingOptions& options, const Multiplier& multiplier) {
  check_options(options);
  const Multiplier mul = multiplier ? multiplier : Multiplier([](const DigitVector& a, const DigitVector& b) {
    return multiply(a, b);
  });
  // A sample shorter than this many clock ticks is too coarse to trust.
  const auto floor = measured_clock_resolution() * 100;

  TimingReport report;
  std::vector<double> xs, ys;
  for (std::size_t si = 0; si < options.sizes.size(); ++si) {
    const std::size_t n = options.sizes[si];
    std::vector<double> per_call;
    std::vector<double> sample_totals;
    std::size_t batch = 1;

    for (std::size_t rep = 0; rep < options.repetitions; ++rep) {
      SplitMix64 rng(task_stream_seed(options.seed, si, rep));
      const DigitVector a = random_operand(rng, n);
      const DigitVector b = random_operand(rng, n);

      // Batch size is calibrated on the first repetition and then held fixed.
      Clock::duration elapsed{};
      while (true) {
        const auto t0 = Clock::now();
        for (std::size_t k = 0; k < batch; ++k) g_sink = g_sink + mul(a, b).size();
        elapsed = Clock::now() - t0;
        if (rep > 0 || elapsed >= options.min_sample || batch >= options.max_batch) break;
        batch = std::min(batch * 2, options.max_batch);
      }
      const double secs = std::chrono::duration<double>(elapsed).count();
      sample_totals.push_back(secs);
      per_call.push_back(secs / double(batch));
    }

    TimingPoint p{n, median(per_call), batch, false};
    if (median(sample_totals) < std::chrono::duration<double>(floor).count() || p.seconds <= 0.0) {
      p.dropped = true;
      report.warnings.push_back("size " + std::to_string(n) +
                                ": samples too short for the clock resolution; dropped from the fit");
    } else {
      xs.push_back(double(n));
      ys.push_back(p.seconds);
    }
    report.points.push_back(p);
  }
  report.slope = fit_loglog_slope(xs, ys);
  if (!report.slope) report.warnings.push_back("fewer than two usable sizes; no slope fitted");
  return report;
}

nlohmann::json to_json(const TimingReport& report) {
  nlohmann::json points = nlohmann::json::array();
  for (const auto& p : report.points)
    points.push_back({{"digits", p.digits}, {"seconds", p.seconds}, {"batch", p.batch}, {"dropped", p.dropped}});
  return {{"points", std::move(points)},
          {"slope", report.slope ? nlohmann::json(*report.slope) : nlohmann::json(nullptr)},
          {"warnings", report.warnings}};
}

}  // namespace longmul
