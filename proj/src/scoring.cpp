#include <algorithm>
#include <istream>

#include "longmul/harness.hpp"
#include "longmul/oracle.hpp"

namespace longmul {

DigitDiff digit_diff(const DigitVector& correct, const DigitVector& claimed) {
  DigitDiff diff;
  diff.length_mismatch = correct.size() != claimed.size();
  const std::size_t width = std::max(correct.size(), claimed.size());
  const std::size_t pad_c = width - correct.size();
  const std::size_t pad_k = width - claimed.size();
  for (std::size_t i = 0; i < width; ++i) {
    const Digit c = i < pad_c ? 0 : correct[i - pad_c];
    const Digit k = i < pad_k ? 0 : claimed[i - pad_k];
    if (c != k) diff.positions.push_back(i);
  }
  return diff;
}

std::vector<ScoreInput> read_task_file(std::istream& in) {
  std::vector<ScoreInput> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;

    std::vector<std::string> fields;
    std::size_t pos = 0;
    while (true) {
      const std::size_t tab = line.find('\t', pos);
      fields.push_back(line.substr(pos, tab == std::string::npos ? std::string::npos : tab - pos));
      if (tab == std::string::npos) break;
      pos = tab + 1;
    }

    ScoreInput s;
    s.line = number;
    if (fields.size() == 3) {
      s.left = std::move(fields[0]);
      s.right = std::move(fields[1]);
      s.claimed = std::move(fields[2]);
    } else {
      s.field_error = "expected 3 tab-separated fields, found " + std::to_string(fields.size());
      if (!fields.empty()) s.left = fields[0];
      if (fields.size() > 1) s.right = fields[1];
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Correct: return "OK";
    case Verdict::Wrong: return "WRONG";
    case Verdict::Malformed: return "MALFORMED";
  }
  return "?";
}

namespace {

ScoredTask score_one(const ScoreInput& in) {
  ScoredTask t;
  t.input = in;
  if (!in.field_error.empty()) {
    t.reason = in.field_error;
    return t;
  }

  DigitVector left, right, claimed;
  try {
    left = parse_decimal(in.left);
    right = parse_decimal(in.right);
  } catch (const ParseError& e) {
    t.reason = std::string("operand: ") + e.what();
    return t;
  }
  const DigitVector expected = oracle_multiply(left, right);
  t.expected = format_decimal(expected);
  try {
    claimed = parse_decimal(in.claimed);
  } catch (const ParseError& e) {
    t.reason = std::string("claimed answer: ") + e.what();
    return t;
  }

  if (claimed == expected) {
    t.verdict = Verdict::Correct;
  } else {
    t.verdict = Verdict::Wrong;
    t.diff = digit_diff(expected, claimed);
  }
  return t;
}

}  // namespace

ScoreReport score_answers(std::span<const ScoreInput> inputs) {
  ScoreReport report;
  for (const auto& in : inputs) {
    ScoredTask t = score_one(in);
    switch (t.verdict) {
      case Verdict::Correct: ++report.summary.correct; break;
      case Verdict::Wrong: ++report.summary.wrong; break;
      case Verdict::Malformed: ++report.summary.malformed; break;
    }
    report.tasks.push_back(std::move(t));
  }
  report.summary.total = report.tasks.size();
  if (report.summary.total > 0)
    report.summary.accuracy = double(report.summary.correct) / double(report.summary.total);
  return report;
}

ScoreReport score_answers(std::span<const TaskRecord> records) {
  std::vector<ScoreInput> inputs;
  inputs.reserve(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    const TaskRecord& r = records[i];
    if (!r.claimed) throw ContractViolation("task record " + std::to_string(i) + " has no claimed answer");
    inputs.push_back({i + 1, format_decimal(r.left), format_decimal(r.right), *r.claimed, {}});
  }
  return score_answers(inputs);
}

nlohmann::json to_json(const ScoreReport& report) {
  nlohmann::json tasks = nlohmann::json::array();
  for (const auto& t : report.tasks) {
    nlohmann::json j = {{"line", t.input.line},
                        {"left", t.input.left},
                        {"right", t.input.right},
                        {"claimed", t.input.claimed},
                        {"verdict", std::string(to_string(t.verdict))},
                        {"expected", t.expected ? nlohmann::json(*t.expected) : nlohmann::json(nullptr)}};
    if (t.diff) {
      j["diff_positions"] = t.diff->positions;
      j["length_mismatch"] = t.diff->length_mismatch;
    } else {
      j["diff_positions"] = nlohmann::json::array();
      j["length_mismatch"] = false;
    }
    j["reason"] = t.reason;
    tasks.push_back(std::move(j));
  }
  const auto& s = report.summary;
  return {{"tasks", std::move(tasks)},
          {"summary",
           {{"total", s.total},
            {"correct", s.correct},
            {"wrong", s.wrong},
            {"malformed", s.malformed},
            {"accuracy", s.accuracy ? nlohmann::json(*s.accuracy) : nlohmann::json(nullptr)}}}};
}

}  // namespace longmul
