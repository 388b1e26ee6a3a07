#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "facekit/eval.hpp"

namespace facekit {

/// Scores for one benchmark task (grouped by QAPair.track, falling back to
/// the task kind's name). Accuracy counts unparseable responses as
/// incorrect; MAE and F1 are computed over parsed items only.
struct TaskMetrics {
    std::string name;
    TaskKind kind = TaskKind::yes_no;
    std::size_t n = 0;
    std::size_t n_parsed = 0;
    std::size_t n_correct = 0;
    double accuracy = 0.0;
    double parse_rate = 0.0;
    std::optional<double> mae;        // age tasks
    std::size_t mae_excluded = 0;     // unparseable age items left out of MAE
    std::optional<double> f1;         // yes_no tasks, positive class "Yes"
    std::optional<double> precision;
    std::optional<double> recall;
};

struct MetricsReport {
    std::vector<TaskMetrics> tasks;  // sorted by name
    // Overall micro summary; description tasks are listed but excluded here
    // because they are not auto-scored.
    std::size_t n = 0;
    std::size_t n_parsed = 0;
    std::size_t n_correct = 0;
    double accuracy = 0.0;
    double parse_rate = 0.0;
    std::string endpoint_id;
    std::uint64_t seed = 0;
    std::string timestamp;

    const TaskMetrics* find_task(const std::string& name) const;
};

bool answer_correct(const QAPair& qa, const ParsedAnswer& parsed);

/// Single-pass fold over the records. Throws ValidationError on an empty
/// record set.
MetricsReport score(const std::vector<EvalRecord>& records);

}  // namespace facekit
