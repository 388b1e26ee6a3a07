#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "facekit/answer_parse.hpp"
#include "facekit/batch.hpp"
#include "facekit/types.hpp"

namespace facekit {

/// One benchmark item joined with the raw model response and the answer
/// extracted from it.
struct EvalRecord {
    QAPair qa;
    std::string response_text;
    std::int64_t latency_ms = 0;
    std::string endpoint_id;
    int attempts = 1;
    ParsedAnswer parsed;
    std::string extra;

    void validate() const;
    bool operator==(const EvalRecord&) const = default;
};

struct EvalResult {
    std::vector<EvalRecord> records;
    bool aborted = false;
};

/// Sends each question verbatim as the user message with the image
/// attached, then parses the response per task kind. Items whose transport
/// fails for good become unparseable("transport") records rather than
/// holes, so one record always lines up with one input pair.
EvalResult run_benchmark(const std::vector<QAPair>& pairs, Endpoint& endpoint,
                         const BatchLimits& limits);

}  // namespace facekit
