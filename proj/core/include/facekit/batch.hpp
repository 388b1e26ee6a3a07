#pragma once

#include <cstdint>
#include <vector>

#include "facekit/endpoint.hpp"

namespace facekit {

struct BatchLimits {
    int max_concurrency = 4;
    /// Additional attempts after the first; only retryable errors retry.
    int max_retries = 2;
    /// Requests per second across all workers; 0 disables the cap.
    double qps_cap = 0.0;
    int backoff_base_ms = 200;
    int backoff_cap_ms = 5000;
    /// Abort once this many consecutive inputs (in input order) end in a
    /// final failure. 0 disables aborting.
    int abort_after_consecutive_failures = 10;
};

struct BatchItemResult {
    bool failed = false;
    EndpointResponse response;  // valid when !failed
    EndpointError error;        // valid when failed
    int attempts = 1;
};

/// Ordered results for the processed prefix of the input. When `aborted`
/// is set the batch stopped after a run of consecutive final failures and
/// `results` holds everything up to and including that run.
struct BatchOutcome {
    std::vector<BatchItemResult> results;
    bool aborted = false;
};

/// Executes the requests with at most `max_concurrency` in flight.
/// Results are indexed by input position, so the outcome is a pure
/// function of (requests, endpoint behaviour, max_retries) and never of
/// scheduling order.
BatchOutcome run_endpoint_batch(const std::vector<EndpointRequest>& requests, Endpoint& endpoint,
                                const BatchLimits& limits);

}  // namespace facekit
