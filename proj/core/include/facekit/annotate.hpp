#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "facekit/batch.hpp"
#include "facekit/cleaning.hpp"
#include "facekit/schema.hpp"
#include "facekit/types.hpp"

namespace facekit {

enum class AnnotateFailureReason { transport, parse, cleaned_empty };

std::string_view to_string(AnnotateFailureReason r);
AnnotateFailureReason annotate_failure_reason_from_string(std::string_view s);

/// Written when an image yields no usable annotation; carries the input
/// ref so failed images can be re-fed directly.
struct FailureRecord {
    FaceImageRef image;
    AnnotateFailureReason reason = AnnotateFailureReason::transport;
    std::string detail;
    int attempts = 1;
    std::string extra;

    void validate() const;
    bool operator==(const FailureRecord&) const = default;
};

struct AnnotateOptions {
    /// Apply clean_labels to parsed persons; off writes raw parses.
    bool clean = true;
    /// Send file contents base64-inline instead of the locator.
    bool inline_images = false;
    CleaningConfig cleaning;
};

struct AnnotateResult {
    /// Kept annotations, grouped per image in input order.
    std::vector<PersonAnnotation> annotations;
    std::vector<FailureRecord> failures;
    /// Verbatim endpoint output for every answered image, input order.
    std::vector<RawAnnotationResponse> raw;
    std::vector<DropRecord> drops;
    bool aborted = false;
    std::size_t processed = 0;
};

/// Renders the annotation prompt once, queries the endpoint per image and
/// parses + cleans each response. Every input ends up either in
/// `annotations` or in `failures`; order follows the input regardless of
/// completion order.
AnnotateResult annotate_batch(const std::vector<FaceImageRef>& images, Endpoint& endpoint,
                              const AttributeSchema& schema, const BatchLimits& limits,
                              const AnnotateOptions& options = {});

}  // namespace facekit
