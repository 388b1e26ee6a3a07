#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "facekit/schema.hpp"
#include "facekit/types.hpp"

namespace facekit {

/// Full instruction text sent to the annotation endpoint: role line,
/// requirements A-E, the bullet-format example and the numbered attribute
/// list with candidate values.
std::string render_annotation_prompt(const AttributeSchema& schema);

/// Raised when a response contains no parseable `* Name: Value` line.
/// Carries the original text so failures can be audited verbatim.
class AnnotationParseError : public std::runtime_error {
  public:
    explicit AnnotationParseError(std::string original)
        : std::runtime_error("no attribute lines found in annotation response"),
          original_(std::move(original)) {}
    const std::string& original_text() const { return original_; }

  private:
    std::string original_;
};

struct AnnotationParse {
    std::vector<PersonAnnotation> persons;
    /// Prose that was not attached to any one person.
    std::string image_caption;
};

/// Extracts person blocks from free-form annotation text: position markers,
/// `* Name: Value` bullets (names normalized against the schema where they
/// match) and the surrounding caption prose. Persons with no prose of their
/// own inherit the image-level caption.
AnnotationParse parse_annotation_response(const std::string& text, const AttributeSchema& schema);

/// Inverse of the parser for well-formed inputs; used by the mock endpoint
/// and the render/parse round-trip checks. Attributes are emitted in schema
/// order when a schema is given, map order otherwise.
std::string serialize_annotation_response(const std::vector<PersonAnnotation>& persons,
                                          const AttributeSchema* schema = nullptr);

}  // namespace facekit
