#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "facekit/schema.hpp"

namespace facekit {

/// Thrown whenever a record violates a schema invariant. `field` names the
/// offending field when one can be pinpointed.
class ValidationError : public std::runtime_error {
  public:
    explicit ValidationError(std::string message, std::string field = "")
        : std::runtime_error(std::move(message)), field_(std::move(field)) {}
    const std::string& field() const { return field_; }

  private:
    std::string field_;
};

enum class SourceDataset {
    laion_face,
    agedb,
    rafdb,
    emotionet,
    lfwa,
    utkface,
    affectnet,
    biwi,
    celeba,
    zero_shot,
    other,
};

std::string_view to_string(SourceDataset d);
SourceDataset source_dataset_from_string(std::string_view s);

/// Opaque pointer to an image: the toolkit never decodes pixels.
struct FaceImageRef {
    std::string id;
    std::string uri;
    SourceDataset source_dataset = SourceDataset::other;

    void validate() const;
    bool operator==(const FaceImageRef&) const = default;
};

enum class TaskKind { age, yes_no, multiple_choice, description };

std::string_view to_string(TaskKind t);
TaskKind task_kind_from_string(std::string_view s);

/// Tagged union for gold answers: a number (age), yes/no, an option letter,
/// or free text (description gold / caption).
struct GoldLabel {
    enum class Kind { number, boolean, letter, text };

    Kind kind = Kind::text;
    int number = 0;
    bool boolean = false;
    char letter = 'A';
    std::string text;

    static GoldLabel make_number(int n) { return {Kind::number, n, false, 'A', ""}; }
    static GoldLabel make_boolean(bool b) { return {Kind::boolean, 0, b, 'A', ""}; }
    static GoldLabel make_letter(char c) { return {Kind::letter, 0, false, c, ""}; }
    static GoldLabel make_text(std::string t) { return {Kind::text, 0, false, 'A', std::move(t)}; }

    bool operator==(const GoldLabel&) const = default;
};

struct Option {
    char letter = 'A';
    std::string text;
    bool operator==(const Option&) const = default;
};

/// One image-question-answer triple.
struct QAPair {
    std::string id;
    FaceImageRef image;
    TaskKind task = TaskKind::yes_no;
    std::string question;
    std::vector<Option> options;  // multiple_choice only
    GoldLabel gold;
    std::string aux_description;  // attribute/AU explanation embedded in the question
    std::string track;            // benchmark grouping key ("expression", "gender", ...)

    void validate() const;
    bool operator==(const QAPair&) const = default;
};

/// One person extracted from an annotation response.
struct PersonAnnotation {
    FaceImageRef image;
    int person_index = 0;
    std::string position;
    std::string caption;
    std::map<std::string, std::string> attributes;

    void validate() const;
    bool operator==(const PersonAnnotation&) const = default;
};

/// Verbatim annotation-endpoint output, kept for audits and re-cleaning.
struct RawAnnotationResponse {
    std::string image_id;
    std::string response_text;
    std::int64_t latency_ms = 0;
    std::string endpoint_id;

    void validate() const;
    bool operator==(const RawAnnotationResponse&) const = default;
};

}  // namespace facekit
