#include "facekit/types.hpp"

#include <array>

namespace facekit {

namespace {

constexpr std::array<std::string_view, 11> kDatasetNames = {
    "laion_face", "agedb",     "rafdb", "emotionet", "lfwa",  "utkface",
    "affectnet",  "biwi",      "celeba", "zero_shot", "other",
};

constexpr std::array<std::string_view, 4> kTaskNames = {
    "age", "yes_no", "multiple_choice", "description"};

}  // namespace

std::string_view to_string(SourceDataset d) {
    return kDatasetNames[static_cast<std::size_t>(d)];
}

SourceDataset source_dataset_from_string(std::string_view s) {
    for (std::size_t i = 0; i < kDatasetNames.size(); ++i) {
        if (kDatasetNames[i] == s) return static_cast<SourceDataset>(i);
    }
    throw ValidationError("unknown source_dataset: " + std::string(s), "source_dataset");
}

std::string_view to_string(TaskKind t) { return kTaskNames[static_cast<std::size_t>(t)]; }

TaskKind task_kind_from_string(std::string_view s) {
    for (std::size_t i = 0; i < kTaskNames.size(); ++i) {
        if (kTaskNames[i] == s) return static_cast<TaskKind>(i);
    }
    throw ValidationError("unknown task: " + std::string(s), "task");
}

void FaceImageRef::validate() const {
    if (id.empty()) throw ValidationError("image id must be non-empty", "id");
}

void QAPair::validate() const {
    if (id.empty()) throw ValidationError("qa id must be non-empty", "id");
    image.validate();
    if (question.empty()) throw ValidationError("question must be non-empty", "question");

    const bool mc = task == TaskKind::multiple_choice;
    if (mc && options.empty())
        throw ValidationError("multiple_choice requires options", "options");
    if (!mc && !options.empty())
        throw ValidationError("options present but task is " + std::string(to_string(task)),
                              "options");
    for (std::size_t i = 0; i < options.size(); ++i) {
        if (options[i].letter != static_cast<char>('A' + i))
            throw ValidationError("option letters must run consecutively from 'A'", "options");
        if (options[i].text.empty())
            throw ValidationError("option text must be non-empty", "options");
    }

    switch (task) {
        case TaskKind::age:
            if (gold.kind != GoldLabel::Kind::number)
                throw ValidationError("age task requires a number gold", "gold");
            if (gold.number < 1 || gold.number > 100)
                throw ValidationError("age gold must lie in [1,100]", "gold");
            break;
        case TaskKind::yes_no:
            if (gold.kind != GoldLabel::Kind::boolean)
                throw ValidationError("yes_no task requires a boolean gold", "gold");
            break;
        case TaskKind::multiple_choice: {
            if (gold.kind != GoldLabel::Kind::letter)
                throw ValidationError("multiple_choice task requires a letter gold", "gold");
            const char last = static_cast<char>('A' + options.size() - 1);
            if (gold.letter < 'A' || gold.letter > last)
                throw ValidationError("gold letter outside option range", "gold");
            break;
        }
        case TaskKind::description:
            if (gold.kind != GoldLabel::Kind::text)
                throw ValidationError("description task requires a text gold", "gold");
            break;
    }
}

void PersonAnnotation::validate() const {
    image.validate();
    if (person_index < 0) throw ValidationError("person_index must be >= 0", "person_index");
}

void RawAnnotationResponse::validate() const {
    if (image_id.empty()) throw ValidationError("image_id must be non-empty", "image_id");
}

}  // namespace facekit
