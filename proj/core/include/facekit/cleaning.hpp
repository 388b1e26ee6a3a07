#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "facekit/types.hpp"

namespace facekit {

enum class DropReason {
    indeterminate_value,
    missing_face_description,
    empty_attributes,
    unknown_attribute_value,
};

std::string_view to_string(DropReason r);
DropReason drop_reason_from_string(std::string_view s);

struct PersonDrop {
    int person_index = 0;
    DropReason reason = DropReason::empty_attributes;
};

struct AttributeDrop {
    int person_index = 0;
    std::string attribute;
    std::string value;
    DropReason reason = DropReason::indeterminate_value;
};

/// kept plus dropped always partition the input persons. attribute_drops
/// lists the per-attribute removals, including those on kept persons.
struct CleaningOutcome {
    std::vector<PersonAnnotation> kept;
    std::vector<PersonDrop> dropped;
    std::vector<AttributeDrop> attribute_drops;
};

/// Line-delimited form of a drop for the cleaning report. `attribute` is
/// empty for person-level drops.
struct DropRecord {
    std::string image_id;
    int person_index = 0;
    std::string attribute;
    std::string value;
    DropReason reason = DropReason::empty_attributes;

    void validate() const;
    bool operator==(const DropRecord&) const = default;
};

struct CleaningConfig {
    /// Values treated as "the annotator could not tell". Compared after
    /// fold_value(), so punctuation and case do not matter.
    std::vector<std::string> indeterminate_values = {
        "cannot determine", "unknown", "n/a", "not visible", "unclear"};

    /// A caption must mention one of these words (or any schema attribute
    /// name) to count as a facial description.
    std::vector<std::string> facial_keywords = {"face", "eyes", "hair", "skin", "expression"};

    /// Persons keep fewer attributes than this are dropped.
    int min_attributes = 3;
};

/// Applies the label-cleaning rules: indeterminate values out, values
/// outside an enumerated candidate list out, unknown attribute names out,
/// then persons with too few surviving attributes or a non-facial caption
/// out. Total; never throws on content.
CleaningOutcome clean_labels(const std::vector<PersonAnnotation>& persons,
                             const AttributeSchema& schema,
                             const CleaningConfig& config = {});

std::vector<DropRecord> drop_records(const std::string& image_id, const CleaningOutcome& outcome);

}  // namespace facekit
