#include "facekit/cleaning.hpp"

#include <algorithm>
#include <array>
#include <unordered_set>

namespace facekit {

namespace {

constexpr std::array<std::string_view, 4> kReasonNames = {
    "indeterminate_value",
    "missing_face_description",
    "empty_attributes",
    "unknown_attribute_value",
};

bool contains_word(const std::string& folded_haystack, const std::string& folded_needle) {
    if (folded_needle.empty()) return false;
    std::size_t pos = 0;
    while ((pos = folded_haystack.find(folded_needle, pos)) != std::string::npos) {
        const bool start_ok = pos == 0 || folded_haystack[pos - 1] == ' ';
        const std::size_t end = pos + folded_needle.size();
        const bool end_ok = end == folded_haystack.size() || folded_haystack[end] == ' ';
        if (start_ok && end_ok) return true;
        pos += 1;
    }
    return false;
}

bool caption_describes_face(const std::string& caption, const AttributeSchema& schema,
                            const CleaningConfig& config) {
    const std::string folded = fold_value(caption);
    if (folded.empty()) return false;
    for (const auto& kw : config.facial_keywords) {
        if (contains_word(folded, fold_value(kw))) return true;
    }
    for (const auto& attr : schema.attributes()) {
        if (contains_word(folded, fold_value(attr.name))) return true;
    }
    return false;
}

}  // namespace

std::string_view to_string(DropReason r) { return kReasonNames[static_cast<std::size_t>(r)]; }

DropReason drop_reason_from_string(std::string_view s) {
    for (std::size_t i = 0; i < kReasonNames.size(); ++i) {
        if (kReasonNames[i] == s) return static_cast<DropReason>(i);
    }
    throw ValidationError("unknown drop reason: " + std::string(s), "reason");
}

void DropRecord::validate() const {
    if (image_id.empty()) throw ValidationError("image_id must be non-empty", "image_id");
}

CleaningOutcome clean_labels(const std::vector<PersonAnnotation>& persons,
                             const AttributeSchema& schema, const CleaningConfig& config) {
    CleaningOutcome out;

    std::unordered_set<std::string> indeterminate;
    for (const auto& v : config.indeterminate_values) indeterminate.insert(fold_value(v));

    for (const auto& person : persons) {
        PersonAnnotation cleaned = person;
        cleaned.attributes.clear();

        for (const auto& [name, value] : person.attributes) {
            const AttributeSpec* spec = schema.find(name);
            if (!spec) {
                out.attribute_drops.push_back(
                    {person.person_index, name, value, DropReason::unknown_attribute_value});
                continue;
            }
            const std::string folded = fold_value(value);
            if (folded.empty() || indeterminate.count(folded)) {
                out.attribute_drops.push_back(
                    {person.person_index, spec->name, value, DropReason::indeterminate_value});
                continue;
            }
            if (spec->enumerated()) {
                const bool listed = std::any_of(
                    spec->values.begin(), spec->values.end(),
                    [&](const std::string& allowed) { return fold_value(allowed) == folded; });
                if (!listed) {
                    out.attribute_drops.push_back(
                        {person.person_index, spec->name, value, DropReason::unknown_attribute_value});
                    continue;
                }
            }
            cleaned.attributes.emplace(spec->name, trim(value));
        }

        if (static_cast<int>(cleaned.attributes.size()) < config.min_attributes) {
            out.dropped.push_back({person.person_index, DropReason::empty_attributes});
            continue;
        }
        if (!caption_describes_face(cleaned.caption, schema, config)) {
            out.dropped.push_back({person.person_index, DropReason::missing_face_description});
            continue;
        }
        out.kept.push_back(std::move(cleaned));
    }
    return out;
}

std::vector<DropRecord> drop_records(const std::string& image_id, const CleaningOutcome& outcome) {
    std::vector<DropRecord> out;
    out.reserve(outcome.attribute_drops.size() + outcome.dropped.size());
    for (const auto& d : outcome.attribute_drops)
        out.push_back({image_id, d.person_index, d.attribute, d.value, d.reason});
    for (const auto& d : outcome.dropped) out.push_back({image_id, d.person_index, "", "", d.reason});
    return out;
}

}  // namespace facekit
