#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace facekit {

/// One attribute slot of the annotation prompt: a canonical name, the
/// candidate values offered to the annotation model (possibly none), and
/// whether the candidate list is open-ended ("etc.").
struct AttributeSpec {
    std::string name;
    std::vector<std::string> values;
    bool open_ended = false;
    /// When the prompt phrases the candidates as something other than a
    /// plain comma list (e.g. "with or without"), the verbatim wording.
    std::string value_note;

    /// Closed candidate list usable for validation and distractors.
    bool enumerated() const { return !values.empty() && !open_ended; }
};

/// Ordered attribute list used for prompt rendering, response validation
/// and question generation.
class AttributeSchema {
  public:
    AttributeSchema() = default;
    explicit AttributeSchema(std::vector<AttributeSpec> attrs);

    const std::vector<AttributeSpec>& attributes() const { return attrs_; }
    std::size_t size() const { return attrs_.size(); }

    /// Case-insensitive lookup; returns nullptr for unknown names.
    const AttributeSpec* find(std::string_view name) const;

    /// Canonical spelling for a (possibly arbitrarily cased) name.
    std::optional<std::string> canonical_name(std::string_view name) const;

    bool has(std::string_view name) const { return find(name) != nullptr; }

    /// Throws std::invalid_argument when names repeat or an entry is empty.
    void validate() const;

  private:
    std::vector<AttributeSpec> attrs_;
};

/// The schema shipped with the toolkit: 37 slots from "position" through
/// "Jewelry", candidate lists included where the prompt enumerates them.
const AttributeSchema& builtin_schema();

/// Lowercase, strip punctuation, collapse whitespace. Used everywhere two
/// free-text values are compared for equivalence.
std::string fold_value(std::string_view s);

/// Trim ASCII whitespace from both ends.
std::string trim(std::string_view s);

/// Lowercase copy (ASCII).
std::string to_lower(std::string_view s);

}  // namespace facekit
