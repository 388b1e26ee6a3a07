#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "facekit/types.hpp"

namespace facekit {

/// RAF-DB's seven basic expressions in label order (1..7).
const std::vector<std::string>& rafdb_expression_classes();

/// AffectNet's eight categories in label order (0..7).
const std::vector<std::string>& affectnet_expression_classes();

struct ActionUnit {
    int number = 0;         // FACS number
    std::string name;       // "Inner Brow Raiser"
    std::string description;  // one sentence, embedded in the question
};

/// The twelve EmotioNet action units with their shipped descriptions.
const std::vector<ActionUnit>& emotionet_action_units();
const ActionUnit* find_action_unit(std::string_view name);

struct FaceAttribute {
    std::string name;        // display form, "Bags Under Eyes"
    std::string description;
};

/// The forty LFWA/CelebA attributes. Lookup tolerates underscores and case.
const std::vector<FaceAttribute>& lfwa_attributes();
const FaceAttribute* find_face_attribute(std::string_view name);

QAPair reformulate_age(const FaceImageRef& image, int gold_age);

/// Yes/no pair whose polarity (asks "female?" vs "male?") comes from a
/// seeded coin so gold answers stay balanced.
QAPair reformulate_gender(const FaceImageRef& image, std::string_view gender, std::uint64_t seed);

/// Multiple-choice pair over the full class list. With a seed the options
/// are shuffled; without one they keep the given order.
QAPair reformulate_expression(const FaceImageRef& image, const std::string& gold_class,
                              const std::vector<std::string>& class_list,
                              std::optional<std::uint64_t> seed);

QAPair reformulate_au(const FaceImageRef& image, const std::string& au_name,
                      const std::string& au_description, bool present);

/// `attr_description` may be empty; the benchmark form carries no
/// explanation while the training form embeds one.
QAPair reformulate_attribute(const FaceImageRef& image, const std::string& attr_name,
                             const std::string& attr_description, bool present);

}  // namespace facekit
