#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "facekit/types.hpp"

namespace facekit {

/// One zero-shot annotation: which fine-grained feature category the image
/// was labeled with and the gold value inside that category's vocabulary.
struct ZeroShotLabel {
    FaceImageRef image;
    std::string category;  // "eyelid type" | "eye shape" | "nose shape" | "lip shape"
    std::string value;
    std::string extra;

    void validate() const;
    bool operator==(const ZeroShotLabel&) const = default;
};

/// category -> candidate values.
const std::map<std::string, std::vector<std::string>>& zeroshot_vocabulary();

/// Editable feature descriptions, keyed by value ("phoenix eyes" -> one
/// sentence). These defaults cover the whole vocabulary.
const std::map<std::string, std::string>& default_feature_descriptions();

/// 2-3 questions per image: a multiple-choice over the category vocabulary
/// plus yes/no probes, each carrying the relevant feature description and
/// a response-format instruction. Pure function of (labels, descriptions,
/// seed).
std::vector<QAPair> build_zeroshot_suite(const std::vector<ZeroShotLabel>& labels,
                                         const std::map<std::string, std::string>& descriptions,
                                         std::uint64_t seed);

}  // namespace facekit
