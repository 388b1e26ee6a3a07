#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "facekit/schema.hpp"
#include "facekit/types.hpp"

namespace facekit {

/// Fixed instruction suffixes every generated question ends with.
inline constexpr const char* kYesNoInstruction = "Answer directly with Yes or No.";
inline constexpr const char* kLetterInstruction =
    "Answer with the option's letter from the given choices directly.";

/// Description-task instructions rotated across caption pairs.
const std::vector<std::string>& caption_instructions();

struct ShuffledOptions {
    std::vector<Option> options;
    char gold_letter = 'A';
};

/// Seeded Fisher-Yates permutation with letters assigned after the
/// shuffle. Duplicate option texts (case/punctuation folded) are rejected
/// because the gold would be ambiguous.
ShuffledOptions shuffle_options(const std::vector<std::string>& texts, std::size_t gold_index,
                                std::uint64_t seed);

/// "A.surprise B.fear ..." joined the way the benchmark formats choices.
std::string format_options(const std::vector<Option>& options);

struct CaptionPairResult {
    std::vector<QAPair> records;            // task = description, one per image
    std::vector<std::string> skipped_ids;   // images whose merged caption was empty
};

/// One description record per distinct image, instruction drawn from
/// caption_instructions() under a per-image derived seed.
CaptionPairResult gen_caption_pairs(const std::vector<PersonAnnotation>& annotations,
                                    std::uint64_t seed);

/// Per surviving attribute: a Yes pair with the true value, a No pair with
/// a sampled distractor, and a multiple-choice pair when the attribute has
/// at least three candidates. When `multi_face` is set the question targets
/// "the {position} face in the image" instead of "the person in the
/// picture". Pure function of (annotation, multi_face, seed).
std::vector<QAPair> gen_attribute_qa(const PersonAnnotation& annotation,
                                     const AttributeSchema& schema, bool multi_face,
                                     std::uint64_t seed);

}  // namespace facekit
