#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "facekit/types.hpp"

namespace facekit {

/// Result of extracting an answer from free-form model output. Total over
/// arbitrary text: parsers never throw, they return unparseable instead.
struct ParsedAnswer {
    enum class Kind { number, boolean, letter, unparseable };

    Kind kind = Kind::unparseable;
    int number = 0;
    bool boolean = false;
    char letter = 'A';
    std::string reason;       // unparseable only: no_token, no_match, ambiguous, ...
    std::string raw_excerpt;  // substring the winning rule matched
    std::string rule;         // which rule fired, for per-rule corpus audits

    bool parsed() const { return kind != Kind::unparseable; }

    static ParsedAnswer failure(std::string reason) {
        ParsedAnswer p;
        p.kind = Kind::unparseable;
        p.reason = std::move(reason);
        return p;
    }

    bool operator==(const ParsedAnswer&) const = default;
};

std::string_view to_string(ParsedAnswer::Kind k);
ParsedAnswer::Kind parsed_kind_from_string(std::string_view s);

/// Earliest standalone "yes"/"no" token wins, case-insensitive. Leading
/// filler ("Answer:", "The answer is") falls out of the token rule.
ParsedAnswer parse_yes_no(const std::string& text);

/// Priority: standalone letter token ("D", "D.", "(D)"), then an
/// "option D" / "answer is d" phrase, then a unique case-insensitive match
/// of one option's text. Two different candidate letters at the same rule
/// level is a tie and stays unparseable.
ParsedAnswer parse_option_letter(const std::string& text, const std::vector<Option>& options);

/// First integer in [1,100]; "30-35" style ranges resolve to the midpoint
/// rounded down; out-of-range integers are skipped.
ParsedAnswer parse_age(const std::string& text);

/// Dispatch on task kind. Description tasks are not auto-scored and come
/// back unparseable("description_unscored").
ParsedAnswer parse_answer(TaskKind task, const std::string& text,
                          const std::vector<Option>& options);

}  // namespace facekit
