#include "facekit/answer_parse.hpp"

#include <array>
#include <cctype>

namespace facekit {

namespace {

bool is_word_char(unsigned char c) { return std::isalpha(c) != 0; }

bool standalone_at(const std::string& text, std::size_t pos, std::size_t len) {
    const bool left_ok = pos == 0 || !is_word_char(static_cast<unsigned char>(text[pos - 1]));
    const std::size_t end = pos + len;
    const bool right_ok =
        end >= text.size() || !is_word_char(static_cast<unsigned char>(text[end]));
    return left_ok && right_ok;
}

// Earliest standalone occurrence of `word` in lowercase haystack.
std::size_t find_word(const std::string& lower, const std::string& word) {
    std::size_t pos = 0;
    while ((pos = lower.find(word, pos)) != std::string::npos) {
        if (standalone_at(lower, pos, word.size())) return pos;
        ++pos;
    }
    return std::string::npos;
}

bool letter_standalone_at(const std::string& text, std::size_t pos) {
    // Letters are delimited by anything non-alphanumeric, so "(D)", "D.",
    // "D)" all count while "Dog" does not.
    auto is_alnum = [&](std::size_t i) {
        return std::isalnum(static_cast<unsigned char>(text[i])) != 0;
    };
    const bool left_ok = pos == 0 || !is_alnum(pos - 1);
    const bool right_ok = pos + 1 >= text.size() || !is_alnum(pos + 1);
    return left_ok && right_ok;
}

}  // namespace

std::string_view to_string(ParsedAnswer::Kind k) {
    static constexpr std::array<std::string_view, 4> names = {"number", "boolean", "letter",
                                                              "unparseable"};
    return names[static_cast<std::size_t>(k)];
}

ParsedAnswer::Kind parsed_kind_from_string(std::string_view s) {
    if (s == "number") return ParsedAnswer::Kind::number;
    if (s == "boolean") return ParsedAnswer::Kind::boolean;
    if (s == "letter") return ParsedAnswer::Kind::letter;
    if (s == "unparseable") return ParsedAnswer::Kind::unparseable;
    throw ValidationError("unknown parsed answer kind: " + std::string(s), "kind");
}

ParsedAnswer parse_yes_no(const std::string& text) {
    const std::string lower = to_lower(text);
    const std::size_t yes_pos = find_word(lower, "yes");
    const std::size_t no_pos = find_word(lower, "no");
    if (yes_pos == std::string::npos && no_pos == std::string::npos)
        return ParsedAnswer::failure("no_token");

    ParsedAnswer out;
    out.kind = ParsedAnswer::Kind::boolean;
    if (yes_pos < no_pos) {
        out.boolean = true;
        out.raw_excerpt = text.substr(yes_pos, 3);
    } else {
        out.boolean = false;
        out.raw_excerpt = text.substr(no_pos, 2);
    }
    const std::string folded = fold_value(text);
    out.rule = (folded == "yes" || folded == "no") ? "yn.exact" : "yn.token";
    return out;
}

ParsedAnswer parse_option_letter(const std::string& text, const std::vector<Option>& options) {
    if (options.empty()) throw std::invalid_argument("parse_option_letter: empty options");
    const char last = static_cast<char>('A' + options.size() - 1);
    auto valid = [&](char c) { return c >= 'A' && c <= last; };

    // Rule 1: standalone uppercase letter tokens.
    {
        char found = 0;
        bool ambiguous = false;
        std::size_t first_pos = 0;
        for (std::size_t i = 0; i < text.size(); ++i) {
            const char c = text[i];
            if (!valid(c) || !letter_standalone_at(text, i)) continue;
            if (found == 0) {
                found = c;
                first_pos = i;
            } else if (found != c) {
                ambiguous = true;
            }
        }
        if (ambiguous) return ParsedAnswer::failure("ambiguous");
        if (found != 0) {
            ParsedAnswer out;
            out.kind = ParsedAnswer::Kind::letter;
            out.letter = found;
            out.raw_excerpt = text.substr(first_pos, 1);
            out.rule = "mc.standalone";
            return out;
        }
    }

    // Rule 2: "option d" / "answer is d" phrases, any case.
    {
        const std::string lower = to_lower(text);
        static const std::array<std::string, 4> cues = {"option ", "answer is ", "answer: ",
                                                        "choose "};
        char found = 0;
        bool ambiguous = false;
        std::size_t first_pos = 0;
        for (const auto& cue : cues) {
            std::size_t pos = 0;
            while ((pos = lower.find(cue, pos)) != std::string::npos) {
                std::size_t i = pos + cue.size();
                while (i < lower.size() && (lower[i] == '(' || lower[i] == ' ')) ++i;
                if (i < lower.size()) {
                    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(lower[i])));
                    if (valid(c) && letter_standalone_at(lower, i)) {
                        if (found == 0) {
                            found = c;
                            first_pos = i;
                        } else if (found != c) {
                            ambiguous = true;
                        }
                    }
                }
                ++pos;
            }
        }
        if (ambiguous) return ParsedAnswer::failure("ambiguous");
        if (found != 0) {
            ParsedAnswer out;
            out.kind = ParsedAnswer::Kind::letter;
            out.letter = found;
            out.raw_excerpt = text.substr(first_pos, 1);
            out.rule = "mc.phrase";
            return out;
        }
    }

    // Rule 3: unique match of one option's text. Matches must start at a
    // word boundary; trailing word growth is allowed ("surprised" matches
    // option "surprise").
    {
        const std::string lower = to_lower(text);
        char found = 0;
        int hits = 0;
        std::size_t first_pos = 0;
        std::size_t first_len = 0;
        for (const auto& opt : options) {
            const std::string needle = to_lower(trim(opt.text));
            if (needle.empty()) continue;
            std::size_t pos = 0;
            bool hit = false;
            while ((pos = lower.find(needle, pos)) != std::string::npos) {
                const bool left_ok =
                    pos == 0 || !is_word_char(static_cast<unsigned char>(lower[pos - 1]));
                if (left_ok) {
                    hit = true;
                    break;
                }
                ++pos;
            }
            if (hit) {
                ++hits;
                if (hits == 1) {
                    found = opt.letter;
                    first_pos = pos;
                    first_len = needle.size();
                }
            }
        }
        if (hits > 1) return ParsedAnswer::failure("ambiguous");
        if (hits == 1) {
            ParsedAnswer out;
            out.kind = ParsedAnswer::Kind::letter;
            out.letter = found;
            out.raw_excerpt = text.substr(first_pos, first_len);
            out.rule = "mc.text";
            return out;
        }
    }

    return ParsedAnswer::failure("no_match");
}

ParsedAnswer parse_age(const std::string& text) {
    const std::size_t n = text.size();
    std::size_t i = 0;
    auto read_int = [&](std::size_t at, long& value, std::size_t& len) {
        if (at >= n || !std::isdigit(static_cast<unsigned char>(text[at]))) return false;
        if (at > 0 && std::isdigit(static_cast<unsigned char>(text[at - 1]))) return false;
        long v = 0;
        std::size_t j = at;
        while (j < n && std::isdigit(static_cast<unsigned char>(text[j])) && j - at < 9) {
            v = v * 10 + (text[j] - '0');
            ++j;
        }
        value = v;
        len = j - at;
        return true;
    };

    while (i < n) {
        long value = 0;
        std::size_t len = 0;
        if (!read_int(i, value, len)) {
            ++i;
            continue;
        }
        if (value < 1 || value > 100) {
            i += len;
            continue;
        }
        // Range form "30-35" / "30 - 35" / "30 to 35": midpoint rounded down.
        std::size_t j = i + len;
        while (j < n && text[j] == ' ') ++j;
        std::size_t sep_len = 0;
        if (j < n && (text[j] == '-' || text[j] == '~'))
            sep_len = 1;
        else if (j + 1 < n && (text[j] == 't' || text[j] == 'T') &&
                 (text[j + 1] == 'o' || text[j + 1] == 'O') && standalone_at(to_lower(text), j, 2))
            sep_len = 2;
        if (sep_len > 0) {
            std::size_t k = j + sep_len;
            while (k < n && text[k] == ' ') ++k;
            long hi = 0;
            std::size_t hi_len = 0;
            if (read_int(k, hi, hi_len) && hi >= value && hi <= 100) {
                ParsedAnswer out;
                out.kind = ParsedAnswer::Kind::number;
                out.number = static_cast<int>((value + hi) / 2);
                out.raw_excerpt = text.substr(i, k + hi_len - i);
                out.rule = "age.range";
                return out;
            }
        }
        ParsedAnswer out;
        out.kind = ParsedAnswer::Kind::number;
        out.number = static_cast<int>(value);
        out.raw_excerpt = text.substr(i, len);
        out.rule = "age.integer";
        return out;
    }
    return ParsedAnswer::failure("no_number");
}

ParsedAnswer parse_answer(TaskKind task, const std::string& text,
                          const std::vector<Option>& options) {
    switch (task) {
        case TaskKind::age:
            return parse_age(text);
        case TaskKind::yes_no:
            return parse_yes_no(text);
        case TaskKind::multiple_choice:
            return parse_option_letter(text, options);
        case TaskKind::description:
            return ParsedAnswer::failure("description_unscored");
    }
    return ParsedAnswer::failure("unknown_task");
}

}  // namespace facekit
