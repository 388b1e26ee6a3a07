#include "facekit/annotation.hpp"

#include <cctype>
#include <sstream>

namespace facekit {

namespace {

const char* kPromptHeader =
    "Suppose you are a face fine-grained attribute analyst; based on a given image, you can "
    "output both the image caption in detail and the list of fine-grained attributes for each "
    "person.\n"
    "\n"
    "Requirements:\n"
    "A. The image caption should be generated according to the fine-grained attributes.\n"
    "B. Please extract them from the image, do not imagine yourself.\n"
    "C. If there are multiple people in the image, please separate each person, point out the "
    "position of each person, and list a list of fine-grained attributes for each person.\n"
    "D. The list of fine-grained attributes should be formatted as follows:\n"
    "* Attribute name: Attribute value\n"
    "For example:\n"
    "* Gender: Male\n"
    "* Age: Child\n"
    "* Hair color: Black\n"
    "E. The fine-grained attributes include but are not limited to the following:\n";

struct Line {
    enum class Kind { blank, bullet, heading, prose } kind = Kind::prose;
    std::string name;      // bullet
    std::string value;     // bullet
    std::string position;  // heading suffix, may be empty
    std::string text;      // prose
};

bool is_blank(const std::string& s) {
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

// "Person 3", "**Person 3 (leftmost):**", "person 2: second from left"
bool match_heading(const std::string& line, std::string& position_out) {
    std::size_t i = 0;
    auto skip = [&](auto pred) {
        while (i < line.size() && pred(static_cast<unsigned char>(line[i]))) ++i;
    };
    skip([](unsigned char c) { return std::isspace(c) || c == '*' || c == '#'; });
    static const std::string kWord = "person";
    for (char w : kWord) {
        if (i >= line.size() || std::tolower(static_cast<unsigned char>(line[i])) != w) return false;
        ++i;
    }
    if (i >= line.size() || !std::isspace(static_cast<unsigned char>(line[i]))) return false;
    skip([](unsigned char c) { return std::isspace(c); });
    if (i >= line.size() || !std::isdigit(static_cast<unsigned char>(line[i]))) return false;
    skip([](unsigned char c) { return std::isdigit(c); });

    // Remainder, with separators and markdown stripped, is the position.
    std::string rest = line.substr(i);
    std::string cleaned;
    for (char c : rest) {
        if (c == ':' || c == '(' || c == ')' || c == '*' || c == '-') continue;
        cleaned.push_back(c);
    }
    cleaned = trim(cleaned);
    // Anything sentence-like is prose that happens to start with "Person N",
    // not a position marker.
    if (cleaned.size() > 40 || cleaned.find('.') != std::string::npos) return false;
    position_out = cleaned;
    return true;
}

Line classify(const std::string& raw) {
    Line out;
    if (is_blank(raw)) {
        out.kind = Line::Kind::blank;
        return out;
    }
    std::size_t i = 0;
    while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
    if (i < raw.size() && (raw[i] == '*' || raw[i] == '-')) {
        std::size_t j = i;
        while (j < raw.size() && (raw[j] == '*' || raw[j] == '-')) ++j;
        const std::size_t colon = raw.find(':', j);
        if (colon != std::string::npos) {
            std::string name = trim(raw.substr(j, colon - j));
            while (!name.empty() && (name.back() == '*' || name.back() == '-'))
                name.pop_back();
            name = trim(name);
            std::string value = trim(raw.substr(colon + 1));
            while (!value.empty() && value.back() == '*') value.pop_back();
            value = trim(value);
            if (!name.empty() && !value.empty()) {
                out.kind = Line::Kind::bullet;
                out.name = name;
                out.value = value;
                return out;
            }
        }
        // A bullet without "name: value" is decoration; drop it.
        out.kind = Line::Kind::blank;
        return out;
    }
    std::string position;
    if (match_heading(raw, position)) {
        out.kind = Line::Kind::heading;
        out.position = position;
        return out;
    }
    out.kind = Line::Kind::prose;
    out.text = trim(raw);
    return out;
}

void append_paragraph(std::string& buf, const std::string& text) {
    if (!buf.empty()) buf += ' ';
    buf += text;
}

}  // namespace

std::string render_annotation_prompt(const AttributeSchema& schema) {
    std::string out = kPromptHeader;
    const auto& attrs = schema.attributes();
    for (std::size_t i = 0; i < attrs.size(); ++i) {
        const AttributeSpec& a = attrs[i];
        out += std::to_string(i);
        out += ". ";
        out += a.name;
        std::string values;
        if (!a.value_note.empty()) {
            values = a.value_note;
        } else if (!a.values.empty()) {
            for (std::size_t k = 0; k < a.values.size(); ++k) {
                if (k) values += ", ";
                values += a.values[k];
            }
            if (a.open_ended) values += ", etc.";
        }
        if (!values.empty()) {
            out += " (";
            out += values;
            out += ")";
        }
        out += "\n";
    }
    return out;
}

AnnotationParse parse_annotation_response(const std::string& text, const AttributeSchema& schema) {
    AnnotationParse out;
    std::vector<PersonAnnotation> persons;
    bool person_open = false;
    PersonAnnotation current;
    std::size_t bullet_count = 0;

    auto finish_person = [&] {
        if (!person_open) return;
        persons.push_back(current);
        current = PersonAnnotation{};
        person_open = false;
    };
    auto open_person = [&] {
        if (person_open) return;
        current = PersonAnnotation{};
        person_open = true;
    };

    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        Line line = classify(raw);
        switch (line.kind) {
            case Line::Kind::blank:
                break;
            case Line::Kind::heading:
                finish_person();
                open_person();
                current.position = line.position;
                break;
            case Line::Kind::bullet: {
                ++bullet_count;
                const bool is_position = fold_value(line.name) == "position";
                if (is_position) {
                    // A second position marker means a new person block.
                    if (person_open && (!current.position.empty() || !current.attributes.empty()))
                        finish_person();
                    open_person();
                    current.position = line.value;
                } else {
                    open_person();
                    std::string name = line.name;
                    if (auto canonical = schema.canonical_name(name)) name = *canonical;
                    current.attributes[name] = line.value;
                }
                break;
            }
            case Line::Kind::prose:
                if (person_open)
                    append_paragraph(current.caption, line.text);
                else
                    append_paragraph(out.image_caption, line.text);
                break;
        }
    }
    finish_person();

    if (bullet_count == 0) throw AnnotationParseError(text);

    for (std::size_t i = 0; i < persons.size(); ++i) {
        persons[i].person_index = static_cast<int>(i);
        if (persons[i].caption.empty()) persons[i].caption = out.image_caption;
    }
    out.persons = std::move(persons);
    return out;
}

std::string serialize_annotation_response(const std::vector<PersonAnnotation>& persons,
                                          const AttributeSchema* schema) {
    std::string out;
    const bool multi = persons.size() > 1;

    auto emit_attributes = [&](const PersonAnnotation& p) {
        if (!p.position.empty()) out += "* Position: " + p.position + "\n";
        if (schema) {
            for (const auto& spec : schema->attributes()) {
                auto it = p.attributes.find(spec.name);
                if (it != p.attributes.end()) out += "* " + it->first + ": " + it->second + "\n";
            }
            for (const auto& [name, value] : p.attributes) {
                if (!schema->has(name)) out += "* " + name + ": " + value + "\n";
            }
        } else {
            for (const auto& [name, value] : p.attributes) out += "* " + name + ": " + value + "\n";
        }
    };

    if (!multi) {
        if (!persons.empty()) {
            const PersonAnnotation& p = persons.front();
            if (!p.caption.empty()) out += p.caption + "\n\n";
            emit_attributes(p);
        }
        return out;
    }

    for (std::size_t i = 0; i < persons.size(); ++i) {
        const PersonAnnotation& p = persons[i];
        out += "Person " + std::to_string(i + 1) + ":\n";
        emit_attributes(p);
        if (!p.caption.empty()) out += p.caption + "\n";
        if (i + 1 < persons.size()) out += "\n";
    }
    return out;
}

}  // namespace facekit
