#include "facekit/schema.hpp"

#include <cctype>
#include <stdexcept>
#include <unordered_set>

namespace facekit {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::string to_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

std::string fold_value(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    bool pending_space = false;
    for (char ch : s) {
        unsigned char c = static_cast<unsigned char>(ch);
        if (std::isalnum(c)) {
            if (pending_space && !out.empty()) out.push_back(' ');
            pending_space = false;
            out.push_back(static_cast<char>(std::tolower(c)));
        } else if (std::isspace(c)) {
            pending_space = true;
        }
        // punctuation dropped entirely
    }
    return out;
}

AttributeSchema::AttributeSchema(std::vector<AttributeSpec> attrs) : attrs_(std::move(attrs)) {
    validate();
}

const AttributeSpec* AttributeSchema::find(std::string_view name) const {
    const std::string folded = fold_value(name);
    for (const auto& a : attrs_) {
        if (fold_value(a.name) == folded) return &a;
    }
    return nullptr;
}

std::optional<std::string> AttributeSchema::canonical_name(std::string_view name) const {
    const AttributeSpec* a = find(name);
    if (!a) return std::nullopt;
    return a->name;
}

void AttributeSchema::validate() const {
    std::unordered_set<std::string> seen;
    for (const auto& a : attrs_) {
        if (a.name.empty()) throw std::invalid_argument("schema: empty attribute name");
        if (!seen.insert(fold_value(a.name)).second)
            throw std::invalid_argument("schema: duplicate attribute name: " + a.name);
    }
}

const AttributeSchema& builtin_schema() {
    static const AttributeSchema schema{std::vector<AttributeSpec>{
        {"position", {}, false, ""},
        {"age", {"infant", "toddler", "child", "teenager", "young adult", "middle-aged", "elderly"}, false, ""},
        {"gender", {"male", "female"}, false, ""},
        {"race",
         {"East Asian", "Southeast Asian", "South Asian", "Central Asian", "West Asian", "African",
          "European", "Native American"},
         false, ""},
        {"Hair color", {"black", "brown", "blonde", "red", "gray", "white"}, true, ""},
        {"Hair length", {"long", "medium", "short", "bald"}, false, ""},
        {"Hair type", {"straight", "curly", "wavy"}, false, ""},
        {"Bangs", {"with bangs", "without bangs"}, false, ""},
        {"Hairline", {"high", "low"}, false, ""},
        {"Eye size", {"big eyes", "small eyes"}, false, ""},
        {"Eye Shape", {"Round", "Almond", "Phoenix"}, false, ""},
        {"Double eyelids", {"double eyelids", "single eyelids"}, false, ""},
        {"Distance between eyes", {"wide", "narrow"}, false, ""},
        {"Eye corners", {"upward", "downward"}, false, ""},
        {"Bags under eyes", {"with bags", "without bags"}, false, ""},
        {"Dark Circles", {"with dark circles", "without dark circles"}, false, ""},
        {"Eye color", {"black", "brown", "blue", "green"}, true, ""},
        {"Nose size", {"big nose", "small nose"}, false, ""},
        {"Nose height", {"high bridge", "low bridge"}, false, ""},
        {"Nose width", {"wide nose", "narrow nose"}, false, ""},
        {"Nose tip shape", {"rounded tip", "pointed tip"}, false, ""},
        {"Lip thickness", {"thick lips", "narrow lips"}, false, ""},
        {"Lip color", {"red lips", "pink lips"}, false, ""},
        {"Mouth corners", {"upturned", "downturned"}, false, ""},
        {"Face shape",
         {"round face", "square face", "goose egg face", "melon face", "long face", "diamond face"},
         false, ""},
        {"Chin shape", {"pointed chin", "round chin", "square chin"}, false, ""},
        {"Cheekbones", {"high cheekbones", "low cheekbones"}, false, ""},
        {"Skin color", {"fair", "yellowish", "wheatish", "tanned"}, false, ""},
        {"Skin texture", {"smooth", "rough"}, false, ""},
        {"Freckles", {"freckled", "freckle-free"}, false, ""},
        {"Moles", {}, false, "with or without"},
        {"Beard", {"bearded", "unshaven"}, false, ""},
        {"Eyeglasses", {"glasses", "no glasses"}, false, ""},
        {"Hat", {"Hat", "no hat"}, false, ""},
        {"Expression", {"happy", "sad", "angry", "surprised", "disgusted", "fearful"}, false, ""},
        {"Makeup", {"make-up", "face"}, false, ""},
        {"Jewelry", {"earrings", "necklace"}, true, ""},
    }};
    return schema;
}

}  // namespace facekit
