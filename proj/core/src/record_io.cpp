#include "facekit/record_io.hpp"

#include <fstream>
#include <functional>
#include <initializer_list>
#include <sstream>
#include <unordered_set>

namespace facekit {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& message, const std::string& field = "") {
    throw ValidationError(message, field);
}

const Json& require(const Json& obj, const char* field) {
    auto it = obj.find(field);
    if (it == obj.end()) fail(std::string("missing field: ") + field, field);
    return *it;
}

std::string require_string(const Json& obj, const char* field) {
    const Json& v = require(obj, field);
    if (!v.is_string()) fail(std::string("field must be a string: ") + field, field);
    return v.get<std::string>();
}

std::string optional_string(const Json& obj, const char* field) {
    auto it = obj.find(field);
    if (it == obj.end()) return "";
    if (!it->is_string()) fail(std::string("field must be a string: ") + field, field);
    return it->get<std::string>();
}

std::int64_t require_int(const Json& obj, const char* field) {
    const Json& v = require(obj, field);
    if (!v.is_number_integer()) fail(std::string("field must be an integer: ") + field, field);
    return v.get<std::int64_t>();
}

std::int64_t optional_int(const Json& obj, const char* field, std::int64_t fallback) {
    auto it = obj.find(field);
    if (it == obj.end()) return fallback;
    if (!it->is_number_integer()) fail(std::string("field must be an integer: ") + field, field);
    return it->get<std::int64_t>();
}

/// Unknown-field policy: throw in strict mode, stash in lenient mode.
std::string collect_extra(const Json& obj, std::initializer_list<const char*> known,
                          SchemaMode mode) {
    Json extra = Json::object();
    for (const auto& [key, value] : obj.items()) {
        bool is_known = false;
        for (const char* k : known) {
            if (key == k) {
                is_known = true;
                break;
            }
        }
        if (is_known) continue;
        if (mode == SchemaMode::strict) fail("unknown field: " + key, key);
        extra[key] = value;
    }
    return extra.empty() ? std::string() : extra.dump();
}

void merge_extra(Json& obj, const std::string& extra) {
    if (extra.empty()) return;
    Json parsed = Json::parse(extra);
    for (const auto& [key, value] : parsed.items()) {
        if (!obj.contains(key)) obj[key] = value;
    }
}

Json gold_to_json(const GoldLabel& g) {
    Json out = Json::object();
    switch (g.kind) {
        case GoldLabel::Kind::number:
            out["number"] = g.number;
            break;
        case GoldLabel::Kind::boolean:
            out["boolean"] = g.boolean;
            break;
        case GoldLabel::Kind::letter:
            out["letter"] = std::string(1, g.letter);
            break;
        case GoldLabel::Kind::text:
            out["text"] = g.text;
            break;
    }
    return out;
}

GoldLabel gold_from_json(const Json& obj) {
    if (!obj.is_object() || obj.size() != 1)
        fail("gold must be an object with exactly one of number/boolean/letter/text", "gold");
    if (obj.contains("number")) {
        if (!obj["number"].is_number_integer()) fail("gold.number must be an integer", "gold");
        return GoldLabel::make_number(obj["number"].get<int>());
    }
    if (obj.contains("boolean")) {
        if (!obj["boolean"].is_boolean()) fail("gold.boolean must be a bool", "gold");
        return GoldLabel::make_boolean(obj["boolean"].get<bool>());
    }
    if (obj.contains("letter")) {
        const std::string s = obj["letter"].get<std::string>();
        if (s.size() != 1 || s[0] < 'A' || s[0] > 'Z')
            fail("gold.letter must be a single character A-Z", "gold");
        return GoldLabel::make_letter(s[0]);
    }
    if (obj.contains("text")) {
        if (!obj["text"].is_string()) fail("gold.text must be a string", "gold");
        return GoldLabel::make_text(obj["text"].get<std::string>());
    }
    fail("gold holds no known variant", "gold");
}

Json parsed_to_json(const ParsedAnswer& p) {
    Json out = Json::object();
    out["kind"] = std::string(to_string(p.kind));
    switch (p.kind) {
        case ParsedAnswer::Kind::number:
            out["number"] = p.number;
            break;
        case ParsedAnswer::Kind::boolean:
            out["boolean"] = p.boolean;
            break;
        case ParsedAnswer::Kind::letter:
            out["letter"] = std::string(1, p.letter);
            break;
        case ParsedAnswer::Kind::unparseable:
            out["reason"] = p.reason;
            break;
    }
    if (!p.raw_excerpt.empty()) out["raw_excerpt"] = p.raw_excerpt;
    if (!p.rule.empty()) out["rule"] = p.rule;
    return out;
}

ParsedAnswer parsed_from_json(const Json& obj) {
    if (!obj.is_object()) fail("parsed must be an object", "parsed");
    ParsedAnswer p;
    p.kind = parsed_kind_from_string(require_string(obj, "kind"));
    switch (p.kind) {
        case ParsedAnswer::Kind::number:
            p.number = static_cast<int>(require_int(obj, "number"));
            break;
        case ParsedAnswer::Kind::boolean:
            p.boolean = require(obj, "boolean").get<bool>();
            break;
        case ParsedAnswer::Kind::letter: {
            const std::string s = require_string(obj, "letter");
            if (s.size() != 1) fail("parsed.letter must be a single character", "parsed");
            p.letter = s[0];
            break;
        }
        case ParsedAnswer::Kind::unparseable:
            p.reason = require_string(obj, "reason");
            break;
    }
    p.raw_excerpt = optional_string(obj, "raw_excerpt");
    p.rule = optional_string(obj, "rule");
    return p;
}

Json mix_source_to_json(const MixSource& s) {
    Json out = Json::object();
    out["role"] = s.role;
    if (!s.path.empty()) out["path"] = s.path;
    if (s.all_available)
        out["all_available"] = true;
    else
        out["count"] = s.count;
    return out;
}

MixSource mix_source_from_json(const Json& obj) {
    MixSource s;
    s.role = require_string(obj, "role");
    s.path = optional_string(obj, "path");
    auto it = obj.find("all_available");
    if (it != obj.end() && it->is_boolean() && it->get<bool>()) {
        s.all_available = true;
    } else {
        const std::int64_t c = require_int(obj, "count");
        if (c < 0) fail("source count must be >= 0", "count");
        s.count = static_cast<std::uint64_t>(c);
    }
    return s;
}

}  // namespace

// ---------------------------------------------------------------- image ref

Json record_to_json(const FaceImageRef& r) {
    Json out = Json::object();
    out["id"] = r.id;
    out["uri"] = r.uri;
    out["source_dataset"] = std::string(to_string(r.source_dataset));
    return out;
}

template <>
FaceImageRef record_from_json<FaceImageRef>(const Json& obj, SchemaMode mode) {
    if (!obj.is_object()) fail("record must be a JSON object");
    FaceImageRef r;
    r.id = require_string(obj, "id");
    r.uri = require_string(obj, "uri");
    r.source_dataset = source_dataset_from_string(require_string(obj, "source_dataset"));
    // Nested refs keep no extra payload; unknown fields still reject in
    // strict mode.
    collect_extra(obj, {"id", "uri", "source_dataset"}, mode);
    r.validate();
    return r;
}

// --------------------------------------------------------- person annotation

Json record_to_json(const PersonAnnotation& r) {
    Json out = Json::object();
    out["image"] = record_to_json(r.image);
    out["person_index"] = r.person_index;
    out["position"] = r.position;
    out["caption"] = r.caption;
    Json attrs = Json::object();
    for (const auto& [name, value] : r.attributes) attrs[name] = value;
    out["attributes"] = attrs;
    merge_extra(out, r.extra);
    return out;
}

template <>
PersonAnnotation record_from_json<PersonAnnotation>(const Json& obj, SchemaMode mode) {
    if (!obj.is_object()) fail("record must be a JSON object");
    PersonAnnotation r;
    r.image = record_from_json<FaceImageRef>(require(obj, "image"), mode);
    r.person_index = static_cast<int>(require_int(obj, "person_index"));
    r.position = optional_string(obj, "position");
    r.caption = optional_string(obj, "caption");
    const Json& attrs = require(obj, "attributes");
    if (!attrs.is_object()) fail("attributes must be an object", "attributes");
    for (const auto& [name, value] : attrs.items()) {
        if (!value.is_string()) fail("attribute values must be strings", "attributes");
        r.attributes[name] = value.get<std::string>();
    }
    r.extra = collect_extra(obj, {"image", "person_index", "position", "caption", "attributes"},
                            mode);
    r.validate();
    return r;
}

// -------------------------------------------------------------------- QAPair

Json record_to_json(const QAPair& r) {
    Json out = Json::object();
    out["id"] = r.id;
    out["image"] = record_to_json(r.image);
    out["task"] = std::string(to_string(r.task));
    out["question"] = r.question;
    if (!r.options.empty()) {
        Json opts = Json::array();
        for (const auto& o : r.options) {
            Json jo = Json::object();
            jo["letter"] = std::string(1, o.letter);
            jo["text"] = o.text;
            opts.push_back(jo);
        }
        out["options"] = opts;
    }
    out["gold"] = gold_to_json(r.gold);
    if (!r.aux_description.empty()) out["aux_description"] = r.aux_description;
    if (!r.track.empty()) out["track"] = r.track;
    merge_extra(out, r.extra);
    return out;
}

template <>
QAPair record_from_json<QAPair>(const Json& obj, SchemaMode mode) {
    if (!obj.is_object()) fail("record must be a JSON object");
    QAPair r;
    r.id = require_string(obj, "id");
    r.image = record_from_json<FaceImageRef>(require(obj, "image"), mode);
    r.task = task_kind_from_string(require_string(obj, "task"));
    r.question = require_string(obj, "question");
    if (auto it = obj.find("options"); it != obj.end()) {
        if (!it->is_array()) fail("options must be an array", "options");
        for (const Json& jo : *it) {
            Option o;
            const std::string letter = require_string(jo, "letter");
            if (letter.size() != 1) fail("option letter must be a single character", "options");
            o.letter = letter[0];
            o.text = require_string(jo, "text");
            r.options.push_back(std::move(o));
        }
    }
    r.gold = gold_from_json(require(obj, "gold"));
    r.aux_description = optional_string(obj, "aux_description");
    r.track = optional_string(obj, "track");
    r.extra = collect_extra(
        obj, {"id", "image", "task", "question", "options", "gold", "aux_description", "track"},
        mode);
    r.validate();
    return r;
}

// ------------------------------------------------------- raw response / drops

Json record_to_json(const RawAnnotationResponse& r) {
    Json out = Json::object();
    out["image_id"] = r.image_id;
    out["response_text"] = r.response_text;
    out["latency_ms"] = r.latency_ms;
    out["endpoint_id"] = r.endpoint_id;
    return out;
}

template <>
RawAnnotationResponse record_from_json<RawAnnotationResponse>(const Json& obj, SchemaMode mode) {
    if (!obj.is_object()) fail("record must be a JSON object");
    RawAnnotationResponse r;
    r.image_id = require_string(obj, "image_id");
    r.response_text = require_string(obj, "response_text");
    r.latency_ms = require_int(obj, "latency_ms");
    r.endpoint_id = require_string(obj, "endpoint_id");
    collect_extra(obj, {"image_id", "response_text", "latency_ms", "endpoint_id"}, mode);
    r.validate();
    return r;
}

Json record_to_json(const DropRecord& r) {
    Json out = Json::object();
    out["image_id"] = r.image_id;
    out["person_index"] = r.person_index;
    if (!r.attribute.empty()) {
        out["attribute"] = r.attribute;
        out["value"] = r.value;
    }
    out["reason"] = std::string(to_string(r.reason));
    return out;
}

template <>
DropRecord record_from_json<DropRecord>(const Json& obj, SchemaMode mode) {
    if (!obj.is_object()) fail("record must be a JSON object");
    DropRecord r;
    r.image_id = require_string(obj, "image_id");
    r.person_index = static_cast<int>(require_int(obj, "person_index"));
    r.attribute = optional_string(obj, "attribute");
    r.value = optional_string(obj, "value");
    r.reason = drop_reason_from_string(require_string(obj, "reason"));
    collect_extra(obj, {"image_id", "person_index", "attribute", "value", "reason"}, mode);
    r.validate();
    return r;
}

Json record_to_json(const FailureRecord& r) {
    Json out = Json::object();
    out["image"] = record_to_json(r.image);
    out["reason"] = std::string(to_string(r.reason));
    out["detail"] = r.detail;
    out["attempts"] = r.attempts;
    merge_extra(out, r.extra);
    return out;
}

template <>
FailureRecord record_from_json<FailureRecord>(const Json& obj, SchemaMode mode) {
    if (!obj.is_object()) fail("record must be a JSON object");
    FailureRecord r;
    r.image = record_from_json<FaceImageRef>(require(obj, "image"), mode);
    r.reason = annotate_failure_reason_from_string(require_string(obj, "reason"));
    r.detail = optional_string(obj, "detail");
    r.attempts = static_cast<int>(optional_int(obj, "attempts", 1));
    r.extra = collect_extra(obj, {"image", "reason", "detail", "attempts"}, mode);
    r.validate();
    return r;
}

// --------------------------------------------------------------- eval record

Json record_to_json(const EvalRecord& r) {
    Json out = Json::object();
    out["qa"] = record_to_json(r.qa);
    out["response_text"] = r.response_text;
    out["latency_ms"] = r.latency_ms;
    out["endpoint_id"] = r.endpoint_id;
    out["attempts"] = r.attempts;
    out["parsed"] = parsed_to_json(r.parsed);
    merge_extra(out, r.extra);
    return out;
}

template <>
EvalRecord record_from_json<EvalRecord>(const Json& obj, SchemaMode mode) {
    if (!obj.is_object()) fail("record must be a JSON object");
    EvalRecord r;
    r.qa = record_from_json<QAPair>(require(obj, "qa"), mode);
    r.response_text = require_string(obj, "response_text");
    r.latency_ms = require_int(obj, "latency_ms");
    r.endpoint_id = require_string(obj, "endpoint_id");
    r.attempts = static_cast<int>(optional_int(obj, "attempts", 1));
    r.parsed = parsed_from_json(require(obj, "parsed"));
    r.extra = collect_extra(
        obj, {"qa", "response_text", "latency_ms", "endpoint_id", "attempts", "parsed"}, mode);
    r.validate();
    return r;
}

// ---------------------------------------------------------------- zero-shot

Json record_to_json(const ZeroShotLabel& r) {
    Json out = Json::object();
    out["image"] = record_to_json(r.image);
    out["category"] = r.category;
    out["value"] = r.value;
    merge_extra(out, r.extra);
    return out;
}

template <>
ZeroShotLabel record_from_json<ZeroShotLabel>(const Json& obj, SchemaMode mode) {
    if (!obj.is_object()) fail("record must be a JSON object");
    ZeroShotLabel r;
    r.image = record_from_json<FaceImageRef>(require(obj, "image"), mode);
    r.category = require_string(obj, "category");
    r.value = require_string(obj, "value");
    r.extra = collect_extra(obj, {"image", "category", "value"}, mode);
    r.validate();
    return r;
}

// ------------------------------------------------------------ mix / manifest

Json record_to_json(const MixSpec& r) {
    Json out = Json::object();
    out["name"] = r.name;
    out["seed"] = r.seed;
    if (r.total) out["total"] = *r.total;
    Json sources = Json::array();
    for (const auto& s : r.sources) sources.push_back(mix_source_to_json(s));
    out["sources"] = sources;
    merge_extra(out, r.extra);
    return out;
}

template <>
MixSpec record_from_json<MixSpec>(const Json& obj, SchemaMode mode) {
    if (!obj.is_object()) fail("record must be a JSON object");
    MixSpec r;
    r.name = require_string(obj, "name");
    r.seed = static_cast<std::uint64_t>(require_int(obj, "seed"));
    if (auto it = obj.find("total"); it != obj.end())
        r.total = static_cast<std::uint64_t>(it->get<std::int64_t>());
    const Json& sources = require(obj, "sources");
    if (!sources.is_array()) fail("sources must be an array", "sources");
    for (const Json& s : sources) r.sources.push_back(mix_source_from_json(s));
    r.extra = collect_extra(obj, {"name", "seed", "total", "sources"}, mode);
    r.validate();
    return r;
}

Json record_to_json(const StageSpec& r) {
    Json out = Json::object();
    out["stage"] = r.stage;
    Json trainable = Json::array();
    for (const auto& c : r.trainable) trainable.push_back(std::string(to_string(c)));
    out["trainable"] = trainable;
    Json adaptation = Json::object();
    if (r.adaptation.low_rank) {
        adaptation["kind"] = "low_rank";
        adaptation["rank"] = r.adaptation.rank;
    } else {
        adaptation["kind"] = "none";
    }
    out["adaptation"] = adaptation;
    out["data_mix"] = record_to_json(r.data_mix);
    Json targets = Json::array();
    for (const auto& t : r.adapter_targets) targets.push_back(t);
    out["adapter_targets"] = targets;
    if (!r.optimizer.empty())
        out["optimizer"] = Json::parse(r.optimizer);
    else
        out["optimizer"] = Json::object();
    merge_extra(out, r.extra);
    return out;
}

template <>
StageSpec record_from_json<StageSpec>(const Json& obj, SchemaMode mode) {
    if (!obj.is_object()) fail("record must be a JSON object");
    StageSpec r;
    r.stage = static_cast<int>(require_int(obj, "stage"));
    const Json& trainable = require(obj, "trainable");
    if (!trainable.is_array()) fail("trainable must be an array", "trainable");
    for (const Json& c : trainable)
        r.trainable.insert(model_component_from_string(c.get<std::string>()));
    const Json& adaptation = require(obj, "adaptation");
    const std::string kind = require_string(adaptation, "kind");
    if (kind == "low_rank") {
        r.adaptation.low_rank = true;
        r.adaptation.rank = static_cast<int>(require_int(adaptation, "rank"));
    } else if (kind != "none") {
        fail("adaptation.kind must be none or low_rank", "adaptation");
    }
    r.data_mix = record_from_json<MixSpec>(require(obj, "data_mix"), mode);
    if (auto it = obj.find("adapter_targets"); it != obj.end()) {
        for (const Json& t : *it) r.adapter_targets.push_back(t.get<std::string>());
    }
    if (auto it = obj.find("optimizer"); it != obj.end() && !it->empty()) r.optimizer = it->dump();
    r.extra = collect_extra(
        obj, {"stage", "trainable", "adaptation", "data_mix", "adapter_targets", "optimizer"},
        mode);
    r.validate();
    return r;
}

// ------------------------------------------------------------ generic plumbing

namespace {

template <typename T>
std::string dedupe_key(const T&) {
    return "";
}

template <>
std::string dedupe_key(const FaceImageRef& r) {
    return r.id;
}

template <>
std::string dedupe_key(const QAPair& r) {
    return r.id;
}

template <>
std::string dedupe_key(const PersonAnnotation& r) {
    return r.image.id + "\x1f" + std::to_string(r.person_index);
}

}  // namespace

template <typename T>
std::string record_kind_name();

template <>
std::string record_kind_name<FaceImageRef>() {
    return "face_image_ref";
}
template <>
std::string record_kind_name<PersonAnnotation>() {
    return "person_annotation";
}
template <>
std::string record_kind_name<QAPair>() {
    return "qa_pair";
}
template <>
std::string record_kind_name<RawAnnotationResponse>() {
    return "raw_annotation_response";
}
template <>
std::string record_kind_name<DropRecord>() {
    return "drop_record";
}
template <>
std::string record_kind_name<FailureRecord>() {
    return "failure_record";
}
template <>
std::string record_kind_name<EvalRecord>() {
    return "eval_record";
}
template <>
std::string record_kind_name<ZeroShotLabel>() {
    return "zero_shot_label";
}
template <>
std::string record_kind_name<MixSpec>() {
    return "mix_spec";
}
template <>
std::string record_kind_name<StageSpec>() {
    return "stage_spec";
}

template <typename T>
std::size_t write_records(const std::vector<T>& records, std::ostream& out) {
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < records.size(); ++i) {
        try {
            records[i].validate();
            const std::string key = dedupe_key(records[i]);
            if (!key.empty() && !seen.insert(key).second)
                fail("duplicate record key: " + key, "id");
        } catch (const ValidationError& e) {
            throw ValidationError("record " + std::to_string(i) + ": " + e.what(), e.field());
        }
        out << record_to_json(records[i]).dump() << '\n';
    }
    if (!out) fail("write failed");
    return records.size();
}

template <typename T>
std::size_t write_records_file(const std::vector<T>& records, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail("cannot open for writing: " + path.string());
    return write_records(records, out);
}

template <typename T>
ReadResult<T> read_records(std::istream& in, SchemaMode mode) {
    ReadResult<T> result;
    std::unordered_set<std::string> seen;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        Json obj;
        try {
            obj = Json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            result.errors.push_back({line_no, std::string("malformed line: ") + e.what(), ""});
            continue;
        }
        try {
            T record = record_from_json<T>(obj, mode);
            const std::string key = dedupe_key(record);
            if (!key.empty() && !seen.insert(key).second)
                fail("duplicate record key: " + key, "id");
            result.records.push_back(std::move(record));
        } catch (const ValidationError& e) {
            result.errors.push_back({line_no, e.what(), e.field()});
        }
    }
    return result;
}

template <typename T>
std::vector<T> read_records_file(const std::filesystem::path& path, SchemaMode mode) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("cannot open record file: " + path.string());
    ReadResult<T> result = read_records<T>(in, mode);
    if (!result.ok()) {
        const LineError& e = result.errors.front();
        throw ValidationError(path.string() + ":" + std::to_string(e.line) + ": " + e.message,
                              e.field);
    }
    return std::move(result.records);
}

std::vector<std::string> read_lines_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("cannot open file: " + path.string());
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

void write_lines_file(const std::vector<std::string>& lines, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail("cannot open for writing: " + path.string());
    for (const auto& line : lines) out << line << '\n';
    if (!out) fail("write failed: " + path.string());
}

#define FACEKIT_INSTANTIATE_IO(T)                                                        \
    template std::size_t write_records<T>(const std::vector<T>&, std::ostream&);         \
    template std::size_t write_records_file<T>(const std::vector<T>&,                    \
                                               const std::filesystem::path&);            \
    template ReadResult<T> read_records<T>(std::istream&, SchemaMode);                   \
    template std::vector<T> read_records_file<T>(const std::filesystem::path&, SchemaMode)

FACEKIT_INSTANTIATE_IO(FaceImageRef);
FACEKIT_INSTANTIATE_IO(PersonAnnotation);
FACEKIT_INSTANTIATE_IO(QAPair);
FACEKIT_INSTANTIATE_IO(RawAnnotationResponse);
FACEKIT_INSTANTIATE_IO(DropRecord);
FACEKIT_INSTANTIATE_IO(FailureRecord);
FACEKIT_INSTANTIATE_IO(EvalRecord);
FACEKIT_INSTANTIATE_IO(ZeroShotLabel);
FACEKIT_INSTANTIATE_IO(MixSpec);
FACEKIT_INSTANTIATE_IO(StageSpec);

#undef FACEKIT_INSTANTIATE_IO

}  // namespace facekit
