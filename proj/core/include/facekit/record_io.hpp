#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "facekit/annotate.hpp"
#include "facekit/cleaning.hpp"
#include "facekit/eval.hpp"
#include "facekit/manifest.hpp"
#include "facekit/mix.hpp"
#include "facekit/types.hpp"
#include "facekit/zeroshot.hpp"

namespace facekit {

/// Insertion-ordered JSON keeps record field order stable on disk.
using Json = nlohmann::ordered_json;

/// strict rejects fields outside the schema; lenient keeps them on the
/// record's `extra` slot so they survive a read/write round trip.
enum class SchemaMode { strict, lenient };

struct LineError {
    std::size_t line = 0;  // 1-based
    std::string message;
    std::string field;
};

template <typename T>
struct ReadResult {
    std::vector<T> records;
    std::vector<LineError> errors;

    bool ok() const { return errors.empty(); }
};

// Per-type serialization. from_json validates invariants; record files
// never hold unvalidated values.
Json record_to_json(const FaceImageRef& r);
Json record_to_json(const PersonAnnotation& r);
Json record_to_json(const QAPair& r);
Json record_to_json(const RawAnnotationResponse& r);
Json record_to_json(const DropRecord& r);
Json record_to_json(const FailureRecord& r);
Json record_to_json(const EvalRecord& r);
Json record_to_json(const ZeroShotLabel& r);
Json record_to_json(const MixSpec& r);
Json record_to_json(const StageSpec& r);

template <typename T>
T record_from_json(const Json& obj, SchemaMode mode);

template <typename T>
std::string record_kind_name();

/// Writes one record per line, validating each. An invalid record throws a
/// ValidationError naming the record index and the violated invariant;
/// nothing is written past it. Returns the number of lines written.
template <typename T>
std::size_t write_records(const std::vector<T>& records, std::ostream& out);

template <typename T>
std::size_t write_records_file(const std::vector<T>& records, const std::filesystem::path& path);

/// Reads and validates every line. Malformed lines and invariant
/// violations land in `errors` with their 1-based line number; valid
/// records are kept, so one bad line never hides the rest.
template <typename T>
ReadResult<T> read_records(std::istream& in, SchemaMode mode = SchemaMode::lenient);

/// Throwing convenience wrapper: raises ValidationError on the first
/// error, message prefixed with "<path>:<line>".
template <typename T>
std::vector<T> read_records_file(const std::filesystem::path& path,
                                 SchemaMode mode = SchemaMode::lenient);

std::vector<std::string> read_lines_file(const std::filesystem::path& path);
void write_lines_file(const std::vector<std::string>& lines, const std::filesystem::path& path);

}  // namespace facekit
