#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace facekit {

struct MixSource {
    std::string role;
    std::string path;  // inventory record file; informational in manifests
    std::uint64_t count = 0;
    /// Take everything the inventory holds instead of a fixed count.
    bool all_available = false;

    bool operator==(const MixSource&) const = default;
};

/// Declares one training-stage data mix: which sources, how many records
/// from each, and the sampling seed.
struct MixSpec {
    std::string name;
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> total;  // must equal the sum of counts when set
    std::vector<MixSource> sources;
    std::string extra;

    void validate() const;
    bool operator==(const MixSpec&) const = default;
};

struct MixManifestEntry {
    std::string role;
    std::string path;
    std::uint64_t available = 0;
    std::uint64_t sampled = 0;
    double proportion = 0.0;
};

struct MixManifest {
    std::string name;
    std::uint64_t seed = 0;
    std::uint64_t total = 0;
    std::vector<MixManifestEntry> sources;
};

/// Samples each source uniformly without replacement, interleaves the
/// result with one seeded shuffle and reports exact counts. Inventories
/// are raw record lines; they are not schema-validated so general corpora
/// can be mixed in. `downscale` divides every fixed count (1 = off).
/// Throws ValidationError naming the source when an inventory is too
/// small.
MixManifest assemble_mix(const MixSpec& spec,
                         const std::map<std::string, std::vector<std::string>>& inventories,
                         std::uint64_t downscale, std::vector<std::string>& out_lines);

std::string mix_manifest_to_json_text(const MixManifest& manifest);

}  // namespace facekit
