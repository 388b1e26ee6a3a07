#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "facekit/mix.hpp"

namespace facekit {

enum class ModelComponent { vision_encoder, projector, language_model };

std::string_view to_string(ModelComponent c);
ModelComponent model_component_from_string(std::string_view s);

struct Adaptation {
    bool low_rank = false;
    int rank = 0;

    bool operator==(const Adaptation&) const = default;
};

/// Machine-readable description of one training stage: what unfreezes,
/// which adaptation rank applies and which data mix feeds it. Consumed by
/// an external trainer; nothing here executes training.
struct StageSpec {
    int stage = 1;
    std::set<ModelComponent> trainable;
    Adaptation adaptation;
    MixSpec data_mix;
    /// Which weight subsets the low-rank adapters attach to; left to the
    /// downstream trainer.
    std::vector<std::string> adapter_targets;
    /// Free-form optimizer settings (JSON object text); no defaults.
    std::string optimizer;
    std::string extra;

    void validate() const;  // structural checks only
    bool operator==(const StageSpec&) const = default;
};

/// The shipped recipe. Stage 1 trains the projector only; stages 2 and 3
/// unfreeze projector + language model under low-rank adaptation with
/// ranks 16 and 8.
StageSpec default_stage_spec(int stage);

/// Full conformance check: stage rules plus mix-count arithmetic. Returns
/// every violation; empty means ok.
std::vector<std::string> validate_manifest(const StageSpec& spec);

/// Divides every fixed mix count by `divisor` for desk-scale rehearsal.
StageSpec scale_stage_spec(StageSpec spec, std::uint64_t divisor);

}  // namespace facekit
