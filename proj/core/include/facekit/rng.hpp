#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace facekit {

// FNV-1a, used to derive per-item seeds. Stable across platforms, unlike
// std::hash.
constexpr std::uint64_t fnv1a64(std::string_view data,
                                std::uint64_t seed = 0xcbf29ce484222325ull) {
    std::uint64_t h = seed;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::string_view part) {
    // Fold the seed bytes in first so (seed, id) pairs never collide with
    // (seed', id') pairs that happen to concatenate equally.
    char buf[8];
    for (int i = 0; i < 8; ++i) buf[i] = static_cast<char>(seed >> (i * 8));
    return fnv1a64(part, fnv1a64(std::string_view(buf, 8)));
}

template <typename... Parts>
std::uint64_t derive_seed(std::uint64_t seed, Parts&&... parts) {
    ((seed = mix_seed(seed, parts)), ...);
    return seed;
}

/// Deterministic RNG wrapper. All sampling goes through bounded() and
/// shuffle() so results do not depend on the standard library's
/// distribution implementations.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform integer in [0, n). Rejection sampling, no modulo bias.
    std::uint64_t bounded(std::uint64_t n) {
        if (n == 0) return 0;
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    bool coin() { return (engine_() & 1u) != 0; }

    /// True with probability num/den.
    bool chance(std::uint64_t num, std::uint64_t den) {
        return bounded(den) < num;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(bounded(i));
            using std::swap;
            swap(v[i - 1], v[j]);
        }
    }

    /// k distinct indices from [0, n), order of draw preserved.
    std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k);

  private:
    std::mt19937_64 engine_;
};

}  // namespace facekit
