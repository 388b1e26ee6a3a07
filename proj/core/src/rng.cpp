#include "facekit/rng.hpp"

#include <stdexcept>
#include <unordered_set>

namespace facekit {

std::vector<std::size_t> Rng::sample_indices(std::size_t n, std::size_t k) {
    if (k > n) throw std::invalid_argument("sample_indices: k > n");
    std::vector<std::size_t> out;
    out.reserve(k);
    if (k == 0) return out;
    // Floyd's algorithm keeps memory at O(k) even for huge inventories.
    std::unordered_set<std::size_t> seen;
    seen.reserve(k * 2);
    for (std::size_t j = n - k; j < n; ++j) {
        std::size_t t = static_cast<std::size_t>(bounded(j + 1));
        if (seen.count(t)) t = j;
        seen.insert(t);
        out.push_back(t);
    }
    return out;
}

}  // namespace facekit
