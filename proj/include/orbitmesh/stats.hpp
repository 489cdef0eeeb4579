#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace orbitmesh {

// Nearest-rank percentile over a sorted ascending sample set:
// the ceil(p/100 * n)-th smallest value, 1-indexed.
template <typename T>
T nearest_rank(const std::vector<T>& sorted, double percentile) {
    if (sorted.empty()) {
        throw std::invalid_argument("nearest_rank: empty sample set");
    }
    if (percentile <= 0.0) {
        return sorted.front();
    }
    std::size_t rank = static_cast<std::size_t>(
        std::max(1.0, std::ceil(percentile / 100.0 * static_cast<double>(sorted.size()))));
    if (rank > sorted.size()) {
        rank = sorted.size();
    }
    return sorted[rank - 1];
}

}  // namespace orbitmesh
