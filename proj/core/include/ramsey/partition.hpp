#pragma once

#include "ramsey/graph.hpp"

#include <cstdint>

namespace ramsey {

// Equitable vertex partition V0 | V1..VK: the exceptional set V0 absorbs the
// remainder, all numbered parts have equal size.
struct Partition {
    VertexSet v0;
    std::vector<VertexSet> parts;

    int part_count() const { return static_cast<int>(parts.size()); }
    int part_size() const { return parts.empty() ? 0 : static_cast<int>(parts.front().size()); }
    int vertex_count() const;

    // disjointness, coverage of [0,n), equal part sizes
    void validate_over(int n) const;
};

// Uniformly random equitable partition: shuffle 0..n-1, first n%K vertices to
// V0, then K consecutive blocks of floor(n/K). Same seed, same partition.
Partition equitable_random_partition(int n, int K, std::uint64_t seed);

}  // namespace ramsey
