#include "ramsey/partition.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace ramsey {

int Partition::vertex_count() const {
    int n = static_cast<int>(v0.size());
    for (const auto& p : parts) n += static_cast<int>(p.size());
    return n;
}

void Partition::validate_over(int n) const {
    std::vector<char> seen(n, 0);
    auto mark = [&](const VertexSet& vs) {
        for (int v : vs) {
            if (v < 0 || v >= n) throw std::invalid_argument("partition: vertex out of range");
            if (seen[v]) throw std::invalid_argument("partition: vertex appears twice");
            seen[v] = 1;
        }
    };
    mark(v0);
    for (const auto& p : parts) mark(p);
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
        throw std::invalid_argument("partition: does not cover the vertex set");
    for (const auto& p : parts)
        if (p.size() != parts.front().size())
            throw std::invalid_argument("partition: parts have unequal sizes");
}

Partition equitable_random_partition(int n, int K, std::uint64_t seed) {
    if (K < 1 || K > n) throw std::invalid_argument("equitable_random_partition: K out of range");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937_64 rng(seed);
    for (int i = n - 1; i > 0; --i) {
        int j = static_cast<int>(std::uniform_int_distribution<long long>(0, i)(rng));
        std::swap(perm[i], perm[j]);
    }
    int size = n / K, rem = n % K;
    Partition pi;
    pi.v0.assign(perm.begin(), perm.begin() + rem);
    std::sort(pi.v0.begin(), pi.v0.end());
    for (int i = 0; i < K; ++i) {
        VertexSet part(perm.begin() + rem + static_cast<std::size_t>(i) * size,
                       perm.begin() + rem + static_cast<std::size_t>(i + 1) * size);
        std::sort(part.begin(), part.end());
        pi.parts.push_back(std::move(part));
    }
    return pi;
}

}  // namespace ramsey
