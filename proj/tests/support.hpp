#pragma once

#include <random>
#include <vector>

#include "specht/partition.hpp"

// hand-rolled generators shared by the property tests
namespace specht::testing {

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x5eed5eedULL);
    return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

// uniform-ish random partition of n: peel random parts off, largest first
inline Partition random_partition(int n) {
    std::vector<int> parts;
    int left = n, cap = n;
    while (left > 0) {
        int p = uniform(1, std::min(left, cap));
        parts.push_back(p);
        left -= p;
        cap = p;
    }
    return Partition(parts);
}

inline std::vector<Partition> all_partitions_upto(int max_n, int min_n = 1) {
    std::vector<Partition> out;
    for (int n = min_n; n <= max_n; ++n)
        for (auto& p : partitions_of(n))
            out.push_back(p);
    return out;
}

}  // namespace specht::testing
