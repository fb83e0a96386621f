#pragma once

#include <cstdint>
#include <vector>

namespace hodgespec {

/// All k-element subsets of `items`, in lexicographic order of index tuples.
template <typename T>
std::vector<std::vector<T>> combinations(const std::vector<T>& items, int k) {
    std::vector<std::vector<T>> out;
    if (k < 0 || static_cast<std::size_t>(k) > items.size()) return out;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    const int n = static_cast<int>(items.size());
    while (true) {
        std::vector<T> subset;
        subset.reserve(k);
        for (int i : idx) subset.push_back(items[i]);
        out.push_back(std::move(subset));
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int l = i + 1; l < k; ++l) idx[l] = idx[l - 1] + 1;
    }
    return out;
}

inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return r;
}

} // namespace hodgespec
