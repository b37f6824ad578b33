// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace tancode {

/// All sorted k-subsets of {0..n-1} in lexicographic order.
inline std::vector<std::vector<size_t>> combinations(size_t n, size_t k) {
    std::vector<std::vector<size_t>> out;
    if (k > n) return out;
    std::vector<size_t> c(k);
    for (size_t i = 0; i < k; ++i) c[i] = i;
    while (true) {
        out.push_back(c);
        size_t i = k;
        while (i-- > 0) {
            if (c[i] != i + n - k) {
                ++c[i];
                for (size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
                break;
            }
            if (i == 0) return out;
        }
        if (k == 0) return out;
    }
}

/// n-digit odometer over {0..base-1}, visiting tuples in ascending order.
inline void for_each_tuple(size_t digits, uint64_t base, const std::function<void(const std::vector<uint64_t>&)>& fn) {
    std::vector<uint64_t> t(digits, 0);
    while (true) {
        fn(t);
        size_t i = 0;
        while (i < digits && ++t[i] == base) t[i++] = 0;
        if (i == digits) return;
    }
}

}  // namespace tancode
