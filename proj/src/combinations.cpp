#include "incompat/combinations.hpp"

#include "incompat/error.hpp"

namespace incompat {

std::uint64_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t result = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        // Exact at every step: result * (n - k + i) is divisible by i.
        result = result * (n - k + i) / i;
    }
    return result;
}

std::vector<std::size_t> unrank_combination(std::size_t n, std::size_t k, std::uint64_t index) {
    if (k > n || index >= binomial(n, k)) {
        throw Error(ErrorCode::domain, "combination rank out of range");
    }
    std::vector<std::size_t> out;
    out.reserve(k);
    std::size_t next = 0;
    for (std::size_t slot = 0; slot < k; ++slot) {
        // Skip whole blocks of subsets that start with `next`.
        while (true) {
            const std::uint64_t block = binomial(n - next - 1, k - slot - 1);
            if (index < block) break;
            index -= block;
            ++next;
        }
        out.push_back(next);
        ++next;
    }
    return out;
}

bool next_combination(std::vector<std::size_t>& subset, std::size_t n) {
    const std::size_t k = subset.size();
    for (std::size_t i = k; i-- > 0;) {
        if (subset[i] < n - k + i) {
            ++subset[i];
            for (std::size_t j = i + 1; j < k; ++j) {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    return false;
}

std::vector<std::size_t> complement(const std::vector<std::size_t>& subset, std::size_t n) {
    std::vector<std::size_t> out;
    out.reserve(n - subset.size());
    std::size_t pos = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (pos < subset.size() && subset[pos] == i) {
            ++pos;
        } else {
            out.push_back(i);
        }
    }
    return out;
}

}  // namespace incompat
