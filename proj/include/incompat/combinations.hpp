#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace incompat {

// Binomial coefficient C(n, k); 0 when k > n.
std::uint64_t binomial(std::size_t n, std::size_t k);

// k-subset of [0, n) with lexicographic rank `index`.
std::vector<std::size_t> unrank_combination(std::size_t n, std::size_t k, std::uint64_t index);

// Advances `subset` (strictly increasing, values < n) to its lexicographic
// successor. Returns false once the last subset has been passed.
bool next_combination(std::vector<std::size_t>& subset, std::size_t n);

// [0, n) minus the sorted `subset`.
std::vector<std::size_t> complement(const std::vector<std::size_t>& subset, std::size_t n);

}  // namespace incompat
