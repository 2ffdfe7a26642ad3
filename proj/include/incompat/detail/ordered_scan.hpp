#pragma once

#include "incompat/rank.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <optional>
#include <thread>
#include <vector>

namespace incompat::detail {

struct ScanHit {
    int value = 0;
    std::uint64_t outer = 0;
    std::uint64_t inner = 0;
};

struct ScanOutcome {
    std::optional<ScanHit> best;
    DecisionStats stats;
};

// Scans outer items [0, count) in order and keeps the first hit with the
// largest value, stopping as soon as a hit reaches `bound`.
//
// `visit(outer, bound, stats)` returns the best hit inside one outer item (the
// first inner candidate achieving the item's maximum, stopping early at
// `bound`) and records its rank decisions into `stats`. It must be callable
// concurrently.
//
// Work is split into fixed chunks of consecutive outer items. A chunk stops at
// its first bound-reaching item and chunks are merged in order, discarding
// everything after the first chunk that reached the bound. The result,
// including the statistics, is therefore the same as a sequential scan for
// any thread count.
template <class Visit>
ScanOutcome ordered_scan(std::uint64_t count, int bound, unsigned threads, Visit&& visit) {
    struct ChunkResult {
        std::optional<ScanHit> best;
        DecisionStats stats;
        bool reached_bound = false;
    };

    auto run_chunk = [&](std::uint64_t begin, std::uint64_t end, ChunkResult& out) {
        for (std::uint64_t outer = begin; outer < end; ++outer) {
            std::optional<ScanHit> hit = visit(outer, bound, out.stats);
            if (hit && (!out.best || hit->value > out.best->value)) {
                out.best = hit;
            }
            if (out.best && out.best->value >= bound) {
                out.reached_bound = true;
                return;
            }
        }
    };

    ScanOutcome outcome;
    if (count == 0) return outcome;

    if (threads <= 1 || count < 2) {
        ChunkResult all;
        run_chunk(0, count, all);
        outcome.best = all.best;
        outcome.stats = all.stats;
        return outcome;
    }

    const std::uint64_t chunk_size = std::max<std::uint64_t>(1, count / (std::uint64_t{threads} * 8));
    const std::uint64_t n_chunks = (count + chunk_size - 1) / chunk_size;
    std::vector<ChunkResult> results(n_chunks);
    std::atomic<std::uint64_t> next_chunk{0};
    std::atomic<std::uint64_t> first_bound_chunk{std::numeric_limits<std::uint64_t>::max()};

    auto worker = [&] {
        while (true) {
            const std::uint64_t c = next_chunk.fetch_add(1);
            if (c >= n_chunks || c > first_bound_chunk.load()) return;
            const std::uint64_t begin = c * chunk_size;
            const std::uint64_t end = std::min(count, begin + chunk_size);
            run_chunk(begin, end, results[c]);
            if (results[c].reached_bound) {
                std::uint64_t seen = first_bound_chunk.load();
                while (c < seen && !first_bound_chunk.compare_exchange_weak(seen, c)) {
                }
            }
        }
    };

    {
        const unsigned n_workers = static_cast<unsigned>(std::min<std::uint64_t>(threads, n_chunks));
        std::vector<std::jthread> pool;
        pool.reserve(n_workers);
        for (unsigned i = 0; i < n_workers; ++i) pool.emplace_back(worker);
    }

    for (std::uint64_t c = 0; c < n_chunks; ++c) {
        const ChunkResult& r = results[c];
        outcome.stats.merge(r.stats);
        if (r.best && (!outcome.best || r.best->value > outcome.best->value)) {
            outcome.best = r.best;
        }
        if (r.reached_bound) break;
    }
    return outcome;
}

}  // namespace incompat::detail
