#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string_view>
#include <vector>

namespace hyperhs::util {

using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t fnv1a(std::string_view text);

// Sub-seed for one chunk of one named stream:
//   splitmix64(splitmix64(master ^ fnv1a(tag)) + chunk)
// Every stochastic routine in the library draws its chunk generators this way,
// so results depend on (master, tag, chunk_size) only.
std::uint64_t derive_seed(std::uint64_t master, std::string_view tag, std::uint64_t chunk);

struct ChunkPlan {
    std::size_t n_samples = 0;
    std::size_t chunk_size = 1 << 15;
    unsigned threads = 0;  // 0: hardware concurrency
};

struct Chunk {
    std::size_t index;
    std::size_t begin;
    std::size_t end;
};

// Runs body(chunk) for all chunks of [0, n_samples), possibly on several
// threads, and returns the per-chunk results in chunk order. The reduction
// order is therefore fixed by the plan, not by scheduling.
template <class Result>
std::vector<Result> run_chunks(const ChunkPlan& plan, const std::function<Result(const Chunk&)>& body);

void run_chunk_indices(std::size_t n_chunks, unsigned threads,
                       const std::function<void(std::size_t)>& body);

inline std::size_t chunk_count(const ChunkPlan& plan) {
    return plan.chunk_size == 0 ? 0 : (plan.n_samples + plan.chunk_size - 1) / plan.chunk_size;
}

template <class Result>
std::vector<Result> run_chunks(const ChunkPlan& plan, const std::function<Result(const Chunk&)>& body) {
    const std::size_t n_chunks = chunk_count(plan);
    std::vector<Result> out(n_chunks);
    run_chunk_indices(n_chunks, plan.threads, [&](std::size_t k) {
        const std::size_t begin = k * plan.chunk_size;
        const std::size_t end = std::min(plan.n_samples, begin + plan.chunk_size);
        out[k] = body(Chunk{k, begin, end});
    });
    return out;
}

}  // namespace hyperhs::util
