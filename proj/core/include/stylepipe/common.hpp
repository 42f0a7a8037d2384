/**
 * @file common.hpp
 * @brief Shared infrastructure: error types, seeded RNG, hashing, threading.
 */
#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stylepipe {

inline constexpr const char* kToolVersion = "0.1.0";

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Violated precondition or malformed argument (domain errors).
class InvalidArgumentError : public Error {
public:
    using Error::Error;
};

/// Bad configuration: unknown layer names, mismatched hashes, missing backbones.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// File-system / decode / serialization failures.
class IoError : public Error {
public:
    using Error::Error;
};

/// Corpus ingestion failure; carries the offending paths.
class IngestionError : public Error {
public:
    IngestionError(const std::string& msg, std::vector<std::string> bad_paths)
        : Error(msg), bad_paths_(std::move(bad_paths)) {}
    const std::vector<std::string>& bad_paths() const { return bad_paths_; }

private:
    std::vector<std::string> bad_paths_;
};

/// Raised when a training step cannot proceed (e.g. non-finite loss).
class TrainingError : public Error {
public:
    using Error::Error;
};

// ---------------------------------------------------------------------------
// Deterministic RNG
//
// All randomness in the library flows through Rng so that results are
// reproducible across platforms and standard-library versions (std::
// distributions are implementation-defined; this generator is not).
// ---------------------------------------------------------------------------

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    /// splitmix64 step.
    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) { return n ? next_u64() % n : 0; }

    /// Standard normal via Box-Muller.
    double normal() {
        double u1 = uniform();
        double u2 = uniform();
        if (u1 < 1e-300) u1 = 1e-300;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

    /// Derive an independent stream, e.g. per-epoch or per-layer.
    Rng fork(std::uint64_t stream) const {
        Rng child(state_ ^ (0x9e3779b97f4a7c15ull * (stream + 1)));
        child.next_u64();
        return child;
    }

    /// Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::uint64_t state_;
};

// ---------------------------------------------------------------------------
// Hashing (FNV-1a); used for config hashes and weight checksums.
// ---------------------------------------------------------------------------

inline std::uint64_t fnv1a64(const void* data, std::size_t size,
                             std::uint64_t seed = 0xcbf29ce484222325ull) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    std::uint64_t h = seed;
    for (std::size_t i = 0; i < size; ++i) {
        h ^= bytes[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

inline std::uint64_t fnv1a64(std::string_view text,
                             std::uint64_t seed = 0xcbf29ce484222325ull) {
    return fnv1a64(text.data(), text.size(), seed);
}

// ---------------------------------------------------------------------------
// Deterministic parallel helper
//
// Splits [0, n) into contiguous chunks, one per worker. Each index is
// processed by exactly one thread, so results do not depend on scheduling.
// ---------------------------------------------------------------------------

void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& chunk_fn,
                  std::size_t min_chunk = 1024);

}  // namespace stylepipe
