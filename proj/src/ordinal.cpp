#include "ordlex/ordinal.hpp"

#include <algorithm>
#include <string>

#include "ordlex/errors.hpp"

namespace ordlex {

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

void EmbeddingConfig::validate() const {
    if (dimension < 2 || dimension > 8) {
        throw ValidationError("embedding dimension must be in [2, 8], got " +
                              std::to_string(dimension));
    }
    if (delay < 1) {
        throw ValidationError("embedding delay must be >= 1, got " + std::to_string(delay));
    }
}

std::uint32_t EmbeddingConfig::pattern_count() const {
    return static_cast<std::uint32_t>(factorial(dimension));
}

int PatternDistribution::dimension() const {
    for (int d = 2; d <= 8; ++d) {
        if (factorial(d) == probs.size()) return d;
    }
    throw ValidationError("distribution has " + std::to_string(probs.size()) +
                          " bins, not a factorial of 2..8");
}

std::uint32_t pattern_of_window(std::span<const double> window,
                                const EmbeddingConfig& config) {
    config.validate();
    const int d = config.dimension;
    if (window.size() != static_cast<std::size_t>(d)) {
        throw ValidationError("window size " + std::to_string(window.size()) +
                              " does not match dimension " + std::to_string(d));
    }
    // Lehmer code of the within-window rank vector, evaluated directly on
    // the values: the lexicographic index accumulates, per position, how
    // many later values are smaller.
    std::uint64_t index = 0;
    for (int a = 0; a < d; ++a) {
        int smaller_after = 0;
        for (int b = a + 1; b < d; ++b) {
            if (window[b] == window[a]) {
                throw ValidationError("tie inside window at offsets " + std::to_string(a) +
                                      " and " + std::to_string(b));
            }
            if (window[b] < window[a]) ++smaller_after;
        }
        index += static_cast<std::uint64_t>(smaller_after) * factorial(d - 1 - a);
    }
    return static_cast<std::uint32_t>(index + 1);
}

PatternSequence symbolize(std::span<const double> values, const EmbeddingConfig& config) {
    config.validate();
    const int d = config.dimension;
    const int tau = config.delay;
    const std::size_t reach = static_cast<std::size_t>(d - 1) * static_cast<std::size_t>(tau);
    if (values.size() < reach + 1) {
        throw ValidationError("sequence of length " + std::to_string(values.size()) +
                              " too short for D=" + std::to_string(d) +
                              ", tau=" + std::to_string(tau));
    }

    PatternSequence ps;
    ps.config = config;
    const std::size_t count = values.size() - reach;
    ps.labels.resize(count);
    std::vector<double> window(static_cast<std::size_t>(d));
    for (std::size_t i = 0; i < count; ++i) {
        for (int a = 0; a < d; ++a) {
            window[static_cast<std::size_t>(a)] =
                values[i + static_cast<std::size_t>(a) * static_cast<std::size_t>(tau)];
        }
        try {
            ps.labels[i] = pattern_of_window(window, config);
        } catch (const ValidationError& e) {
            throw ValidationError(std::string(e.what()) + " (window at position " +
                                  std::to_string(i) + ")");
        }
    }
    return ps;
}

std::vector<int> index_to_rank_vector(std::uint32_t label, int dimension) {
    EmbeddingConfig{dimension, 1}.validate();
    const std::uint64_t total = factorial(dimension);
    if (label < 1 || label > total) {
        throw ValidationError("pattern label " + std::to_string(label) +
                              " out of range [1, " + std::to_string(total) + "]");
    }
    std::uint64_t k = label - 1;
    std::vector<int> unused(static_cast<std::size_t>(dimension));
    for (int i = 0; i < dimension; ++i) unused[static_cast<std::size_t>(i)] = i;
    std::vector<int> rv(static_cast<std::size_t>(dimension));
    for (int a = 0; a < dimension; ++a) {
        const std::uint64_t f = factorial(dimension - 1 - a);
        const std::uint64_t pick = k / f;
        k %= f;
        rv[static_cast<std::size_t>(a)] = unused[static_cast<std::size_t>(pick)];
        unused.erase(unused.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return rv;
}

std::uint32_t rank_vector_to_index(std::span<const int> rank_vector) {
    const int d = static_cast<int>(rank_vector.size());
    EmbeddingConfig{d, 1}.validate();
    std::vector<bool> seen(static_cast<std::size_t>(d), false);
    for (int v : rank_vector) {
        if (v < 0 || v >= d || seen[static_cast<std::size_t>(v)]) {
            throw ValidationError("rank vector is not a permutation of 0.." +
                                  std::to_string(d - 1));
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
    std::uint64_t index = 0;
    for (int a = 0; a < d; ++a) {
        int smaller_after = 0;
        for (int b = a + 1; b < d; ++b) {
            if (rank_vector[static_cast<std::size_t>(b)] <
                rank_vector[static_cast<std::size_t>(a)]) {
                ++smaller_after;
            }
        }
        index += static_cast<std::uint64_t>(smaller_after) * factorial(d - 1 - a);
    }
    return static_cast<std::uint32_t>(index + 1);
}

PatternDistribution distribution(const PatternSequence& ps) {
    if (ps.labels.empty()) throw ValidationError("distribution: empty pattern sequence");
    PatternDistribution dist;
    dist.probs.assign(ps.config.pattern_count(), 0.0);
    for (std::uint32_t label : ps.labels) dist.probs[label - 1] += 1.0;
    dist.support_count = ps.labels.size();
    const double n = static_cast<double>(dist.support_count);
    for (double& p : dist.probs) p /= n;
    return dist;
}

}  // namespace ordlex
