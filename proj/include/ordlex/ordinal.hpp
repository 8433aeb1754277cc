#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace ordlex {

struct EmbeddingConfig {
    int dimension = 4;  // values per ordinal window, 2..8
    int delay = 1;      // index separation between window elements

    /// Throws ValidationError when outside the supported range.
    void validate() const;
    std::uint32_t pattern_count() const;  // dimension!
};

std::uint64_t factorial(int n);

/// Ordinal pattern sequence of a rank series.
struct PatternSequence {
    std::vector<std::uint32_t> labels;  // 1 .. D!
    EmbeddingConfig config;

    std::size_t size() const { return labels.size(); }
};

/// Normalized histogram of pattern labels over all D! bins.
struct PatternDistribution {
    std::vector<double> probs;  // index k-1 holds the probability of label k
    std::size_t support_count = 0;

    int dimension() const;
    /// True when the window count is small against the D! bins
    /// (support_count < 100 * D!), so probabilities are poorly estimated.
    bool low_support() const { return support_count < 100 * probs.size(); }
};

/// Label of one window of strictly distinct values: the 1-based
/// lexicographic index of the window's within-window rank vector (the
/// position of the smallest value gets rank 0). Label 1 is the fully
/// increasing window. Throws ValidationError naming the offending offsets
/// when two window values are equal.
std::uint32_t pattern_of_window(std::span<const double> window,
                                const EmbeddingConfig& config);

/// Symbolizes the whole series with overlapping stride-1 windows:
/// labels[i] covers (v[i], v[i+tau], ..., v[i+(D-1)tau]). The result has
/// length W' - (D-1)*tau.
PatternSequence symbolize(std::span<const double> values, const EmbeddingConfig& config);

/// Lexicographic unranking: the rank vector for a label (1 .. D!).
std::vector<int> index_to_rank_vector(std::uint32_t label, int dimension);

/// Lexicographic ranking: the label of a rank vector (a permutation of
/// 0..D-1).
std::uint32_t rank_vector_to_index(std::span<const int> rank_vector);

/// Normalized histogram over D! bins in label order.
PatternDistribution distribution(const PatternSequence& ps);

}  // namespace ordlex
