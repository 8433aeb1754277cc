#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "ordlex/corpus.hpp"

namespace ordlex {

enum class RankingMode { own_corpus, common_list };

/// Competition ranking of word types: rank = 1 + number of types with a
/// strictly greater count; equal counts share a rank.
struct FrequencyRanking {
    std::unordered_map<std::string, std::uint32_t> rank_of;
    RankingMode mode = RankingMode::own_corpus;
};

enum class TieMode { jitter, temporal, raw };

struct TieBreakConfig {
    TieMode mode = TieMode::jitter;
    std::uint64_t seed = 0;
};

/// The rank time series of a document. Values are the per-token frequency
/// ranks, real-valued once ties have been broken.
struct RankSequence {
    std::vector<double> values;
    TieMode tie_mode = TieMode::raw;
    std::uint64_t seed = 0;       // meaningful for jitter mode only
    std::size_t dropped = 0;      // tokens absent from a common-list ranking

    std::size_t size() const { return values.size(); }
};

FrequencyRanking build_ranking(const FrequencyTable& table);
FrequencyRanking build_ranking(const ExternalFrequencyList& list);

const char* tie_mode_name(TieMode mode);
TieMode tie_mode_from_name(const std::string& name);

/// Replaces each token with its rank, drops tokens a common-list ranking
/// does not cover, then applies the configured tie resolution. In
/// own-corpus mode an unranked token is an internal consistency error.
RankSequence to_rank_sequence(const Document& doc, const FrequencyRanking& ranking,
                              const TieBreakConfig& cfg);

/// Breaks maximal runs of equal adjacent values by adding an independent
/// uniform draw to every run element. The draw interval keeps each value
/// strictly between the nearest distinct neighbor below and above the run
/// value (margin 1 when a side has no such neighbor); the whole run is
/// redrawn in the unlikely event an exact adjacent equality survives.
std::vector<double> jitter_ties(const std::vector<double>& values, std::uint64_t seed);

/// Breaks ties by temporal order: element j of a k-long equal run becomes
/// v + j*eps with eps = min(1, gap to the next greater right neighbor) /
/// (k + 1), so earlier occurrences stay smaller and the run never crosses
/// its right neighbor.
std::vector<double> temporal_ties(const std::vector<double>& values);

}  // namespace ordlex
