#include "ordlex/ranking.hpp"

#include <algorithm>
#include <cmath>

#include "ordlex/errors.hpp"
#include "ordlex/rng.hpp"

namespace ordlex {

namespace {

FrequencyRanking rank_sorted_counts(
    std::vector<std::pair<const std::string*, std::uint64_t>>& items, RankingMode mode) {
    std::stable_sort(items.begin(), items.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    FrequencyRanking ranking;
    ranking.mode = mode;
    ranking.rank_of.reserve(items.size());
    std::uint32_t rank = 1;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0 && items[i].second != items[i - 1].second) {
            rank = static_cast<std::uint32_t>(i + 1);
        }
        ranking.rank_of.emplace(*items[i].first, rank);
    }
    return ranking;
}

}  // namespace

FrequencyRanking build_ranking(const FrequencyTable& table) {
    if (table.counts.empty()) throw ValidationError("build_ranking: empty frequency table");
    std::vector<std::pair<const std::string*, std::uint64_t>> items;
    items.reserve(table.counts.size());
    for (const auto& [word, count] : table.counts) items.emplace_back(&word, count);
    // Secondary sort on the word keeps the map iteration order out of the
    // result; equal counts share a rank anyway.
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return *a.first < *b.first;
    });
    return rank_sorted_counts(items, RankingMode::own_corpus);
}

FrequencyRanking build_ranking(const ExternalFrequencyList& list) {
    if (list.entries.empty()) throw ValidationError("build_ranking: empty frequency list");
    std::vector<std::pair<const std::string*, std::uint64_t>> items;
    items.reserve(list.entries.size());
    for (const auto& [word, count] : list.entries) items.emplace_back(&word, count);
    return rank_sorted_counts(items, RankingMode::common_list);
}

const char* tie_mode_name(TieMode mode) {
    switch (mode) {
        case TieMode::jitter: return "jitter";
        case TieMode::temporal: return "temporal";
        case TieMode::raw: return "raw";
    }
    return "raw";
}

TieMode tie_mode_from_name(const std::string& name) {
    if (name == "jitter") return TieMode::jitter;
    if (name == "temporal") return TieMode::temporal;
    if (name == "raw") return TieMode::raw;
    throw ValidationError("unknown tie mode: " + name);
}

RankSequence to_rank_sequence(const Document& doc, const FrequencyRanking& ranking,
                              const TieBreakConfig& cfg) {
    RankSequence seq;
    seq.tie_mode = cfg.mode;
    seq.seed = cfg.seed;
    seq.values.reserve(doc.tokens.size());
    for (const std::string& token : doc.tokens) {
        const auto it = ranking.rank_of.find(token);
        if (it == ranking.rank_of.end()) {
            if (ranking.mode == RankingMode::own_corpus) {
                throw ValidationError("to_rank_sequence: token '" + token +
                                      "' missing from own-corpus ranking");
            }
            ++seq.dropped;
            continue;
        }
        seq.values.push_back(static_cast<double>(it->second));
    }
    switch (cfg.mode) {
        case TieMode::raw:
            break;
        case TieMode::jitter:
            seq.values = jitter_ties(seq.values, cfg.seed);
            break;
        case TieMode::temporal:
            seq.values = temporal_ties(seq.values);
            break;
    }
    return seq;
}

std::vector<double> jitter_ties(const std::vector<double>& values, std::uint64_t seed) {
    std::vector<double> out = values;
    SplitMix64 rng(seed);
    const std::size_t n = out.size();
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[j + 1] == values[i]) ++j;
        if (j > i) {  // run [i, j] of equal values
            const double v = values[i];
            double below = -1.0, above = -1.0;  // distances to distinct neighbors
            if (i > 0) {
                const double l = values[i - 1];
                (l < v ? below : above) = std::abs(v - l);
            }
            if (j + 1 < n) {
                const double r = values[j + 1];
                double& side = (r < v ? below : above);
                const double d = std::abs(r - v);
                if (side < 0.0 || d < side) side = d;
            }
            if (below < 0.0) below = 1.0;
            if (above < 0.0) above = 1.0;

            for (int attempt = 0;; ++attempt) {
                for (std::size_t k = i; k <= j; ++k) {
                    out[k] = v + rng.next_in(-below, above);
                }
                bool clean = true;
                const std::size_t lo = i > 0 ? i - 1 : i;
                const std::size_t hi = j + 1 < n ? j + 1 : j;
                for (std::size_t k = lo; k < hi; ++k) {
                    if (out[k] == out[k + 1]) {
                        clean = false;
                        break;
                    }
                }
                if (clean) break;
                if (attempt > 1000) {
                    throw ValidationError("jitter_ties: could not separate a tie run");
                }
            }
        }
        i = j + 1;
    }
    return out;
}

std::vector<double> temporal_ties(const std::vector<double>& values) {
    std::vector<double> out = values;
    const std::size_t n = out.size();
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[j + 1] == values[i]) ++j;
        if (j > i) {
            const double v = values[i];
            const std::size_t k = j - i + 1;
            double gap = 1.0;
            if (j + 1 < n && values[j + 1] > v) gap = values[j + 1] - v;
            const double eps = std::min(1.0, gap) / static_cast<double>(k + 1);
            for (std::size_t p = i; p <= j; ++p) {
                out[p] = v + static_cast<double>(p - i) * eps;
            }
        }
        i = j + 1;
    }
    return out;
}

}  // namespace ordlex
