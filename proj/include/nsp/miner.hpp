#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "nsp/core.hpp"

namespace nsp {

class UnsupportedTheta : public Error {
public:
    using Error::Error;
};

/// Bounds of the pattern search space.
struct PatternBounds {
    std::size_t maxPositives = 3;
    std::size_t maxItemsetSize = 2;  ///< positive itemsets
    std::size_t maxNegSize = 2;      ///< negative itemsets
    /// Items patterns may use, in item order. Empty means every item of the database.
    std::vector<Item> alphabet;
};

/// Throws std::invalid_argument when a count is zero or the alphabet is empty.
void check_bounds(const PatternBounds& bounds);

/// All non-empty subsets of `alphabet` of size at most `maxSize`, ordered by
/// size and then lexicographically.
std::vector<Itemset> bounded_itemsets(std::span<const Item> alphabet, std::size_t maxSize);

/// Calls `visit` once for every pattern within bounds: by number of
/// positives, then lexicographically over (p1, q1, p2, ...). Negatives carry
/// no mode.
void for_each_pattern(const PatternBounds& bounds, const std::function<void(const NegPattern&)>& visit);
std::vector<NegPattern> enumerate_patterns(const PatternBounds& bounds);
/// Size of the enumeration, without materialising it.
std::uint64_t count_patterns(const PatternBounds& bounds);

struct MiningStats {
    std::uint64_t candidates = 0;      ///< patterns generated
    std::uint64_t supportCalls = 0;    ///< patterns whose support was evaluated
    std::uint64_t prunedSubtrees = 0;  ///< evaluated patterns whose extensions were cut
    std::uint64_t prunedCandidates = 0;  ///< candidates dropped before evaluation
    std::uint64_t strongSkipped = 0;   ///< strong supports skipped via negative extension
};

struct MiningResult {
    std::vector<std::pair<NegPattern, std::size_t>> frequent;  ///< canonical order
    Theta theta;
    std::size_t minsup = 1;
    MiningStats stats;
};

/// Evaluates every pattern within bounds.
MiningResult mine_bruteforce(const SequenceDatabase& db, Theta theta, std::size_t minsup,
                             const PatternBounds& bounds);

/// Level-wise search along prefix-inclusion extensions, pruning on weak
/// support. Throws UnsupportedTheta for partial non-inclusion.
MiningResult mine_pruned(const SequenceDatabase& db, Theta theta, std::size_t minsup,
                         const PatternBounds& bounds);

}  // namespace nsp
