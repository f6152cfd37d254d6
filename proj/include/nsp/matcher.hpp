#pragma once

#include <bitset>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "nsp/core.hpp"

namespace nsp {

class NotAPositiveEmbedding : public Error {
public:
    using Error::Error;
};

/// Strictly increasing 1-based positions, one per positive itemset.
struct Embedding {
    std::vector<std::size_t> positions;

    friend bool operator==(const Embedding&, const Embedding&) = default;
    friend auto operator<=>(const Embedding&, const Embedding&) = default;
};

struct MatchOptions {
    /// Saturation bound for the positive embedding count.
    std::uint64_t embeddingCountCap = 1'000'000;
};

struct MatchReport {
    bool contained = false;
    /// Weak occurrence: the lexicographically first satisfying embedding.
    std::optional<Embedding> witness;
    /// Strong occurrence: the lexicographically first violating embedding.
    std::optional<Embedding> violator;
    std::uint64_t totalPositiveEmbeddings = 0;
    bool countSaturated = false;
};

/// Containment under each theta, indexed by Theta::index().
using ContainmentMask = std::bitset<8>;

bool non_inclusion(const Itemset& pattern, const Itemset& itemset, NonInclusion kind);

/// All embeddings of the positive part of `p`, in lexicographic order. At
/// most `limit` embeddings are returned. Throws std::invalid_argument if `p`
/// has a non-empty negative.
std::vector<Embedding> positive_embeddings(const NegPattern& p, const Sequence& s,
                                           std::size_t limit = std::numeric_limits<std::size_t>::max());

/// Union of the itemsets strictly between positions e[slot] and e[slot+1]
/// (slot is 1-based, as are the positions).
Itemset gap_union(const Sequence& s, const Embedding& e, std::size_t slot);

/// Checks an embedding of p+ against the negatives of p. A negative with an
/// explicit mode ignores `embedding` and `inclusion`.
bool check_embedding(const Embedding& e, const NegPattern& p, const Sequence& s, EmbeddingKind embedding,
                     NonInclusion inclusion);

MatchReport contains(const NegPattern& p, const Sequence& s, Theta theta, const MatchOptions& options = {});

/// Same decision as contains(p, s, theta).contained without the report.
bool occurs(const NegPattern& p, const Sequence& s, Theta theta);

/// Containment under all eight thetas from one pass over the embeddings.
ContainmentMask containment_mask(const NegPattern& p, const Sequence& s);

/// Number of positive embeddings, saturating at `cap`.
std::uint64_t count_positive_embeddings(const NegPattern& p, const Sequence& s, std::uint64_t cap);

/// Number of sequences of `db` containing `p` under `theta`. With threads > 1
/// the database is split into contiguous chunks.
std::size_t support(const NegPattern& p, const SequenceDatabase& db, Theta theta, unsigned threads = 1);
std::size_t support(const NegPattern& p, std::span<const Sequence> sequences, Theta theta);

/// Supports under every theta, indexed by Theta::index().
std::array<std::size_t, 8> support_all(const NegPattern& p, std::span<const Sequence> sequences);

}  // namespace nsp
