#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "nsp/core.hpp"
#include "nsp/miner.hpp"
#include "nsp/orders.hpp"

namespace nsp {

class EmptySpace : public Error {
public:
    using Error::Error;
};

struct Counterexample {
    NegPattern p;
    std::optional<NegPattern> pPrime;
    std::optional<NegPattern> pThird;  ///< only for transitivity failures
    std::optional<Sequence> s;
};

struct Verdict {
    bool holds = true;
    std::optional<Counterexample> counterexample;
    std::uint64_t checkedPairs = 0;
};

/// Bounds of a finite space of sequences.
struct SequenceBounds {
    std::size_t maxLength = 6;
    std::size_t maxItemsetSize = 2;
    std::vector<Item> alphabet;
};

/// Every sequence within bounds, including the empty one, by length then
/// lexicographically.
std::vector<Sequence> enumerate_sequences(const SequenceBounds& bounds);

NegPattern random_pattern(std::mt19937_64& rng, const PatternBounds& bounds);
/// Length drawn uniformly from [1, maxLength].
Sequence random_sequence(std::mt19937_64& rng, const SequenceBounds& bounds);

/// Patterns and sequences over a shared dictionary, sorted and duplicate-free.
struct VerificationSpace {
    Dictionary dictionary;
    std::vector<NegPattern> patterns;
    std::vector<Sequence> sequences;
    PatternBounds patternBounds;
    SequenceBounds sequenceBounds;
};

struct SpaceOptions {
    std::uint64_t seed = 1;
    std::size_t patternSamples = 2000;
    std::size_t sequenceSamples = 2500;
    /// Restrict every negative itemset to at most one item.
    bool singletonNegatives = false;
};

/// The default space: exhaustive small patterns and sequences over {a, b, c},
/// seeded samples from the full bounds over {a, ..., f}, and every reference
/// witness.
VerificationSpace default_space(const SpaceOptions& options = {});

/// Interns the tokens a, b, ... in order.
std::vector<Item> letter_alphabet(Dictionary& dict, std::size_t size);

void sort_unique(std::vector<NegPattern>& patterns);
void sort_unique(std::vector<Sequence>& sequences);

/// A (pattern, sequence) pair that refutes dominance of `theta` over
/// `thetaPrime` for every listed pair.
struct DominanceWitness {
    std::string label;
    NegPattern p;
    Sequence s;
    std::vector<std::pair<Theta, Theta>> refutes;
};

/// A triple refuting anti-monotonicity of every listed theta on `order`.
struct AntimonotonicityWitness {
    std::string label;
    OrderKind order;
    NegPattern p;
    NegPattern pPrime;
    Sequence s;
    std::vector<Theta> refutes;
};

std::vector<DominanceWitness> dominance_witnesses(Dictionary& dict);
std::vector<AntimonotonicityWitness> antimonotonicity_witnesses(Dictionary& dict);

/// True iff p theta s and not p thetaPrime s.
bool refutes_dominance(const NegPattern& p, const Sequence& s, Theta theta, Theta thetaPrime);
/// True iff p precedes p' (order paired with the theta's non-inclusion kind),
/// p' theta s and not p theta s.
bool refutes_antimonotonicity(const NegPattern& p, const NegPattern& pPrime, const Sequence& s, Theta theta,
                              OrderKind order);

/// Containment of every pattern in every sequence under the eight thetas,
/// as one bit row per (pattern, theta).
class ContainmentIndex {
public:
    ContainmentIndex(std::vector<NegPattern> patterns, std::vector<Sequence> sequences, unsigned threads = 0);

    std::span<const NegPattern> patterns() const noexcept { return patterns_; }
    std::span<const Sequence> sequences() const noexcept { return sequences_; }
    bool contains(std::size_t pattern, std::size_t sequence, Theta theta) const;
    std::span<const std::uint64_t> row(std::size_t pattern, Theta theta) const;
    std::size_t words() const noexcept { return words_; }

private:
    std::vector<NegPattern> patterns_;
    std::vector<Sequence> sequences_;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// First (p, s) in canonical order with p theta s and not p thetaPrime s.
Verdict dominance_scan(const ContainmentIndex& index, Theta theta, Theta thetaPrime);

/// Empirical dominance of every ordered pair of thetas.
std::array<std::array<Verdict, 8>, 8> dominance_matrix(const ContainmentIndex& index);

/// Classes of mutual empirical dominance, each sorted by Theta::index() and
/// ordered by their first member.
std::vector<std::vector<Theta>> equivalence_classes(const std::array<std::array<Verdict, 8>, 8>& matrix);
std::vector<std::vector<Theta>> equivalence_classes(const ContainmentIndex& index);

/// First (p, p', s) with p preceding p', p' theta s and not p theta s. The
/// order uses the theta's own non-inclusion kind.
Verdict anti_monotonicity_scan(const ContainmentIndex& index, Theta theta, OrderKind order, unsigned threads = 0);

/// Scans of every (theta, order) combination, indexed [order][theta].
std::array<std::array<Verdict, 8>, 3> anti_monotonicity_matrix(const ContainmentIndex& index, unsigned threads = 0);

struct NamedVerdict {
    std::string name;
    Verdict verdict;
};

struct LemmaOptions {
    std::uint64_t seed = 7;
    std::size_t draws = 10000;
    /// Sequences per random database in the support-chain checks.
    std::size_t databaseSize = 20;
    /// Pattern count for the cubic transitivity check.
    std::size_t transitivityPatterns = 400;
};

/// Randomised and exhaustive checks of the semantic properties, the support
/// inequality chains and the structural properties of the orders.
std::vector<NamedVerdict> verify_lemmas(const VerificationSpace& space, const LemmaOptions& options = {});

}  // namespace nsp
