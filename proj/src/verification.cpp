#include "nsp/verification.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>
#include <tuple>

#include "nsp/matcher.hpp"
#include "nsp/text.hpp"

namespace nsp {

namespace {

constexpr std::size_t kNoIndex = static_cast<std::size_t>(-1);

unsigned resolve_threads(unsigned threads)
{
    if (threads != 0) return threads;
    return std::max(1u, std::thread::hardware_concurrency());
}

template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn fn)
{
    threads = static_cast<unsigned>(std::min<std::size_t>(resolve_threads(threads), std::max<std::size_t>(n, 1)));
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i, 0u);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            for (std::size_t i = next++; i < n; i = next++) fn(i, t);
        });
}

Theta theta(Occurrence o, EmbeddingKind e, NonInclusion n) { return Theta{o, e, n}; }

constexpr std::array<Occurrence, 2> kOccurrences{Occurrence::Weak, Occurrence::Strong};
constexpr std::array<EmbeddingKind, 2> kEmbeddings{EmbeddingKind::Soft, EmbeddingKind::Strict};
constexpr std::array<NonInclusion, 2> kInclusions{NonInclusion::Partial, NonInclusion::Total};

std::size_t random_below(std::mt19937_64& rng, std::size_t n)
{
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

Itemset random_subset(std::mt19937_64& rng, std::span<const Item> alphabet, std::size_t size)
{
    std::vector<Item> pool(alphabet.begin(), alphabet.end());
    std::vector<Item> out;
    for (std::size_t i = 0; i < size && !pool.empty(); ++i) {
        const std::size_t j = random_below(rng, pool.size());
        out.push_back(pool[j]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(j));
    }
    return Itemset(std::move(out));
}

Counterexample make_counterexample(const NegPattern& p, std::optional<NegPattern> pPrime, std::optional<Sequence> s)
{
    return Counterexample{p, std::move(pPrime), std::nullopt, std::move(s)};
}

// Keeps the first failure of a named property.
struct Property {
    std::string name;
    Verdict verdict;

    void check(bool ok, const auto& make)
    {
        ++verdict.checkedPairs;
        if (ok || !verdict.holds) return;
        verdict.holds = false;
        verdict.counterexample = make();
    }
};

}  // namespace

std::vector<Sequence> enumerate_sequences(const SequenceBounds& bounds)
{
    const auto itemsets = bounded_itemsets(bounds.alphabet, bounds.maxItemsetSize);
    std::vector<Sequence> out{Sequence{}};
    if (itemsets.empty()) return out;
    for (std::size_t len = 1; len <= bounds.maxLength; ++len) {
        std::vector<std::size_t> digits(len, 0);
        for (;;) {
            std::vector<Itemset> seq;
            for (std::size_t d : digits) seq.push_back(itemsets[d]);
            out.emplace_back(std::move(seq));
            std::size_t d = len;
            while (d-- > 0) {
                if (++digits[d] < itemsets.size()) break;
                digits[d] = 0;
            }
            if (d == kNoIndex) break;
        }
    }
    return out;
}

NegPattern random_pattern(std::mt19937_64& rng, const PatternBounds& bounds)
{
    check_bounds(bounds);
    const std::size_t n = bounds.alphabet.size();
    const std::size_t k = 1 + random_below(rng, bounds.maxPositives);
    std::vector<Itemset> pos;
    std::vector<Negative> neg;
    for (std::size_t i = 0; i < k; ++i) {
        if (i > 0) {
            const std::size_t size = random_below(rng, std::min(bounds.maxNegSize, n) + 1);
            neg.push_back(Negative{random_subset(rng, bounds.alphabet, size), std::nullopt});
        }
        const std::size_t size = 1 + random_below(rng, std::min(bounds.maxItemsetSize, n));
        pos.push_back(random_subset(rng, bounds.alphabet, size));
    }
    return NegPattern(std::move(pos), std::move(neg));
}

Sequence random_sequence(std::mt19937_64& rng, const SequenceBounds& bounds)
{
    const std::size_t n = bounds.alphabet.size();
    const std::size_t len = 1 + random_below(rng, bounds.maxLength);
    std::vector<Itemset> seq;
    for (std::size_t i = 0; i < len; ++i)
        seq.push_back(random_subset(rng, bounds.alphabet, 1 + random_below(rng, std::min(bounds.maxItemsetSize, n))));
    return Sequence(std::move(seq));
}

std::vector<Item> letter_alphabet(Dictionary& dict, std::size_t size)
{
    std::vector<Item> out;
    for (std::size_t i = 0; i < size; ++i) out.push_back(dict.intern(std::string(1, static_cast<char>('a' + i))));
    return out;
}

void sort_unique(std::vector<NegPattern>& patterns)
{
    std::sort(patterns.begin(), patterns.end());
    patterns.erase(std::unique(patterns.begin(), patterns.end()), patterns.end());
}

void sort_unique(std::vector<Sequence>& sequences)
{
    std::sort(sequences.begin(), sequences.end());
    sequences.erase(std::unique(sequences.begin(), sequences.end()), sequences.end());
}

std::vector<DominanceWitness> dominance_witnesses(Dictionary& dict)
{
    using O = Occurrence;
    using E = EmbeddingKind;
    using N = NonInclusion;
    const NegPattern abcd = parse_pattern("<a !(b c) d>", dict);
    const NegPattern abc = parse_pattern("<a !b c>", dict);
    std::vector<DominanceWitness> out;

    DominanceWitness w{"partial-vs-total", abcd, parse_sequence("a b d", dict), {}};
    for (auto o : kOccurrences)
        for (auto e : kEmbeddings) w.refutes.emplace_back(theta(o, e, N::Partial), theta(o, e, N::Total));
    out.push_back(w);

    w = {"weak-vs-strong", abc, parse_sequence("a c b c", dict), {}};
    for (auto n : kInclusions)
        for (auto e : kEmbeddings) w.refutes.emplace_back(theta(O::Weak, e, n), theta(O::Strong, e, n));
    out.push_back(w);

    w = {"soft-vs-strict-partial", abcd, parse_sequence("a b c d", dict), {}};
    for (auto o : kOccurrences) w.refutes.emplace_back(theta(o, E::Soft, N::Partial), theta(o, E::Strict, N::Partial));
    out.push_back(w);

    out.push_back({"weak-strict-vs-strong-soft-partial", abcd, parse_sequence("a b d c d", dict),
                   {{theta(O::Weak, E::Strict, N::Partial), theta(O::Strong, E::Soft, N::Partial)}}});

    out.push_back({"strong-soft-vs-weak-strict-partial", abcd, parse_sequence("a b c d", dict),
                   {{theta(O::Strong, E::Soft, N::Partial), theta(O::Weak, E::Strict, N::Partial)}}});

    w = {"weak-strict-vs-strong-strict", abc, parse_sequence("a c b c", dict), {}};
    for (auto n : kInclusions)
        for (auto n2 : kInclusions)
            w.refutes.emplace_back(theta(O::Weak, E::Strict, n), theta(O::Strong, E::Strict, n2));
    out.push_back(w);

    out.push_back({"weak-soft-total-vs-strong-soft-partial", abc, parse_sequence("a c b c", dict),
                   {{theta(O::Weak, E::Soft, N::Total), theta(O::Strong, E::Soft, N::Partial)}}});

    out.push_back({"strong-strict-partial-vs-weak-strict-total", abcd, parse_sequence("a b d", dict),
                   {{theta(O::Strong, E::Strict, N::Partial), theta(O::Weak, E::Strict, N::Total)}}});
    return out;
}

std::vector<AntimonotonicityWitness> antimonotonicity_witnesses(Dictionary& dict)
{
    const std::vector<Theta> strongTotal{theta(Occurrence::Strong, EmbeddingKind::Soft, NonInclusion::Total),
                                         theta(Occurrence::Strong, EmbeddingKind::Strict, NonInclusion::Total)};
    const auto& all = Theta::all();
    return {
        {"embedding-inclusion", OrderKind::EmbedIncl, parse_pattern("<b !c a>", dict),
         parse_pattern("<b !c d a>", dict), parse_sequence("b e d c a", dict), {all.begin(), all.end()}},
        {"prefix-inclusion-new-positive", OrderKind::PrefixIncl, parse_pattern("<a !b c>", dict),
         parse_pattern("<a !b c d>", dict), parse_sequence("a c d a b c", dict), strongTotal},
        {"prefix-inclusion-grown-positive", OrderKind::PrefixIncl, parse_pattern("<a !b c>", dict),
         parse_pattern("<a !b (c d)>", dict), parse_sequence("a (c d) a b c", dict), strongTotal},
    };
}

bool refutes_dominance(const NegPattern& p, const Sequence& s, Theta t, Theta tPrime)
{
    return occurs(p, s, t) && !occurs(p, s, tPrime);
}

bool refutes_antimonotonicity(const NegPattern& p, const NegPattern& pPrime, const Sequence& s, Theta t,
                              OrderKind order)
{
    return precedes(order, p, pPrime, t.inclusion) && occurs(pPrime, s, t) && !occurs(p, s, t);
}

VerificationSpace default_space(const SpaceOptions& options)
{
    VerificationSpace space;
    const auto full = letter_alphabet(space.dictionary, 6);
    const std::vector<Item> small(full.begin(), full.begin() + 3);
    const std::size_t negSize = options.singletonNegatives ? 1 : 2;
    space.patternBounds = PatternBounds{3, 2, negSize, full};
    space.sequenceBounds = SequenceBounds{6, 2, full};

    auto& patterns = space.patterns;
    patterns = enumerate_patterns(PatternBounds{2, 2, negSize, small});
    for_each_pattern(PatternBounds{3, 1, negSize, small}, [&](const NegPattern& p) {
        if (p.positive_count() == 3) patterns.push_back(p);
    });
    std::mt19937_64 rng(options.seed);
    for (std::size_t i = 0; i < options.patternSamples; ++i) patterns.push_back(random_pattern(rng, space.patternBounds));

    auto& sequences = space.sequences;
    sequences = enumerate_sequences(SequenceBounds{4, 2, small});
    for (std::size_t i = 0; i < options.sequenceSamples; ++i)
        sequences.push_back(random_sequence(rng, space.sequenceBounds));

    auto fits = [&](const NegPattern& p) {
        return std::ranges::all_of(p.negatives(), [&](const Negative& n) { return n.items.size() <= negSize; });
    };
    for (const auto& w : dominance_witnesses(space.dictionary)) {
        if (fits(w.p)) patterns.push_back(w.p);
        sequences.push_back(w.s);
    }
    for (const auto& w : antimonotonicity_witnesses(space.dictionary)) {
        if (fits(w.p) && fits(w.pPrime)) {
            patterns.push_back(w.p);
            patterns.push_back(w.pPrime);
        }
        sequences.push_back(w.s);
    }
    sort_unique(patterns);
    sort_unique(sequences);
    return space;
}

ContainmentIndex::ContainmentIndex(std::vector<NegPattern> patterns, std::vector<Sequence> sequences,
                                   unsigned threads)
    : patterns_(std::move(patterns)), sequences_(std::move(sequences)), words_((sequences_.size() + 63) / 64)
{
    if (patterns_.empty() || sequences_.empty()) throw EmptySpace("pattern or sequence space is empty");
    bits_.assign(patterns_.size() * 8 * words_, 0);
    parallel_for(patterns_.size(), threads, [&](std::size_t p, unsigned) {
        std::uint64_t* base = bits_.data() + p * 8 * words_;
        for (std::size_t s = 0; s < sequences_.size(); ++s) {
            const auto mask = containment_mask(patterns_[p], sequences_[s]);
            for (std::size_t t = 0; t < 8; ++t)
                if (mask[t]) base[t * words_ + s / 64] |= std::uint64_t{1} << (s % 64);
        }
    });
}

bool ContainmentIndex::contains(std::size_t pattern, std::size_t sequence, Theta t) const
{
    return (row(pattern, t)[sequence / 64] >> (sequence % 64)) & 1u;
}

std::span<const std::uint64_t> ContainmentIndex::row(std::size_t pattern, Theta t) const
{
    return {bits_.data() + (pattern * 8 + t.index()) * words_, words_};
}

namespace {

// Lowest sequence index in `yes & ~no`, or kNoIndex.
std::size_t first_difference(std::span<const std::uint64_t> yes, std::span<const std::uint64_t> no)
{
    for (std::size_t w = 0; w < yes.size(); ++w) {
        const std::uint64_t diff = yes[w] & ~no[w];
        if (diff != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(diff));
    }
    return kNoIndex;
}

// First (p, p', s) for each theta whose non-inclusion kind matches.
std::array<Verdict, 8> scan_order(const ContainmentIndex& index, OrderKind order, unsigned threads)
{
    struct Hit {
        std::size_t p = kNoIndex, q = kNoIndex, s = kNoIndex;
    };
    const auto patterns = index.patterns();
    const std::size_t n = patterns.size();
    threads = resolve_threads(threads);
    std::vector<std::array<Hit, 8>> hits(threads);
    std::vector<std::array<std::uint64_t, 2>> comparable(threads, {0, 0});

    parallel_for(n, threads, [&](std::size_t p, unsigned t) {
        auto& best = hits[t];
        for (std::size_t q = 0; q < n; ++q) {
            if (patterns[p].positive_count() > patterns[q].positive_count()) continue;
            for (NonInclusion kind : kInclusions) {
                if (!precedes(order, patterns[p], patterns[q], kind)) continue;
                ++comparable[t][kind == NonInclusion::Total ? 1 : 0];
                for (const Theta th : Theta::all()) {
                    if (th.inclusion != kind) continue;
                    Hit& h = best[th.index()];
                    if (h.p != kNoIndex && std::tie(h.p, h.q) < std::tie(p, q)) continue;
                    const std::size_t s = first_difference(index.row(q, th), index.row(p, th));
                    if (s != kNoIndex) h = Hit{p, q, s};
                }
            }
        }
    });

    std::array<Verdict, 8> out;
    std::array<std::uint64_t, 2> pairs{0, 0};
    for (const auto& c : comparable) {
        pairs[0] += c[0];
        pairs[1] += c[1];
    }
    for (const Theta th : Theta::all()) {
        Hit best;
        for (const auto& h : hits) {
            const Hit& c = h[th.index()];
            if (c.p != kNoIndex && (best.p == kNoIndex || std::tie(c.p, c.q) < std::tie(best.p, best.q))) best = c;
        }
        Verdict& v = out[th.index()];
        v.checkedPairs = pairs[th.inclusion == NonInclusion::Total ? 1 : 0] * index.sequences().size();
        if (best.p != kNoIndex) {
            v.holds = false;
            v.counterexample = make_counterexample(patterns[best.p], patterns[best.q], index.sequences()[best.s]);
        }
    }
    return out;
}

}  // namespace

Verdict dominance_scan(const ContainmentIndex& index, Theta t, Theta tPrime)
{
    Verdict v;
    const std::size_t nSeq = index.sequences().size();
    for (std::size_t p = 0; p < index.patterns().size(); ++p) {
        const std::size_t s = first_difference(index.row(p, t), index.row(p, tPrime));
        if (s != kNoIndex) {
            v.holds = false;
            v.checkedPairs += s + 1;
            v.counterexample = make_counterexample(index.patterns()[p], std::nullopt, index.sequences()[s]);
            return v;
        }
        v.checkedPairs += nSeq;
    }
    return v;
}

std::array<std::array<Verdict, 8>, 8> dominance_matrix(const ContainmentIndex& index)
{
    std::array<std::array<Verdict, 8>, 8> m;
    for (const Theta a : Theta::all())
        for (const Theta b : Theta::all()) m[a.index()][b.index()] = dominance_scan(index, a, b);
    return m;
}

std::vector<std::vector<Theta>> equivalence_classes(const std::array<std::array<Verdict, 8>, 8>& matrix)
{
    std::vector<std::vector<Theta>> classes;
    std::array<bool, 8> placed{};
    for (std::size_t i = 0; i < 8; ++i) {
        if (placed[i]) continue;
        std::vector<Theta> cls{Theta::from_index(i)};
        placed[i] = true;
        for (std::size_t j = i + 1; j < 8; ++j)
            if (!placed[j] && matrix[i][j].holds && matrix[j][i].holds) {
                cls.push_back(Theta::from_index(j));
                placed[j] = true;
            }
        classes.push_back(std::move(cls));
    }
    return classes;
}

std::vector<std::vector<Theta>> equivalence_classes(const ContainmentIndex& index)
{
    return equivalence_classes(dominance_matrix(index));
}

Verdict anti_monotonicity_scan(const ContainmentIndex& index, Theta t, OrderKind order, unsigned threads)
{
    return scan_order(index, order, threads)[t.index()];
}

std::array<std::array<Verdict, 8>, 3> anti_monotonicity_matrix(const ContainmentIndex& index, unsigned threads)
{
    std::array<std::array<Verdict, 8>, 3> out;
    for (std::size_t o = 0; o < kAllOrders.size(); ++o) out[o] = scan_order(index, kAllOrders[o], threads);
    return out;
}

std::vector<NamedVerdict> verify_lemmas(const VerificationSpace& space, const LemmaOptions& options)
{
    using O = Occurrence;
    using E = EmbeddingKind;
    using N = NonInclusion;
    Property totalImpliesPartialItemset{"total-implies-partial-itemset", {}};
    Property strictImpliesSoft{"strict-implies-soft-embedding", {}};
    Property totalSoftEqualsStrict{"total-soft-equals-strict", {}};
    Property singletonSoftEqualsStrict{"singleton-soft-equals-strict", {}};
    Property acceptedArePositive{"accepted-embeddings-are-positive", {}};
    Property strongImpliesWeak{"strong-implies-weak", {}};
    Property totalImpliesPartial{"total-implies-partial-containment", {}};
    Property knownDominance{"known-dominance-holds", {}};
    Property supportChains{"support-chains", {}};

    std::mt19937_64 rng(options.seed);
    std::vector<NegPattern> groupPatterns;
    std::vector<Sequence> groupSequences;
    const auto& table = known_dominance();

    auto flush_group = [&] {
        for (const auto& p : groupPatterns) {
            const auto sup = support_all(p, groupSequences);
            auto at = [&](O o, E e, N n) { return sup[theta(o, e, n).index()]; };
            bool ok = true;
            for (auto e : kEmbeddings)
                for (auto n : kInclusions) ok = ok && at(O::Strong, e, n) <= at(O::Weak, e, n);
            for (auto o : kOccurrences) {
                ok = ok && at(o, E::Strict, N::Partial) <= at(o, E::Soft, N::Partial);
                ok = ok && at(o, E::Soft, N::Total) == at(o, E::Strict, N::Total);
                for (auto e : kEmbeddings) ok = ok && at(o, e, N::Total) <= at(o, e, N::Partial);
            }
            supportChains.check(ok, [&] { return make_counterexample(p, std::nullopt, std::nullopt); });
        }
        groupPatterns.clear();
        groupSequences.clear();
    };

    for (std::size_t draw = 0; draw < options.draws; ++draw) {
        // Cycling through smaller alphabets makes embeddings frequent.
        const std::size_t letters = std::min(space.patternBounds.alphabet.size(), 2 + draw % 5);
        PatternBounds pb = space.patternBounds;
        pb.alphabet.resize(letters);
        SequenceBounds sb = space.sequenceBounds;
        sb.alphabet.resize(std::min(sb.alphabet.size(), letters));
        const NegPattern p = random_pattern(rng, pb);
        const Sequence s = random_sequence(rng, sb);
        auto cx = [&] { return make_counterexample(p, std::nullopt, s); };

        for (const auto& q : p.negatives())
            for (const auto& itemset : s.itemsets())
                totalImpliesPartialItemset.check(
                    !non_inclusion(q.items, itemset, N::Total) || non_inclusion(q.items, itemset, N::Partial), cx);

        const auto embeddings = positive_embeddings(positive_part(p), s);
        const bool singletons =
            std::ranges::all_of(p.negatives(), [](const Negative& n) { return n.items.size() <= 1; });
        for (const auto& e : embeddings) {
            for (auto n : kInclusions) {
                const bool strict = check_embedding(e, p, s, E::Strict, n);
                const bool soft = check_embedding(e, p, s, E::Soft, n);
                strictImpliesSoft.check(!strict || soft, cx);
                if (n == N::Total) totalSoftEqualsStrict.check(strict == soft, cx);
                if (singletons) singletonSoftEqualsStrict.check(strict == soft, cx);
            }
        }

        // A random increasing tuple is accepted only if it is a positive embedding.
        if (s.size() >= p.positive_count()) {
            std::vector<std::size_t> positions(s.size());
            for (std::size_t i = 0; i < positions.size(); ++i) positions[i] = i + 1;
            std::shuffle(positions.begin(), positions.end(), rng);
            positions.resize(p.positive_count());
            std::sort(positions.begin(), positions.end());
            const Embedding e{positions};
            bool accepted = true;
            try {
                check_embedding(e, p, s, E::Soft, N::Partial);
            } catch (const NotAPositiveEmbedding&) {
                accepted = false;
            }
            const bool listed = std::ranges::find(embeddings, e) != embeddings.end();
            acceptedArePositive.check(accepted == listed, cx);
        }
        for (const Theta t : Theta::all()) {
            const auto report = contains(p, s, t);
            if (report.witness)
                acceptedArePositive.check(std::ranges::find(embeddings, *report.witness) != embeddings.end(), cx);
        }

        const auto mask = containment_mask(p, s);
        for (auto e : kEmbeddings)
            for (auto n : kInclusions)
                strongImpliesWeak.check(!mask[theta(O::Strong, e, n).index()] || mask[theta(O::Weak, e, n).index()],
                                        cx);
        for (auto o : kOccurrences)
            for (auto e : kEmbeddings)
                totalImpliesPartial.check(
                    !mask[theta(o, e, N::Total).index()] || mask[theta(o, e, N::Partial).index()], cx);
        for (const Theta a : Theta::all())
            for (const Theta b : Theta::all())
                if (table.at(a, b) == Dominance::Dominates)
                    knownDominance.check(!mask[a.index()] || mask[b.index()], cx);

        groupPatterns.push_back(p);
        groupSequences.push_back(s);
        if (groupSequences.size() == options.databaseSize) flush_group();
    }
    if (!groupSequences.empty()) flush_group();

    // Structural properties of the orders over the space's patterns.
    Property orderChain{"order-chain", {}};
    Property irreflexive{"orders-irreflexive", {}};
    Property antisymmetric{"orders-antisymmetric", {}};
    Property transitive{"orders-transitive", {}};
    const auto& patterns = space.patterns;
    for (const auto& p : patterns)
        for (auto n : kInclusions)
            for (auto order : kAllOrders)
                irreflexive.check(!precedes(order, p, p, n),
                                  [&] { return make_counterexample(p, std::nullopt, std::nullopt); });
    for (const auto& p : patterns)
        for (const auto& q : patterns)
            for (auto n : kInclusions) {
                const bool ne = neg_ext(p, q, n);
                const bool pi = prefix_incl(p, q, n);
                const bool ei = embed_incl(p, q, n);
                auto cx = [&] { return make_counterexample(p, q, std::nullopt); };
                orderChain.check((!ne || pi) && (!pi || ei), cx);
                antisymmetric.check(!ei || !embed_incl(q, p, n), cx);
                antisymmetric.check(!pi || !prefix_incl(q, p, n), cx);
                antisymmetric.check(!ne || !neg_ext(q, p, n), cx);
            }

    std::vector<NegPattern> sample;
    const std::size_t stride = std::max<std::size_t>(1, patterns.size() / std::max<std::size_t>(1, options.transitivityPatterns));
    for (std::size_t i = 0; i < patterns.size(); i += stride) sample.push_back(patterns[i]);
    for (auto order : kAllOrders)
        for (auto n : kInclusions)
            for (const auto& a : sample)
                for (const auto& b : sample) {
                    if (!precedes(order, a, b, n)) continue;
                    for (const auto& c : sample)
                        if (precedes(order, b, c, n))
                            transitive.check(precedes(order, a, c, n), [&] {
                                return Counterexample{a, b, c, std::nullopt};
                            });
                }

    std::vector<NamedVerdict> out;
    for (Property* prop : {&totalImpliesPartialItemset, &strictImpliesSoft, &totalSoftEqualsStrict,
                           &singletonSoftEqualsStrict, &acceptedArePositive, &strongImpliesWeak, &totalImpliesPartial,
                           &knownDominance, &supportChains, &orderChain, &irreflexive, &antisymmetric, &transitive})
        out.push_back(NamedVerdict{prop->name, prop->verdict});
    return out;
}

}  // namespace nsp
