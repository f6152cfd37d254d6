#include "nsp/matcher.hpp"

#include <algorithm>
#include <thread>

namespace nsp {

namespace {

// Set representations the search runs on. Bit masks cover the common case of
// fewer than 64 distinct items; itemsets cover everything else.
struct MaskOps {
    using Set = std::uint64_t;
    static Set make(const Itemset& s)
    {
        Set m = 0;
        for (Item i : s) m |= Set{1} << i.id;
        return m;
    }
    static bool subset(Set a, Set b) { return (a & ~b) == 0; }
    static bool disjoint(Set a, Set b) { return (a & b) == 0; }
    static void unite(Set& a, Set b) { a |= b; }
    static bool empty(Set a) { return a == 0; }
};

struct ItemsetOps {
    using Set = Itemset;
    static const Set& make(const Itemset& s) { return s; }
    static bool subset(const Set& a, const Set& b) { return a.is_subset_of(b); }
    static bool disjoint(const Set& a, const Set& b) { return a.is_disjoint_from(b); }
    static void unite(Set& a, const Set& b) { a = a.united(b); }
    static bool empty(const Set& a) { return a.empty(); }
};

bool fits_mask(const NegPattern& p, const Sequence& s)
{
    auto small = [](const Itemset& set) { return set.empty() || set.max().id < 64; };
    return std::all_of(p.positives().begin(), p.positives().end(), small) &&
           std::all_of(p.negatives().begin(), p.negatives().end(),
                       [&](const Negative& n) { return small(n.items); }) &&
           std::all_of(s.itemsets().begin(), s.itemsets().end(), small);
}

// Slot results are 4-bit masks over (embedding, inclusion):
// bit = 2 * (inclusion == Total) + (embedding == Soft).
constexpr unsigned slot_bit(EmbeddingKind e, NonInclusion n)
{
    return (n == NonInclusion::Total ? 2u : 0u) + (e == EmbeddingKind::Soft ? 1u : 0u);
}

constexpr std::uint8_t kAllSlotBits = 0xF;

template <class Ops>
struct Compiled {
    using Set = typename Ops::Set;
    using OpsType = Ops;

    std::vector<Set> pos;
    std::vector<Set> neg;
    std::vector<std::optional<NegMode>> modes;
    std::vector<Set> seq;
    // last[i]: largest 0-based position where positive i can sit while the
    // remaining positives still fit after it.
    std::vector<std::size_t> last;
    bool feasible = false;

    Compiled(const NegPattern& p, const Sequence& s)
    {
        for (const auto& x : p.positives()) pos.push_back(Ops::make(x));
        for (const auto& n : p.negatives()) {
            neg.push_back(Ops::make(n.items));
            modes.push_back(n.mode);
        }
        for (const auto& x : s.itemsets()) seq.push_back(Ops::make(x));
        const std::size_t m = pos.size();
        const std::size_t n = seq.size();
        if (m == 0 || m > n) return;
        last.assign(m, 0);
        std::size_t bound = n;  // exclusive
        for (std::size_t i = m; i-- > 0;) {
            std::size_t j = bound;
            bool found = false;
            while (j-- > 0) {
                if (Ops::subset(pos[i], seq[j])) {
                    found = true;
                    break;
                }
            }
            if (!found) return;
            last[i] = j;
            bound = j;
        }
        feasible = true;
    }

    std::size_t size() const { return pos.size(); }
};

// Incremental state of the gap after a positive.
template <class Ops>
struct Gap {
    using Set = typename Ops::Set;
    const Set* q;
    Set uni{};
    bool softPartial = true;
    bool total = true;

    explicit Gap(const Set& negative) : q(&negative) {}

    void add(const Set& itemset)
    {
        if (Ops::empty(*q)) return;
        if (Ops::subset(*q, itemset)) softPartial = false;
        if (!Ops::disjoint(*q, itemset)) total = false;
        Ops::unite(uni, itemset);
    }

    std::uint8_t bits(const std::optional<NegMode>& mode) const
    {
        if (Ops::empty(*q)) return kAllSlotBits;
        const bool strictPartial = !Ops::subset(*q, uni);
        if (mode) {
            bool ok = *mode == NegMode::SoftPartial ? softPartial
                      : *mode == NegMode::StrictPartial ? strictPartial
                                                        : total;
            return ok ? kAllSlotBits : 0;
        }
        std::uint8_t b = 0;
        if (softPartial) b |= 1u << slot_bit(EmbeddingKind::Soft, NonInclusion::Partial);
        if (strictPartial) b |= 1u << slot_bit(EmbeddingKind::Strict, NonInclusion::Partial);
        if (total) b |= (1u << slot_bit(EmbeddingKind::Soft, NonInclusion::Total)) |
                        (1u << slot_bit(EmbeddingKind::Strict, NonInclusion::Total));
        return b;
    }
};

template <class Ops>
class MaskSearch {
public:
    explicit MaskSearch(const Compiled<Ops>& c) : c_(c) {}

    ContainmentMask run()
    {
        if (!c_.feasible) return {};
        for (std::size_t j = 0; j <= c_.last[0] && !done(); ++j)
            if (Ops::subset(c_.pos[0], c_.seq[j])) descend(1, j, kAllSlotBits);
        ContainmentMask mask;
        for (unsigned b = 0; b < 4; ++b) {
            mask[2 * b + 1] = (weak_ >> b) & 1u;
            mask[2 * b] = (strong_ >> b) & 1u;
        }
        return mask;
    }

private:
    bool done() const { return weak_ == kAllSlotBits && strong_ == 0; }

    void descend(std::size_t i, std::size_t prev, std::uint8_t path)
    {
        if (i == c_.size()) {
            weak_ |= path;
            strong_ &= path;
            return;
        }
        Gap<Ops> gap(c_.neg[i - 1]);
        for (std::size_t j = prev + 1; j <= c_.last[i] && !done(); ++j) {
            if (Ops::subset(c_.pos[i], c_.seq[j])) {
                const std::uint8_t next = path & gap.bits(c_.modes[i - 1]);
                if (next == 0) {
                    // Every completion exists and fails every combination.
                    strong_ = 0;
                } else {
                    descend(i + 1, j, next);
                }
            }
            gap.add(c_.seq[j]);
        }
    }

    const Compiled<Ops>& c_;
    std::uint8_t weak_ = 0;
    std::uint8_t strong_ = kAllSlotBits;
};

// Depth-first search in lexicographic order for the first embedding that
// satisfies (Witness) or violates (Violator) the negatives under one slot bit.
template <class Ops>
class FirstSearch {
public:
    enum class Target { Witness, Violator };

    FirstSearch(const Compiled<Ops>& c, unsigned bit, Target target) : c_(c), bit_(bit), target_(target) {}

    std::optional<Embedding> run()
    {
        if (!c_.feasible) return std::nullopt;
        path_.assign(c_.size(), 0);
        for (std::size_t j = 0; j <= c_.last[0]; ++j) {
            if (!Ops::subset(c_.pos[0], c_.seq[j])) continue;
            path_[0] = j;
            if (descend(1)) return to_embedding();
        }
        return std::nullopt;
    }

private:
    bool descend(std::size_t i)
    {
        if (i == c_.size()) return target_ == Target::Witness;
        Gap<Ops> gap(c_.neg[i - 1]);
        for (std::size_t j = path_[i - 1] + 1; j <= c_.last[i]; ++j) {
            if (Ops::subset(c_.pos[i], c_.seq[j])) {
                const bool ok = (gap.bits(c_.modes[i - 1]) >> bit_) & 1u;
                path_[i] = j;
                if (!ok && target_ == Target::Violator) {
                    complete(i + 1);
                    return true;
                }
                if (ok && descend(i + 1)) return true;
            }
            gap.add(c_.seq[j]);
        }
        return false;
    }

    // Earliest placement of the remaining positives; always exists because
    // every prefix respects `last`.
    void complete(std::size_t from)
    {
        for (std::size_t i = from; i < c_.size(); ++i) {
            std::size_t j = path_[i - 1] + 1;
            while (!Ops::subset(c_.pos[i], c_.seq[j])) ++j;
            path_[i] = j;
        }
    }

    Embedding to_embedding() const
    {
        Embedding e;
        e.positions.reserve(path_.size());
        for (auto j : path_) e.positions.push_back(j + 1);
        return e;
    }

    const Compiled<Ops>& c_;
    unsigned bit_;
    Target target_;
    std::vector<std::size_t> path_;
};

template <class Ops>
std::uint64_t count_embeddings(const Compiled<Ops>& c, std::uint64_t cap)
{
    if (!c.feasible) return 0;
    const std::size_t m = c.size();
    const std::size_t n = c.seq.size();
    auto sat_add = [cap](std::uint64_t a, std::uint64_t b) { return std::min(cap, a + std::min(b, cap)); };
    // ways[j]: embeddings of positives i.. with positive i at j.
    std::vector<std::uint64_t> ways(n, 0);
    for (std::size_t j = 0; j < n; ++j) ways[j] = Ops::subset(c.pos[m - 1], c.seq[j]) ? 1 : 0;
    for (std::size_t i = m - 1; i-- > 0;) {
        std::vector<std::uint64_t> next(n, 0);
        std::uint64_t suffix = 0;
        for (std::size_t j = n; j-- > 0;) {
            if (Ops::subset(c.pos[i], c.seq[j])) next[j] = suffix;
            suffix = sat_add(suffix, ways[j]);
        }
        ways = std::move(next);
    }
    std::uint64_t total = 0;
    for (auto w : ways) total = sat_add(total, w);
    return total;
}

template <class Ops>
void enumerate(const Compiled<Ops>& c, std::size_t i, std::vector<std::size_t>& path, std::size_t limit,
               std::vector<Embedding>& out)
{
    if (out.size() >= limit) return;
    if (i == c.size()) {
        Embedding e;
        for (auto j : path) e.positions.push_back(j + 1);
        out.push_back(std::move(e));
        return;
    }
    const std::size_t start = i == 0 ? 0 : path[i - 1] + 1;
    for (std::size_t j = start; j <= c.last[i] && out.size() < limit; ++j) {
        if (!Ops::subset(c.pos[i], c.seq[j])) continue;
        path[i] = j;
        enumerate(c, i + 1, path, limit, out);
    }
}

template <class F>
decltype(auto) dispatch(const NegPattern& p, const Sequence& s, F&& f)
{
    if (fits_mask(p, s)) return f(Compiled<MaskOps>(p, s));
    return f(Compiled<ItemsetOps>(p, s));
}

template <class Ops>
MatchReport make_report(const Compiled<Ops>& c, Theta theta, const MatchOptions& options)
{
    using Search = FirstSearch<Ops>;
    MatchReport r;
    const std::uint64_t cap = std::max<std::uint64_t>(options.embeddingCountCap, 1);
    r.totalPositiveEmbeddings = count_embeddings(c, cap);
    r.countSaturated = r.totalPositiveEmbeddings >= cap;
    if (r.totalPositiveEmbeddings == 0) return r;
    const unsigned bit = slot_bit(theta.embedding, theta.inclusion);
    if (theta.occurrence == Occurrence::Weak) {
        r.witness = Search(c, bit, Search::Target::Witness).run();
        r.contained = r.witness.has_value();
    } else {
        r.violator = Search(c, bit, Search::Target::Violator).run();
        r.contained = !r.violator.has_value();
        if (r.contained) r.witness = Search(c, bit, Search::Target::Witness).run();
    }
    return r;
}

bool positive_embedding_valid(const Embedding& e, const NegPattern& p, const Sequence& s)
{
    const auto& pos = e.positions;
    if (pos.size() != p.positive_count()) return false;
    for (std::size_t i = 0; i < pos.size(); ++i) {
        if (pos[i] < 1 || pos[i] > s.size()) return false;
        if (i > 0 && pos[i - 1] >= pos[i]) return false;
        if (!p.positive(i).is_subset_of(s[pos[i] - 1])) return false;
    }
    return true;
}

}  // namespace

bool non_inclusion(const Itemset& pattern, const Itemset& itemset, NonInclusion kind)
{
    if (pattern.empty()) return true;
    if (kind == NonInclusion::Partial) return !pattern.is_subset_of(itemset);
    return pattern.is_disjoint_from(itemset);
}

std::vector<Embedding> positive_embeddings(const NegPattern& p, const Sequence& s, std::size_t limit)
{
    if (p.has_negatives()) throw std::invalid_argument("positive_embeddings expects a positive pattern");
    std::vector<Embedding> out;
    dispatch(p, s, [&](const auto& c) {
        if (!c.feasible) return 0;
        std::vector<std::size_t> path(c.size(), 0);
        enumerate(c, 0, path, limit, out);
        return 0;
    });
    return out;
}

Itemset gap_union(const Sequence& s, const Embedding& e, std::size_t slot)
{
    if (slot < 1 || slot >= e.positions.size()) throw std::out_of_range("gap slot out of range");
    const std::size_t from = e.positions[slot - 1];  // 1-based, exclusive
    const std::size_t to = e.positions[slot];        // 1-based, exclusive
    if (to > s.size() + 1) throw std::out_of_range("embedding position beyond sequence");
    Itemset out;
    for (std::size_t j = from + 1; j < to; ++j) out = out.united(s[j - 1]);
    return out;
}

bool check_embedding(const Embedding& e, const NegPattern& p, const Sequence& s, EmbeddingKind embedding,
                     NonInclusion inclusion)
{
    if (!positive_embedding_valid(e, p, s))
        throw NotAPositiveEmbedding("tuple is not an embedding of the positive part");
    for (std::size_t slot = 1; slot < e.positions.size(); ++slot) {
        const Negative& neg = p.negative(slot - 1);
        EmbeddingKind emb = embedding;
        NonInclusion incl = inclusion;
        if (neg.mode) {
            emb = *neg.mode == NegMode::SoftPartial ? EmbeddingKind::Soft : EmbeddingKind::Strict;
            incl = *neg.mode == NegMode::Total ? NonInclusion::Total : NonInclusion::Partial;
        }
        bool ok = true;
        if (emb == EmbeddingKind::Strict) {
            ok = non_inclusion(neg.items, gap_union(s, e, slot), incl);
        } else {
            for (std::size_t j = e.positions[slot - 1] + 1; j < e.positions[slot] && ok; ++j)
                ok = non_inclusion(neg.items, s[j - 1], incl);
        }
        if (!ok) return false;
    }
    return true;
}

MatchReport contains(const NegPattern& p, const Sequence& s, Theta theta, const MatchOptions& options)
{
    return dispatch(p, s, [&](const auto& c) { return make_report(c, theta, options); });
}

bool occurs(const NegPattern& p, const Sequence& s, Theta theta)
{
    return dispatch(p, s, [&](const auto& c) {
        using Search = FirstSearch<typename std::remove_cvref_t<decltype(c)>::OpsType>;
        if (!c.feasible) return false;
        const unsigned bit = slot_bit(theta.embedding, theta.inclusion);
        if (theta.occurrence == Occurrence::Weak)
            return Search(c, bit, Search::Target::Witness).run().has_value();
        return !Search(c, bit, Search::Target::Violator).run().has_value();
    });
}

ContainmentMask containment_mask(const NegPattern& p, const Sequence& s)
{
    return dispatch(p, s, [](const auto& c) {
        using Ops = typename std::remove_cvref_t<decltype(c)>::OpsType;
        return MaskSearch<Ops>(c).run();
    });
}

std::uint64_t count_positive_embeddings(const NegPattern& p, const Sequence& s, std::uint64_t cap)
{
    return dispatch(p, s, [&](const auto& c) { return count_embeddings(c, std::max<std::uint64_t>(cap, 1)); });
}

std::size_t support(const NegPattern& p, std::span<const Sequence> sequences, Theta theta)
{
    std::size_t n = 0;
    for (const auto& s : sequences) n += occurs(p, s, theta) ? 1 : 0;
    return n;
}

std::size_t support(const NegPattern& p, const SequenceDatabase& db, Theta theta, unsigned threads)
{
    std::span<const Sequence> all = db.sequences;
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(all.size())));
    if (threads <= 1) return support(p, all, theta);
    std::vector<std::size_t> partial(threads, 0);
    {
        std::vector<std::jthread> workers;
        const std::size_t chunk = (all.size() + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            const std::size_t from = std::min(all.size(), t * chunk);
            const std::size_t to = std::min(all.size(), from + chunk);
            workers.emplace_back([&, t, from, to] { partial[t] = support(p, all.subspan(from, to - from), theta); });
        }
    }
    std::size_t n = 0;
    for (auto x : partial) n += x;
    return n;
}

std::array<std::size_t, 8> support_all(const NegPattern& p, std::span<const Sequence> sequences)
{
    std::array<std::size_t, 8> out{};
    for (const auto& s : sequences) {
        const auto mask = containment_mask(p, s);
        for (std::size_t i = 0; i < 8; ++i) out[i] += mask[i] ? 1 : 0;
    }
    return out;
}

}  // namespace nsp
