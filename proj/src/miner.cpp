#include "nsp/miner.hpp"

#include <algorithm>
#include <set>

#include "nsp/matcher.hpp"

namespace nsp {

namespace {

std::vector<Item> effective_alphabet(const PatternBounds& bounds, const SequenceDatabase& db)
{
    if (!bounds.alphabet.empty()) {
        std::vector<Item> a = bounds.alphabet;
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        return a;
    }
    std::vector<Item> a;
    for (std::uint32_t i = 0; i < db.dictionary.size(); ++i) a.push_back(Item{i});
    return a;
}

void combinations(std::span<const Item> alphabet, std::size_t size, std::size_t from, std::vector<Item>& current,
                  std::vector<Itemset>& out)
{
    if (current.size() == size) {
        out.emplace_back(current);
        return;
    }
    for (std::size_t i = from; i + (size - current.size()) <= alphabet.size(); ++i) {
        current.push_back(alphabet[i]);
        combinations(alphabet, size, i + 1, current, out);
        current.pop_back();
    }
}

NegPattern replace_positive(const NegPattern& p, std::size_t i, Itemset items)
{
    std::vector<Itemset> pos(p.positives().begin(), p.positives().end());
    pos[i] = std::move(items);
    return NegPattern(std::move(pos), std::vector<Negative>(p.negatives().begin(), p.negatives().end()));
}

NegPattern replace_negative(const NegPattern& p, std::size_t i, Itemset items)
{
    std::vector<Negative> neg(p.negatives().begin(), p.negatives().end());
    neg[i].items = std::move(items);
    return NegPattern(std::vector<Itemset>(p.positives().begin(), p.positives().end()), std::move(neg));
}

NegPattern append_positive(const NegPattern& p, Item item)
{
    std::vector<Itemset> pos(p.positives().begin(), p.positives().end());
    std::vector<Negative> neg(p.negatives().begin(), p.negatives().end());
    pos.push_back(Itemset{item});
    neg.push_back(Negative{});
    return NegPattern(std::move(pos), std::move(neg));
}

NegPattern drop_last_positive(const NegPattern& p)
{
    std::vector<Itemset> pos(p.positives().begin(), p.positives().end() - 1);
    std::vector<Negative> neg(p.negatives().begin(), p.negatives().end() - 1);
    return NegPattern(std::move(pos), std::move(neg));
}

// Extensions in the search tree. Each pattern has exactly one parent:
// remove the largest item of the last positive if it has several items,
// else remove the largest item of the last negative, else drop the last
// positive. Every edge is a prefix-inclusion step.
template <class Visit>
void for_each_child(const NegPattern& p, std::span<const Item> alphabet, const PatternBounds& bounds, Visit visit)
{
    const std::size_t k = p.positive_count();
    const Itemset& last = p.positive(k - 1);
    if (last.size() < bounds.maxItemsetSize)
        for (Item x : alphabet)
            if (last.max() < x) visit(replace_positive(p, k - 1, last.with_appended(x)), false);
    if (k >= 2 && last.size() == 1) {
        const Itemset& q = p.negative(k - 2).items;
        if (q.size() < bounds.maxNegSize)
            for (Item x : alphabet)
                if (q.empty() || q.max() < x) visit(replace_negative(p, k - 2, q.with_appended(x)), true);
    }
    if (k < bounds.maxPositives)
        for (Item x : alphabet) visit(append_positive(p, x), false);
}

// Immediate prefix-inclusion predecessors one item smaller. The flag marks
// negative-extension predecessors (same positives).
template <class Visit>
void for_each_predecessor(const NegPattern& p, Visit visit)
{
    const std::size_t k = p.positive_count();
    const Itemset& last = p.positive(k - 1);
    if (last.size() >= 2) {
        for (Item y : last) visit(replace_positive(p, k - 1, last.without(y)), false);
    } else if (k >= 2 && p.negative(k - 2).items.empty()) {
        visit(drop_last_positive(p), false);
    }
    for (std::size_t i = 0; i + 1 < k; ++i)
        for (Item y : p.negative(i).items) visit(replace_negative(p, i, p.negative(i).items.without(y)), true);
}

void sort_result(MiningResult& r)
{
    std::sort(r.frequent.begin(), r.frequent.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
}

void check_minsup(std::size_t minsup)
{
    if (minsup < 1) throw std::invalid_argument("minsup must be at least 1");
}

}  // namespace

void check_bounds(const PatternBounds& bounds)
{
    if (bounds.maxPositives < 1 || bounds.maxItemsetSize < 1 || bounds.maxNegSize < 1)
        throw std::invalid_argument("pattern bounds must be at least 1");
    if (bounds.alphabet.empty()) throw std::invalid_argument("pattern alphabet is empty");
}

std::vector<Itemset> bounded_itemsets(std::span<const Item> alphabet, std::size_t maxSize)
{
    std::vector<Itemset> out;
    std::vector<Item> current;
    for (std::size_t size = 1; size <= std::min(maxSize, alphabet.size()); ++size)
        combinations(alphabet, size, 0, current, out);
    return out;
}

void for_each_pattern(const PatternBounds& bounds, const std::function<void(const NegPattern&)>& visit)
{
    check_bounds(bounds);
    std::vector<Item> alphabet = bounds.alphabet;
    std::sort(alphabet.begin(), alphabet.end());
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
    const auto positives = bounded_itemsets(alphabet, bounds.maxItemsetSize);
    auto negatives = bounded_itemsets(alphabet, bounds.maxNegSize);
    negatives.insert(negatives.begin(), Itemset{});

    for (std::size_t k = 1; k <= bounds.maxPositives; ++k) {
        // Odometer over (p1, q1, ..., pk); the last digit moves fastest.
        std::vector<std::size_t> digits(2 * k - 1, 0);
        for (;;) {
            std::vector<Itemset> pos;
            std::vector<Negative> neg;
            for (std::size_t d = 0; d < digits.size(); ++d) {
                if (d % 2 == 0) {
                    pos.push_back(positives[digits[d]]);
                } else {
                    neg.push_back(Negative{negatives[digits[d]], std::nullopt});
                }
            }
            visit(NegPattern(std::move(pos), std::move(neg)));
            std::size_t d = digits.size();
            while (d-- > 0) {
                const std::size_t radix = d % 2 == 0 ? positives.size() : negatives.size();
                if (++digits[d] < radix) break;
                digits[d] = 0;
            }
            if (d == static_cast<std::size_t>(-1)) break;
        }
    }
}

std::vector<NegPattern> enumerate_patterns(const PatternBounds& bounds)
{
    std::vector<NegPattern> out;
    for_each_pattern(bounds, [&](const NegPattern& p) { out.push_back(p); });
    return out;
}

std::uint64_t count_patterns(const PatternBounds& bounds)
{
    check_bounds(bounds);
    std::vector<Item> alphabet = bounds.alphabet;
    std::sort(alphabet.begin(), alphabet.end());
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
    const std::uint64_t p = bounded_itemsets(alphabet, bounds.maxItemsetSize).size();
    const std::uint64_t n = bounded_itemsets(alphabet, bounds.maxNegSize).size() + 1;
    std::uint64_t total = 0;
    std::uint64_t term = p;
    for (std::size_t k = 1; k <= bounds.maxPositives; ++k) {
        total += term;
        term *= n * p;
    }
    return total;
}

MiningResult mine_bruteforce(const SequenceDatabase& db, Theta theta, std::size_t minsup,
                             const PatternBounds& bounds)
{
    check_minsup(minsup);
    PatternBounds b = bounds;
    b.alphabet = effective_alphabet(bounds, db);
    MiningResult r{{}, theta, minsup, {}};
    if (b.alphabet.empty()) return r;
    for_each_pattern(b, [&](const NegPattern& p) {
        ++r.stats.candidates;
        ++r.stats.supportCalls;
        const std::size_t s = support(p, db.sequences, theta);
        if (s >= minsup) r.frequent.emplace_back(p, s);
    });
    sort_result(r);
    return r;
}

MiningResult mine_pruned(const SequenceDatabase& db, Theta theta, std::size_t minsup, const PatternBounds& bounds)
{
    check_minsup(minsup);
    if (theta.inclusion != NonInclusion::Total)
        throw UnsupportedTheta("pruned mining requires total non-inclusion; use the brute-force engine");
    PatternBounds b = bounds;
    b.alphabet = effective_alphabet(bounds, db);
    MiningResult r{{}, theta, minsup, {}};
    if (b.alphabet.empty()) return r;
    check_bounds(b);

    const bool strong = theta.occurrence == Occurrence::Strong;
    const Theta weakTheta{Occurrence::Weak, theta.embedding, NonInclusion::Total};

    std::vector<NegPattern> level;
    for (Item x : b.alphabet) {
        level.push_back(NegPattern({Itemset{x}}));
        ++r.stats.candidates;
    }
    std::set<NegPattern> strongDeadPrev;
    while (!level.empty()) {
        std::set<NegPattern> weakFrequent;
        std::set<NegPattern> strongDead;
        std::vector<NegPattern> survivors;
        for (const auto& c : level) {
            bool dead = false;
            if (strong)
                for_each_predecessor(c, [&](const NegPattern& g, bool negExt) {
                    if (negExt && strongDeadPrev.contains(g)) dead = true;
                });
            ++r.stats.supportCalls;
            std::size_t weakSupport = 0;
            std::size_t strongSupport = 0;
            if (strong && !dead) {
                for (const auto& s : db.sequences) {
                    const auto mask = containment_mask(c, s);
                    weakSupport += mask[weakTheta.index()] ? 1 : 0;
                    strongSupport += mask[theta.index()] ? 1 : 0;
                }
            } else {
                weakSupport = support(c, db.sequences, weakTheta);
                if (dead) ++r.stats.strongSkipped;
            }
            if (weakSupport < minsup) {
                ++r.stats.prunedSubtrees;
                continue;
            }
            weakFrequent.insert(c);
            survivors.push_back(c);
            const std::size_t final = strong ? strongSupport : weakSupport;
            if (!dead && final >= minsup) {
                r.frequent.emplace_back(c, final);
            } else if (strong) {
                strongDead.insert(c);
            }
        }

        std::vector<NegPattern> next;
        for (const auto& c : survivors) {
            for_each_child(c, b.alphabet, b, [&](NegPattern child, bool) {
                ++r.stats.candidates;
                bool admissible = true;
                for_each_predecessor(child, [&](const NegPattern& g, bool) {
                    if (!weakFrequent.contains(g)) admissible = false;
                });
                if (admissible) {
                    next.push_back(std::move(child));
                } else {
                    ++r.stats.prunedCandidates;
                }
            });
        }
        level = std::move(next);
        strongDeadPrev = std::move(strongDead);
    }
    sort_result(r);
    return r;
}

}  // namespace nsp
