#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "nsp/matcher.hpp"
#include "nsp/miner.hpp"
#include "nsp/orders.hpp"
#include "nsp/verification.hpp"

using namespace nsp;
using fixtures::pattern;

namespace {

using O = Occurrence;
using E = EmbeddingKind;
using N = NonInclusion;

std::vector<Item> items(const Dictionary& dict, std::initializer_list<const char*> tokens)
{
    std::vector<Item> out;
    for (const char* t : tokens) out.push_back(*dict.find(t));
    return out;
}

SequenceDatabase random_database(std::mt19937_64& rng, std::size_t size, std::size_t alphabetSize)
{
    SequenceDatabase db;
    const auto alphabet = letter_alphabet(db.dictionary, alphabetSize);
    for (std::size_t i = 0; i < size; ++i) db.sequences.push_back(random_sequence(rng, SequenceBounds{5, 2, alphabet}));
    return db;
}

}  // namespace

TEST_CASE("pattern enumeration")
{
    Dictionary dict;
    const auto ab = letter_alphabet(dict, 2);
    CHECK(enumerate_patterns(PatternBounds{1, 1, 1, {ab[0]}}).size() == 1);
    // One positive: a, b. Two positives: 2 * 3 negatives * 2.
    CHECK(enumerate_patterns(PatternBounds{2, 1, 1, ab}).size() == 14);

    const auto abc = letter_alphabet(dict, 3);
    for (const PatternBounds& b : {PatternBounds{2, 2, 2, abc}, PatternBounds{3, 1, 2, abc}, PatternBounds{3, 2, 1, ab}}) {
        const auto all = enumerate_patterns(b);
        CHECK(all.size() == count_patterns(b));
        CHECK(std::set<NegPattern>(all.begin(), all.end()).size() == all.size());
        for (const auto& p : all) {
            CHECK(validate_pattern(p).empty());
            CHECK(p.positive_count() <= b.maxPositives);
        }
    }
    CHECK(bounded_itemsets(abc, 2).size() == 6);
    CHECK_THROWS_AS(check_bounds(PatternBounds{0, 1, 1, abc}), std::invalid_argument);
    CHECK_THROWS_AS(check_bounds(PatternBounds{1, 1, 1, {}}), std::invalid_argument);
}

TEST_CASE("brute-force mining on the rule dataset")
{
    const auto db = fixtures::rules_dataset();
    const Theta theta{O::Weak, E::Strict, N::Total};
    const PatternBounds bounds{4, 1, 1, items(db.dictionary, {"a", "b", "c", "d"})};
    const auto result = mine_bruteforce(db, theta, 3, bounds);
    Dictionary dict = db.dictionary;
    const auto target = pattern("<a !b c d>", dict);
    const auto it = std::find_if(result.frequent.begin(), result.frequent.end(),
                                 [&](const auto& entry) { return entry.first == target; });
    REQUIRE(it != result.frequent.end());
    CHECK(it->second == 3);
    CHECK(std::is_sorted(result.frequent.begin(), result.frequent.end()));
    CHECK(result.stats.supportCalls == count_patterns(bounds));

    CHECK(mine_bruteforce(db, theta, 7, bounds).frequent.empty());
    CHECK_THROWS_AS(mine_bruteforce(db, theta, 0, bounds), std::invalid_argument);
}

TEST_CASE("brute-force mining finds the partial-inclusion pattern")
{
    auto db = fixtures::inclusion_table();
    db.dictionary.intern("g");
    const PatternBounds bounds{2, 1, 4, items(db.dictionary, {"a", "b", "c", "d", "e", "f", "g"})};
    Dictionary dict = db.dictionary;
    const auto target = pattern("<b !(c d e g) a>", dict);
    const auto result = mine_bruteforce(db, Theta{O::Weak, E::Strict, N::Partial}, 5, bounds);
    CHECK(std::any_of(result.frequent.begin(), result.frequent.end(),
                      [&](const auto& entry) { return entry.first == target && entry.second == 5; }));
}

TEST_CASE("pruned mining matches brute force")
{
    std::mt19937_64 rng(21);
    const std::array<PatternBounds, 3> shapes{PatternBounds{2, 2, 2, {}}, PatternBounds{3, 1, 1, {}},
                                              PatternBounds{3, 1, 2, {}}};
    for (int round = 0; round < 12; ++round) {
        const auto db = random_database(rng, 12, round % 2 == 0 ? 4 : 3);
        const PatternBounds& bounds = shapes[round % shapes.size()];
        const std::size_t minsup = 2 + static_cast<std::size_t>(round % 4);
        for (const Theta t : Theta::all()) {
            if (t.inclusion == N::Partial) continue;
            const auto pruned = mine_pruned(db, t, minsup, bounds);
            const auto brute = mine_bruteforce(db, t, minsup, bounds);
            CHECK(pruned.frequent == brute.frequent);
            CHECK(pruned.stats.supportCalls <= brute.stats.supportCalls);
        }
    }
}

TEST_CASE("pruned mining rejects partial non-inclusion")
{
    const auto db = fixtures::rules_dataset();
    CHECK_THROWS_AS(mine_pruned(db, Theta{O::Weak, E::Strict, N::Partial}, 2, PatternBounds{}), UnsupportedTheta);
    CHECK_THROWS_AS(mine_pruned(db, Theta{O::Weak, E::Strict, N::Total}, 0, PatternBounds{}), std::invalid_argument);
}

TEST_CASE("support is monotone along the anti-monotone orders")
{
    std::mt19937_64 rng(5);
    const auto db = random_database(rng, 15, 3);
    const auto patterns = enumerate_patterns(PatternBounds{2, 2, 2, items(db.dictionary, {"a", "b", "c"})});
    std::size_t pairs = 0;
    for (const Theta t : Theta::all()) {
        if (t.inclusion == N::Partial) continue;
        std::vector<std::size_t> sup;
        sup.reserve(patterns.size());
        for (const auto& p : patterns) sup.push_back(support(p, db, t));
        for (std::size_t i = 0; i < patterns.size(); ++i)
            for (std::size_t j = 0; j < patterns.size(); ++j) {
                if (neg_ext(patterns[i], patterns[j])) {
                    CHECK(sup[i] >= sup[j]);
                    ++pairs;
                }
                if (t.occurrence == O::Weak && prefix_incl(patterns[i], patterns[j])) {
                    CHECK(sup[i] >= sup[j]);
                    ++pairs;
                }
            }
    }
    CHECK(pairs > 0);
}

TEST_CASE("mined patterns respect bounds and threshold")
{
    std::mt19937_64 rng(8);
    const auto db = random_database(rng, 10, 4);
    const PatternBounds bounds{3, 2, 1, {}};
    const Theta theta{O::Strong, E::Soft, N::Total};
    const auto result = mine_pruned(db, theta, 3, bounds);
    CHECK_FALSE(result.frequent.empty());
    for (const auto& [p, s] : result.frequent) {
        CHECK(s >= 3);
        CHECK(s == support(p, db, theta));
        CHECK(p.positive_count() <= 3);
        for (const auto& pos : p.positives()) CHECK(pos.size() <= 2);
        for (const auto& n : p.negatives()) CHECK(n.items.size() <= 1);
    }
}
