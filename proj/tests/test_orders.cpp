#include <doctest.h>

#include "fixtures.hpp"
#include "nsp/miner.hpp"
#include "nsp/orders.hpp"
#include "nsp/verification.hpp"
#include "oracle.hpp"

using namespace nsp;
using fixtures::pattern;

TEST_CASE("embed_incl")
{
    Dictionary dict;
    CHECK(embed_incl(pattern("<b !c a>", dict), pattern("<b !c d a>", dict)));
    const auto p = pattern("<a !b c>", dict);
    CHECK_FALSE(embed_incl(p, p));
    CHECK(embed_incl(pattern("<a>", dict), pattern("<(a b)>", dict)));
    CHECK_FALSE(embed_incl(pattern("<a !(b c) d>", dict), pattern("<a !b d>", dict)));
    CHECK(embed_incl(pattern("<a !(b c) d>", dict), pattern("<a !b e !c d>", dict)));
}

TEST_CASE("prefix_incl")
{
    Dictionary dict;
    CHECK(prefix_incl(pattern("<a !b c>", dict), pattern("<a !b c d>", dict)));
    CHECK_FALSE(prefix_incl(pattern("<b !c a>", dict), pattern("<b !c d a>", dict)));
    CHECK(prefix_incl(pattern("<a !b c>", dict), pattern("<a !b (c d)>", dict)));
    // Only the last positive may grow when the lengths agree.
    CHECK_FALSE(prefix_incl(pattern("<a !b c>", dict), pattern("<(a d) !b c>", dict)));
}

TEST_CASE("neg_ext")
{
    Dictionary dict;
    CHECK(neg_ext(pattern("<a !b c>", dict), pattern("<a !(b d) c>", dict)));
    CHECK_FALSE(neg_ext(pattern("<a !b c>", dict), pattern("<a !b c d>", dict)));
    const auto p = pattern("<a !b c>", dict);
    CHECK_FALSE(neg_ext(p, p));
    CHECK(neg_ext(pattern("<a c>", dict), pattern("<a !b c>", dict)));
}

TEST_CASE("partial variant reverses the negative inclusion")
{
    Dictionary dict;
    const auto small = pattern("<a !b c>", dict);
    const auto large = pattern("<a !(b d) c>", dict);
    CHECK(neg_ext(small, large, NonInclusion::Total));
    CHECK_FALSE(neg_ext(small, large, NonInclusion::Partial));
    CHECK(neg_ext(large, small, NonInclusion::Partial));
    CHECK(embed_incl(pattern("<b !c a>", dict), pattern("<b !c d a>", dict), NonInclusion::Partial));
}

TEST_CASE("orders agree with their literal definitions")
{
    Dictionary dict;
    const auto alphabet = letter_alphabet(dict, 3);
    auto patterns = enumerate_patterns(PatternBounds{2, 2, 2, alphabet});
    for_each_pattern(PatternBounds{3, 1, 1, alphabet}, [&](const NegPattern& p) {
        if (p.positive_count() == 3) patterns.push_back(p);
    });
    std::size_t mismatches = 0;
    std::size_t comparable = 0;
    for (const auto& p : patterns)
        for (const auto& q : patterns)
            for (auto n : {NonInclusion::Partial, NonInclusion::Total}) {
                const bool e = embed_incl(p, q, n);
                comparable += e ? 1 : 0;
                mismatches += e != oracle::embed_incl(p, q, n);
                mismatches += prefix_incl(p, q, n) != oracle::prefix_incl(p, q, n);
                mismatches += neg_ext(p, q, n) != oracle::neg_ext(p, q, n);
            }
    CHECK(mismatches == 0);
    CHECK(comparable > 0);
}

TEST_CASE("known dominance table")
{
    const auto& t = known_dominance();
    using O = Occurrence;
    using E = EmbeddingKind;
    using N = NonInclusion;
    const Theta strongSoftTotal{O::Strong, E::Soft, N::Total};
    const Theta weakSoftPartial{O::Weak, E::Soft, N::Partial};
    for (const Theta u : Theta::all()) {
        if (u == strongSoftTotal) continue;
        CHECK(t.at(strongSoftTotal, u) == Dominance::Dominates);
    }
    for (const Theta u : Theta::all()) {
        if (u == weakSoftPartial) continue;
        CHECK(t.at(weakSoftPartial, u) == Dominance::NotDominates);
    }
    CHECK(t.at(Theta{O::Strong, E::Strict, N::Partial}, weakSoftPartial) == Dominance::Dominates);

    for (const Theta a : Theta::all()) {
        CHECK(t.at(a, a) == Dominance::Self);
        for (const Theta b : Theta::all())
            for (const Theta c : Theta::all())
                if (t.at(a, b) == Dominance::Dominates && t.at(b, c) == Dominance::Dominates && !(a == c))
                    CHECK(t.at(a, c) == Dominance::Dominates);
    }
}

TEST_CASE("known dominance has six mutual-dominance classes")
{
    const auto& t = known_dominance();
    std::size_t classes = 0;
    for (std::size_t i = 0; i < 8; ++i) {
        bool first = true;
        for (std::size_t j = 0; j < i; ++j) {
            const Theta a = Theta::from_index(i);
            const Theta b = Theta::from_index(j);
            if (t.dominates(a, b) && t.dominates(b, a)) first = false;
        }
        classes += first ? 1 : 0;
    }
    CHECK(classes == 6);
}

TEST_CASE("known anti-monotonicity")
{
    using O = Occurrence;
    for (const Theta t : Theta::all()) {
        CHECK_FALSE(known_antimonotonic(t, OrderKind::EmbedIncl));
        const bool total = t.inclusion == NonInclusion::Total;
        CHECK(known_antimonotonic(t, OrderKind::NegExt) == total);
        CHECK(known_antimonotonic(t, OrderKind::PrefixIncl) == (total && t.occurrence == O::Weak));
    }
}
