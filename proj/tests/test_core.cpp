#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "nsp/core.hpp"
#include "nsp/verification.hpp"

using namespace nsp;

TEST_CASE("make_itemset sorts by item order and removes duplicates")
{
    Dictionary dict;
    const Item a = dict.intern("a");
    const Item d = dict.intern("d");
    const Itemset s = make_itemset({"d", "a"}, dict);
    REQUIRE(s.size() == 2);
    CHECK(s.items()[0] == a);
    CHECK(s.items()[1] == d);
    CHECK(make_itemset({"a", "a"}, dict).size() == 1);
    CHECK(make_itemset({"b", "c"}, dict).size() == 2);
    CHECK(dict.size() == 4);
}

TEST_CASE("item order is dictionary insertion order")
{
    Dictionary dict;
    const Itemset s = make_itemset({"z", "a"}, dict);
    CHECK(dict.token(s.items()[0]) == "z");
    CHECK(dict.token(s.items()[1]) == "a");
}

TEST_CASE("tokens with reserved characters are rejected")
{
    Dictionary dict;
    for (const char* bad : {"", "a b", "a(b", "x)", "{", "}", "|", "!a", "<", ">", "a,b", "#", "a\tb", "\xC2\xAC" "a"})
        CHECK_THROWS_AS(dict.intern(bad), InvalidToken);
    CHECK_NOTHROW(dict.intern("item_42"));
    CHECK_NOTHROW(dict.intern("-1"));
}

TEST_CASE("sequences reject empty itemsets")
{
    CHECK_THROWS_AS(Sequence({Itemset{Item{0}}, Itemset{}}), EmptyItemset);
    CHECK(Sequence{}.empty());
}

TEST_CASE("validate_pattern and pattern_length")
{
    Dictionary dict;
    const NegPattern p = fixtures::pattern("<a !(b c) (a d) d !(a b) d>", dict);
    CHECK(validate_pattern(p).empty());
    CHECK(pattern_length(p) == 6);

    const NegPattern empty({Itemset{}});
    const auto violations = validate_pattern(empty);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0] == Violation::EmptyPositive);
    CHECK(validate_pattern(NegPattern{}) == std::vector<Violation>{Violation::NoPositives});

    const NegPattern withEmpty({make_itemset({"a"}, dict), make_itemset({"b"}, dict)}, {Negative{}});
    CHECK(validate_pattern(withEmpty).empty());
    CHECK(pattern_length(withEmpty) == 2);
    CHECK(pattern_length(fixtures::pattern("<a>", dict)) == 1);
}

TEST_CASE("negative slot count must match the positives")
{
    Dictionary dict;
    const Itemset a = make_itemset({"a"}, dict);
    CHECK_THROWS_AS(NegPattern({a, a}, {}), std::invalid_argument);
    CHECK_THROWS_AS(NegPattern({a}, {Negative{}}), std::invalid_argument);
}

TEST_CASE("an explicit empty negative equals an absent one")
{
    Dictionary dict;
    const Itemset a = make_itemset({"a"}, dict);
    const Itemset b = make_itemset({"b"}, dict);
    const NegPattern explicitEmpty({a, b}, {Negative{Itemset{}, NegMode::Total}});
    CHECK(explicitEmpty == NegPattern({a, b}));
    CHECK_FALSE(explicitEmpty.has_modes());
    CHECK_FALSE(explicitEmpty.has_negatives());
}

TEST_CASE("positive_part")
{
    Dictionary dict;
    CHECK(positive_part(fixtures::pattern("<a !(b c) (a d) d !(a b) d>", dict)) ==
          fixtures::pattern("<a (a d) d d>", dict));
    CHECK(positive_part(fixtures::pattern("<a b>", dict)) == fixtures::pattern("<a b>", dict));
    CHECK(positive_part(fixtures::pattern("<b !c a>", dict)) == fixtures::pattern("<b a>", dict));
}

TEST_CASE("positive part properties on random patterns")
{
    Dictionary dict;
    PatternBounds bounds{4, 3, 3, letter_alphabet(dict, 6)};
    std::mt19937_64 rng(11);
    for (int i = 0; i < 2000; ++i) {
        const NegPattern p = random_pattern(rng, bounds);
        const NegPattern plus = positive_part(p);
        CHECK(validate_pattern(plus).empty());
        CHECK(pattern_length(plus) == p.positive_count());
        CHECK(positive_part(plus) == plus);
        CHECK(pattern_length(p) >= pattern_length(plus));
        CHECK((pattern_length(p) == pattern_length(plus)) == !p.has_negatives());
    }
}

TEST_CASE("theta naming and order")
{
    const auto& all = Theta::all();
    std::set<std::string> names;
    for (std::size_t i = 0; i < all.size(); ++i) {
        CHECK(all[i].index() == i);
        CHECK(Theta::from_index(i) == all[i]);
        names.insert(to_string(all[i]));
        CHECK(parse_theta(to_string(all[i])) == all[i]);
    }
    CHECK(names.size() == 8);
    CHECK(to_string(all[0]) == "strong-strict-partial");
    CHECK(to_string(all[3]) == "weak-soft-partial");
    CHECK(to_string(all[5]) == "weak-strict-total");
    CHECK(to_string(all[6]) == "strong-soft-total");
    CHECK_FALSE(parse_theta("weak-total").has_value());
    CHECK_FALSE(parse_theta("Weak-Strict-Total").has_value());
    CHECK_THROWS_AS(Theta::from_index(8), std::out_of_range);
}

TEST_CASE("itemset operations")
{
    const Itemset ab{Item{0}, Item{1}};
    const Itemset b{Item{1}};
    const Itemset c{Item{2}};
    CHECK(b.is_subset_of(ab));
    CHECK_FALSE(ab.is_subset_of(b));
    CHECK(Itemset{}.is_subset_of(b));
    CHECK(ab.is_disjoint_from(c));
    CHECK_FALSE(ab.is_disjoint_from(b));
    CHECK(ab.united(c) == Itemset{Item{0}, Item{1}, Item{2}});
    CHECK(ab.without(Item{0}) == b);
    CHECK(b.with_appended(Item{2}) == Itemset{Item{1}, Item{2}});
    CHECK_THROWS_AS(b.with_appended(Item{0}), std::invalid_argument);
    CHECK(Itemset{Item{2}, Item{0}, Item{2}} == Itemset{Item{0}, Item{2}});
}
