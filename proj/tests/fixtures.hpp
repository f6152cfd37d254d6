#pragma once

#include <initializer_list>
#include <string_view>

#include "nsp/core.hpp"
#include "nsp/text.hpp"

namespace fixtures {

inline nsp::SequenceDatabase database(std::initializer_list<std::string_view> lines)
{
    nsp::SequenceDatabase db;
    for (auto line : lines) db.sequences.push_back(nsp::parse_sequence(line, db.dictionary));
    return db;
}

/// The five sequences used to contrast partial and total non-inclusion.
inline nsp::SequenceDatabase inclusion_table()
{
    return database({"(b c) f a", "(b c) (c f) a", "(b c) (d f) a", "(b c) (e f) a", "(b c) (c d e f) a"});
}

/// The six-sequence dataset behind the association-rule example.
inline nsp::SequenceDatabase rules_dataset()
{
    return database({"a c e", "a b c e", "a b c e", "a c d", "a c d", "a c d"});
}

/// The four sequences of the itemset-absence example.
inline nsp::SequenceDatabase absence_example()
{
    return database({"a c b e d", "a (b c) e d", "a b e d", "a e d"});
}

inline nsp::NegPattern pattern(std::string_view text, nsp::Dictionary& dict) { return nsp::parse_pattern(text, dict); }
inline nsp::Sequence sequence(std::string_view text, nsp::Dictionary& dict) { return nsp::parse_sequence(text, dict); }

}  // namespace fixtures
