#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "nsp/core.hpp"
#include "nsp/matcher.hpp"

namespace nsp {

/// Lexical error in pattern text; `column` is a 1-based byte offset.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& message, std::size_t column);
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t column_;
};

/// Well-formed text that breaks the alternation rules of negative patterns.
class StructureError : public Error {
public:
    using Error::Error;
};

/// Database file error; line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column);
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Parses "<a !(b c) (d e) !|f g| h>". Negative atoms:
///   !x       single item, no mode
///   !( .. )  no mode, or SoftPartial when the pattern also uses !{ } or !| |
///   !{ .. }  StrictPartial
///   !| .. |  Total
/// The character U+00AC may replace '!'. Unknown tokens extend `dict`.
NegPattern parse_pattern(std::string_view text, Dictionary& dict);

/// Canonical text: items in dictionary order, single spaces.
std::string render_pattern(const NegPattern& p, const Dictionary& dict);
std::string render_itemset(const Itemset& s, const Dictionary& dict);
/// Native database line, e.g. "(b c) f a".
std::string render_sequence(const Sequence& s, const Dictionary& dict);
std::string render_embedding(const Embedding& e);

enum class DatabaseFormat { Native, Spmf };

struct LoadedDatabase {
    SequenceDatabase db;
    std::vector<std::string> warnings;
};

LoadedDatabase read_database(std::istream& in, DatabaseFormat format);
LoadedDatabase load_database(const std::filesystem::path& path, DatabaseFormat format);
/// Writes the native format; read_database(Native) restores the same sequences.
void write_database(std::ostream& out, const SequenceDatabase& db);

/// Parses one native-format line into a sequence.
Sequence parse_sequence(std::string_view line, Dictionary& dict);

}  // namespace nsp
