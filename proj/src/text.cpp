#include "nsp/text.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace nsp {

SyntaxError::SyntaxError(const std::string& message, std::size_t column)
    : Error("column " + std::to_string(column) + ": " + message), column_(column)
{
}

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column)
{
}

namespace {

constexpr std::string_view kNegSign = "\xC2\xAC";

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

bool is_token_char(std::string_view text, std::size_t i)
{
    const char c = text[i];
    if (is_space(c)) return false;
    if (std::string_view("(){}|!<>,#").find(c) != std::string_view::npos) return false;
    return text.substr(i, kNegSign.size()) != kNegSign;
}

class PatternLexer {
public:
    explicit PatternLexer(std::string_view text) : text_(text) {}

    void skip_space()
    {
        while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    std::size_t column() const { return pos_ + 1; }
    void advance(std::size_t n = 1) { pos_ += n; }

    bool at_negation() const
    {
        return peek() == '!' || text_.substr(pos_, kNegSign.size()) == kNegSign;
    }
    void consume_negation() { advance(peek() == '!' ? 1 : kNegSign.size()); }

    std::string token()
    {
        const std::size_t start = pos_;
        while (!at_end() && is_token_char(text_, pos_)) ++pos_;
        if (pos_ == start) {
            if (at_end()) throw SyntaxError("unexpected end of pattern", column());
            throw SyntaxError(std::string("unexpected character '") + peek() + "'", column());
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    /// Items up to `close`, which is consumed.
    std::vector<std::string> items_until(char close)
    {
        std::vector<std::string> out;
        const std::size_t open = column() - 1;
        for (;;) {
            skip_space();
            if (at_end()) throw SyntaxError(std::string("missing '") + close + "'", column());
            if (peek() == close) {
                if (out.empty()) throw SyntaxError("empty itemset", open);
                advance();
                return out;
            }
            out.push_back(token());
        }
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

enum class AtomKind { Positive, Bare, Paren, Brace, Bar };

struct Element {
    AtomKind kind;
    std::vector<std::string> tokens;
    std::size_t column;
};

std::vector<Element> lex_elements(std::string_view text)
{
    PatternLexer lex(text);
    lex.skip_space();
    if (lex.peek() != '<') throw SyntaxError("pattern must start with '<'", lex.column());
    lex.advance();
    std::vector<Element> elements;
    for (;;) {
        lex.skip_space();
        if (lex.at_end()) throw SyntaxError("missing '>'", lex.column());
        const std::size_t col = lex.column();
        if (lex.peek() == '>') {
            lex.advance();
            break;
        }
        if (lex.at_negation()) {
            lex.consume_negation();
            switch (lex.peek()) {
            case '(':
                lex.advance();
                elements.push_back({AtomKind::Paren, lex.items_until(')'), col});
                break;
            case '{':
                lex.advance();
                elements.push_back({AtomKind::Brace, lex.items_until('}'), col});
                break;
            case '|':
                lex.advance();
                elements.push_back({AtomKind::Bar, lex.items_until('|'), col});
                break;
            default:
                elements.push_back({AtomKind::Bare, {lex.token()}, col});
            }
        } else if (lex.peek() == '(') {
            lex.advance();
            elements.push_back({AtomKind::Positive, lex.items_until(')'), col});
        } else {
            elements.push_back({AtomKind::Positive, {lex.token()}, col});
        }
    }
    lex.skip_space();
    if (!lex.at_end()) throw SyntaxError("trailing characters after '>'", lex.column());
    return elements;
}

void append_items(std::string& out, const Itemset& s, const Dictionary& dict)
{
    bool first = true;
    for (Item i : s) {
        if (!first) out += ' ';
        out += dict.token(i);
        first = false;
    }
}

Sequence parse_native_line(std::string_view line, Dictionary& dict, std::size_t lineNo)
{
    std::vector<Itemset> itemsets;
    std::size_t i = 0;
    auto fail = [&](const std::string& msg, std::size_t at) { throw ParseError(msg, lineNo, at + 1); };
    auto read_token = [&]() {
        const std::size_t start = i;
        while (i < line.size() && is_token_char(line, i)) ++i;
        if (i == start) fail(std::string("unexpected character '") + line[i] + "'", i);
        return std::string(line.substr(start, i - start));
    };
    while (true) {
        while (i < line.size() && is_space(line[i])) ++i;
        if (i >= line.size()) break;
        if (line[i] == '(') {
            const std::size_t open = i++;
            std::vector<std::string> tokens;
            for (;;) {
                while (i < line.size() && is_space(line[i])) ++i;
                if (i >= line.size()) fail("missing ')'", i);
                if (line[i] == ')') {
                    ++i;
                    break;
                }
                tokens.push_back(read_token());
            }
            if (tokens.empty())
                throw EmptyItemset("line " + std::to_string(lineNo) + ", column " + std::to_string(open + 1) +
                                   ": empty itemset");
            itemsets.push_back(make_itemset(tokens, dict));
        } else {
            std::string t = read_token();
            itemsets.push_back(Itemset{dict.intern(t)});
        }
    }
    return Sequence(std::move(itemsets));
}

bool is_comment_or_blank(std::string_view line, std::string_view markers)
{
    std::size_t i = 0;
    while (i < line.size() && is_space(line[i])) ++i;
    return i == line.size() || markers.find(line[i]) != std::string_view::npos;
}

Sequence parse_spmf_line(std::string_view line, Dictionary& dict, std::size_t lineNo)
{
    std::vector<Itemset> itemsets;
    std::vector<std::string> current;
    bool terminated = false;
    std::size_t i = 0;
    while (true) {
        while (i < line.size() && is_space(line[i])) ++i;
        if (i >= line.size()) break;
        const std::size_t start = i;
        while (i < line.size() && !is_space(line[i])) ++i;
        const std::string_view tok = line.substr(start, i - start);
        if (terminated) throw ParseError("token after end of sequence marker -2", lineNo, start + 1);
        if (tok == "-1") {
            if (current.empty())
                throw EmptyItemset("line " + std::to_string(lineNo) + ", column " + std::to_string(start + 1) +
                                   ": empty itemset");
            itemsets.push_back(make_itemset(current, dict));
            current.clear();
            continue;
        }
        if (tok == "-2") {
            // Tolerate a final itemset without its -1.
            if (!current.empty()) itemsets.push_back(make_itemset(current, dict));
            current.clear();
            terminated = true;
            continue;
        }
        unsigned long value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw ParseError("expected a non-negative integer item, -1 or -2", lineNo, start + 1);
        current.emplace_back(tok);
    }
    if (!terminated) throw ParseError("sequence not terminated by -2", lineNo, line.size() + 1);
    return Sequence(std::move(itemsets));
}

}  // namespace

NegPattern parse_pattern(std::string_view text, Dictionary& dict)
{
    const auto elements = lex_elements(text);
    if (elements.empty()) throw StructureError("a pattern needs at least one positive itemset");
    if (elements.front().kind != AtomKind::Positive)
        throw StructureError("a pattern cannot start with a negative itemset");
    if (elements.back().kind != AtomKind::Positive)
        throw StructureError("a pattern cannot finish with a negative itemset");
    bool explicitModes = false;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        const auto k = elements[i].kind;
        if (k == AtomKind::Brace || k == AtomKind::Bar) explicitModes = true;
        if (i > 0 && k != AtomKind::Positive && elements[i - 1].kind != AtomKind::Positive)
            throw StructureError("two successive negative itemsets at column " +
                                 std::to_string(elements[i].column));
    }
    std::vector<Itemset> positives;
    std::vector<Negative> negatives;
    Negative pending;
    for (const auto& e : elements) {
        Itemset items = make_itemset(e.tokens, dict);
        if (e.kind == AtomKind::Positive) {
            if (!positives.empty()) negatives.push_back(std::move(pending));
            pending = Negative{};
            positives.push_back(std::move(items));
            continue;
        }
        pending.items = std::move(items);
        switch (e.kind) {
        case AtomKind::Paren:
            if (explicitModes) pending.mode = NegMode::SoftPartial;
            break;
        case AtomKind::Brace: pending.mode = NegMode::StrictPartial; break;
        case AtomKind::Bar: pending.mode = NegMode::Total; break;
        default: break;
        }
    }
    return NegPattern(std::move(positives), std::move(negatives));
}

std::string render_itemset(const Itemset& s, const Dictionary& dict)
{
    if (s.size() == 1) return dict.token(*s.begin());
    std::string out = "(";
    append_items(out, s, dict);
    out += ')';
    return out;
}

std::string render_pattern(const NegPattern& p, const Dictionary& dict)
{
    std::string out = "<";
    for (std::size_t i = 0; i < p.positive_count(); ++i) {
        if (i > 0) {
            const Negative& n = p.negative(i - 1);
            if (!n.items.empty()) {
                if (!n.mode && n.items.size() == 1) {
                    out += " !" + dict.token(*n.items.begin());
                } else {
                    const char* brackets = !n.mode || *n.mode == NegMode::SoftPartial ? "()"
                                           : *n.mode == NegMode::StrictPartial    ? "{}"
                                                                                  : "||";
                    out += " !";
                    out += brackets[0];
                    append_items(out, n.items, dict);
                    out += brackets[1];
                }
            }
            out += ' ';
        }
        out += render_itemset(p.positive(i), dict);
    }
    out += '>';
    return out;
}

std::string render_sequence(const Sequence& s, const Dictionary& dict)
{
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i > 0) out += ' ';
        out += render_itemset(s[i], dict);
    }
    return out;
}

std::string render_embedding(const Embedding& e)
{
    std::string out = "(";
    for (std::size_t i = 0; i < e.positions.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(e.positions[i]);
    }
    out += ')';
    return out;
}

Sequence parse_sequence(std::string_view line, Dictionary& dict) { return parse_native_line(line, dict, 1); }

LoadedDatabase read_database(std::istream& in, DatabaseFormat format)
{
    LoadedDatabase out;
    std::string line;
    std::size_t lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (format == DatabaseFormat::Native) {
            if (is_comment_or_blank(line, "#")) continue;
            out.db.sequences.push_back(parse_native_line(line, out.db.dictionary, lineNo));
        } else {
            if (is_comment_or_blank(line, "#%@")) continue;
            out.db.sequences.push_back(parse_spmf_line(line, out.db.dictionary, lineNo));
        }
    }
    if (out.db.sequences.empty()) out.warnings.emplace_back("database contains no sequences");
    return out;
}

LoadedDatabase load_database(const std::filesystem::path& path, DatabaseFormat format)
{
    std::ifstream in(path);
    if (!in) throw Error("cannot open database file '" + path.string() + "'");
    return read_database(in, format);
}

void write_database(std::ostream& out, const SequenceDatabase& db)
{
    for (const auto& s : db.sequences) out << render_sequence(s, db.dictionary) << '\n';
}

}  // namespace nsp
