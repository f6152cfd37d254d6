#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace nsp {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidToken : public Error {
public:
    using Error::Error;
};

class EmptyItemset : public Error {
public:
    using Error::Error;
};

/// Dense item identifier. Ordering of ids is the global item order.
struct Item {
    std::uint32_t id = 0;
    friend auto operator<=>(Item, Item) = default;
};

/// Bijection between display tokens and items; ids follow insertion order.
class Dictionary {
public:
    /// Returns the item for `token`, adding it if unseen. Throws InvalidToken.
    Item intern(std::string_view token);
    std::optional<Item> find(std::string_view token) const;
    const std::string& token(Item item) const;
    std::size_t size() const noexcept { return tokens_.size(); }
    std::span<const std::string> tokens() const noexcept { return tokens_; }

    static bool valid_token(std::string_view token) noexcept;

private:
    std::vector<std::string> tokens_;
    std::unordered_map<std::string, Item> index_;
};

/// A finite set of items, stored strictly increasing.
class Itemset {
public:
    Itemset() = default;
    Itemset(std::initializer_list<Item> items);
    explicit Itemset(std::vector<Item> items);

    std::span<const Item> items() const noexcept { return items_; }
    std::size_t size() const noexcept { return items_.size(); }
    bool empty() const noexcept { return items_.empty(); }
    bool contains(Item item) const noexcept;
    Item max() const { return items_.back(); }

    bool is_subset_of(const Itemset& other) const noexcept;
    bool is_disjoint_from(const Itemset& other) const noexcept;
    Itemset united(const Itemset& other) const;
    /// Copy with `item` added; `item` must exceed every current item.
    Itemset with_appended(Item item) const;
    Itemset without(Item item) const;

    auto begin() const noexcept { return items_.begin(); }
    auto end() const noexcept { return items_.end(); }

    friend bool operator==(const Itemset&, const Itemset&) = default;
    friend auto operator<=>(const Itemset&, const Itemset&) = default;

private:
    std::vector<Item> items_;
};

/// Builds a canonical itemset from display tokens, extending `dict`.
Itemset make_itemset(std::span<const std::string> tokens, Dictionary& dict);
Itemset make_itemset(std::initializer_list<std::string_view> tokens, Dictionary& dict);

/// Ordered list of non-empty itemsets.
class Sequence {
public:
    Sequence() = default;
    /// Throws EmptyItemset if any member is empty.
    explicit Sequence(std::vector<Itemset> itemsets);

    std::span<const Itemset> itemsets() const noexcept { return itemsets_; }
    std::size_t size() const noexcept { return itemsets_.size(); }
    bool empty() const noexcept { return itemsets_.empty(); }
    /// 0-based access.
    const Itemset& operator[](std::size_t i) const { return itemsets_[i]; }

    friend bool operator==(const Sequence&, const Sequence&) = default;
    friend auto operator<=>(const Sequence&, const Sequence&) = default;

private:
    std::vector<Itemset> itemsets_;
};

/// Per-negative evaluation mode of the explicit negation syntax.
/// Total covers both embeddings since they coincide under total non-inclusion.
enum class NegMode : std::uint8_t { SoftPartial, StrictPartial, Total };

struct Negative {
    Itemset items;
    std::optional<NegMode> mode;

    friend bool operator==(const Negative&, const Negative&) = default;
    friend auto operator<=>(const Negative&, const Negative&) = default;
};

/// Alternating pattern <p1 !q1 p2 ... !q(n-1) pn>. Negative slot i sits
/// between positives i and i+1; an empty negative means no constraint.
class NegPattern {
public:
    NegPattern() = default;
    /// Requires negatives.size() + 1 == positives.size() (or both empty).
    NegPattern(std::vector<Itemset> positives, std::vector<Negative> negatives);
    /// Pattern without any negative constraint.
    explicit NegPattern(std::vector<Itemset> positives);

    std::span<const Itemset> positives() const noexcept { return positives_; }
    std::span<const Negative> negatives() const noexcept { return negatives_; }
    std::size_t positive_count() const noexcept { return positives_.size(); }
    const Itemset& positive(std::size_t i) const { return positives_[i]; }
    const Negative& negative(std::size_t i) const { return negatives_[i]; }

    bool has_negatives() const noexcept;
    bool has_modes() const noexcept;

    friend bool operator==(const NegPattern&, const NegPattern&) = default;
    friend auto operator<=>(const NegPattern&, const NegPattern&) = default;

private:
    std::vector<Itemset> positives_;
    std::vector<Negative> negatives_;
};

enum class Violation : std::uint8_t { NoPositives, EmptyPositive };

std::string_view to_string(Violation v) noexcept;

/// Empty result means the pattern is well-formed.
std::vector<Violation> validate_pattern(const NegPattern& p);
NegPattern positive_part(const NegPattern& p);
/// Number of non-empty itemsets, positive and negative.
std::size_t pattern_length(const NegPattern& p);

enum class Occurrence : std::uint8_t { Weak, Strong };
enum class EmbeddingKind : std::uint8_t { Soft, Strict };
enum class NonInclusion : std::uint8_t { Partial, Total };

/// One of the eight containment relations.
struct Theta {
    Occurrence occurrence = Occurrence::Weak;
    EmbeddingKind embedding = EmbeddingKind::Strict;
    NonInclusion inclusion = NonInclusion::Total;

    /// Position in the reporting order (0..7).
    std::size_t index() const noexcept;
    static Theta from_index(std::size_t i);
    /// All eight relations in reporting order.
    static const std::array<Theta, 8>& all() noexcept;

    friend bool operator==(Theta, Theta) = default;
};

/// "occ-emb-incl", e.g. "weak-strict-total".
std::string to_string(Theta theta);
std::optional<Theta> parse_theta(std::string_view text);

struct SequenceDatabase {
    Dictionary dictionary;
    std::vector<Sequence> sequences;
};

}  // namespace nsp
