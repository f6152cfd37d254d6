#include "nsp/core.hpp"

#include <algorithm>
#include <iterator>

namespace nsp {

namespace {

constexpr std::string_view kReserved = "(){}|!<>,#";

}  // namespace

bool Dictionary::valid_token(std::string_view token) noexcept
{
    if (token.empty()) return false;
    for (unsigned char c : token) {
        if (c <= 0x20 || c == 0x7f) return false;
        if (kReserved.find(static_cast<char>(c)) != std::string_view::npos) return false;
    }
    // U+00AC is the negation alias in pattern text.
    return token.find("\xC2\xAC") == std::string_view::npos;
}

Item Dictionary::intern(std::string_view token)
{
    if (auto found = find(token)) return *found;
    if (!valid_token(token)) throw InvalidToken("invalid item token '" + std::string(token) + "'");
    Item item{static_cast<std::uint32_t>(tokens_.size())};
    tokens_.emplace_back(token);
    index_.emplace(tokens_.back(), item);
    return item;
}

std::optional<Item> Dictionary::find(std::string_view token) const
{
    auto it = index_.find(std::string(token));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

const std::string& Dictionary::token(Item item) const
{
    if (item.id >= tokens_.size()) throw std::out_of_range("item id not in dictionary");
    return tokens_[item.id];
}

Itemset::Itemset(std::initializer_list<Item> items) : Itemset(std::vector<Item>(items)) {}

Itemset::Itemset(std::vector<Item> items) : items_(std::move(items))
{
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

bool Itemset::contains(Item item) const noexcept
{
    return std::binary_search(items_.begin(), items_.end(), item);
}

bool Itemset::is_subset_of(const Itemset& other) const noexcept
{
    return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
}

bool Itemset::is_disjoint_from(const Itemset& other) const noexcept
{
    auto a = items_.begin();
    auto b = other.items_.begin();
    while (a != items_.end() && b != other.items_.end()) {
        if (*a < *b) {
            ++a;
        } else if (*b < *a) {
            ++b;
        } else {
            return false;
        }
    }
    return true;
}

Itemset Itemset::united(const Itemset& other) const
{
    Itemset out;
    out.items_.reserve(items_.size() + other.items_.size());
    std::set_union(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                   std::back_inserter(out.items_));
    return out;
}

Itemset Itemset::with_appended(Item item) const
{
    if (!items_.empty() && !(items_.back() < item))
        throw std::invalid_argument("appended item must exceed the itemset maximum");
    Itemset out = *this;
    out.items_.push_back(item);
    return out;
}

Itemset Itemset::without(Item item) const
{
    Itemset out = *this;
    auto it = std::lower_bound(out.items_.begin(), out.items_.end(), item);
    if (it != out.items_.end() && *it == item) out.items_.erase(it);
    return out;
}

Itemset make_itemset(std::span<const std::string> tokens, Dictionary& dict)
{
    std::vector<Item> items;
    items.reserve(tokens.size());
    for (const auto& t : tokens) items.push_back(dict.intern(t));
    return Itemset(std::move(items));
}

Itemset make_itemset(std::initializer_list<std::string_view> tokens, Dictionary& dict)
{
    std::vector<Item> items;
    for (auto t : tokens) items.push_back(dict.intern(t));
    return Itemset(std::move(items));
}

Sequence::Sequence(std::vector<Itemset> itemsets) : itemsets_(std::move(itemsets))
{
    for (std::size_t i = 0; i < itemsets_.size(); ++i)
        if (itemsets_[i].empty())
            throw EmptyItemset("sequence itemset " + std::to_string(i + 1) + " is empty");
}

NegPattern::NegPattern(std::vector<Itemset> positives, std::vector<Negative> negatives)
    : positives_(std::move(positives)), negatives_(std::move(negatives))
{
    const std::size_t expected = positives_.empty() ? 0 : positives_.size() - 1;
    if (negatives_.size() != expected)
        throw std::invalid_argument("a pattern with n positives needs exactly n-1 negative slots");
    // An empty negative carries no constraint, so its mode is meaningless.
    for (auto& n : negatives_)
        if (n.items.empty()) n.mode.reset();
}

NegPattern::NegPattern(std::vector<Itemset> positives)
    : NegPattern(positives, std::vector<Negative>(positives.empty() ? 0 : positives.size() - 1))
{
}

bool NegPattern::has_negatives() const noexcept
{
    return std::any_of(negatives_.begin(), negatives_.end(),
                       [](const Negative& n) { return !n.items.empty(); });
}

bool NegPattern::has_modes() const noexcept
{
    return std::any_of(negatives_.begin(), negatives_.end(),
                       [](const Negative& n) { return n.mode.has_value(); });
}

std::string_view to_string(Violation v) noexcept
{
    switch (v) {
    case Violation::NoPositives: return "pattern has no positive itemset";
    case Violation::EmptyPositive: return "positive itemset is empty";
    }
    return "unknown violation";
}

std::vector<Violation> validate_pattern(const NegPattern& p)
{
    std::vector<Violation> out;
    if (p.positive_count() == 0) out.push_back(Violation::NoPositives);
    for (const auto& pos : p.positives())
        if (pos.empty()) out.push_back(Violation::EmptyPositive);
    return out;
}

NegPattern positive_part(const NegPattern& p)
{
    return NegPattern(std::vector<Itemset>(p.positives().begin(), p.positives().end()));
}

std::size_t pattern_length(const NegPattern& p)
{
    std::size_t n = 0;
    for (const auto& pos : p.positives()) n += pos.empty() ? 0 : 1;
    for (const auto& neg : p.negatives()) n += neg.items.empty() ? 0 : 1;
    return n;
}

std::size_t Theta::index() const noexcept
{
    return (inclusion == NonInclusion::Total ? 4u : 0u) + (embedding == EmbeddingKind::Soft ? 2u : 0u) +
           (occurrence == Occurrence::Weak ? 1u : 0u);
}

Theta Theta::from_index(std::size_t i)
{
    if (i >= 8) throw std::out_of_range("theta index out of range");
    return Theta{(i & 1u) ? Occurrence::Weak : Occurrence::Strong,
                 (i & 2u) ? EmbeddingKind::Soft : EmbeddingKind::Strict,
                 (i & 4u) ? NonInclusion::Total : NonInclusion::Partial};
}

const std::array<Theta, 8>& Theta::all() noexcept
{
    static const std::array<Theta, 8> thetas = [] {
        std::array<Theta, 8> a{};
        for (std::size_t i = 0; i < 8; ++i) a[i] = from_index(i);
        return a;
    }();
    return thetas;
}

std::string to_string(Theta theta)
{
    std::string s = theta.occurrence == Occurrence::Weak ? "weak" : "strong";
    s += theta.embedding == EmbeddingKind::Soft ? "-soft" : "-strict";
    s += theta.inclusion == NonInclusion::Total ? "-total" : "-partial";
    return s;
}

std::optional<Theta> parse_theta(std::string_view text)
{
    for (const auto& t : Theta::all())
        if (to_string(t) == text) return t;
    return std::nullopt;
}

}  // namespace nsp
