#include "nsp/orders.hpp"

#include <vector>

namespace nsp {

namespace {

// Inclusion of a negative of the smaller pattern into the covering union of
// the larger one, in the direction fixed by the non-inclusion kind.
bool negative_covered(const Itemset& small, const Itemset& cover, NonInclusion kind)
{
    return kind == NonInclusion::Total ? small.is_subset_of(cover) : cover.is_subset_of(small);
}

bool some_itemset_differs(const NegPattern& p, const NegPattern& q)
{
    for (std::size_t i = 0; i < p.positive_count(); ++i)
        if (p.positive(i) != q.positive(i)) return true;
    for (std::size_t i = 0; i + 1 < p.positive_count(); ++i)
        if (p.negative(i).items != q.negative(i).items) return true;
    return false;
}

bool some_negative_differs(const NegPattern& p, const NegPattern& q)
{
    for (std::size_t i = 0; i + 1 < p.positive_count(); ++i)
        if (p.negative(i).items != q.negative(i).items) return true;
    return false;
}

class EmbedSearch {
public:
    EmbedSearch(const NegPattern& p, const NegPattern& q, NonInclusion kind)
        : p_(p), q_(q), kind_(kind), u_(p.positive_count())
    {
    }

    bool run()
    {
        const std::size_t k = p_.positive_count();
        const std::size_t k2 = q_.positive_count();
        for (std::size_t j = 0; j + k <= k2; ++j) {
            if (!p_.positive(0).is_subset_of(q_.positive(j))) continue;
            u_[0] = j;
            if (descend(1)) return true;
        }
        return false;
    }

private:
    bool descend(std::size_t i)
    {
        const std::size_t k = p_.positive_count();
        const std::size_t k2 = q_.positive_count();
        if (i == k) return true;
        Itemset cover;
        for (std::size_t j = u_[i - 1] + 1; j + (k - i) <= k2; ++j) {
            // Negatives of q strictly between positives u[i-1] and j.
            cover = cover.united(q_.negative(j - 1).items);
            if (!p_.positive(i).is_subset_of(q_.positive(j))) continue;
            if (!negative_covered(p_.negative(i - 1).items, cover, kind_)) continue;
            u_[i] = j;
            if (descend(i + 1)) return true;
        }
        return false;
    }

    const NegPattern& p_;
    const NegPattern& q_;
    NonInclusion kind_;
    std::vector<std::size_t> u_;
};

}  // namespace

std::string_view to_string(OrderKind order) noexcept
{
    switch (order) {
    case OrderKind::EmbedIncl: return "embed-incl";
    case OrderKind::PrefixIncl: return "prefix-incl";
    case OrderKind::NegExt: return "neg-ext";
    }
    return "unknown";
}

bool embed_incl(const NegPattern& p, const NegPattern& q, NonInclusion kind)
{
    const std::size_t k = p.positive_count();
    const std::size_t k2 = q.positive_count();
    if (k == 0 || k > k2) return false;
    if (k == k2) {
        // Only the identity mapping is increasing.
        for (std::size_t i = 0; i < k; ++i)
            if (!p.positive(i).is_subset_of(q.positive(i))) return false;
        for (std::size_t i = 0; i + 1 < k; ++i)
            if (!negative_covered(p.negative(i).items, q.negative(i).items, kind)) return false;
        return some_itemset_differs(p, q);
    }
    return EmbedSearch(p, q, kind).run();
}

bool prefix_incl(const NegPattern& p, const NegPattern& q, NonInclusion kind)
{
    const std::size_t k = p.positive_count();
    const std::size_t k2 = q.positive_count();
    if (k == 0 || k > k2) return false;
    for (std::size_t i = 0; i < k; ++i)
        if (!p.positive(i).is_subset_of(q.positive(i))) return false;
    for (std::size_t i = 0; i + 1 < k; ++i)
        if (!negative_covered(p.negative(i).items, q.negative(i).items, kind)) return false;
    if (k == k2) return p.positive(k - 1) != q.positive(k - 1) || some_negative_differs(p, q);
    return true;
}

bool neg_ext(const NegPattern& p, const NegPattern& q, NonInclusion kind)
{
    const std::size_t k = p.positive_count();
    if (k == 0 || k != q.positive_count()) return false;
    for (std::size_t i = 0; i < k; ++i)
        if (p.positive(i) != q.positive(i)) return false;
    for (std::size_t i = 0; i + 1 < k; ++i)
        if (!negative_covered(p.negative(i).items, q.negative(i).items, kind)) return false;
    return some_negative_differs(p, q);
}

bool precedes(OrderKind order, const NegPattern& p, const NegPattern& q, NonInclusion kind)
{
    switch (order) {
    case OrderKind::EmbedIncl: return embed_incl(p, q, kind);
    case OrderKind::PrefixIncl: return prefix_incl(p, q, kind);
    case OrderKind::NegExt: return neg_ext(p, q, kind);
    }
    return false;
}

const DominanceTable& known_dominance()
{
    static const DominanceTable table = [] {
        // Rows and columns in Theta::index() order:
        // strong-strict-partial, weak-strict-partial, strong-soft-partial,
        // weak-soft-partial, strong-strict-total, weak-strict-total,
        // strong-soft-total, weak-soft-total.
        constexpr const char* rows[8] = {
            ".+++----",
            "-.-+----",
            "--.+----",
            "---.----",
            "++++.+++",
            "-+-+-.-+",
            "++++++.+",
            "-+-+-+-.",
        };
        DominanceTable t;
        for (std::size_t r = 0; r < 8; ++r)
            for (std::size_t c = 0; c < 8; ++c)
                t.cells[r][c] = rows[r][c] == '.'   ? Dominance::Self
                                : rows[r][c] == '+' ? Dominance::Dominates
                                                    : Dominance::NotDominates;
        return t;
    }();
    return table;
}

bool known_antimonotonic(Theta theta, OrderKind order)
{
    // Under partial non-inclusion an empty negative is satisfied everywhere,
    // so growing it from nothing (a reversed-inclusion step) can lose
    // occurrences: <a c> precedes <a !b c>, and only the former is in <a b c>.
    if (theta.inclusion == NonInclusion::Partial) return false;
    switch (order) {
    case OrderKind::EmbedIncl: return false;
    case OrderKind::PrefixIncl: return theta.occurrence == Occurrence::Weak;
    case OrderKind::NegExt: return true;
    }
    return false;
}

}  // namespace nsp
