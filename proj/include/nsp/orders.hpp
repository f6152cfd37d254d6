#pragma once

#include <array>
#include <string_view>

#include "nsp/core.hpp"

namespace nsp {

/// The three strict partial orders on negative patterns.
enum class OrderKind : std::uint8_t {
    EmbedIncl,   ///< positives embed anywhere, negatives covered by the spanned slots
    PrefixIncl,  ///< position-wise inclusion, extension only at the end
    NegExt,      ///< same positives, larger negatives
};

inline constexpr std::array<OrderKind, 3> kAllOrders{OrderKind::EmbedIncl, OrderKind::PrefixIncl,
                                                     OrderKind::NegExt};

std::string_view to_string(OrderKind order) noexcept;

// Each order takes the non-inclusion kind of the containment relation it is
// paired with. Under Total a negative of `p` must be included in the matching
// negative(s) of `q`; under Partial the negative inclusion is reversed.
// Negative modes are ignored.

/// p ⊑ q
bool embed_incl(const NegPattern& p, const NegPattern& q, NonInclusion kind = NonInclusion::Total);
/// p ◁ q
bool prefix_incl(const NegPattern& p, const NegPattern& q, NonInclusion kind = NonInclusion::Total);
/// p ⊏⁺ q
bool neg_ext(const NegPattern& p, const NegPattern& q, NonInclusion kind = NonInclusion::Total);

bool precedes(OrderKind order, const NegPattern& p, const NegPattern& q, NonInclusion kind = NonInclusion::Total);

enum class Dominance : std::uint8_t { Self, Dominates, NotDominates };

/// Dominance between containment relations, indexed by Theta::index().
struct DominanceTable {
    std::array<std::array<Dominance, 8>, 8> cells{};

    Dominance at(Theta row, Theta column) const { return cells[row.index()][column.index()]; }
    bool dominates(Theta row, Theta column) const { return at(row, column) != Dominance::NotDominates; }
};

/// The proven dominance relation on the eight containment relations.
const DominanceTable& known_dominance();

/// Anti-monotonicity status of `theta` on the order paired with the theta's
/// own non-inclusion kind. Under total non-inclusion it is true exactly for
/// NegExt, and for PrefixIncl under weak occurrence. Under partial
/// non-inclusion it is false for every order.
bool known_antimonotonic(Theta theta, OrderKind order);

}  // namespace nsp
