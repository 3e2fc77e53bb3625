#ifndef KLEINCERT_BAR_HPP
#define KLEINCERT_BAR_HPP

#include <compare>
#include <vector>

#include "kleincert/chain.hpp"
#include "kleincert/group.hpp"

namespace kleincert {

/// A Delta-cell [g_1|...|g_n] of the bar-resolution complex. The empty
/// tuple is the single 0-cell. The construction is unreduced: identity
/// entries are allowed and no degeneracy quotient is taken.
struct BarCell {
    std::vector<GroupElement> entries;

    int dimension() const { return static_cast<int>(entries.size()); }

    friend auto operator<=>(const BarCell&, const BarCell&) = default;
};

/// The i-th face of an n-cell, 0 <= i <= n:
///   i = 0 drops the first entry, i = n drops the last, and an interior i
///   multiplies g_i with g_{i+1}.
/// Throws std::out_of_range when i is outside [0, n] or the cell is empty.
BarCell face(const BarCell& cell, int i);

/// The mod-2 boundary: the sum of all faces, with coinciding faces
/// cancelling. The boundary of the 0-cell is the zero chain.
Chain<BarCell> boundary(const BarCell& cell);

}  // namespace kleincert

#endif  // KLEINCERT_BAR_HPP
