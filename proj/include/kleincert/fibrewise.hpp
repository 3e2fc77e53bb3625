#ifndef KLEINCERT_FIBREWISE_HPP
#define KLEINCERT_FIBREWISE_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "kleincert/bar.hpp"
#include "kleincert/chain.hpp"

namespace kleincert {

/// The four cells of the Klein bottle: one 0-cell, the 1-cells a and b,
/// and the 2-cell sigma.
enum class BaseCell { Star, A, B, Sigma };

constexpr int base_dimension(BaseCell eta) {
    switch (eta) {
        case BaseCell::Star: return 0;
        case BaseCell::A:
        case BaseCell::B: return 1;
        case BaseCell::Sigma: return 2;
    }
    return 0;
}

/// A product cell <eta||omega> of the fibrewise complex over the Klein
/// bottle: a base cell of K times a bar cell. Its filtration level is the
/// base dimension; cells with base != sigma lie in F_1.
struct FibCell {
    BaseCell base = BaseCell::Star;
    BarCell fibre;

    int dimension() const { return base_dimension(base) + fibre.dimension(); }
    int filtration() const { return base_dimension(base); }

    friend auto operator<=>(const FibCell&, const FibCell&) = default;
};

/// The mod-2 boundary of a cell of the m-th fibrewise complex:
///
///   d<*||omega>     = <*||d omega>
///   d<tau||omega>   = <*||omega> + <*||tau omega tau^{-1}> + <tau||d omega>
///                     for tau in {a, b}
///   d<sigma||omega> = <a||omega> + <a||(ba) omega (ba)^{-1}>
///                   + <b||omega> + <b||a omega a^{-1}> + <sigma||d omega>
///
/// where <eta||d omega> is the sum of the bar faces under eta. No term has
/// a longer fibre or a higher filtration level than the input cell.
/// Throws std::invalid_argument when the fibre is longer than m.
Chain<FibCell> boundary(const FibCell& cell, int m);

/// Every cell with the given base and an n-entry fibre whose entries range
/// over k_values x l_values, in lexicographic order (values are sorted and
/// deduplicated first). Empty value sets yield an empty sequence.
std::vector<FibCell> enumerate_cells(BaseCell base, int n,
                                     std::span<const std::int64_t> k_values,
                                     std::span<const std::int64_t> l_values);

}  // namespace kleincert

#endif  // KLEINCERT_FIBREWISE_HPP
