#ifndef KLEINCERT_CHAIN_HPP
#define KLEINCERT_CHAIN_HPP

#include <algorithm>
#include <cstddef>
#include <vector>

namespace kleincert {

/// A finite formal sum of cells with F_2 coefficients. Terms are kept
/// sorted and zero coefficients are never stored: adding a cell that is
/// already present removes it.
template <class Cell>
class Chain {
  public:
    Chain() = default;

    /// Adds one cell mod 2 (toggles its coefficient).
    void add(const Cell& cell) {
        auto it = std::lower_bound(cells_.begin(), cells_.end(), cell);
        if (it != cells_.end() && *it == cell) {
            cells_.erase(it);
        } else {
            cells_.insert(it, cell);
        }
    }

    Chain& operator+=(const Chain& other) {
        for (const Cell& cell : other.cells_) add(cell);
        return *this;
    }

    bool zero() const { return cells_.empty(); }
    std::size_t size() const { return cells_.size(); }

    /// The supporting cells, sorted; every stored coefficient is 1.
    const std::vector<Cell>& cells() const { return cells_; }

    auto begin() const { return cells_.begin(); }
    auto end() const { return cells_.end(); }

    friend bool operator==(const Chain&, const Chain&) = default;

  private:
    std::vector<Cell> cells_;
};

}  // namespace kleincert

#endif  // KLEINCERT_CHAIN_HPP
