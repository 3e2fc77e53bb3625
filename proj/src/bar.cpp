#include "kleincert/bar.hpp"

#include <stdexcept>
#include <string>

namespace kleincert {

BarCell face(const BarCell& cell, int i) {
    const int n = cell.dimension();
    if (n < 1 || i < 0 || i > n) {
        throw std::out_of_range("face: index " + std::to_string(i) +
                                " out of range for a cell of dimension " + std::to_string(n));
    }
    BarCell out;
    out.entries.reserve(static_cast<std::size_t>(n) - 1);
    if (i == 0) {
        out.entries.assign(cell.entries.begin() + 1, cell.entries.end());
    } else if (i == n) {
        out.entries.assign(cell.entries.begin(), cell.entries.end() - 1);
    } else {
        out.entries.assign(cell.entries.begin(), cell.entries.begin() + (i - 1));
        out.entries.push_back(multiply(cell.entries[i - 1], cell.entries[i]));
        out.entries.insert(out.entries.end(), cell.entries.begin() + (i + 1), cell.entries.end());
    }
    return out;
}

Chain<BarCell> boundary(const BarCell& cell) {
    Chain<BarCell> out;
    const int n = cell.dimension();
    for (int i = 0; i <= n && n >= 1; ++i) out.add(face(cell, i));
    return out;
}

}  // namespace kleincert
