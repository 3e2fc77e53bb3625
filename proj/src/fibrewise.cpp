#include "kleincert/fibrewise.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace kleincert {

namespace {

BarCell conjugated(const BarCell& fibre, GroupElement h) {
    return BarCell{conjugate_tuple(fibre.entries, h)};
}

void add_fibre_faces(Chain<FibCell>& out, BaseCell base, const BarCell& fibre) {
    const int n = fibre.dimension();
    for (int i = 0; i <= n && n >= 1; ++i) out.add(FibCell{base, face(fibre, i)});
}

}  // namespace

Chain<FibCell> boundary(const FibCell& cell, int m) {
    if (cell.fibre.dimension() > m) {
        throw std::invalid_argument("boundary: fibre length " +
                                    std::to_string(cell.fibre.dimension()) +
                                    " exceeds the filtration bound m = " + std::to_string(m));
    }
    Chain<FibCell> out;
    switch (cell.base) {
        case BaseCell::Star:
            add_fibre_faces(out, BaseCell::Star, cell.fibre);
            break;
        case BaseCell::A:
            out.add(FibCell{BaseCell::Star, cell.fibre});
            out.add(FibCell{BaseCell::Star, conjugated(cell.fibre, gen_a)});
            add_fibre_faces(out, BaseCell::A, cell.fibre);
            break;
        case BaseCell::B:
            out.add(FibCell{BaseCell::Star, cell.fibre});
            out.add(FibCell{BaseCell::Star, conjugated(cell.fibre, gen_b)});
            add_fibre_faces(out, BaseCell::B, cell.fibre);
            break;
        case BaseCell::Sigma:
            out.add(FibCell{BaseCell::A, cell.fibre});
            out.add(FibCell{BaseCell::A, conjugated(cell.fibre, multiply(gen_b, gen_a))});
            out.add(FibCell{BaseCell::B, cell.fibre});
            out.add(FibCell{BaseCell::B, conjugated(cell.fibre, gen_a)});
            add_fibre_faces(out, BaseCell::Sigma, cell.fibre);
            break;
    }
    return out;
}

std::vector<FibCell> enumerate_cells(BaseCell base, int n,
                                     std::span<const std::int64_t> k_values,
                                     std::span<const std::int64_t> l_values) {
    if (n < 0) throw std::invalid_argument("enumerate_cells: negative fibre length");

    std::vector<std::int64_t> ks(k_values.begin(), k_values.end());
    std::vector<std::int64_t> ls(l_values.begin(), l_values.end());
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    std::sort(ls.begin(), ls.end());
    ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
    if (ks.empty() || ls.empty()) return {};

    const std::uint64_t per_entry = ks.size() * ls.size();
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= per_entry;

    std::vector<FibCell> out;
    out.reserve(total);
    for (std::uint64_t index = 0; index < total; ++index) {
        FibCell cell{base, {}};
        cell.fibre.entries.resize(n);
        std::uint64_t rest = index;
        for (int entry = n - 1; entry >= 0; --entry) {
            const std::uint64_t digit = rest % per_entry;
            rest /= per_entry;
            cell.fibre.entries[entry] = {ks[digit / ls.size()], ls[digit % ls.size()]};
        }
        out.push_back(std::move(cell));
    }
    return out;
}

}  // namespace kleincert
