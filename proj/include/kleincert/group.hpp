#ifndef KLEINCERT_GROUP_HPP
#define KLEINCERT_GROUP_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "kleincert/parity.hpp"

namespace kleincert {

/// An element a^k b^l of the Klein bottle group <a, b | aba = b>, stored in
/// normal form. Normal forms are unique, so equality is componentwise.
struct GroupElement {
    std::int64_t k = 0;
    std::int64_t l = 0;

    friend constexpr auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

inline constexpr GroupElement identity{0, 0};
inline constexpr GroupElement gen_a{1, 0};
inline constexpr GroupElement gen_b{0, 1};

/// Normal-form product. The relation aba = b gives b^l a = a^{(-1)^l} b^l,
/// so (k1,l1)(k2,l2) = (k1 + (-1)^{l1} k2, l1 + l2). The a-exponent agrees
/// with k1 + k2 + 2 epsilon(l1) k2 mod 2.
constexpr GroupElement multiply(GroupElement g, GroupElement h) {
    const std::int64_t sign = (g.l & 1) ? -1 : 1;
    return {g.k + sign * h.k, g.l + h.l};
}

constexpr GroupElement operator*(GroupElement g, GroupElement h) { return multiply(g, h); }

constexpr GroupElement inverse(GroupElement g) {
    const std::int64_t sign = (g.l & 1) ? 1 : -1;
    return {sign * g.k, -g.l};
}

/// h g h^{-1} in normal form. Specializes to b^{+-1}(a^k b^l)b^{-+1} = a^{-k} b^l
/// and a^{+-1}(a^k b^l)a^{-+1} = a^{k +- 2 epsilon(l)} b^l.
constexpr GroupElement conjugate(GroupElement g, GroupElement h) {
    return multiply(multiply(h, g), inverse(h));
}

/// Componentwise conjugation h (g_1,...,g_n) h^{-1} = (h g_1 h^{-1}, ..., h g_n h^{-1}).
std::vector<GroupElement> conjugate_tuple(std::span<const GroupElement> tuple, GroupElement h);

/// g^e by repeated multiplication; e may be negative.
GroupElement power(GroupElement g, std::int64_t e);

/// One letter of a word in the genus-q surface group
/// <b, b_1, ..., b_{q-1} | b_1^2 ... b_{q-1}^2 = b^2>.
/// Generator index 0 names b; index i in [1, q-1] names b_i.
struct SurfaceLetter {
    int generator = 0;
    std::int64_t exponent = 1;
};

/// A free word over the genus-q generators; no normal form is attempted.
struct SurfaceWord {
    int genus = 2;
    std::vector<SurfaceLetter> letters;
};

/// The relator b_1^2 ... b_{q-1}^2 b^{-2}.
SurfaceWord relator_word(int q);

/// The homomorphism phi_q into the Klein bottle group: b -> b, b_1 -> ab,
/// all other b_i -> 1, evaluated left to right.
/// Throws std::invalid_argument on a generator index invalid for the genus.
GroupElement phi(const SurfaceWord& word);

/// True iff phi_q kills the relator word (it does, since (ab)^2 = b^2).
/// Throws std::invalid_argument for q < 2.
bool phi_well_defined(int q);

}  // namespace kleincert

#endif  // KLEINCERT_GROUP_HPP
