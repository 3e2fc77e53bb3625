#include "kleincert/group.hpp"

#include <stdexcept>
#include <string>

namespace kleincert {

std::vector<GroupElement> conjugate_tuple(std::span<const GroupElement> tuple, GroupElement h) {
    std::vector<GroupElement> out;
    out.reserve(tuple.size());
    for (const GroupElement& g : tuple) out.push_back(conjugate(g, h));
    return out;
}

GroupElement power(GroupElement g, std::int64_t e) {
    const GroupElement step = e >= 0 ? g : inverse(g);
    std::int64_t reps = e >= 0 ? e : -e;
    GroupElement acc = identity;
    for (std::int64_t i = 0; i < reps; ++i) acc = multiply(acc, step);
    return acc;
}

SurfaceWord relator_word(int q) {
    SurfaceWord word{q, {}};
    for (int i = 1; i <= q - 1; ++i) word.letters.push_back({i, 2});
    word.letters.push_back({0, -2});
    return word;
}

GroupElement phi(const SurfaceWord& word) {
    GroupElement acc = identity;
    for (const SurfaceLetter& letter : word.letters) {
        if (letter.generator < 0 || letter.generator >= word.genus) {
            throw std::invalid_argument("phi: generator index " + std::to_string(letter.generator) +
                                        " is invalid for genus " + std::to_string(word.genus) +
                                        " (valid: 0 for b, 1.." + std::to_string(word.genus - 1) +
                                        " for b_i)");
        }
        GroupElement image = identity;
        if (letter.generator == 0) {
            image = gen_b;
        } else if (letter.generator == 1) {
            image = multiply(gen_a, gen_b);
        }
        acc = multiply(acc, power(image, letter.exponent));
    }
    return acc;
}

bool phi_well_defined(int q) {
    if (q < 2) {
        throw std::invalid_argument("phi_well_defined: genus must be at least 2, got " +
                                    std::to_string(q));
    }
    return phi(relator_word(q)) == identity;
}

}  // namespace kleincert
