#include <doctest.h>

#include <random>
#include <stdexcept>

#include "kleincert/bar.hpp"
#include "kleincert/literal.hpp"

using namespace kleincert;

namespace {

BarCell random_cell(std::mt19937_64& rng, int n) {
    BarCell cell;
    for (int i = 0; i < n; ++i) {
        const auto draw = [&rng] { return static_cast<std::int64_t>(rng() % 41) - 20; };
        cell.entries.push_back({draw(), draw()});
    }
    return cell;
}

}  // namespace

TEST_SUITE("bar") {
    TEST_CASE("faces drop or merge entries") {
        const BarCell cell{{{1, 0}, {0, 1}}};
        CHECK(face(cell, 0) == BarCell{{{0, 1}}});
        CHECK(face(cell, 1) == BarCell{{{1, 1}}});
        CHECK(face(cell, 2) == BarCell{{{1, 0}}});

        const BarCell triple{{{1, 0}, {0, 1}, {2, 1}}};
        CHECK(face(triple, 1) == BarCell{{{1, 1}, {2, 1}}});
        CHECK(face(triple, 2) == BarCell{{{1, 0}, {-2, 2}}});
        CHECK(face(BarCell{{{5, 7}}}, 0) == BarCell{});
        CHECK(face(BarCell{{{5, 7}}}, 1) == BarCell{});
    }

    TEST_CASE("face indices outside 0..n are rejected") {
        const BarCell cell{{{1, 0}, {0, 1}}};
        CHECK_THROWS_AS(face(cell, -1), std::out_of_range);
        CHECK_THROWS_AS(face(cell, 3), std::out_of_range);
        CHECK_THROWS_AS(face(BarCell{}, 0), std::out_of_range);
    }

    TEST_CASE("boundary of a 1-cell vanishes") {
        // Both faces are the empty 0-cell, so they cancel mod 2.
        CHECK(boundary(BarCell{{{3, -2}}}).zero());
        CHECK(boundary(BarCell{}).zero());
    }

    TEST_CASE("boundary of a 2-cell lists the three faces") {
        const Chain<BarCell> chain = boundary(BarCell{{{1, 0}, {0, 1}}});
        REQUIRE(chain.size() == 3);
        CHECK(to_literal(chain) == "[a0b1] + [a1b0] + [a1b1]");
    }

    TEST_CASE("coinciding faces cancel") {
        // [g|g] with g^2 = g only for g = 1: use the identity entry, where
        // face 0, face 1, and face 2 all equal [1].
        const Chain<BarCell> chain = boundary(BarCell{{identity, identity}});
        REQUIRE(chain.size() == 1);
        CHECK(chain.cells()[0] == BarCell{{identity}});
    }

    TEST_CASE("simplicial identity d_i d_j = d_{j-1} d_i for i < j") {
        std::mt19937_64 rng(53);
        for (int trial = 0; trial < 60; ++trial) {
            const BarCell cell = random_cell(rng, 4);
            for (int j = 1; j <= 4; ++j) {
                for (int i = 0; i < j; ++i) {
                    CHECK(face(face(cell, j), i) == face(face(cell, i), j - 1));
                }
            }
        }
    }

    TEST_CASE("boundary of boundary vanishes on random cells") {
        std::mt19937_64 rng(59);
        for (int n = 2; n <= 5; ++n) {
            for (int trial = 0; trial < 40; ++trial) {
                const BarCell cell = random_cell(rng, n);
                Chain<BarCell> twice;
                for (const BarCell& term : boundary(cell)) twice += boundary(term);
                CHECK(twice.zero());
            }
        }
    }
}
