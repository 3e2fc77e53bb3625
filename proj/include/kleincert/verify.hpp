#ifndef KLEINCERT_VERIFY_HPP
#define KLEINCERT_VERIFY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kleincert/cochain.hpp"
#include "kleincert/group.hpp"

namespace kleincert {

/// The exponent grid a verification sweep ranges over: every fibre entry
/// a^k b^l draws k from k_values and l from l_values. Since every checked
/// formula is 4-periodic in each k and 2-periodic in each l (which
/// verify_periodicity tests rather than assumes), a pass on the residue
/// grid proves the identity for all integer exponents.
struct Grid {
    std::vector<std::int64_t> k_values;
    std::vector<std::int64_t> l_values;

    /// k in {0,1,2,3}, l in {0,1}: one complete residue system mod 4 and mod 2.
    static Grid residues();
    static Grid ranges(std::int64_t k_lo, std::int64_t k_hi, std::int64_t l_lo, std::int64_t l_hi);

    std::uint64_t element_count() const;
    std::uint64_t tuple_count(int n) const;

    /// The index-th n-tuple in lexicographic order (entry 0 most significant,
    /// k before l within an entry).
    std::vector<GroupElement> tuple_at(int n, std::uint64_t index) const;

    std::string describe_k() const;
    std::string describe_l() const;
};

struct Failure {
    std::string cell;
    unsigned expected = 0;
    unsigned got = 0;

    friend bool operator==(const Failure&, const Failure&) = default;
};

/// The outcome of one verification sweep. A report passes exactly when its
/// failure list is empty; cases counts every comparison made.
struct Report {
    std::string check;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::uint64_t cases = 0;
    std::vector<Failure> failures;
    double elapsed_ms = 0.0;

    bool pass() const { return failures.empty(); }
};

/// delta u = w on every 4-cell of the m = 3 fibrewise complex over the
/// grid: the families <sigma||tau> (2-entry fibres) and <a||omega>,
/// <b||omega> (3-entry fibres). The two-cochain overload exists so tests
/// can corrupt u and watch the check fail.
Report verify_main_certificate(const Grid& grid, int jobs = 1);
Report verify_main_certificate(const Cochain& u, const Cochain& w, const Grid& grid, int jobs = 1);

/// delta u0 = w0 on every 3-cell of the m = 2 complex: families
/// <sigma||alpha>, <a||tau>, <b||tau>.
Report verify_remark_certificate(const Grid& grid, int jobs = 1);
Report verify_remark_certificate(const Cochain& u0, const Cochain& w0, const Grid& grid, int jobs = 1);

/// delta x = delta y = 0 on 2-cells, delta z = 0 on 3-cells, and z agrees
/// with the closed form k_1 l_2 on 2-cells.
Report verify_cocycles(const Grid& grid, int jobs = 1);

/// boundary(boundary(cell), m) = 0 for every fibrewise cell of dimension
/// <= max_dim with fibre length <= m over the grid.
Report verify_boundary_squared(int max_dim, int m, const Grid& grid, int jobs = 1);

/// t(-m) = t(m) + m and t(m+n+2l) = t(m) + t(n) + mn + l, both mod 2, for
/// every m, n, l in [lo, hi].
Report verify_halving_identities(std::int64_t lo, std::int64_t hi, int jobs = 1);

/// The coboundary of t(k_1) equals (l_1 + k_1) k_2 on 2-cells, and the
/// coboundary of k_1 t(k_2) equals k_1 (l_2 + k_2) k_3 on 3-cells.
Report verify_halving_coboundaries(const Grid& grid, int jobs = 1);

/// verify_halving_identities over [lo, hi] together with
/// verify_halving_coboundaries over the grid.
Report verify_identities(std::int64_t lo, std::int64_t hi, const Grid& grid, int jobs = 1);

inline constexpr std::uint64_t kDefaultSeed = 0x6b6c65696e636572ULL;

/// Random shift invariance: for sampled cells, shifting any single k_i by
/// +-4 or l_i by +-2 changes no named-cochain value and no coboundary
/// value. This is the periodicity that makes residue-grid sweeps complete.
Report verify_periodicity(std::uint64_t samples, std::uint64_t seed = kDefaultSeed);

/// Group-law suite: exhaustive associativity over grid triples, the
/// relation aba = b, the printed conjugation special cases against the
/// generic conjugate, inverse laws, the mod-2 agreement of the product's
/// a-exponent with k_1 + k_2 + 2 epsilon(l_1) k_2, and phi_well_defined(q)
/// for 2 <= q <= q_max.
Report verify_group_and_phi(int q_max, const Grid& grid);

struct VerifyConfig {
    /// Subset of the default list below; exactly the named checks run, so
    /// an empty list runs nothing. Unknown names are rejected.
    std::vector<std::string> checks = {"main",       "remark",      "cocycles", "ddzero",
                                       "identities", "periodicity", "group"};
    Grid grid = Grid::residues();
    int jobs = 1;
    std::int64_t identity_lo = -20;
    std::int64_t identity_hi = 20;
    std::vector<int> ddzero_ms = {2, 3, 5};
    int ddzero_max_dim = 4;
    std::uint64_t periodicity_samples = 10000;
    std::uint64_t seed = kDefaultSeed;
    int q_max = 10;
};

/// Runs the configured checks in a fixed order (one ddzero report per m)
/// and returns their reports.
std::vector<Report> run_all(const VerifyConfig& config);

bool all_pass(const std::vector<Report>& reports);

}  // namespace kleincert

#endif  // KLEINCERT_VERIFY_HPP
