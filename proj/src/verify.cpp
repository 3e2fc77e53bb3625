#include "kleincert/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <stdexcept>
#include <thread>

#include "kleincert/literal.hpp"

namespace kleincert {

namespace {

class Timer {
  public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string describe_values(const std::vector<std::int64_t>& values) {
    if (values.empty()) return "(empty)";
    bool contiguous = true;
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] != values[i - 1] + 1) {
            contiguous = false;
            break;
        }
    }
    if (contiguous && values.size() > 1) {
        return std::to_string(values.front()) + ".." + std::to_string(values.back());
    }
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(values[i]);
    }
    return out;
}

void require_usable(const Grid& grid, const char* check) {
    if (grid.k_values.empty() || grid.l_values.empty()) {
        throw std::invalid_argument(std::string(check) + ": grid has no exponent values");
    }
}

/// Runs body(begin, end, failures) over [0, total) split into one
/// contiguous block per worker; blocks are merged in index order, so the
/// failure list is independent of the worker count.
template <class Body>
std::vector<Failure> parallel_cases(std::uint64_t total, int jobs, Body body) {
    if (total == 0) return {};
    std::uint64_t workers = jobs <= 1 ? 1 : static_cast<std::uint64_t>(jobs);
    workers = std::min<std::uint64_t>(workers, total);
    if (workers == 1) {
        std::vector<Failure> out;
        body(std::uint64_t{0}, total, out);
        return out;
    }
    std::vector<std::vector<Failure>> buckets(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::uint64_t t = 0; t < workers; ++t) {
        const std::uint64_t begin = total / workers * t + std::min(t, total % workers);
        const std::uint64_t end = total / workers * (t + 1) + std::min(t + 1, total % workers);
        threads.emplace_back([&body, &buckets, t, begin, end] { body(begin, end, buckets[t]); });
    }
    for (std::thread& thread : threads) thread.join();
    std::vector<Failure> out;
    for (const std::vector<Failure>& bucket : buckets) {
        out.insert(out.end(), bucket.begin(), bucket.end());
    }
    return out;
}

struct Family {
    BaseCell base;
    int n;
};

/// delta c = target on every (deg target)-cell of the m-complex whose
/// shape is one of the families.
void sweep_certificate(Report& report, const Cochain& c, const Cochain& target, int m,
                       std::initializer_list<Family> families, const Grid& grid, int jobs) {
    for (const Family& family : families) {
        const std::uint64_t count = grid.tuple_count(family.n);
        report.cases += count;
        std::vector<Failure> failures = parallel_cases(
            count, jobs, [&](std::uint64_t begin, std::uint64_t end, std::vector<Failure>& out) {
                for (std::uint64_t i = begin; i < end; ++i) {
                    const FibCell cell{family.base, BarCell{grid.tuple_at(family.n, i)}};
                    const Bit want = target(cell);
                    const Bit got = coboundary(c, cell, m);
                    if (want != got) out.push_back({to_literal(cell), want.value(), got.value()});
                }
            });
        report.failures.insert(report.failures.end(), failures.begin(), failures.end());
    }
}

}  // namespace

Grid Grid::residues() { return Grid{{0, 1, 2, 3}, {0, 1}}; }

Grid Grid::ranges(std::int64_t k_lo, std::int64_t k_hi, std::int64_t l_lo, std::int64_t l_hi) {
    if (k_lo > k_hi || l_lo > l_hi) {
        throw std::invalid_argument("Grid::ranges: lower bound exceeds upper bound");
    }
    Grid grid;
    for (std::int64_t k = k_lo; k <= k_hi; ++k) grid.k_values.push_back(k);
    for (std::int64_t l = l_lo; l <= l_hi; ++l) grid.l_values.push_back(l);
    return grid;
}

std::uint64_t Grid::element_count() const {
    return static_cast<std::uint64_t>(k_values.size()) * l_values.size();
}

std::uint64_t Grid::tuple_count(int n) const {
    if (n < 0) throw std::invalid_argument("tuple_count: negative length");
    const std::uint64_t radix = element_count();
    std::uint64_t count = 1;
    for (int i = 0; i < n; ++i) {
        if (radix != 0 && count > UINT64_MAX / radix) {
            throw std::overflow_error("tuple_count: grid too large");
        }
        count *= radix;
    }
    return count;
}

std::vector<GroupElement> Grid::tuple_at(int n, std::uint64_t index) const {
    if (n < 0) throw std::invalid_argument("tuple_at: negative length");
    const std::uint64_t radix = element_count();
    if (radix == 0 && n > 0) throw std::invalid_argument("tuple_at: grid has no elements");
    std::vector<GroupElement> out(static_cast<std::size_t>(n));
    const std::uint64_t l_size = l_values.size();
    for (int i = n - 1; i >= 0; --i) {
        const std::uint64_t digit = index % radix;
        index /= radix;
        out[static_cast<std::size_t>(i)] =
            GroupElement{k_values[digit / l_size], l_values[digit % l_size]};
    }
    if (index != 0) throw std::out_of_range("tuple_at: index out of range");
    return out;
}

std::string Grid::describe_k() const { return describe_values(k_values); }

std::string Grid::describe_l() const { return describe_values(l_values); }

Report verify_main_certificate(const Grid& grid, int jobs) {
    return verify_main_certificate(named_cochain("u"), named_cochain("w"), grid, jobs);
}

Report verify_main_certificate(const Cochain& u, const Cochain& w, const Grid& grid, int jobs) {
    require_usable(grid, "main");
    Timer timer;
    Report report;
    report.check = "main";
    report.parameters = {{"m", "3"}, {"k", grid.describe_k()}, {"l", grid.describe_l()}};
    // The 4-cells of the m = 3 complex with fibre entries in the grid.
    sweep_certificate(report, u, w, 3,
                      {{BaseCell::Sigma, 2}, {BaseCell::A, 3}, {BaseCell::B, 3}}, grid, jobs);
    report.elapsed_ms = timer.ms();
    return report;
}

Report verify_remark_certificate(const Grid& grid, int jobs) {
    return verify_remark_certificate(named_cochain("u0"), named_cochain("w0"), grid, jobs);
}

Report verify_remark_certificate(const Cochain& u0, const Cochain& w0, const Grid& grid, int jobs) {
    require_usable(grid, "remark");
    Timer timer;
    Report report;
    report.check = "remark";
    report.parameters = {{"m", "2"}, {"k", grid.describe_k()}, {"l", grid.describe_l()}};
    // The 3-cells of the m = 2 complex.
    sweep_certificate(report, u0, w0, 2,
                      {{BaseCell::Sigma, 1}, {BaseCell::A, 2}, {BaseCell::B, 2}}, grid, jobs);
    report.elapsed_ms = timer.ms();
    return report;
}

Report verify_cocycles(const Grid& grid, int jobs) {
    require_usable(grid, "cocycles");
    Timer timer;
    Report report;
    report.check = "cocycles";
    report.parameters = {{"k", grid.describe_k()}, {"l", grid.describe_l()}};

    struct CocycleFamily {
        const char* label;
        const Cochain* c;
    };
    const Cochain& x = named_cochain("x");
    const Cochain& y = named_cochain("y");
    const Cochain& z = named_cochain("z");
    for (const CocycleFamily family : {CocycleFamily{"dx", &x}, {"dy", &y}, {"dz", &z}}) {
        const int n = family.c->degree() + 1;
        const std::uint64_t count = grid.tuple_count(n);
        report.cases += count;
        std::vector<Failure> failures = parallel_cases(
            count, jobs, [&](std::uint64_t begin, std::uint64_t end, std::vector<Failure>& out) {
                for (std::uint64_t i = begin; i < end; ++i) {
                    const BarCell cell{grid.tuple_at(n, i)};
                    const Bit got = coboundary(*family.c, cell);
                    if (got != Bit(0)) {
                        out.push_back(
                            {std::string(family.label) + " " + to_literal(cell), 0, got.value()});
                    }
                }
            });
        report.failures.insert(report.failures.end(), failures.begin(), failures.end());
    }

    // z agrees with the closed form k_1 l_2 on 2-cells.
    const std::uint64_t count = grid.tuple_count(2);
    report.cases += count;
    std::vector<Failure> failures = parallel_cases(
        count, jobs, [&](std::uint64_t begin, std::uint64_t end, std::vector<Failure>& out) {
            for (std::uint64_t i = begin; i < end; ++i) {
                const BarCell cell{grid.tuple_at(2, i)};
                const Bit want = Bit(cell.entries[0].k) * Bit(cell.entries[1].l);
                const Bit got = z(cell);
                if (want != got) {
                    out.push_back({"z " + to_literal(cell), want.value(), got.value()});
                }
            }
        });
    report.failures.insert(report.failures.end(), failures.begin(), failures.end());
    report.elapsed_ms = timer.ms();
    return report;
}

Report verify_boundary_squared(int max_dim, int m, const Grid& grid, int jobs) {
    require_usable(grid, "ddzero");
    if (max_dim < 0) throw std::invalid_argument("ddzero: negative dimension bound");
    if (m < 0) throw std::invalid_argument("ddzero: negative filtration parameter");
    Timer timer;
    Report report;
    report.check = "ddzero";
    report.parameters = {{"m", std::to_string(m)},
                         {"max_dim", std::to_string(max_dim)},
                         {"k", grid.describe_k()},
                         {"l", grid.describe_l()}};
    for (const BaseCell base : {BaseCell::Star, BaseCell::A, BaseCell::B, BaseCell::Sigma}) {
        const int n_max = std::min(m, max_dim - base_dimension(base));
        for (int n = 0; n <= n_max; ++n) {
            const std::uint64_t count = grid.tuple_count(n);
            report.cases += count;
            std::vector<Failure> failures = parallel_cases(
                count, jobs,
                [&, base, n](std::uint64_t begin, std::uint64_t end, std::vector<Failure>& out) {
                    for (std::uint64_t i = begin; i < end; ++i) {
                        const FibCell cell{base, BarCell{grid.tuple_at(n, i)}};
                        Chain<FibCell> twice;
                        for (const FibCell& term : boundary(cell, m)) {
                            twice += boundary(term, m);
                        }
                        if (!twice.zero()) out.push_back({to_literal(cell), 0, 1});
                    }
                });
            report.failures.insert(report.failures.end(), failures.begin(), failures.end());
        }
    }
    report.elapsed_ms = timer.ms();
    return report;
}

Report verify_halving_identities(std::int64_t lo, std::int64_t hi, int jobs) {
    if (lo > hi) throw std::invalid_argument("halving_identities: lower bound exceeds upper bound");
    Timer timer;
    Report report;
    report.check = "halving_identities";
    report.parameters = {{"range", std::to_string(lo) + ".." + std::to_string(hi)}};
    const std::uint64_t width = static_cast<std::uint64_t>(hi - lo + 1);

    report.cases += width;
    std::vector<Failure> negation = parallel_cases(
        width, jobs, [&](std::uint64_t begin, std::uint64_t end, std::vector<Failure>& out) {
            for (std::uint64_t i = begin; i < end; ++i) {
                const std::int64_t m = lo + static_cast<std::int64_t>(i);
                const Bit got = t_mod2(-m);
                const Bit want = t_mod2(m) + Bit(m);
                if (got != want) {
                    out.push_back({"t(-m) = t(m) + m at m=" + std::to_string(m), want.value(),
                                   got.value()});
                }
            }
        });
    report.failures.insert(report.failures.end(), negation.begin(), negation.end());

    report.cases += width * width * width;
    std::vector<Failure> addition = parallel_cases(
        width * width * width, jobs,
        [&](std::uint64_t begin, std::uint64_t end, std::vector<Failure>& out) {
            for (std::uint64_t i = begin; i < end; ++i) {
                const std::int64_t l = lo + static_cast<std::int64_t>(i % width);
                const std::int64_t n = lo + static_cast<std::int64_t>(i / width % width);
                const std::int64_t m = lo + static_cast<std::int64_t>(i / (width * width));
                const Bit got = t_mod2(m + n + 2 * l);
                const Bit want = t_mod2(m) + t_mod2(n) + Bit(m) * Bit(n) + Bit(l);
                if (got != want) {
                    out.push_back({"t(m+n+2l) = t(m) + t(n) + mn + l at m=" + std::to_string(m) +
                                       ", n=" + std::to_string(n) + ", l=" + std::to_string(l),
                                   want.value(), got.value()});
                }
            }
        });
    report.failures.insert(report.failures.end(), addition.begin(), addition.end());
    report.elapsed_ms = timer.ms();
    return report;
}

Report verify_halving_coboundaries(const Grid& grid, int jobs) {
    require_usable(grid, "halving_coboundaries");
    Timer timer;
    Report report;
    report.check = "halving_coboundaries";
    report.parameters = {{"k", grid.describe_k()}, {"l", grid.describe_l()}};
    const Cochain& tk = named_cochain("tk");
    const Cochain& k1tk2 = named_cochain("k1tk2");

    std::uint64_t count = grid.tuple_count(2);
    report.cases += count;
    std::vector<Failure> first = parallel_cases(
        count, jobs, [&](std::uint64_t begin, std::uint64_t end, std::vector<Failure>& out) {
            for (std::uint64_t i = begin; i < end; ++i) {
                const BarCell cell{grid.tuple_at(2, i)};
                const GroupElement& g1 = cell.entries[0];
                const GroupElement& g2 = cell.entries[1];
                const Bit want = (Bit(g1.l) + Bit(g1.k)) * Bit(g2.k);
                const Bit got = coboundary(tk, cell);
                if (got != want) {
                    out.push_back({"d(tk) " + to_literal(cell), want.value(), got.value()});
                }
            }
        });
    report.failures.insert(report.failures.end(), first.begin(), first.end());

    count = grid.tuple_count(3);
    report.cases += count;
    std::vector<Failure> second = parallel_cases(
        count, jobs, [&](std::uint64_t begin, std::uint64_t end, std::vector<Failure>& out) {
            for (std::uint64_t i = begin; i < end; ++i) {
                const BarCell cell{grid.tuple_at(3, i)};
                const GroupElement& g1 = cell.entries[0];
                const GroupElement& g2 = cell.entries[1];
                const GroupElement& g3 = cell.entries[2];
                const Bit want = Bit(g1.k) * (Bit(g2.l) + Bit(g2.k)) * Bit(g3.k);
                const Bit got = coboundary(k1tk2, cell);
                if (got != want) {
                    out.push_back({"d(k1tk2) " + to_literal(cell), want.value(), got.value()});
                }
            }
        });
    report.failures.insert(report.failures.end(), second.begin(), second.end());
    report.elapsed_ms = timer.ms();
    return report;
}

Report verify_identities(std::int64_t lo, std::int64_t hi, const Grid& grid, int jobs) {
    Timer timer;
    Report part1 = verify_halving_identities(lo, hi, jobs);
    Report part2 = verify_halving_coboundaries(grid, jobs);
    Report report;
    report.check = "identities";
    report.parameters = {{"range", std::to_string(lo) + ".." + std::to_string(hi)},
                         {"k", grid.describe_k()},
                         {"l", grid.describe_l()}};
    report.cases = part1.cases + part2.cases;
    report.failures = std::move(part1.failures);
    report.failures.insert(report.failures.end(), part2.failures.begin(), part2.failures.end());
    report.elapsed_ms = timer.ms();
    return report;
}

namespace {

struct PeriodicityTarget {
    const Cochain* c;
    bool cobound;  // check delta c instead of c
    int m;         // filtration parameter for fibrewise coboundaries
};

std::vector<Family> periodicity_families(const PeriodicityTarget& target) {
    const int degree = target.c->degree() + (target.cobound ? 1 : 0);
    std::vector<Family> families;
    if (target.c->carrier() == Carrier::Bar) {
        if (degree >= 1) families.push_back({BaseCell::Star, degree});
        return families;
    }
    for (const BaseCell base : {BaseCell::Star, BaseCell::A, BaseCell::B, BaseCell::Sigma}) {
        const int n = degree - base_dimension(base);
        if (n < 1) continue;
        if (target.cobound && n > target.m) continue;
        families.push_back({base, n});
    }
    return families;
}

Bit periodicity_value(const PeriodicityTarget& target, const Family& family,
                      const std::vector<GroupElement>& entries) {
    if (target.c->carrier() == Carrier::Bar) {
        const BarCell cell{entries};
        return target.cobound ? coboundary(*target.c, cell) : (*target.c)(cell);
    }
    const FibCell cell{family.base, BarCell{entries}};
    return target.cobound ? coboundary(*target.c, cell, target.m) : (*target.c)(cell);
}

std::string periodicity_literal(const PeriodicityTarget& target, const Family& family,
                                const std::vector<GroupElement>& entries) {
    if (target.c->carrier() == Carrier::Bar) return to_literal(BarCell{entries});
    return to_literal(FibCell{family.base, BarCell{entries}});
}

}  // namespace

Report verify_periodicity(std::uint64_t samples, std::uint64_t seed) {
    if (samples == 0) throw std::invalid_argument("periodicity: sample count must be positive");
    Timer timer;
    Report report;
    report.check = "periodicity";
    report.parameters = {{"samples", std::to_string(samples)}, {"seed", std::to_string(seed)}};

    // Targets are visited round-robin; all randomness comes from one
    // generator, so a seed fixes the entire sample sequence.
    std::vector<PeriodicityTarget> targets;
    for (const char* name : {"x", "y", "z", "tk", "k1tk2"}) {
        targets.push_back({&named_cochain(name), false, 0});
        targets.push_back({&named_cochain(name), true, 0});
    }
    for (const auto& [name, m] : {std::pair<const char*, int>{"w", 5}, {"u", 3}, {"w0", 2}, {"u0", 2}}) {
        targets.push_back({&named_cochain(name), false, m});
        targets.push_back({&named_cochain(name), true, m});
    }

    std::mt19937_64 rng(seed);
    const auto draw = [&rng](std::uint64_t bound) { return rng() % bound; };

    for (std::uint64_t sample = 0; sample < samples; ++sample) {
        const PeriodicityTarget& target = targets[sample % targets.size()];
        const std::vector<Family> families = periodicity_families(target);
        const Family family = families[draw(families.size())];

        std::vector<GroupElement> entries(static_cast<std::size_t>(family.n));
        for (GroupElement& g : entries) {
            g.k = static_cast<std::int64_t>(draw(21)) - 10;
            g.l = static_cast<std::int64_t>(draw(21)) - 10;
        }
        const Bit before = periodicity_value(target, family, entries);

        std::vector<GroupElement> shifted = entries;
        GroupElement& moved = shifted[draw(static_cast<std::uint64_t>(family.n))];
        switch (draw(4)) {
            case 0: moved.k += 4; break;
            case 1: moved.k -= 4; break;
            case 2: moved.l += 2; break;
            default: moved.l -= 2; break;
        }
        const Bit after = periodicity_value(target, family, shifted);

        ++report.cases;
        if (before != after) {
            const std::string label =
                target.c->name() + (target.cobound ? " coboundary " : " ");
            report.failures.push_back({label + periodicity_literal(target, family, entries) +
                                           " vs " + periodicity_literal(target, family, shifted),
                                       before.value(), after.value()});
        }
    }
    report.elapsed_ms = timer.ms();
    return report;
}

Report verify_group_and_phi(int q_max, const Grid& grid) {
    require_usable(grid, "group");
    if (q_max < 2) throw std::invalid_argument("group: q_max must be at least 2");
    Timer timer;
    Report report;
    report.check = "group";
    report.parameters = {{"q_max", std::to_string(q_max)},
                         {"k", grid.describe_k()},
                         {"l", grid.describe_l()}};

    const auto holds = [&report](bool ok, const std::string& witness) {
        ++report.cases;
        if (!ok) report.failures.push_back({witness, 1, 0});
    };

    const std::uint64_t triples = grid.tuple_count(3);
    for (std::uint64_t i = 0; i < triples; ++i) {
        const std::vector<GroupElement> t = grid.tuple_at(3, i);
        const GroupElement left = multiply(multiply(t[0], t[1]), t[2]);
        const GroupElement right = multiply(t[0], multiply(t[1], t[2]));
        holds(left == right, "assoc (" + to_literal(t[0]) + ", " + to_literal(t[1]) + ", " +
                                 to_literal(t[2]) + "): " + to_literal(left) + " vs " +
                                 to_literal(right));
    }

    const GroupElement aba = multiply(multiply(gen_a, gen_b), gen_a);
    holds(aba == gen_b, "relation aba = b: got " + to_literal(aba));

    const std::uint64_t singles = grid.tuple_count(1);
    for (std::uint64_t i = 0; i < singles; ++i) {
        const GroupElement g = grid.tuple_at(1, i)[0];
        const std::int64_t eps = g.l & 1;

        const GroupElement by_b = conjugate(g, gen_b);
        holds(by_b == GroupElement{-g.k, g.l},
              "conj by b of " + to_literal(g) + ": got " + to_literal(by_b));
        const GroupElement by_b_inv = conjugate(g, inverse(gen_b));
        holds(by_b_inv == GroupElement{-g.k, g.l},
              "conj by b^-1 of " + to_literal(g) + ": got " + to_literal(by_b_inv));
        const GroupElement by_a = conjugate(g, gen_a);
        holds(by_a == GroupElement{g.k + 2 * eps, g.l},
              "conj by a of " + to_literal(g) + ": got " + to_literal(by_a));
        const GroupElement by_a_inv = conjugate(g, inverse(gen_a));
        holds(by_a_inv == GroupElement{g.k - 2 * eps, g.l},
              "conj by a^-1 of " + to_literal(g) + ": got " + to_literal(by_a_inv));

        holds(multiply(g, inverse(g)) == identity && multiply(inverse(g), g) == identity,
              "inverse of " + to_literal(g));
    }

    const std::uint64_t pairs = grid.tuple_count(2);
    for (std::uint64_t i = 0; i < pairs; ++i) {
        const std::vector<GroupElement> t = grid.tuple_at(2, i);
        const Bit got = Bit(multiply(t[0], t[1]).k);
        const Bit want = Bit(t[0].k + t[1].k + 2 * (t[0].l & 1) * t[1].k);
        holds(got == want, "product a-exponent mod 2 at (" + to_literal(t[0]) + ", " +
                               to_literal(t[1]) + ")");
    }

    for (int q = 2; q <= q_max; ++q) {
        holds(phi_well_defined(q), "phi kills the relator at q=" + std::to_string(q));
    }

    report.elapsed_ms = timer.ms();
    return report;
}

std::vector<Report> run_all(const VerifyConfig& config) {
    static const std::vector<std::string> known = {"main",       "remark",      "cocycles",
                                                   "ddzero",     "identities",  "periodicity",
                                                   "group"};
    for (const std::string& name : config.checks) {
        if (std::find(known.begin(), known.end(), name) == known.end()) {
            std::string valid;
            for (const std::string& k : known) {
                if (!valid.empty()) valid += ", ";
                valid += k;
            }
            throw std::invalid_argument("unknown check '" + name + "'; valid checks: " + valid);
        }
    }
    const auto enabled = [&config](const char* name) {
        return std::find(config.checks.begin(), config.checks.end(), name) !=
               config.checks.end();
    };

    std::vector<Report> reports;
    if (enabled("main")) reports.push_back(verify_main_certificate(config.grid, config.jobs));
    if (enabled("remark")) reports.push_back(verify_remark_certificate(config.grid, config.jobs));
    if (enabled("cocycles")) reports.push_back(verify_cocycles(config.grid, config.jobs));
    if (enabled("ddzero")) {
        for (const int m : config.ddzero_ms) {
            reports.push_back(verify_boundary_squared(config.ddzero_max_dim, m, config.grid,
                                                      config.jobs));
        }
    }
    if (enabled("identities")) {
        reports.push_back(
            verify_identities(config.identity_lo, config.identity_hi, config.grid, config.jobs));
    }
    if (enabled("periodicity")) {
        reports.push_back(verify_periodicity(config.periodicity_samples, config.seed));
    }
    if (enabled("group")) reports.push_back(verify_group_and_phi(config.q_max, config.grid));
    return reports;
}

bool all_pass(const std::vector<Report>& reports) {
    return std::all_of(reports.begin(), reports.end(),
                       [](const Report& r) { return r.pass(); });
}

}  // namespace kleincert
