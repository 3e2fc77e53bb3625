// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails. Criteria 1-9 drive the library directly; criterion 10
// round-trips through the installed CLI (path given by --cli).

#include <sys/wait.h>

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "kleincert/literal.hpp"
#include "kleincert/verify.hpp"

using namespace kleincert;

namespace {

int failures = 0;

void criterion(int number, bool ok, const std::string& label) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << label << "\n";
    if (!ok) ++failures;
}

std::string stats(const Report& report) {
    std::ostringstream out;
    out << report.cases << " cases, " << report.elapsed_ms << " ms";
    return out.str();
}

Cochain corrupted_u() {
    return Cochain("u", 3, [](const FibCell& cell) {
        const auto& e = cell.fibre.entries;
        switch (cell.base) {
            case BaseCell::Star: {
                const Bit k1(e[0].k), k2(e[1].k), l2(e[1].l), k3(e[2].k), l3(e[2].l);
                return k1 * t_mod2(e[1].k) * l3 * k3 + k1 * (l2 * k3 + k2) * t_mod2(e[2].k);
            }
            case BaseCell::B:
                return Bit(e[0].k) * t_mod2(e[1].k);
            default:
                return Bit(0);
        }
    });
}

struct CommandResult {
    int status = -1;
    std::string out;
};

CommandResult run_command(const std::string& command) {
    CommandResult result;
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) return result;
    char buffer[4096];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, got);
    const int rc = pclose(pipe);
    result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return result;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) lines.push_back(line);
    return lines;
}

bool report_object_valid(const nlohmann::json& j) {
    if (!j.is_object() || j.size() != 6) return false;
    if (!j.contains("check") || !j["check"].is_string()) return false;
    if (!j.contains("parameters") || !j["parameters"].is_object()) return false;
    for (const auto& [key, value] : j["parameters"].items()) {
        if (!value.is_string()) return false;
    }
    if (!j.contains("cases") || !j["cases"].is_number()) return false;
    if (!j.contains("failures") || !j["failures"].is_array()) return false;
    for (const auto& failure : j["failures"]) {
        if (!failure.is_object() || failure.size() != 3) return false;
        if (!failure.contains("cell") || !failure["cell"].is_string()) return false;
        if (!failure.contains("expected") || !failure["expected"].is_number()) return false;
        if (!failure.contains("got") || !failure["got"].is_number()) return false;
    }
    if (!j.contains("elapsed_ms") || !j["elapsed_ms"].is_number()) return false;
    if (!j.contains("pass") || !j["pass"].is_boolean()) return false;
    return true;
}

void run_cli_criterion(const std::string& cli) {
    bool ok = true;
    std::string why;

    const CommandResult eval = run_command(cli + " eval w '[s||a1b0|a0b1]'");
    if (eval.status != 0 || eval.out != "1\n") {
        ok = false;
        why = "eval printed \"" + eval.out + "\"";
    }

    const CommandResult bnd = run_command(cli + " boundary '[b||a1b0]' --m 3");
    const std::vector<std::string> terms = lines_of(bnd.out);
    if (bnd.status != 0 || terms.size() != 2 || terms[0] != "[*||a-1b0]" ||
        terms[1] != "[*||a1b0]") {
        ok = false;
        why = "boundary printed \"" + bnd.out + "\"";
    }

    const CommandResult verify = run_command(cli + " verify all --json --jobs 2");
    if (verify.status != 0) {
        ok = false;
        why = "verify exited with " + std::to_string(verify.status);
    } else {
        nlohmann::json reports = nlohmann::json::parse(verify.out, nullptr, false);
        if (reports.is_discarded() || !reports.is_array() || reports.empty()) {
            ok = false;
            why = "verify emitted unparseable JSON";
        } else {
            for (const auto& report : reports) {
                if (!report_object_valid(report)) {
                    ok = false;
                    why = "a report object does not match the schema";
                    break;
                }
                if (report["pass"] != true || !report["failures"].empty()) {
                    ok = false;
                    why = "check " + report["check"].get<std::string>() + " failed";
                    break;
                }
            }
        }
    }

    criterion(10, ok, "CLI round trip: eval, boundary, and JSON verify" +
                          (ok ? std::string() : " -- " + why));
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli;
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--cli") cli = argv[i + 1];
    }
    if (cli.empty()) {
        std::cerr << "usage: acceptance --cli <path-to-kleincert-binary>\n";
        return 2;
    }

    // 1. delta u = w on every 4-cell over the residue grid and over a
    //    window of raw exponents, single worker, within 5 seconds.
    const Report main_residues = verify_main_certificate(Grid::residues(), 1);
    const Report main_window = verify_main_certificate(Grid::ranges(-6, 6, -3, 3), 1);
    criterion(1,
              main_residues.pass() && main_residues.cases == 1088 && main_window.pass() &&
                  main_window.cases == 1515423 && main_window.elapsed_ms < 5000.0,
              "main certificate delta u = w (" + stats(main_residues) + "; window " +
                  stats(main_window) + ")");

    // 2. delta u0 = w0 likewise, within 1 second.
    const Report remark_residues = verify_remark_certificate(Grid::residues(), 1);
    const Report remark_window = verify_remark_certificate(Grid::ranges(-6, 6, -3, 3), 1);
    criterion(2,
              remark_residues.pass() && remark_residues.cases == 136 && remark_window.pass() &&
                  remark_window.cases == 16653 && remark_window.elapsed_ms < 1000.0,
              "remark certificate delta u0 = w0 (" + stats(remark_residues) + "; window " +
                  stats(remark_window) + ")");

    // 3. The halving identities over [-20, 20], within 2 seconds.
    const Report halving = verify_halving_identities(-20, 20, 1);
    criterion(3,
              halving.pass() && halving.cases == 41 + 41ull * 41 * 41 &&
                  halving.elapsed_ms < 2000.0,
              "t identities under negation and shifted addition (" + stats(halving) + ")");

    // 4. The coboundary closed forms they imply, on the residue grid, within 1 second.
    const Report forms = verify_halving_coboundaries(Grid::residues(), 1);
    criterion(4, forms.pass() && forms.cases == 576 && forms.elapsed_ms < 1000.0,
              "coboundary closed forms of tk and k1tk2 (" + stats(forms) + ")");

    // 5. x, y, z cocycle conditions and the closed form of z, within 1 second.
    const Report cocycles = verify_cocycles(Grid::residues(), 1);
    criterion(5, cocycles.pass() && cocycles.cases == 704 && cocycles.elapsed_ms < 1000.0,
              "cocycle sweep for x, y, z (" + stats(cocycles) + ")");

    // 6. The boundary squares to zero for m in {2, 3, 5} up to dimension 4,
    //    within 5 seconds total.
    double ddzero_ms = 0.0;
    bool ddzero_ok = true;
    std::uint64_t ddzero_cases = 0;
    for (const int m : {2, 3, 5}) {
        const Report report = verify_boundary_squared(4, m, Grid::residues(), 1);
        ddzero_ok = ddzero_ok && report.pass();
        ddzero_ms += report.elapsed_ms;
        ddzero_cases += report.cases;
    }
    {
        std::ostringstream out;
        out << ddzero_cases << " cases, " << ddzero_ms << " ms";
        criterion(6, ddzero_ok && ddzero_cases == 292 + 1828 + 5924 && ddzero_ms < 5000.0,
                  "boundary of boundary vanishes for m = 2, 3, 5 (" + out.str() + ")");
    }

    // 7. Group laws and the relator images, within 1 second.
    const Report group = verify_group_and_phi(10, Grid::residues());
    criterion(7, group.pass() && group.cases == 626 && group.elapsed_ms < 1000.0,
              "group laws, conjugation forms, and phi (" + stats(group) + ")");

    // 8. Shift invariance on at least 10^4 samples, within 2 seconds.
    const Report periodicity = verify_periodicity(10000);
    criterion(8, periodicity.pass() && periodicity.cases == 10000 &&
                     periodicity.elapsed_ms < 2000.0,
              "shift invariance of all formulas (" + stats(periodicity) + ")");

    // 9. A corrupted u must be caught, with a concrete witness cell.
    const Report mutated =
        verify_main_certificate(corrupted_u(), named_cochain("w"), Grid::residues(), 1);
    bool witness_ok = !mutated.pass() && !mutated.failures.empty();
    if (witness_ok) {
        const Failure& witness = mutated.failures.front();
        const auto cell = parse_cell(witness.cell);
        witness_ok = std::holds_alternative<FibCell>(cell);
        if (witness_ok) {
            const FibCell fib = std::get<FibCell>(cell);
            witness_ok = named_cochain("w")(fib).value() == witness.expected &&
                         coboundary(corrupted_u(), fib, 3).value() == witness.got &&
                         witness.expected != witness.got;
        }
    }
    criterion(9, witness_ok,
              "a corrupted certificate is refuted with a witness" +
                  (mutated.failures.empty()
                       ? std::string()
                       : " (" + std::to_string(mutated.failures.size()) + " disagreements, e.g. " +
                             mutated.failures.front().cell + ")"));

    // 10. The CLI round trip.
    run_cli_criterion("'" + cli + "'");

    if (failures != 0) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria satisfied\n";
    return 0;
}
