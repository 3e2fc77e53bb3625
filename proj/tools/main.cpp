#include <cstdint>
#include <iostream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kleincert/cochain.hpp"
#include "kleincert/group.hpp"
#include "kleincert/literal.hpp"
#include "kleincert/verify.hpp"

namespace {

using kleincert::Report;

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
    const std::size_t dots = text.find("..", 1);  // offset 1 so a leading '-' survives
    if (dots == std::string::npos) {
        throw std::invalid_argument("bad range \"" + text + "\": expected LO..HI");
    }
    try {
        return {std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw std::invalid_argument("bad range \"" + text + "\": expected LO..HI");
    }
}

nlohmann::ordered_json report_json(const Report& report) {
    nlohmann::ordered_json j;
    j["check"] = report.check;
    nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
    for (const auto& [key, value] : report.parameters) parameters[key] = value;
    j["parameters"] = parameters;
    j["cases"] = report.cases;
    nlohmann::ordered_json failures = nlohmann::ordered_json::array();
    for (const kleincert::Failure& f : report.failures) {
        failures.push_back({{"cell", f.cell}, {"expected", f.expected}, {"got", f.got}});
    }
    j["failures"] = failures;
    j["elapsed_ms"] = report.elapsed_ms;
    j["pass"] = report.pass();
    return j;
}

void print_text_report(const Report& report) {
    std::string parameters;
    for (const auto& [key, value] : report.parameters) {
        if (!parameters.empty()) parameters += ", ";
        parameters += key + "=" + value;
    }
    std::cout << report.check << " " << (report.pass() ? "PASS" : "FAIL") << "  cases="
              << report.cases << "  elapsed_ms=" << report.elapsed_ms;
    if (!parameters.empty()) std::cout << "  (" << parameters << ")";
    std::cout << "\n";
    const std::size_t shown = std::min<std::size_t>(report.failures.size(), 10);
    for (std::size_t i = 0; i < shown; ++i) {
        const kleincert::Failure& f = report.failures[i];
        std::cout << "  failure: " << f.cell << "  expected=" << f.expected << " got=" << f.got
                  << "\n";
    }
    if (report.failures.size() > shown) {
        std::cout << "  ... and " << (report.failures.size() - shown) << " more failures\n";
    }
}

struct VerifyArgs {
    std::string check = "all";
    bool residues = false;
    std::string k_range;
    std::string l_range;
    int m = 0;
    bool m_given = false;
    int jobs = 1;
    bool json = false;
    std::uint64_t samples = 10000;
    std::uint64_t seed = kleincert::kDefaultSeed;
};

int run_verify(const VerifyArgs& args) {
    kleincert::VerifyConfig config;
    if (args.check != "all") config.checks = {args.check};
    if (!args.k_range.empty() || !args.l_range.empty()) {
        if (args.k_range.empty() || args.l_range.empty()) {
            throw std::invalid_argument("--k-range and --l-range must be given together");
        }
        const auto [k_lo, k_hi] = parse_range(args.k_range);
        const auto [l_lo, l_hi] = parse_range(args.l_range);
        config.grid = kleincert::Grid::ranges(k_lo, k_hi, l_lo, l_hi);
    }
    if (args.m_given) config.ddzero_ms = {args.m};
    config.jobs = args.jobs;
    config.periodicity_samples = args.samples;
    config.seed = args.seed;

    const std::vector<Report> reports = kleincert::run_all(config);
    if (args.json) {
        nlohmann::ordered_json out = nlohmann::ordered_json::array();
        for (const Report& report : reports) out.push_back(report_json(report));
        std::cout << out.dump(2) << "\n";
    } else {
        for (const Report& report : reports) print_text_report(report);
        std::cout << "overall: " << (kleincert::all_pass(reports) ? "PASS" : "FAIL") << "\n";
    }
    return kleincert::all_pass(reports) ? 0 : 1;
}

int run_eval(const std::string& name, const std::string& literal) {
    const kleincert::Cochain& c = kleincert::named_cochain(name);
    const auto cell = kleincert::parse_cell(literal);
    const kleincert::Bit value = std::visit([&c](const auto& parsed) { return c(parsed); }, cell);
    std::cout << value.value() << "\n";
    return 0;
}

int run_boundary(const std::string& literal, int m) {
    const auto cell = kleincert::parse_cell(literal);
    std::vector<std::string> lines;
    if (std::holds_alternative<kleincert::BarCell>(cell)) {
        for (const auto& term : kleincert::boundary(std::get<kleincert::BarCell>(cell))) {
            lines.push_back(kleincert::to_literal(term));
        }
    } else {
        for (const auto& term : kleincert::boundary(std::get<kleincert::FibCell>(cell), m)) {
            lines.push_back(kleincert::to_literal(term));
        }
    }
    if (lines.empty()) {
        std::cout << "0\n";
    } else {
        for (const std::string& line : lines) std::cout << line << "\n";
    }
    return 0;
}

int run_group(const std::string& op, const std::vector<std::string>& literals) {
    std::vector<kleincert::GroupElement> elements;
    elements.reserve(literals.size());
    for (const std::string& text : literals) elements.push_back(kleincert::parse_element(text));

    kleincert::GroupElement result;
    if (op == "mul") {
        if (elements.size() < 2) {
            throw std::invalid_argument("group mul needs at least two elements");
        }
        result = elements[0];
        for (std::size_t i = 1; i < elements.size(); ++i) {
            result = kleincert::multiply(result, elements[i]);
        }
    } else if (op == "inv") {
        if (elements.size() != 1) throw std::invalid_argument("group inv needs one element");
        result = kleincert::inverse(elements[0]);
    } else if (op == "conj") {
        if (elements.size() != 2) {
            throw std::invalid_argument("group conj needs an element and a conjugator");
        }
        result = kleincert::conjugate(elements[0], elements[1]);
    } else {
        throw std::invalid_argument("unknown group operation '" + op +
                                    "'; valid operations: mul, inv, conj");
    }
    std::cout << kleincert::to_literal(result) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certificate checker for the Klein bottle topological-complexity computation"};
    app.require_subcommand(1);

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "Run verification sweeps");
    verify
        ->add_option("check", verify_args.check,
                     "all, main, remark, cocycles, ddzero, identities, periodicity, or group")
        ->check(CLI::IsMember({"all", "main", "remark", "cocycles", "ddzero", "identities",
                               "periodicity", "group"}));
    CLI::Option* residues_flag = verify->add_flag(
        "--residues", verify_args.residues, "Sweep the residue grid k in 0..3, l in 0..1 (default)");
    CLI::Option* k_range_opt =
        verify->add_option("--k-range", verify_args.k_range, "a-exponent range LO..HI");
    CLI::Option* l_range_opt =
        verify->add_option("--l-range", verify_args.l_range, "b-exponent range LO..HI");
    residues_flag->excludes(k_range_opt)->excludes(l_range_opt);
    CLI::Option* m_opt = verify->add_option(
        "--m", verify_args.m, "Fibre length bound for ddzero (default: 2, 3, and 5)");
    verify->add_option("--jobs", verify_args.jobs, "Worker thread count")
        ->check(CLI::PositiveNumber);
    verify->add_flag("--json", verify_args.json, "Emit a JSON array of reports");
    verify->add_option("--samples", verify_args.samples, "Periodicity sample count");
    verify->add_option("--seed", verify_args.seed, "Periodicity RNG seed");

    std::string eval_name;
    std::string eval_cell;
    CLI::App* eval = app.add_subcommand("eval", "Evaluate a named cochain on a cell");
    eval->add_option("cochain", eval_name, "x, y, z, tk, k1tk2, w, u, w0, or u0")->required();
    eval->add_option("cell", eval_cell, "Cell literal, e.g. [a1b0|a0b1] or [s||a1b0|a0b1]")
        ->required();

    std::string boundary_cell;
    int boundary_m = 3;
    CLI::App* boundary = app.add_subcommand("boundary", "Print the mod-2 boundary of a cell");
    boundary->add_option("cell", boundary_cell, "Cell literal")->required();
    boundary->add_option("--m", boundary_m, "Fibre length bound of the complex (default 3)");

    std::string group_op;
    std::vector<std::string> group_elements;
    CLI::App* group = app.add_subcommand("group", "Normal-form group arithmetic");
    group->add_option("op", group_op, "mul, inv, or conj")
        ->required()
        ->check(CLI::IsMember({"mul", "inv", "conj"}));
    group->add_option("elements", group_elements, "Element literals, e.g. a2b-3")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        verify_args.m_given = m_opt->count() > 0;
        if (verify->parsed()) return run_verify(verify_args);
        if (eval->parsed()) return run_eval(eval_name, eval_cell);
        if (boundary->parsed()) return run_boundary(boundary_cell, boundary_m);
        if (group->parsed()) return run_group(group_op, group_elements);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
