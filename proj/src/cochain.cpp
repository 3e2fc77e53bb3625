#include "kleincert/cochain.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "kleincert/literal.hpp"

namespace kleincert {

Cochain::Cochain(std::string name, int degree, BarRule rule)
    : name_(std::move(name)), degree_(degree), carrier_(Carrier::Bar), bar_rule_(std::move(rule)) {
    if (degree_ < 0) throw std::invalid_argument("cochain " + name_ + ": negative degree");
    if (!bar_rule_) throw std::invalid_argument("cochain " + name_ + ": empty rule");
}

Cochain::Cochain(std::string name, int degree, FibRule rule)
    : name_(std::move(name)),
      degree_(degree),
      carrier_(Carrier::Fibrewise),
      fib_rule_(std::move(rule)) {
    if (degree_ < 0) throw std::invalid_argument("cochain " + name_ + ": negative degree");
    if (!fib_rule_) throw std::invalid_argument("cochain " + name_ + ": empty rule");
}

Bit Cochain::evaluate(const BarCell& cell) const {
    if (carrier_ != Carrier::Bar) {
        throw std::invalid_argument("cochain " + name_ +
                                    " lives on the fibrewise complex but was given the bar cell " +
                                    to_literal(cell));
    }
    if (cell.dimension() != degree_) {
        throw std::invalid_argument("cochain " + name_ + " has degree " + std::to_string(degree_) +
                                    " but cell " + to_literal(cell) + " has degree " +
                                    std::to_string(cell.dimension()));
    }
    return bar_rule_(cell);
}

Bit Cochain::evaluate(const FibCell& cell) const {
    if (carrier_ != Carrier::Fibrewise) {
        throw std::invalid_argument("cochain " + name_ +
                                    " lives on the bar complex but was given the fibrewise cell " +
                                    to_literal(cell));
    }
    if (cell.dimension() != degree_) {
        throw std::invalid_argument("cochain " + name_ + " has degree " + std::to_string(degree_) +
                                    " but cell " + to_literal(cell) + " has degree " +
                                    std::to_string(cell.dimension()));
    }
    return fib_rule_(cell);
}

Cochain cup(const Cochain& p, const Cochain& q) {
    if (p.carrier() != Carrier::Bar || q.carrier() != Carrier::Bar) {
        throw std::invalid_argument("cup: both factors must be bar cochains");
    }
    const int dp = p.degree();
    const int dq = q.degree();
    return Cochain(p.name() + "*" + q.name(), dp + dq, [p, q, dp](const BarCell& cell) {
        BarCell front{{cell.entries.begin(), cell.entries.begin() + dp}};
        BarCell back{{cell.entries.begin() + dp, cell.entries.end()}};
        return p(front) * q(back);
    });
}

Bit coboundary(const Cochain& c, const BarCell& cell) {
    if (c.carrier() != Carrier::Bar) {
        throw std::invalid_argument("coboundary: cochain " + c.name() +
                                    " is fibrewise but was given a bar cell");
    }
    if (cell.dimension() != c.degree() + 1) {
        throw std::invalid_argument("coboundary of " + c.name() + " needs a cell of degree " +
                                    std::to_string(c.degree() + 1) + "; cell " + to_literal(cell) +
                                    " has degree " + std::to_string(cell.dimension()));
    }
    Bit acc;
    for (const BarCell& term : boundary(cell)) acc += c(term);
    return acc;
}

Bit coboundary(const Cochain& c, const FibCell& cell, int m) {
    if (c.carrier() != Carrier::Fibrewise) {
        throw std::invalid_argument("coboundary: cochain " + c.name() +
                                    " lives on the bar complex but was given a fibrewise cell");
    }
    if (cell.dimension() != c.degree() + 1) {
        throw std::invalid_argument("coboundary of " + c.name() + " needs a cell of degree " +
                                    std::to_string(c.degree() + 1) + "; cell " + to_literal(cell) +
                                    " has degree " + std::to_string(cell.dimension()));
    }
    Bit acc;
    for (const FibCell& term : boundary(cell, m)) acc += c(term);
    return acc;
}

namespace {

// The named rules below read off the exponents of fibre entries; the
// degree check in evaluate() guarantees the entry counts.

Bit rule_u(const FibCell& cell) {
    const auto& e = cell.fibre.entries;
    switch (cell.base) {
        case BaseCell::Star: {
            // k1 t(k2) l3 k3 + k1 (l2 k3 + k2 l3 + k2) t(k3)
            const Bit k1(e[0].k), k2(e[1].k), l2(e[1].l), k3(e[2].k), l3(e[2].l);
            return k1 * t_mod2(e[1].k) * l3 * k3 + k1 * (l2 * k3 + k2 * l3 + k2) * t_mod2(e[2].k);
        }
        case BaseCell::A:
            return Bit(0);
        case BaseCell::B:
            return Bit(e[0].k) * t_mod2(e[1].k);
        case BaseCell::Sigma:
            return Bit(0);
    }
    return Bit(0);
}

Bit rule_u0(const FibCell& cell) {
    const auto& e = cell.fibre.entries;
    switch (cell.base) {
        case BaseCell::Star: {
            // t(k1) l2 k2 + (l1 k2 + k1 l2 + k1) t(k2)
            const Bit k1(e[0].k), l1(e[0].l), k2(e[1].k), l2(e[1].l);
            return t_mod2(e[0].k) * l2 * k2 + (l1 * k2 + k1 * l2 + k1) * t_mod2(e[1].k);
        }
        case BaseCell::A:
            return Bit(0);
        case BaseCell::B:
            return t_mod2(e[0].k);
        case BaseCell::Sigma:
            return Bit(0);
    }
    return Bit(0);
}

std::map<std::string, Cochain, std::less<>> build_registry() {
    std::map<std::string, Cochain, std::less<>> reg;
    const Cochain x("x", 1, [](const BarCell& c) { return Bit(c.entries[0].k); });
    const Cochain y("y", 1, [](const BarCell& c) { return Bit(c.entries[0].l); });

    reg.emplace("x", x);
    reg.emplace("y", y);

    Cochain z = cup(x, y);
    reg.emplace("z", Cochain("z", 2, [z](const BarCell& c) { return z(c); }));

    reg.emplace("tk", Cochain("tk", 1, [](const BarCell& c) { return t_mod2(c.entries[0].k); }));
    reg.emplace("k1tk2", Cochain("k1tk2", 2, [](const BarCell& c) {
                    return Bit(c.entries[0].k) * t_mod2(c.entries[1].k);
                }));

    // w vanishes on filtration level <= 1; on <sigma||tau> it is z of the fibre.
    reg.emplace("w", Cochain("w", 4, [](const FibCell& c) {
                    if (c.base != BaseCell::Sigma) return Bit(0);
                    return Bit(c.fibre.entries[0].k) * Bit(c.fibre.entries[1].l);
                }));
    reg.emplace("u", Cochain("u", 3, rule_u));

    reg.emplace("w0", Cochain("w0", 3, [](const FibCell& c) {
                    if (c.base != BaseCell::Sigma) return Bit(0);
                    return Bit(c.fibre.entries[0].l);
                }));
    reg.emplace("u0", Cochain("u0", 2, rule_u0));
    return reg;
}

const std::map<std::string, Cochain, std::less<>>& registry() {
    static const auto reg = build_registry();
    return reg;
}

}  // namespace

const Cochain& named_cochain(std::string_view name) {
    const auto& reg = registry();
    auto it = reg.find(name);
    if (it == reg.end()) {
        std::string valid;
        for (const auto& entry : reg) {
            if (!valid.empty()) valid += ", ";
            valid += entry.first;
        }
        throw std::invalid_argument("unknown cochain '" + std::string(name) +
                                    "'; valid names: " + valid);
    }
    return it->second;
}

const std::vector<std::string>& named_cochain_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& entry : registry()) out.push_back(entry.first);
        return out;
    }();
    return names;
}

}  // namespace kleincert
