#include "kleincert/literal.hpp"

#include <cstddef>
#include <stdexcept>

namespace kleincert {

namespace {

std::string base_letter(BaseCell base) {
    switch (base) {
        case BaseCell::Star: return "*";
        case BaseCell::A: return "a";
        case BaseCell::B: return "b";
        case BaseCell::Sigma: return "s";
    }
    throw std::invalid_argument("unprintable base cell");
}

[[noreturn]] void fail(std::string_view text, std::size_t pos, const std::string& what) {
    throw std::invalid_argument("bad literal \"" + std::string(text) + "\" at position " +
                                std::to_string(pos) + ": " + what);
}

// Cursor over the literal text; pos is reported in error messages.
struct Scanner {
    std::string_view text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    bool accept(char c) {
        if (done() || text[pos] != c) return false;
        ++pos;
        return true;
    }

    void expect(char c, const std::string& what) {
        if (!accept(c)) fail(text, pos, what);
    }

    std::int64_t integer() {
        const std::size_t start = pos;
        if (!done() && (peek() == '-' || peek() == '+')) ++pos;
        const std::size_t digits = pos;
        while (!done() && peek() >= '0' && peek() <= '9') ++pos;
        if (pos == digits) fail(text, start, "expected an integer");
        try {
            return std::stoll(std::string(text.substr(start, pos - start)));
        } catch (const std::out_of_range&) {
            fail(text, start, "integer out of range");
        }
    }

    GroupElement element() {
        expect('a', "expected 'a'");
        const std::int64_t k = integer();
        expect('b', "expected 'b'");
        const std::int64_t l = integer();
        return GroupElement{k, l};
    }

    // The entry list between '[' (or '||') and ']'; empty for the 0-cell.
    BarCell entries() {
        BarCell cell;
        if (accept(']')) return cell;
        cell.entries.push_back(element());
        while (accept('|')) cell.entries.push_back(element());
        expect(']', "expected '|' or ']'");
        return cell;
    }

    BaseCell base() {
        if (accept('*')) return BaseCell::Star;
        if (accept('a')) return BaseCell::A;
        if (accept('b')) return BaseCell::B;
        if (accept('s')) return BaseCell::Sigma;
        fail(text, pos, "expected a base cell (one of *, a, b, s)");
    }

    void end() {
        if (!done()) fail(text, pos, "trailing input");
    }
};

}  // namespace

std::string to_literal(const GroupElement& g) {
    return "a" + std::to_string(g.k) + "b" + std::to_string(g.l);
}

std::string to_literal(const BarCell& cell) {
    std::string out = "[";
    for (std::size_t i = 0; i < cell.entries.size(); ++i) {
        if (i > 0) out += "|";
        out += to_literal(cell.entries[i]);
    }
    return out + "]";
}

std::string to_literal(const FibCell& cell) {
    std::string out = "[" + base_letter(cell.base) + "||";
    for (std::size_t i = 0; i < cell.fibre.entries.size(); ++i) {
        if (i > 0) out += "|";
        out += to_literal(cell.fibre.entries[i]);
    }
    return out + "]";
}

GroupElement parse_element(std::string_view text) {
    Scanner s{text};
    GroupElement g = s.element();
    s.end();
    return g;
}

BarCell parse_bar_cell(std::string_view text) {
    Scanner s{text};
    s.expect('[', "expected '['");
    BarCell cell = s.entries();
    s.end();
    return cell;
}

FibCell parse_fib_cell(std::string_view text) {
    Scanner s{text};
    s.expect('[', "expected '['");
    const BaseCell base = s.base();
    s.expect('|', "expected '||'");
    s.expect('|', "expected '||'");
    FibCell cell{base, s.entries()};
    s.end();
    return cell;
}

std::variant<BarCell, FibCell> parse_cell(std::string_view text) {
    if (text.find("||") != std::string_view::npos) return parse_fib_cell(text);
    return parse_bar_cell(text);
}

}  // namespace kleincert
