#ifndef KLEINCERT_LITERAL_HPP
#define KLEINCERT_LITERAL_HPP

#include <string>
#include <string_view>
#include <variant>

#include "kleincert/bar.hpp"
#include "kleincert/chain.hpp"
#include "kleincert/fibrewise.hpp"
#include "kleincert/group.hpp"

namespace kleincert {

// Literal grammar, used by the CLI and in failure reports:
//   element   a<k>b<l>                      a2b-3
//   bar cell  [g1|g2|...]                   [a1b0|a0b1], [] is the 0-cell
//   fib cell  [<eta>||g1|g2|...]            [s||a1b0|a0b1], [b||] is <b||()>
//   eta       * | a | b | s

std::string to_literal(const GroupElement& g);
std::string to_literal(const BarCell& cell);
std::string to_literal(const FibCell& cell);

/// Chain as " + "-joined sorted terms; the zero chain prints as "0".
template <class Cell>
std::string to_literal(const Chain<Cell>& chain) {
    if (chain.zero()) return "0";
    std::string out;
    for (const Cell& cell : chain.cells()) {
        if (!out.empty()) out += " + ";
        out += to_literal(cell);
    }
    return out;
}

/// Parsers reject malformed input with std::invalid_argument naming the
/// offending position.
GroupElement parse_element(std::string_view text);
BarCell parse_bar_cell(std::string_view text);
FibCell parse_fib_cell(std::string_view text);

/// Accepts either cell form, deciding by the presence of a "||" divider.
std::variant<BarCell, FibCell> parse_cell(std::string_view text);

}  // namespace kleincert

#endif  // KLEINCERT_LITERAL_HPP
