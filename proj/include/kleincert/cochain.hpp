#ifndef KLEINCERT_COCHAIN_HPP
#define KLEINCERT_COCHAIN_HPP

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "kleincert/bar.hpp"
#include "kleincert/fibrewise.hpp"
#include "kleincert/parity.hpp"

namespace kleincert {

enum class Carrier { Bar, Fibrewise };

/// A mod-2 cochain: a named, degree-tagged evaluation rule on the cells of
/// one carrier complex. Rules are total functions of the cell alone, so
/// cochains of the infinite complexes stay finitely representable.
class Cochain {
  public:
    using BarRule = std::function<Bit(const BarCell&)>;
    using FibRule = std::function<Bit(const FibCell&)>;

    Cochain(std::string name, int degree, BarRule rule);
    Cochain(std::string name, int degree, FibRule rule);

    const std::string& name() const { return name_; }
    int degree() const { return degree_; }
    Carrier carrier() const { return carrier_; }

    /// Evaluates on a cell of matching carrier and degree; a mismatch is
    /// rejected with both degrees reported.
    Bit evaluate(const BarCell& cell) const;
    Bit evaluate(const FibCell& cell) const;

    Bit operator()(const BarCell& cell) const { return evaluate(cell); }
    Bit operator()(const FibCell& cell) const { return evaluate(cell); }

  private:
    std::string name_;
    int degree_ = 0;
    Carrier carrier_ = Carrier::Bar;
    BarRule bar_rule_;
    FibRule fib_rule_;
};

/// The Alexander-Whitney cup product of two bar cochains: the value on
/// [g_1|...|g_{p+q}] is p on the front p entries times q on the back q.
Cochain cup(const Cochain& p, const Cochain& q);

/// The coboundary value (delta c)(cell) = c(d cell), cell of degree
/// deg(c)+1 on the matching carrier; the fibrewise form takes the
/// filtration parameter m of the complex the boundary is taken in.
Bit coboundary(const Cochain& c, const BarCell& cell);
Bit coboundary(const Cochain& c, const FibCell& cell, int m);

/// The named cochains:
///   x, y     degree-1 bar duals of [a], [b]:  x = k_1, y = l_1
///   z        = cup(x, y), the degree-2 bar cocycle k_1 l_2
///   tk       degree-1 bar cochain t(k_1)
///   k1tk2    degree-2 bar cochain k_1 t(k_2)
///   w        degree-4 fibrewise cocycle: z on <sigma||tau>, 0 on F_1
///   u        degree-3 fibrewise cochain with delta u = w for m = 3
///   w0       degree-3 fibrewise cocycle: y on <sigma||alpha>, 0 on F_1
///   u0       degree-2 fibrewise cochain with delta u0 = w0 for m = 2
/// Throws std::invalid_argument for an unknown name, listing the valid ones.
const Cochain& named_cochain(std::string_view name);

const std::vector<std::string>& named_cochain_names();

}  // namespace kleincert

#endif  // KLEINCERT_COCHAIN_HPP
