#pragma once

#include "csc/rat.hpp"
#include "csc/surgery.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace csc {

/// Oriented circle bundle Y_{g,n} over the genus-g surface with Euler
/// number n; b1 = 2g.
struct CircleBundle {
    std::int64_t g = 0;
    std::int64_t n = 0;

    std::int64_t b1() const { return 2 * g; }
};

/// Torsion Spin^c structure t_e on Y_{g,n}, kept as an integer
/// representative e; t_{e+n} = t_e. c1 evaluates on the generator of the
/// associated disc bundle as 2 - 2g + n + 2e (well defined mod 2n).
struct SpinCClass {
    std::int64_t e = 0;
    std::int64_t g = 0;
    std::int64_t n = 0;

    std::int64_t c1_on_generator() const { return 2 - 2 * g + n + 2 * e; }
    std::int64_t class_index() const { return ((e % n) + n) % n; }

    /// Class equality: same bundle and e congruent mod n.
    bool same_class(const SpinCClass& o) const {
        return g == o.g && n == o.n && class_index() == o.class_index();
    }
};

enum class Verdict { NotSemiFillable, Inconclusive, Unsupported };

std::string verdict_name(Verdict v);

/// Full record for one (g, n, i): the induced Spin^c data, both
/// d3 values, their gap, and the fillability verdict. Numeric fields are
/// absent when the verdict is Inconclusive or Unsupported.
struct ObstructionReport {
    std::int64_t g = 0;
    std::int64_t n = 0;
    int i = 0;
    Verdict verdict = Verdict::Unsupported;
    bool structures_coincide = false; // n = 2g: xi_0 and xi_1 agree
    std::optional<std::int64_t> spinc_e;
    std::optional<std::int64_t> kappa;
    std::optional<Rat> d3_xi;
    std::optional<Rat> d3_semifillable;
    std::optional<Rat> gap;
};

/// Spin^c structure induced by the Honda contact structure xi_i on
/// Y_{g,n}: e = -1 for i = 0 and e = 2g - 1 + n for i = 1, i.e.
/// t_{xi_i} = t_{2ig-1}. Requires n >= 2g > 0 and i in {0,1}.
SpinCClass honda_spinc(std::int64_t g, std::int64_t n, int i);

/// Intersection data of the model 4-manifold bounding (Y_{g,n}, xi_i):
/// Q = [n] (+) [[0,1],[1,0]] (+) (n-2g)<-1> with
/// c1 = (eps*(n-2g), 0, 0, eps, ..., eps), eps = (-1)^i, chi = n - 4g + 4,
/// q_count = 2.
FourManifoldData model_manifold(std::int64_t g, std::int64_t n, int i);

/// Contact surgery presentation of (Y_{g,n}, xi_i): 2g one-handles, the
/// surface knot (tb = 2g-1, rot 0) with contact coefficient -1, and a
/// fiber (tb = -1, rot 0) with coefficient p/(p+1), p = n - 2g + 1,
/// linking the surface knot once.
ContactDiagram honda_diagram(std::int64_t g, std::int64_t n);

/// Closed form d3(xi_i) = (n^2 - 3n + 4g^2)/(4n); independent of i.
Rat d3_honda(std::int64_t g, std::int64_t n);

/// kappa with t_{g-1+kappa} = t_{xi_i}, representative in [1, n-1]:
/// n - g for i = 0 and g for i = 1.
std::int64_t nicolaescu_kappa(std::int64_t g, std::int64_t n, int i);

/// d3 value a semi-fillable structure in the Spin^c class t_{g-1+kappa}
/// would have to have:
///   d3 = -1 - 2g + (2g-1)/2 + (n-1)/4 + kappa^2/n - kappa,
/// equal to (n^2 + n + 4g^2)/(4n) - 2g - 2 for both admissible kappa.
/// Requires kappa in {g, n-g}.
Rat d3_semifillable(std::int64_t g, std::int64_t n, std::int64_t kappa);

/// Total function over g >= 0, any n, i in {0,1}; encodes the boundary
/// cases as verdicts instead of errors.
ObstructionReport obstruction_report(std::int64_t g, std::int64_t n, int i);

/// One report per (g, n, i), 1 <= g <= g_max, 2g <= n <= n_max,
/// i in {0,1}, in lexicographic order.
std::vector<ObstructionReport> sweep(std::int64_t g_max, std::int64_t n_max);

} // namespace csc
