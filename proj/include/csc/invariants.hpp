#pragma once

#include "csc/qmatrix.hpp"
#include "csc/surgery.hpp"

#include <optional>

namespace csc {

/// Invariants of the two-plane field carried by a surgery presentation.
/// d3 and c1_squared are present exactly when c1 is torsion.
struct InvariantReport {
    std::int64_t chi = 0;
    std::int64_t sigma = 0;
    bool torsion = false;
    std::optional<Rat> c1_squared;
    std::optional<Rat> d3;
    int q_count = 0;
};

/// True iff r lies in the column space of Q over the rationals.
bool is_torsion(const QSymMatrix& q, const std::vector<Rat>& r);
bool is_torsion(const IntSymMatrix& q, const std::vector<std::int64_t>& r);

/// r.x for any x with Qx = r; well-defined on the affine solution set.
/// Throws NonTorsion when no solution exists.
Rat c1_squared(const QSymMatrix& q, const std::vector<Rat>& r);
Rat c1_squared(const IntSymMatrix& q, const std::vector<std::int64_t>& r);

/// Three-dimensional invariant of the boundary two-plane field:
///   d3 = (c1^2 - 3*sigma - 2*chi)/4 + q_count,
/// each contact (+1)-surgery contributing a net +1 (one half from the
/// excised ball, one half from the boundary correction term).
/// Throws NonTorsion when c1 is not torsion.
Rat d3(const FourManifoldData& fmd);

/// Full report; never throws on non-torsion input (fields are absent).
InvariantReport compute_invariants(const FourManifoldData& fmd);

/// For m = 1..N, builds the 2m-component diagram of m contact (+1)- and
/// m contact (-1)-surgeries on mutual push-offs of the tb = -1, rot = 0
/// unknot and checks that the pipeline returns d3 = -1/2 exactly.
bool verify_plus_one_family(int N);

} // namespace csc
