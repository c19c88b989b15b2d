#pragma once

#include "vcn/diagram.hpp"
#include "vcn/ring.hpp"

namespace vcn {

/// Reference to arc mu on long arc j (0-based indices).
struct ArcRef {
    int long_arc = 0;
    int arc = 0;

    friend bool operator==(const ArcRef&, const ArcRef&) = default;
};

/// Incidence coefficient of crossing i and the referenced arc: the sum of
///   +1            if the arc emanates from the crossing,
///   t^sgn - 1     if it passes over it,
///   -t^sgn        if it comes into it,
/// and 0 when not incident. Coinciding roles add up (a curl's single arc has
/// coefficient 0).
TPoly incidence_coefficient(const LongArcDecomposition& d, int crossing, ArcRef arc);

/// The n x n matrix with A(i,j) = sum over arcs of long arc j of
/// [v_i : arc] * s^deg(arc).
using AlexanderMatrix = PolyMatrix;
AlexanderMatrix alexander_matrix(const LongArcDecomposition& d);
AlexanderMatrix alexander_matrix(const DiagramCode& code);  // throws NotProper

/// Everything the zeta computation reports. lower_bound = max(0, deg_s,
/// -mdeg_s) with sentinel-aware arithmetic (zeta == 0 gives 0). n, k and
/// writhe describe the analyzed (possibly properized) diagram.
struct ZetaReport {
    LaurentPoly zeta;
    ExtInt deg_s = ExtInt::neg_inf();
    ExtInt mdeg_s = ExtInt::pos_inf();
    int lower_bound = 0;
    int writhe = 0;
    int n = 0;
    int k = 0;
    bool properized = false;
};

/// zeta = det of the Alexander-like matrix. A non-proper code is properized
/// on a copy first and the report flags it.
ZetaReport zeta(const DiagramCode& code, DetMethod method = DetMethod::FractionFree);

/// Sum of local writhe numbers over the classical crossings.
int writhe(const DiagramCode& code);

}  // namespace vcn
