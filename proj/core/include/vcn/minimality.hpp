#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vcn/invariants.hpp"

namespace vcn {

/// How a critical arc is incident to a crossing; roles can combine.
enum CriticalIncidence : std::uint8_t {
    IncidenceNone = 0,
    IncidenceEmanates = 1,
    IncidenceOver = 2,
    IncidenceIncoming = 4,
};

/// Specialness analysis of a proper diagram. A diagram is special when every
/// long arc attains s-degree p_j, i.e. all increasing passages come first; the
/// unique maximal arc is the critical arc. The T- and M-matrices are filled
/// only when special; cyclic crossings are reported regardless.
struct TData {
    bool special = false;
    std::vector<int> critical_arc;    // per long arc, the index of its critical arc
    TPolyMatrix t_matrix;             // T(i,j) = [v_i : critical arc of long arc j]
    BitMatrix m_matrix;               // M(i,j) = 1 iff v_i and critical arc j are incident
    std::vector<std::uint8_t> incidences;  // n*n CriticalIncidence masks, row-major
    std::vector<int> cyclic_crossings;  // crossings whose single-arc long arc loops back over them

    std::uint8_t incidence(int i, int j) const {
        return incidences[static_cast<std::size_t>(i) * static_cast<std::size_t>(m_matrix.n) + j];
    }
};

TData analyze_special(const LongArcDecomposition& d);

enum class Side { Deg, Mdeg };
enum class CertificateKind { TDiagram, MDiagram, NoCertificate };

/// The epsilon/beta data of an M-diagram: det T = epsilon * t^alpha * (t-1)^beta.
/// beta counts pairs whose critical arc passes over its crossing, x the
/// negative crossings among those, y the pairs whose critical arc comes into
/// its crossing; det_m is the sign of the unique pairing. When a pair is
/// incident in more than one way, the geometric counts are ambiguous and
/// (epsilon, alpha, beta) come from the factorization of det T.
struct EpsBeta {
    int epsilon = 1;
    int beta = 0;
    int alpha = 0;
    int x = 0;
    int y = 0;
    int det_m = 1;
    bool ambiguous = false;
};

struct MinimalityCertificate {
    Side side = Side::Deg;
    CertificateKind kind = CertificateKind::NoCertificate;
    bool special = false;
    int k = 0;
    std::vector<int> critical_arcs;
    std::vector<int> cyclic_crossings;
    std::optional<TPoly> det_t;
    std::optional<Int> per_m;
    std::optional<EpsBeta> eps_beta;
    std::vector<std::string> reasons;

    bool certified() const { return kind != CertificateKind::NoCertificate; }
};

/// Certify minimality of the virtual crossing count on both degree sides:
/// the given code as-is and its virtual mirror. Special with det T != 0 is a
/// T-diagram certificate; additionally acyclic with per M == 1 is an
/// M-diagram certificate with epsilon/beta attached. The Statement-2 identity
/// coeff_s(zeta, k) == det T is checked on every special side and a mismatch
/// throws InternalInconsistency.
std::vector<MinimalityCertificate> certify(const DiagramCode& code);

/// epsilon/beta of a special, acyclic diagram with per M == 1.
/// Throws NotMDiagram / PairingAmbiguous / CrossCheckMismatch.
EpsBeta epsilon_beta(const TData& td, std::span<const int> signs);

/// det_m * (-1)^(x+y).
int epsilon_from_parts(int det_m, int x, int y);

}  // namespace vcn
