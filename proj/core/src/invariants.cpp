#include "vcn/invariants.hpp"

#include <algorithm>

namespace vcn {

TPoly incidence_coefficient(const LongArcDecomposition& d, int crossing, ArcRef ref) {
    const LongArc& la = d.long_arcs[static_cast<std::size_t>(ref.long_arc)];
    const Arc& arc = la.arcs[static_cast<std::size_t>(ref.arc)];
    const int sgn = d.sign[static_cast<std::size_t>(crossing)];

    TPoly out;
    if (ref.arc == 0 && la.emanates_from == crossing) out += TPoly(1);
    for (int oc : arc.over_crossings)
        if (oc == crossing) out += TPoly::t(sgn) + TPoly(-1);
    if (ref.arc + 1 == static_cast<int>(la.arcs.size()) && la.ends_at == crossing)
        out += -TPoly::t(sgn);
    return out;
}

AlexanderMatrix alexander_matrix(const LongArcDecomposition& d) {
    PolyMatrix a(d.n);
    for (int j = 0; j < d.n; ++j) {
        const LongArc& la = d.long_arcs[static_cast<std::size_t>(j)];
        for (std::size_t mu = 0; mu < la.arcs.size(); ++mu) {
            const Arc& arc = la.arcs[mu];
            auto add = [&](int i, const TPoly& coeff) {
                a.at(i, j) += embed(coeff).mul_s_power(arc.degree);
            };
            if (mu == 0) add(la.emanates_from, TPoly(1));
            for (int oc : arc.over_crossings) {
                int sgn = d.sign[static_cast<std::size_t>(oc)];
                add(oc, TPoly::t(sgn) + TPoly(-1));
            }
            if (mu + 1 == la.arcs.size()) {
                int sgn = d.sign[static_cast<std::size_t>(la.ends_at)];
                add(la.ends_at, -TPoly::t(sgn));
            }
        }
    }
    return a;
}

AlexanderMatrix alexander_matrix(const DiagramCode& code) {
    return alexander_matrix(long_arcs(code));
}

int writhe(const DiagramCode& code) {
    int w = 0;
    for (const auto& comp : code.components)
        for (const auto& p : comp)
            if (p.kind == PassageKind::Under) w += p.dir;
    return w;
}

ZetaReport zeta(const DiagramCode& code, DetMethod method) {
    ZetaReport r;
    auto [proper, offending] = is_proper(code);
    const DiagramCode& work = proper ? code : properize(code);
    r.properized = !proper;

    LongArcDecomposition d = long_arcs(work);
    r.n = d.n;
    r.k = d.k;
    r.writhe = writhe(work);
    r.zeta = det(alexander_matrix(d), method);

    SDegreeRange range = s_degree_range(r.zeta);
    r.deg_s = range.deg;
    r.mdeg_s = range.mdeg;
    r.lower_bound = 0;
    if (r.deg_s.is_finite()) r.lower_bound = std::max(r.lower_bound, r.deg_s.value());
    if (r.mdeg_s.is_finite()) r.lower_bound = std::max(r.lower_bound, -r.mdeg_s.value());
    return r;
}

}  // namespace vcn
