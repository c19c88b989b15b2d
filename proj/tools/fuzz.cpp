#include "fuzz.hpp"

#include <algorithm>
#include <random>

#include "vcn/minimality.hpp"
#include "vcn/moves.hpp"

namespace vcn::cli {

int run_fuzz(const FuzzOptions& opts, std::ostream& out) {
    std::mt19937_64 master(opts.seed);
    auto pick = [&master](int bound) {
        return static_cast<int>(master() % static_cast<std::uint64_t>(bound));
    };

    int failures = 0;
    auto fail = [&](const char* check, const DiagramCode& code) {
        ++failures;
        out << "FAIL " << check << " on:\n" << serialize(code);
    };

    for (int iter = 0; iter < opts.count; ++iter) {
        int n = pick(opts.n_max + 1);
        int k = pick(opts.k_max + 1);
        if (n == 0 && k == 0) n = 1;
        int components = (pick(4) == 0 && 2 * (n + k) >= 2) ? 2 : 1;
        components = std::min(components, 2 * (n + k));
        std::uint64_t diagram_seed = master();
        std::uint64_t walk_seed = master();

        DiagramCode code = random_diagram(n, k, components, diagram_seed);
        ZetaReport zr = zeta(code);

        if (zr.deg_s > ExtInt::of(zr.k) || zr.mdeg_s < ExtInt::of(-zr.k))
            fail("degree-bound", code);

        LongArcDecomposition d = long_arcs(code);
        TData td = analyze_special(d);
        if (td.special) {
            TPoly dt = det(td.t_matrix);
            if (coeff_s(zr.zeta, d.k) != dt) fail("top-coefficient", code);
            if ((zr.deg_s == ExtInt::of(d.k)) == dt.is_zero()) fail("top-degree", code);
        } else if (!(zr.deg_s < ExtInt::of(d.k))) {
            fail("top-degree", code);
        }

        if (zr.n <= 6 && det(alexander_matrix(d), DetMethod::Cofactor) != zr.zeta)
            fail("det-oracle", code);

        WalkResult walk = random_walk(code, opts.walk, walk_seed);
        ZetaReport zw = zeta(walk.code);
        if (!equal_up_to_t_power(zr.zeta, zw.zeta) || zw.deg_s != zr.deg_s ||
            zw.mdeg_s != zr.mdeg_s || zw.lower_bound != zr.lower_bound)
            fail("move-walk", code);
    }

    out << "fuzz: " << opts.count << " diagrams, " << failures << " failures\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace vcn::cli
