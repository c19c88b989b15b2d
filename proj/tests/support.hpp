#pragma once

// Shared helpers for the compose-law tests: random search for M-diagrams and
// crossing-id-keyed T matrices (stable under the renumbering a splice causes).

#include <map>
#include <random>
#include <vector>

#include "vcn/compose.hpp"

namespace support {

struct MDiagram {
    vcn::DiagramCode code;
    vcn::TPoly det_t;
    vcn::EpsBeta eb;
    bool has_pre = false;
    bool has_post = false;
};

inline bool analyze_m_diagram(const vcn::DiagramCode& code, MDiagram& out) {
    using namespace vcn;
    LongArcDecomposition d = long_arcs(code);
    TData td = analyze_special(d);
    if (!td.special || !td.cyclic_crossings.empty()) return false;
    if (permanent(td.m_matrix) != 1) return false;
    TPoly dt = det(td.t_matrix);
    if (dt.is_zero()) return false;
    out.code = code;
    out.det_t = dt;
    out.eb = epsilon_beta(td, d.sign);
    out.has_pre = out.has_post = false;
    for (int j = 0; j < d.n; ++j) {
        int crit = td.critical_arc[static_cast<std::size_t>(j)];
        if (crit > 0) out.has_pre = true;
        if (crit + 1 < static_cast<int>(d.long_arcs[static_cast<std::size_t>(j)].arcs.size()))
            out.has_post = true;
    }
    return true;
}

// Random search over small diagrams. Throws if the pool stays empty.
inline std::vector<MDiagram> find_m_diagrams(int want, std::mt19937_64& rng,
                                             int max_attempts = 100000) {
    std::vector<MDiagram> pool;
    for (int attempt = 0; attempt < max_attempts && static_cast<int>(pool.size()) < want;
         ++attempt) {
        int n = 1 + static_cast<int>(rng() % 4);
        int k = 1 + static_cast<int>(rng() % 2);
        vcn::DiagramCode code = vcn::random_diagram(n, k, 1, rng());
        MDiagram m;
        if (analyze_m_diagram(code, m) && (m.has_pre || m.has_post)) pool.push_back(std::move(m));
    }
    if (pool.empty()) throw std::runtime_error("no M-diagrams found");
    return pool;
}

// T matrix keyed by crossing id, immune to index renumbering.
inline std::map<std::pair<int, int>, vcn::TPoly> t_by_id(const vcn::DiagramCode& code) {
    using namespace vcn;
    LongArcDecomposition d = long_arcs(code);
    TData td = analyze_special(d);
    std::map<std::pair<int, int>, TPoly> out;
    for (int i = 0; i < d.n; ++i)
        for (int j = 0; j < d.n; ++j)
            out[{d.crossing_id[static_cast<std::size_t>(i)],
                 d.crossing_id[static_cast<std::size_t>(j)]}] = td.t_matrix.at(i, j);
    return out;
}

}  // namespace support
