#include "vcn/diagram.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace vcn {

namespace {

// Distinct ids in first-appearance order, classical or virtual.
std::vector<int> ids_in_order(const DiagramCode& code, bool classical) {
    std::vector<int> out;
    for (const auto& comp : code.components)
        for (const auto& p : comp) {
            if (p.classical() != classical) continue;
            if (std::find(out.begin(), out.end(), p.id) == out.end()) out.push_back(p.id);
        }
    return out;
}

int max_any_id(const DiagramCode& code) {
    int m = 0;
    for (const auto& comp : code.components)
        for (const auto& p : comp) m = std::max(m, p.id);
    return m;
}

std::map<int, int> index_of(const std::vector<int>& ids) {
    std::map<int, int> m;
    for (std::size_t i = 0; i < ids.size(); ++i) m[ids[i]] = static_cast<int>(i);
    return m;
}

}  // namespace

int DiagramCode::classical_count() const {
    return static_cast<int>(classical_ids().size());
}

int DiagramCode::virtual_count() const {
    return static_cast<int>(virtual_ids().size());
}

std::vector<int> DiagramCode::classical_ids() const {
    return ids_in_order(*this, true);
}

std::vector<int> DiagramCode::virtual_ids() const {
    return ids_in_order(*this, false);
}

void DiagramCode::validate() const {
    if (components.empty()) throw ValidationError("code has no components");

    struct ClassicalUse {
        int overs = 0, unders = 0, over_sign = 0, under_sign = 0;
    };
    std::map<int, ClassicalUse> classical;
    std::map<int, std::pair<int, int>> virt;  // id -> (increasing count, decreasing count)

    for (const auto& comp : components)
        for (const auto& p : comp) {
            if (p.id <= 0) throw ValidationError("non-positive crossing id");
            if (p.dir != +1 && p.dir != -1) throw ValidationError("sign/sense must be +1 or -1");
            switch (p.kind) {
                case PassageKind::Over: {
                    auto& u = classical[p.id];
                    ++u.overs;
                    u.over_sign = p.dir;
                    break;
                }
                case PassageKind::Under: {
                    auto& u = classical[p.id];
                    ++u.unders;
                    u.under_sign = p.dir;
                    break;
                }
                case PassageKind::VirtualPass: {
                    auto& v = virt[p.id];
                    (p.dir > 0 ? v.first : v.second) += 1;
                    break;
                }
            }
        }

    for (const auto& [id, u] : classical) {
        if (u.overs + u.unders != 2)
            throw ValidationError("classical id " + std::to_string(id) + " appears " +
                                  std::to_string(u.overs + u.unders) + " times");
        if (u.overs != 1)
            throw ValidationError("classical id " + std::to_string(id) +
                                  (u.overs == 0 ? " lacks an Over passage" : " lacks an Under passage"));
        if (u.over_sign != u.under_sign)
            throw ValidationError("classical id " + std::to_string(id) + " has mismatched signs");
    }
    for (const auto& [id, v] : virt) {
        if (v.first + v.second != 2)
            throw ValidationError("virtual id " + std::to_string(id) + " appears " +
                                  std::to_string(v.first + v.second) + " times");
        if (v.first != 1)
            throw ValidationError("virtual id " + std::to_string(id) +
                                  (v.first == 0 ? " lacks an Increasing passage"
                                                : " lacks a Decreasing passage"));
    }
}

// --------------------------------------------------------------------- parse

DiagramCode parse_code(const std::string& text) {
    DiagramCode code;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::vector<Passage> comp;
        std::string tok;
        while (ls >> tok) {
            if (tok.size() < 3)
                throw SyntaxError("bad token '" + tok + "' (line " + std::to_string(line_no) + ")");
            char kind_ch = tok.front();
            char dir_ch = tok.back();
            if ((kind_ch != 'O' && kind_ch != 'U' && kind_ch != 'V') ||
                (dir_ch != '+' && dir_ch != '-'))
                throw SyntaxError("bad token '" + tok + "' (line " + std::to_string(line_no) + ")");
            int id = 0;
            for (std::size_t i = 1; i + 1 < tok.size(); ++i) {
                if (tok[i] < '0' || tok[i] > '9')
                    throw SyntaxError("bad token '" + tok + "' (line " + std::to_string(line_no) + ")");
                id = id * 10 + (tok[i] - '0');
            }
            if (id <= 0)
                throw SyntaxError("bad token '" + tok + "' (line " + std::to_string(line_no) + ")");
            int dir = dir_ch == '+' ? +1 : -1;
            PassageKind kind = kind_ch == 'O'   ? PassageKind::Over
                               : kind_ch == 'U' ? PassageKind::Under
                                                : PassageKind::VirtualPass;
            comp.push_back({kind, id, dir});
        }
        if (!comp.empty()) code.components.push_back(std::move(comp));
    }

    code.validate();

    // Renumber both id spaces into 1..n / 1..k by first appearance; user ids
    // stay in diagnostics above, everything downstream sees canonical ids.
    auto cmap = index_of(code.classical_ids());
    auto vmap = index_of(code.virtual_ids());
    for (auto& comp : code.components)
        for (auto& p : comp)
            p.id = (p.classical() ? cmap[p.id] : vmap[p.id]) + 1;
    return code;
}

std::string serialize(const DiagramCode& code) {
    std::ostringstream os;
    for (const auto& comp : code.components) {
        bool first = true;
        for (const auto& p : comp) {
            if (!first) os << ' ';
            first = false;
            char k = p.kind == PassageKind::Over    ? 'O'
                     : p.kind == PassageKind::Under ? 'U'
                                                    : 'V';
            os << k << p.id << (p.dir > 0 ? '+' : '-');
        }
        os << '\n';
    }
    return os.str();
}

// ---------------------------------------------------------------- properness

std::pair<bool, std::vector<int>> is_proper(const DiagramCode& code) {
    std::vector<int> offending;
    for (std::size_t c = 0; c < code.components.size(); ++c) {
        bool has_under = false;
        for (const auto& p : code.components[c])
            has_under = has_under || p.kind == PassageKind::Under;
        if (!has_under) offending.push_back(static_cast<int>(c));
    }
    return {offending.empty(), offending};
}

DiagramCode properize(const DiagramCode& code) {
    auto [ok, offending] = is_proper(code);
    if (ok) return code;
    DiagramCode out = code;
    int next_id = max_any_id(code) + 1;
    for (int c : offending) {
        out.components[static_cast<std::size_t>(c)].push_back(Passage::over(next_id, +1));
        out.components[static_cast<std::size_t>(c)].push_back(Passage::under(next_id, +1));
        ++next_id;
    }
    return out;
}

DiagramCode mirror_virtual(const DiagramCode& code) {
    DiagramCode out = code;
    for (auto& comp : out.components)
        for (auto& p : comp)
            if (p.kind == PassageKind::VirtualPass) p.dir = -p.dir;
    return out;
}

DiagramCode disjoint_union(std::span<const DiagramCode> pieces) {
    DiagramCode out;
    int c_offset = 0, v_offset = 0;
    for (const auto& piece : pieces) {
        int c_max = 0, v_max = 0;
        for (const auto& comp : piece.components) {
            std::vector<Passage> shifted;
            shifted.reserve(comp.size());
            for (Passage p : comp) {
                if (p.classical()) {
                    c_max = std::max(c_max, p.id);
                    p.id += c_offset;
                } else {
                    v_max = std::max(v_max, p.id);
                    p.id += v_offset;
                }
                shifted.push_back(p);
            }
            out.components.push_back(std::move(shifted));
        }
        c_offset += c_max;
        v_offset += v_max;
    }
    return out;
}

// -------------------------------------------------------------------- random

DiagramCode random_diagram(int n, int k, int components, std::uint64_t seed) {
    if (n < 0 || k < 0 || (n == 0 && k == 0)) throw InfeasibleShape("need n >= 1 or k >= 1");
    int total = 2 * (n + k);
    if (components < 1 || components > total)
        throw InfeasibleShape("components exceed total passages");

    std::mt19937_64 rng(seed);
    auto pick = [&rng](std::size_t bound) { return static_cast<std::size_t>(rng() % bound); };

    std::vector<Passage> tokens;
    tokens.reserve(static_cast<std::size_t>(total));
    for (int i = 1; i <= n; ++i) {
        int sign = rng() % 2 == 0 ? +1 : -1;
        tokens.push_back(Passage::over(i, sign));
        tokens.push_back(Passage::under(i, sign));
    }
    for (int i = 1; i <= k; ++i) {
        tokens.push_back(Passage::virt(i, +1));
        tokens.push_back(Passage::virt(i, -1));
    }
    // Fisher-Yates by hand so the sequence is stable across platforms.
    for (std::size_t i = tokens.size(); i > 1; --i)
        std::swap(tokens[i - 1], tokens[pick(i)]);

    // Cut into the requested number of nonempty cyclic sequences.
    std::vector<int> sizes(static_cast<std::size_t>(components), 1);
    for (int rest = total - components; rest > 0; --rest)
        sizes[pick(sizes.size())] += 1;

    DiagramCode code;
    std::size_t pos = 0;
    for (int sz : sizes) {
        code.components.emplace_back(tokens.begin() + static_cast<std::ptrdiff_t>(pos),
                                     tokens.begin() + static_cast<std::ptrdiff_t>(pos + sz));
        pos += static_cast<std::size_t>(sz);
    }

    // Canonical ids, then restore properness.
    auto cmap = index_of(code.classical_ids());
    auto vmap = index_of(code.virtual_ids());
    for (auto& comp : code.components)
        for (auto& p : comp)
            p.id = (p.classical() ? cmap[p.id] : vmap[p.id]) + 1;
    code.validate();
    return properize(code);
}

// ----------------------------------------------------------------- long arcs

int LongArc::max_degree() const {
    int m = arcs.front().degree;
    for (const auto& a : arcs) m = std::max(m, a.degree);
    return m;
}

int LongArc::min_degree() const {
    int m = arcs.front().degree;
    for (const auto& a : arcs) m = std::min(m, a.degree);
    return m;
}

LongArcDecomposition long_arcs(const DiagramCode& code) {
    code.validate();
    auto [proper, offending] = is_proper(code);
    if (!proper)
        throw NotProper("component " + std::to_string(offending.front()) +
                        " has no underpass (cyclic long arc)");

    LongArcDecomposition d;
    d.crossing_id = code.classical_ids();
    d.n = static_cast<int>(d.crossing_id.size());
    d.k = code.virtual_count();
    auto cidx = index_of(d.crossing_id);

    d.sign.assign(static_cast<std::size_t>(d.n), 0);
    for (const auto& comp : code.components)
        for (const auto& p : comp)
            if (p.classical()) d.sign[static_cast<std::size_t>(cidx[p.id])] = p.dir;

    d.long_arcs.assign(static_cast<std::size_t>(d.n), {});
    for (std::size_t c = 0; c < code.components.size(); ++c) {
        const auto& comp = code.components[c];
        const int len = static_cast<int>(comp.size());
        for (int u = 0; u < len; ++u) {
            if (comp[static_cast<std::size_t>(u)].kind != PassageKind::Under) continue;
            int j = cidx[comp[static_cast<std::size_t>(u)].id];
            LongArc la;
            la.emanates_from = j;

            Arc arc;
            arc.component = static_cast<int>(c);
            arc.begin_token = u;
            arc.degree = 0;
            for (int step = 1; step <= len; ++step) {
                int pos = (u + step) % len;
                const Passage& p = comp[static_cast<std::size_t>(pos)];
                if (p.kind == PassageKind::Over) {
                    arc.over_crossings.push_back(cidx[p.id]);
                    continue;
                }
                arc.end_token = pos;
                if (p.kind == PassageKind::VirtualPass) {
                    int next_degree = arc.degree + p.dir;
                    (p.dir > 0 ? la.p : la.q) += 1;
                    la.arcs.push_back(std::move(arc));
                    arc = Arc{};
                    arc.component = static_cast<int>(c);
                    arc.begin_token = pos;
                    arc.degree = next_degree;
                } else {  // Under: the long arc ends here
                    la.ends_at = cidx[p.id];
                    la.arcs.push_back(std::move(arc));
                    break;
                }
            }
            d.long_arcs[static_cast<std::size_t>(j)] = std::move(la);
        }
    }
    return d;
}

}  // namespace vcn
