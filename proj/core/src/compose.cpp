#include "vcn/compose.hpp"

#include <algorithm>
#include <sstream>

namespace vcn {

namespace {

ArcKind selector_kind(const TData& td, ArcSelector sel, int n_long_arcs,
                      const LongArcDecomposition& d) {
    if (sel.long_arc < 0 || sel.long_arc >= n_long_arcs)
        throw InvalidSelector("long arc index out of range");
    const LongArc& la = d.long_arcs[static_cast<std::size_t>(sel.long_arc)];
    if (sel.arc < 0 || sel.arc >= static_cast<int>(la.arcs.size()))
        throw InvalidSelector("arc index out of range");
    int crit = td.critical_arc[static_cast<std::size_t>(sel.long_arc)];
    if (sel.arc == crit) throw InvalidSelector("critical arcs cannot be summed over");
    return sel.arc < crit ? ArcKind::PreCritical : ArcKind::PostCritical;
}

// Cut gap of an arc: right after its opening cut token.
std::pair<int, int> cut_gap(const Arc& arc, const DiagramCode& code) {
    int len = static_cast<int>(code.components[static_cast<std::size_t>(arc.component)].size());
    return {arc.component, (arc.begin_token + 1) % len};
}

// Crosswise reconnection of two cuts. Distinct components merge (the second
// cycle, rotated to start at its gap, is inserted at the first gap); a single
// component splits into the two forward pieces between the gaps.
template <class Tok>
void splice(std::vector<std::vector<Tok>>& comps, int c1, int g1, int c2, int g2) {
    using Vec = std::vector<Tok>;
    if (c1 != c2) {
        const Vec& host = comps[static_cast<std::size_t>(c1)];
        const Vec& ins = comps[static_cast<std::size_t>(c2)];
        Vec merged;
        merged.reserve(host.size() + ins.size());
        merged.insert(merged.end(), host.begin(), host.begin() + g1);
        merged.insert(merged.end(), ins.begin() + g2, ins.end());
        merged.insert(merged.end(), ins.begin(), ins.begin() + g2);
        merged.insert(merged.end(), host.begin() + g1, host.end());
        comps[static_cast<std::size_t>(c1)] = std::move(merged);
        comps.erase(comps.begin() + c2);
    } else {
        const Vec comp = comps[static_cast<std::size_t>(c1)];
        auto forward = [&](int from, int to) {
            Vec out;
            for (int p = from; p != to; p = (p + 1) % static_cast<int>(comp.size()))
                out.push_back(comp[static_cast<std::size_t>(p)]);
            return out;
        };
        Vec piece_a = forward(g1, g2);
        Vec piece_b = forward(g2, g1);
        comps[static_cast<std::size_t>(c1)] = std::move(piece_a);
        comps.insert(comps.begin() + c1 + 1, std::move(piece_b));
    }
}

// Which long arc owns the strand point at each gap of each component.
std::vector<std::vector<int>> gap_owners(const DiagramCode& code, const LongArcDecomposition& d) {
    std::vector<std::vector<int>> owner(code.components.size());
    for (std::size_t c = 0; c < code.components.size(); ++c)
        owner[c].assign(code.components[c].size(), -1);
    for (int j = 0; j < d.n; ++j)
        for (const Arc& arc : d.long_arcs[static_cast<std::size_t>(j)].arcs) {
            int len = static_cast<int>(owner[static_cast<std::size_t>(arc.component)].size());
            int p = (arc.begin_token + 1) % len;
            while (true) {
                owner[static_cast<std::size_t>(arc.component)][static_cast<std::size_t>(p)] = j;
                if (p == arc.end_token) break;
                p = (p + 1) % len;
            }
        }
    return owner;
}

}  // namespace

std::vector<ArcSelector> list_selectors(const DiagramCode& code, ArcKind kind) {
    LongArcDecomposition d = long_arcs(code);
    TData td = analyze_special(d);
    if (!td.special) throw NotSpecial("diagram is not special");

    std::vector<ArcSelector> out;
    for (int j = 0; j < d.n; ++j) {
        int crit = td.critical_arc[static_cast<std::size_t>(j)];
        int count = static_cast<int>(d.long_arcs[static_cast<std::size_t>(j)].arcs.size());
        for (int mu = 0; mu < count; ++mu) {
            if (mu == crit) continue;
            if ((mu < crit) == (kind == ArcKind::PreCritical)) out.push_back({j, mu});
        }
    }
    return out;
}

DiagramCode special_sum(const DiagramCode& code, ArcSelector sel1, ArcSelector sel2) {
    LongArcDecomposition d = long_arcs(code);
    TData td = analyze_special(d);
    if (!td.special) throw NotSpecial("diagram is not special");
    if (sel1 == sel2) throw SameArc("the two selectors name the same arc");

    ArcKind k1 = selector_kind(td, sel1, d.n, d);
    ArcKind k2 = selector_kind(td, sel2, d.n, d);
    if (k1 != k2) throw KindMismatch("pre-critical and post-critical arcs mixed");
    if (sel1.long_arc == sel2.long_arc)
        throw InvalidSelector("selected arcs lie on the same long arc");

    const Arc& a1 =
        d.long_arcs[static_cast<std::size_t>(sel1.long_arc)].arcs[static_cast<std::size_t>(sel1.arc)];
    const Arc& a2 =
        d.long_arcs[static_cast<std::size_t>(sel2.long_arc)].arcs[static_cast<std::size_t>(sel2.arc)];
    auto [c1, g1] = cut_gap(a1, code);
    auto [c2, g2] = cut_gap(a2, code);

    DiagramCode out = code;
    splice(out.components, c1, g1, c2, g2);
    out.validate();
    return out;
}

SchemeFile parse_scheme(const std::string& text) {
    SchemeFile sf;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;

    auto parse_selector = [&](const std::string& tok) -> std::pair<std::string, ArcSelector> {
        auto open = tok.find('[');
        auto dot = tok.find('.', open);
        auto close = tok.find(']', dot);
        if (open == std::string::npos || dot == std::string::npos || close == std::string::npos ||
            open == 0 || close + 1 != tok.size())
            throw SyntaxError("bad selector '" + tok + "' (line " + std::to_string(line_no) + ")");
        std::string name = tok.substr(0, open);
        int j = 0, mu = 0;
        try {
            j = std::stoi(tok.substr(open + 1, dot - open - 1));
            mu = std::stoi(tok.substr(dot + 1, close - dot - 1));
        } catch (const std::exception&) {
            throw SyntaxError("bad selector '" + tok + "' (line " + std::to_string(line_no) + ")");
        }
        if (j < 1 || mu < 0)
            throw SyntaxError("bad selector '" + tok + "' (line " + std::to_string(line_no) + ")");
        return {name, ArcSelector{j - 1, mu}};
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        if (word == "node") {
            std::string name, eq;
            if (!(ls >> name >> eq) || eq != "=")
                throw SyntaxError("expected 'node <name> = <file>' (line " + std::to_string(line_no) + ")");
            std::string path;
            std::getline(ls, path);
            path.erase(0, path.find_first_not_of(" \t"));
            auto last = path.find_last_not_of(" \t");
            if (last == std::string::npos)
                throw SyntaxError("missing diagram file (line " + std::to_string(line_no) + ")");
            path.resize(last + 1);
            if (sf.node_paths.count(name))
                throw ValidationError("duplicate node name '" + name + "'");
            sf.scheme.nodes.push_back(name);
            sf.node_paths[name] = path;
        } else if (word == "edge") {
            std::string sa, op, sb;
            if (!(ls >> sa >> op >> sb) || (op != "~" && op != "-"))
                throw SyntaxError("expected 'edge <sel> <~|-> <sel>' (line " + std::to_string(line_no) + ")");
            Scheme::Edge e;
            std::tie(e.a, e.a_sel) = parse_selector(sa);
            std::tie(e.b, e.b_sel) = parse_selector(sb);
            e.kind = op == "~" ? ArcKind::PreCritical : ArcKind::PostCritical;
            for (const std::string& name : {e.a, e.b})
                if (!sf.node_paths.count(name)) throw UnknownBase("undeclared node '" + name + "'");
            sf.scheme.edges.push_back(std::move(e));
        } else {
            throw SyntaxError("unknown directive '" + word + "' (line " + std::to_string(line_no) + ")");
        }
    }
    return sf;
}

DiagramCode build_scheme(const Scheme& scheme, const std::map<std::string, DiagramCode>& bases) {
    struct Node {
        const DiagramCode* code;
        LongArcDecomposition d;
        TData td;
    };
    std::map<std::string, Node> nodes;
    std::map<std::string, int> node_index;
    for (std::size_t m = 0; m < scheme.nodes.size(); ++m) {
        const std::string& name = scheme.nodes[m];
        if (node_index.count(name)) throw ValidationError("duplicate node name '" + name + "'");
        auto it = bases.find(name);
        if (it == bases.end()) throw UnknownBase("no base diagram for node '" + name + "'");
        Node nd;
        nd.code = &it->second;
        nd.d = long_arcs(it->second);
        nd.td = analyze_special(nd.d);
        if (!nd.td.special) throw NotSpecial("base diagram '" + name + "' is not special");
        nodes.emplace(name, std::move(nd));
        node_index[name] = static_cast<int>(m);
    }

    // Split union with provenance tags so node-local arcs stay addressable
    // after earlier splices moved their tokens around.
    struct Tagged {
        Passage p;
        int node, comp, pos;
    };
    std::vector<std::vector<Tagged>> comps;
    {
        int c_off = 0, v_off = 0;
        for (std::size_t m = 0; m < scheme.nodes.size(); ++m) {
            const DiagramCode& code = *nodes.at(scheme.nodes[m]).code;
            int c_max = 0, v_max = 0;
            for (std::size_t c = 0; c < code.components.size(); ++c) {
                std::vector<Tagged> tagged;
                for (std::size_t pos = 0; pos < code.components[c].size(); ++pos) {
                    Passage p = code.components[c][pos];
                    if (p.classical()) {
                        c_max = std::max(c_max, p.id);
                        p.id += c_off;
                    } else {
                        v_max = std::max(v_max, p.id);
                        p.id += v_off;
                    }
                    tagged.push_back({p, static_cast<int>(m), static_cast<int>(c),
                                      static_cast<int>(pos)});
                }
                comps.push_back(std::move(tagged));
            }
            c_off += c_max;
            v_off += v_max;
        }
    }

    auto strip = [&] {
        DiagramCode code;
        for (const auto& comp : comps) {
            std::vector<Passage> plain;
            plain.reserve(comp.size());
            for (const Tagged& t : comp) plain.push_back(t.p);
            code.components.push_back(std::move(plain));
        }
        return code;
    };

    for (const Scheme::Edge& e : scheme.edges) {
        struct Endpoint {
            int comp, gap;
        };
        Endpoint eps[2];
        const std::string* names[2] = {&e.a, &e.b};
        const ArcSelector sels[2] = {e.a_sel, e.b_sel};
        for (int side = 0; side < 2; ++side) {
            const Node& nd = nodes.at(*names[side]);
            ArcKind kind = selector_kind(nd.td, sels[side], nd.d.n, nd.d);
            if (kind != e.kind)
                throw KindMismatch("edge kind does not match arc kind at '" + *names[side] + "'");
            const Arc& arc = nd.d.long_arcs[static_cast<std::size_t>(sels[side].long_arc)]
                                 .arcs[static_cast<std::size_t>(sels[side].arc)];
            int want_node = node_index.at(*names[side]);
            bool found = false;
            for (std::size_t c = 0; c < comps.size() && !found; ++c)
                for (std::size_t pos = 0; pos < comps[c].size() && !found; ++pos) {
                    const Tagged& t = comps[c][pos];
                    if (t.node == want_node && t.comp == arc.component &&
                        t.pos == arc.begin_token) {
                        eps[side] = {static_cast<int>(c),
                                     static_cast<int>((pos + 1) % comps[c].size())};
                        found = true;
                    }
                }
            if (!found) throw InternalInconsistency("lost track of a spliced arc");
        }

        // The two cuts must hit different long arcs of the current diagram,
        // otherwise the strand between them would close into a cyclic long arc.
        DiagramCode current = strip();
        LongArcDecomposition cd = long_arcs(current);
        auto owner = gap_owners(current, cd);
        int la0 = owner[static_cast<std::size_t>(eps[0].comp)][static_cast<std::size_t>(eps[0].gap)];
        int la1 = owner[static_cast<std::size_t>(eps[1].comp)][static_cast<std::size_t>(eps[1].gap)];
        if (la0 == la1)
            throw InvalidSelector("edge endpoints lie on the same long arc of the composed diagram");

        splice(comps, eps[0].comp, eps[0].gap, eps[1].comp, eps[1].gap);
    }

    DiagramCode out = strip();
    out.validate();
    return out;
}

EpsBetaValue fold_eps_beta(const Scheme& scheme,
                           const std::map<std::string, EpsBetaValue>& values) {
    EpsBetaValue acc{1, 0};
    for (const std::string& name : scheme.nodes) {
        auto it = values.find(name);
        if (it == values.end()) throw UnknownBase("no (epsilon, beta) value for node '" + name + "'");
        acc.epsilon *= it->second.epsilon;
        acc.beta += it->second.beta;
    }
    for (const Scheme::Edge& e : scheme.edges)
        if (e.kind == ArcKind::PreCritical) acc.epsilon = -acc.epsilon;
    return acc;
}

}  // namespace vcn
