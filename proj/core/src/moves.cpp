#include "vcn/moves.hpp"

#include <algorithm>
#include <random>

namespace vcn {

namespace {

int max_any_id(const DiagramCode& code) {
    int m = 0;
    for (const auto& comp : code.components)
        for (const auto& p : comp) m = std::max(m, p.id);
    return m;
}

const Passage& tok(const DiagramCode& code, int c, int p) {
    return code.components[static_cast<std::size_t>(c)][static_cast<std::size_t>(p)];
}

int comp_len(const DiagramCode& code, int c) {
    return static_cast<int>(code.components[static_cast<std::size_t>(c)].size());
}

bool r1_pair(const DiagramCode& code, int c, int p) {
    int len = comp_len(code, c);
    const Passage& a = tok(code, c, p);
    const Passage& b = tok(code, c, (p + 1) % len);
    return a.classical() && b.classical() && a.id == b.id && a.kind != b.kind;
}

bool v1_pair(const DiagramCode& code, int c, int p) {
    int len = comp_len(code, c);
    const Passage& a = tok(code, c, p);
    const Passage& b = tok(code, c, (p + 1) % len);
    return a.kind == PassageKind::VirtualPass && b.kind == PassageKind::VirtualPass &&
           a.id == b.id;
}

// Adjacent virtual pair with distinct ids and cancelling senses.
bool v2_half(const DiagramCode& code, int c, int p) {
    int len = comp_len(code, c);
    const Passage& a = tok(code, c, p);
    const Passage& b = tok(code, c, (p + 1) % len);
    return a.kind == PassageKind::VirtualPass && b.kind == PassageKind::VirtualPass &&
           a.id != b.id && a.dir == -b.dir;
}

}  // namespace

bool is_removal(MoveKind kind) {
    return kind == MoveKind::R1Remove || kind == MoveKind::V1Remove ||
           kind == MoveKind::V2Remove;
}

std::vector<MoveSite> find_sites(const DiagramCode& code, MoveKind kind) {
    std::vector<MoveSite> sites;
    const int ncomp = static_cast<int>(code.components.size());

    switch (kind) {
        case MoveKind::R1Remove:
        case MoveKind::V1Remove:
            for (int c = 0; c < ncomp; ++c) {
                int len = comp_len(code, c);
                if (len <= 2) continue;  // removal would empty the component
                for (int p = 0; p < len; ++p) {
                    bool match = kind == MoveKind::R1Remove ? r1_pair(code, c, p)
                                                            : v1_pair(code, c, p);
                    if (match) sites.push_back({kind, {{c, p}}});
                }
            }
            break;

        case MoveKind::V2Remove:
            for (int c1 = 0; c1 < ncomp; ++c1) {
                int len1 = comp_len(code, c1);
                for (int p1 = 0; p1 < len1; ++p1) {
                    if (!v2_half(code, c1, p1)) continue;
                    const Passage& m = tok(code, c1, p1);
                    const Passage& n = tok(code, c1, (p1 + 1) % len1);
                    if (m.id > n.id) continue;  // count each quadruple once
                    for (int c2 = 0; c2 < ncomp; ++c2) {
                        int len2 = comp_len(code, c2);
                        for (int p2 = 0; p2 < len2; ++p2) {
                            if (!v2_half(code, c2, p2)) continue;
                            const Passage& m2 = tok(code, c2, p2);
                            const Passage& n2 = tok(code, c2, (p2 + 1) % len2);
                            if (m2.id != n.id || n2.id != m.id) continue;
                            if (m2.dir != m.dir) continue;
                            if (c1 == c2) {
                                // pairs must not overlap
                                int q1 = (p1 + 1) % len1, q2 = (p2 + 1) % len2;
                                if (p1 == p2 || p1 == q2 || q1 == p2) continue;
                                if (len1 <= 4) continue;  // removal would empty
                            } else {
                                if (len1 <= 2 || len2 <= 2) continue;
                            }
                            sites.push_back({MoveKind::V2Remove, {{c1, p1}, {c2, p2}}});
                        }
                    }
                }
            }
            break;

        case MoveKind::R1Add:
            for (int c = 0; c < ncomp; ++c)
                for (int g = 0; g < comp_len(code, c); ++g)
                    for (int sign : {+1, -1})
                        for (bool uf : {false, true}) {
                            MoveSite s{MoveKind::R1Add, {{c, g}}};
                            s.sign = sign;
                            s.under_first = uf;
                            sites.push_back(std::move(s));
                        }
            break;

        case MoveKind::V1Add:
            for (int c = 0; c < ncomp; ++c)
                for (int g = 0; g < comp_len(code, c); ++g)
                    for (int sense : {+1, -1}) {
                        MoveSite s{MoveKind::V1Add, {{c, g}}};
                        s.lead_sense = sense;
                        sites.push_back(std::move(s));
                    }
            break;

        case MoveKind::V2Add:
            for (int c1 = 0; c1 < ncomp; ++c1)
                for (int g1 = 0; g1 < comp_len(code, c1); ++g1)
                    for (int c2 = 0; c2 < ncomp; ++c2)
                        for (int g2 = 0; g2 < comp_len(code, c2); ++g2)
                            for (int sense : {+1, -1}) {
                                MoveSite s{MoveKind::V2Add, {{c1, g1}, {c2, g2}}};
                                s.lead_sense = sense;
                                sites.push_back(std::move(s));
                            }
            break;
    }
    return sites;
}

DiagramCode apply(const DiagramCode& code, const MoveSite& site) {
    auto check_pos = [&](std::size_t idx, bool gap) {
        if (idx >= site.at.size()) throw InvalidSite("missing site position");
        auto [c, p] = site.at[idx];
        if (c < 0 || c >= static_cast<int>(code.components.size()))
            throw InvalidSite("component index out of range");
        int len = comp_len(code, c);
        if (p < 0 || p >= len) throw InvalidSite(gap ? "gap out of range" : "position out of range");
        return std::pair{c, p};
    };

    DiagramCode out = code;
    switch (site.kind) {
        case MoveKind::R1Remove:
        case MoveKind::V1Remove: {
            auto [c, p] = check_pos(0, false);
            bool match = site.kind == MoveKind::R1Remove ? r1_pair(code, c, p)
                                                         : v1_pair(code, c, p);
            if (!match) throw InvalidSite("no removable pair at the site");
            int len = comp_len(code, c);
            if (len <= 2) throw InvalidSite("removal would empty the component");
            auto& comp = out.components[static_cast<std::size_t>(c)];
            int q = (p + 1) % len;
            comp.erase(comp.begin() + std::max(p, q));
            comp.erase(comp.begin() + std::min(p, q));
            break;
        }

        case MoveKind::V2Remove: {
            auto [c1, p1] = check_pos(0, false);
            auto [c2, p2] = check_pos(1, false);
            if (!v2_half(code, c1, p1) || !v2_half(code, c2, p2))
                throw InvalidSite("no removable pair at the site");
            int len1 = comp_len(code, c1), len2 = comp_len(code, c2);
            const Passage& m = tok(code, c1, p1);
            const Passage& n = tok(code, c1, (p1 + 1) % len1);
            const Passage& m2 = tok(code, c2, p2);
            const Passage& n2 = tok(code, c2, (p2 + 1) % len2);
            if (m2.id != n.id || n2.id != m.id || m2.dir != m.dir)
                throw InvalidSite("the two pairs do not cancel");
            std::vector<std::pair<int, int>> kill = {
                {c1, p1}, {c1, (p1 + 1) % len1}, {c2, p2}, {c2, (p2 + 1) % len2}};
            if (c1 == c2) {
                if (len1 <= 4) throw InvalidSite("removal would empty the component");
            } else if (len1 <= 2 || len2 <= 2) {
                throw InvalidSite("removal would empty a component");
            }
            std::sort(kill.begin(), kill.end(), [](auto a, auto b) {
                return a.first != b.first ? a.first < b.first : a.second > b.second;
            });
            for (auto [c, p] : kill) {
                auto& comp = out.components[static_cast<std::size_t>(c)];
                comp.erase(comp.begin() + p);
            }
            break;
        }

        case MoveKind::R1Add: {
            auto [c, g] = check_pos(0, true);
            if (site.sign != +1 && site.sign != -1) throw InvalidSite("bad sign");
            int id = max_any_id(code) + 1;
            auto& comp = out.components[static_cast<std::size_t>(c)];
            Passage first = site.under_first ? Passage::under(id, site.sign)
                                             : Passage::over(id, site.sign);
            Passage second = site.under_first ? Passage::over(id, site.sign)
                                              : Passage::under(id, site.sign);
            comp.insert(comp.begin() + g, {first, second});
            break;
        }

        case MoveKind::V1Add: {
            auto [c, g] = check_pos(0, true);
            if (site.lead_sense != +1 && site.lead_sense != -1) throw InvalidSite("bad sense");
            int id = max_any_id(code) + 1;
            auto& comp = out.components[static_cast<std::size_t>(c)];
            comp.insert(comp.begin() + g,
                        {Passage::virt(id, site.lead_sense), Passage::virt(id, -site.lead_sense)});
            break;
        }

        case MoveKind::V2Add: {
            auto [c1, g1] = check_pos(0, true);
            auto [c2, g2] = check_pos(1, true);
            if (site.lead_sense != +1 && site.lead_sense != -1) throw InvalidSite("bad sense");
            int m = max_any_id(code) + 1, n = m + 1;
            int sense = site.lead_sense;
            auto insert_pair = [&](int c, int g, Passage a, Passage b) {
                auto& comp = out.components[static_cast<std::size_t>(c)];
                comp.insert(comp.begin() + g, {a, b});
            };
            // Insert at the later gap first so the earlier index stays valid.
            if (c1 == c2 && g1 <= g2) {
                insert_pair(c2, g2, Passage::virt(n, sense), Passage::virt(m, -sense));
                insert_pair(c1, g1, Passage::virt(m, sense), Passage::virt(n, -sense));
            } else {
                insert_pair(c1, g1, Passage::virt(m, sense), Passage::virt(n, -sense));
                insert_pair(c2, g2, Passage::virt(n, sense), Passage::virt(m, -sense));
            }
            break;
        }
    }
    out.validate();
    return out;
}

WalkResult random_walk(const DiagramCode& code, int steps, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto pick = [&rng](int bound) { return static_cast<int>(rng() % static_cast<std::uint64_t>(bound)); };

    WalkResult w{code, {}};
    for (int step = 0; step < steps; ++step) {
        for (int attempt = 0;; ++attempt) {
            // additions always apply, so fall back to one after enough misses
            MoveKind kind = attempt < 32 ? static_cast<MoveKind>(pick(6)) : MoveKind::V1Add;
            MoveSite site;
            if (is_removal(kind)) {
                auto sites = find_sites(w.code, kind);
                if (sites.empty()) continue;
                site = sites[static_cast<std::size_t>(pick(static_cast<int>(sites.size())))];
            } else {
                site.kind = kind;
                int c1 = pick(static_cast<int>(w.code.components.size()));
                int g1 = pick(comp_len(w.code, c1));
                site.at = {{c1, g1}};
                if (kind == MoveKind::R1Add) {
                    site.sign = pick(2) == 0 ? +1 : -1;
                    site.under_first = pick(2) == 0;
                } else {
                    site.lead_sense = pick(2) == 0 ? +1 : -1;
                }
                if (kind == MoveKind::V2Add) {
                    int c2 = pick(static_cast<int>(w.code.components.size()));
                    int g2 = pick(comp_len(w.code, c2));
                    site.at.push_back({c2, g2});
                }
            }
            w.code = apply(w.code, site);
            w.log.push_back(std::move(site));
            break;
        }
    }
    return w;
}

}  // namespace vcn
