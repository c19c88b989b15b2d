#pragma once

#include <map>
#include <string>
#include <vector>

#include "vcn/minimality.hpp"

namespace vcn {

/// Which side of its critical arc a non-critical arc sits on. Pre-critical
/// arcs precede the critical arc on their long arc ("wave" edges in schemes),
/// post-critical arcs follow it ("straight" edges).
enum class ArcKind { PreCritical, PostCritical };

/// A non-critical arc: arc index `arc` on long arc `long_arc`, both 0-based.
struct ArcSelector {
    int long_arc = 0;
    int arc = 0;

    friend bool operator==(const ArcSelector&, const ArcSelector&) = default;
};

/// All non-critical arcs of the requested kind, long arc major order.
/// Throws NotSpecial.
std::vector<ArcSelector> list_selectors(const DiagramCode& code, ArcKind kind);

/// Special connected sum: cut inside the two selected arcs (at the canonical
/// gap right after each arc's opening cut token) and reconnect crosswise.
/// Components merge when the arcs lie on different components and split when
/// on the same one; the result is special and keeps every critical arc
/// critical. Selectors must be distinct non-critical arcs of the same kind on
/// different long arcs. Throws NotSpecial, KindMismatch, SameArc,
/// InvalidSelector.
DiagramCode special_sum(const DiagramCode& code, ArcSelector sel1, ArcSelector sel2);

/// Composition graph over named base diagrams. Wave edges join pre-critical
/// arcs, straight edges post-critical ones; cycles are allowed. Selectors are
/// node-local, resolved against each base's own long-arc decomposition.
struct Scheme {
    struct Edge {
        std::string a;
        ArcSelector a_sel;
        std::string b;
        ArcSelector b_sel;
        ArcKind kind = ArcKind::PreCritical;
    };

    std::vector<std::string> nodes;
    std::vector<Edge> edges;
};

/// Parsed scheme file: the graph plus the diagram file bound to each node.
struct SchemeFile {
    Scheme scheme;
    std::map<std::string, std::string> node_paths;
};

/// Parse the scheme format: `node <name> = <diagram-file>` lines followed by
/// `edge <name>[j.mu] <~|-> <name>[j.mu]` lines (`~` wave, `-` straight;
/// j is the 1-based long arc, mu the 0-based arc). `#` starts a comment.
SchemeFile parse_scheme(const std::string& text);

/// Fold special_sum over the edges in listed order, starting from the split
/// union of all bases. Node-local selectors stay resolvable across edges
/// because splices preserve every uncut arc. Throws UnknownBase, NotSpecial,
/// KindMismatch, InvalidSelector.
DiagramCode build_scheme(const Scheme& scheme, const std::map<std::string, DiagramCode>& bases);

struct EpsBetaValue {
    int epsilon = 1;
    int beta = 0;
};

/// beta adds over nodes; epsilon multiplies and flips sign once per wave edge.
EpsBetaValue fold_eps_beta(const Scheme& scheme,
                           const std::map<std::string, EpsBetaValue>& values);

}  // namespace vcn
