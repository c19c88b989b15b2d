#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vcn/errors.hpp"

namespace vcn {

enum class PassageKind : std::uint8_t { Over, Under, VirtualPass };

/// One passage of a strand through a crossing. Classical passages (Over,
/// Under) carry the crossing sign in `dir`; virtual passages carry the sense
/// (+1 increasing, -1 decreasing).
struct Passage {
    PassageKind kind = PassageKind::Over;
    int id = 0;
    int dir = +1;

    static Passage over(int id, int sign) { return {PassageKind::Over, id, sign}; }
    static Passage under(int id, int sign) { return {PassageKind::Under, id, sign}; }
    static Passage virt(int id, int sense) { return {PassageKind::VirtualPass, id, sense}; }

    bool classical() const { return kind != PassageKind::VirtualPass; }

    friend bool operator==(const Passage&, const Passage&) = default;
};

/// A virtual link diagram as cyclic passage sequences, one per component.
/// Every classical id appears exactly twice (once Over, once Under, equal
/// signs); every virtual id appears twice with opposite senses. Ids are
/// arbitrary distinct positive integers per kind; parse_code renumbers them
/// into first-appearance order.
struct DiagramCode {
    std::vector<std::vector<Passage>> components;

    int classical_count() const;
    int virtual_count() const;

    /// Distinct classical ids in first-appearance order; the position in this
    /// list is the crossing index used by matrices and long arcs.
    std::vector<int> classical_ids() const;
    std::vector<int> virtual_ids() const;

    /// Throws ValidationError on any violated invariant.
    void validate() const;

    friend bool operator==(const DiagramCode&, const DiagramCode&) = default;
};

/// Parse the line-oriented token format (one component per line, `#` comments,
/// tokens O<id><sign> U<id><sign> V<id><sense>). Validates and renumbers ids
/// into first-appearance order. Throws SyntaxError / ValidationError.
DiagramCode parse_code(const std::string& text);

/// One line per component; round-trips through parse_code on canonical codes.
std::string serialize(const DiagramCode& code);

/// True iff every component contains an Under passage (no cyclic long arcs).
/// Second element lists the offending component indices.
std::pair<bool, std::vector<int>> is_proper(const DiagramCode& code);

/// Append a positive curl (fresh id, `O U` adjacent) to every component that
/// lacks an underpass. Identity on proper codes.
DiagramCode properize(const DiagramCode& code);

/// Flip the sense of every virtual passage. Involution; realizes s -> s^-1.
DiagramCode mirror_virtual(const DiagramCode& code);

/// Concatenate diagrams as split components, renumbering ids so the groups
/// stay disjoint. Crossing indices of piece m are offset by the total
/// classical count of the pieces before it.
DiagramCode disjoint_union(std::span<const DiagramCode> pieces);

/// Random valid code with exactly n classical and k virtual ids spread over
/// `components` cyclic sequences, deterministic in seed, properized before
/// return (which may add curl crossings). Throws InfeasibleShape.
DiagramCode random_diagram(int n, int k, int components, std::uint64_t seed);

/// An arc: a maximal strand segment between cut tokens (underpasses and
/// virtual passages). It begins just after token begin_token and ends at
/// token end_token; over_crossings lists crossing indices whose Over token
/// lies on it, in traversal order.
struct Arc {
    int degree = 0;
    std::vector<int> over_crossings;
    int component = 0;
    int begin_token = 0;
    int end_token = 0;
};

/// Long arc j: the run from crossing j's underpass to the next underpass,
/// subdivided by virtual passages into arcs. p/q count increasing/decreasing
/// passages; degrees start at 0 and step by the sense at each passage.
struct LongArc {
    int emanates_from = 0;
    int ends_at = 0;
    int p = 0;
    int q = 0;
    std::vector<Arc> arcs;

    int max_degree() const;
    int min_degree() const;
};

struct LongArcDecomposition {
    int n = 0;
    int k = 0;
    std::vector<int> sign;         // crossing index -> local writhe
    std::vector<int> crossing_id;  // crossing index -> id, for diagnostics
    std::vector<LongArc> long_arcs;  // long_arcs[j] emanates from crossing j
};

/// Cut every component at its underpasses and label the arcs.
/// Throws NotProper when some component has no underpass.
LongArcDecomposition long_arcs(const DiagramCode& code);

}  // namespace vcn
