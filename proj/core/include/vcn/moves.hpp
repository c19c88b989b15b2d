#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "vcn/diagram.hpp"

namespace vcn {

enum class MoveKind : std::uint8_t { R1Add, R1Remove, V1Add, V1Remove, V2Add, V2Remove };

bool is_removal(MoveKind kind);

/// A concrete application point for a local rewrite. Removal sites carry the
/// position of each matched pattern (its first token); addition sites carry
/// insertion gaps (a gap g inserts before token g, cyclically). Adjacency is
/// cyclic throughout.
struct MoveSite {
    MoveKind kind = MoveKind::R1Add;
    std::vector<std::pair<int, int>> at;  // (component, token position or gap)
    int sign = +1;             // R1Add: crossing sign
    bool under_first = false;  // R1Add: emit `U O` instead of `O U`
    int lead_sense = +1;       // V1Add / V2Add: sense of the first inserted token

    friend bool operator==(const MoveSite&, const MoveSite&) = default;
};

/// Enumerate applicable sites. R1Remove matches adjacent O/U of one crossing,
/// V1Remove adjacent passages of one virtual crossing, V2Remove two adjacent
/// pairs `Vm Vn` / `Vn Vm` whose senses cancel on each strand. Sites whose
/// removal would empty a component are not offered. Addition kinds enumerate
/// every insertion gap with every parameter choice.
std::vector<MoveSite> find_sites(const DiagramCode& code, MoveKind kind);

/// Rewrite at the given site. R1 changes the classical count by +-1, V1 the
/// virtual count by +-1, V2 by +-2. Throws InvalidSite when the site does not
/// match the code.
DiagramCode apply(const DiagramCode& code, const MoveSite& site);

struct WalkResult {
    DiagramCode code;
    std::vector<MoveSite> log;
};

/// Apply `steps` random applicable moves, deterministic in seed.
WalkResult random_walk(const DiagramCode& code, int steps, std::uint64_t seed);

}  // namespace vcn
