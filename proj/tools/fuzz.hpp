#pragma once

#include <cstdint>
#include <ostream>

namespace vcn::cli {

struct FuzzOptions {
    int count = 1000;
    int n_max = 6;
    int k_max = 6;
    int walk = 10;
    std::uint64_t seed = 0;
};

/// Run the degree-bound check, the special-diagram coefficient identity, the
/// determinant oracle cross-check and the move-walk invariance check on
/// `count` random diagrams. Returns 0 when everything passes; failing inputs
/// are dumped verbatim to `out`.
int run_fuzz(const FuzzOptions& opts, std::ostream& out);

}  // namespace vcn::cli
