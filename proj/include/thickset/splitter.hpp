#pragma once

#include "thickset/complex.hpp"
#include "thickset/ks_engine.hpp"

namespace thickset {

/// One indecomposable piece of a split: the support component and a
/// canonical complex realizing exactly the homology sitting over it.
struct SplitPiece {
    ThickSupport component;
    PerfectComplexZ piece;
};

struct SplitResult {
    std::vector<SplitPiece> pieces;
};

/// Splits a complex along the Krull-Schmidt decomposition of its support.
/// Pieces are canonical homology realizations (sums of shifted Moore
/// complexes, plus shifted free summands when the support is Whole), not
/// subcomplexes of the input. Throws ZeroComplex on acyclic input.
SplitResult split_complex(const PerfectComplexZ& c);

/// ok == true or the first violated invariant in `failure`.
struct SplitReport {
    bool ok = true;
    std::string failure;
};

/// Checks: each piece's support equals its component; components pairwise
/// disjoint; merged homology of the pieces equals the input homology; each
/// piece's homology is the input homology restricted to its component.
SplitReport verify_split(const PerfectComplexZ& c, const SplitResult& r);

}  // namespace thickset
