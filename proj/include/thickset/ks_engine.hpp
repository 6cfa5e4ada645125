#pragma once

#include "thickset/spec_model.hpp"

namespace thickset {

/// Plain mode decomposes into pairwise-disjoint pieces; punctured mode lets
/// the pieces share exactly the designated cone point (the greatest element
/// of the poset), which carries the trivial subcategory.
struct DecompositionMode {
    enum class Kind { plain, punctured };

    Kind kind = Kind::plain;
    std::string cone_point;

    static DecompositionMode plain() { return {}; }
    static DecompositionMode punctured(std::string cone) {
        return {Kind::punctured, std::move(cone)};
    }

    bool is_punctured() const { return kind == Kind::punctured; }
};

/// Graph on the minimal primes of a support: vertices adjacent when their
/// up-closures meet (outside the cone point, in punctured mode). Its
/// connected components index the Krull-Schmidt pieces.
struct SupportGraph {
    std::vector<std::string> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;        // i < j
    std::vector<std::vector<std::size_t>> components;              // canonical order
};

/// Ordered list of indecomposable pieces; pairwise disjoint (meeting exactly
/// in the cone point in punctured mode) with union the decomposed support.
struct KSDecomposition {
    std::vector<ThickSupport> components;
};

/// Minimal elements of s (of s minus the cone point in punctured mode).
/// Throws EmptySupport when nothing is left.
std::vector<std::string> minimal_primes(const ThickSupport& s,
                                        const DecompositionMode& mode = DecompositionMode::plain());

SupportGraph support_graph(const ThickSupport& s,
                           const DecompositionMode& mode = DecompositionMode::plain());

KSDecomposition ks_decompose(const ThickSupport& s,
                             const DecompositionMode& mode = DecompositionMode::plain());

/// Union of the parts after checking they are pairwise disjoint (pairwise
/// intersections exactly the cone point in punctured mode). NotDisjoint
/// names the offending pair and a witness point.
ThickSupport join_supports(const ModelRef& model, const std::vector<ThickSupport>& parts,
                           const DecompositionMode& mode = DecompositionMode::plain());

/// True iff s is nontrivial and ks_decompose yields exactly one component.
/// The bare cone-point support in punctured mode carries the zero category
/// and counts as neither decomposable nor indecomposable.
bool is_indecomposable(const ThickSupport& s,
                       const DecompositionMode& mode = DecompositionMode::plain());

/// First support (in enumeration order) that splits into two or more pieces.
std::optional<ThickSupport> find_decomposable_support(const ModelRef& model,
                                                      const DecompositionMode& mode);

/// Exhaustive check over all nonempty thick supports of a finite poset. In
/// plain mode the result is cross-checked against the structural law: no
/// decomposable support exists iff the poset has a greatest element.
bool all_supports_indecomposable(const ModelRef& model, const DecompositionMode& mode);

std::string to_dot(const SupportGraph& g);

}  // namespace thickset
