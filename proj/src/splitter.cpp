#include "thickset/splitter.hpp"

#include "thickset/factor.hpp"

namespace thickset {

namespace {

HomologyProfile restrict_profile(const HomologyProfile& h, const Int& p) {
    HomologyProfile out;
    for (const auto& [degree, g] : h) {
        FgAbGroup part = restrict_to_prime(g, p);
        if (!part.is_zero())
            out[degree] = std::move(part);
    }
    return out;
}

}  // namespace

SplitResult split_complex(const PerfectComplexZ& c) {
    validate(c);
    HomologyProfile h = homology(c);
    if (h.empty())
        throw ZeroComplex("acyclic complex has nothing to split");

    SplitResult out;
    KSDecomposition decomp = ks_decompose(support(c));
    for (const ThickSupport& component : decomp.components) {
        if (component.is_whole()) {
            // Whole is indecomposable, so it is the only component: the
            // piece carries all of the homology.
            out.pieces.push_back({component, realization(h)});
        } else {
            const Int& p = *component.primes().begin();
            out.pieces.push_back({component, realization(restrict_profile(h, p))});
        }
    }
    return out;
}

SplitReport verify_split(const PerfectComplexZ& c, const SplitResult& r) {
    auto fail = [](std::string why) { return SplitReport{false, std::move(why)}; };

    try {
        validate(c);
    } catch (const Error& e) {
        return fail(std::string("input is not a valid complex: ") + e.what());
    }
    HomologyProfile input = homology(c);

    for (std::size_t i = 0; i < r.pieces.size(); ++i) {
        try {
            validate(r.pieces[i].piece);
        } catch (const Error& e) {
            return fail("piece " + std::to_string(i) + " is not a valid complex");
        }
        if (!(support(r.pieces[i].piece) == r.pieces[i].component))
            return fail("support mismatch: piece " + std::to_string(i) +
                        " does not sit exactly on its component");
    }

    for (std::size_t i = 0; i < r.pieces.size(); ++i)
        for (std::size_t j = i + 1; j < r.pieces.size(); ++j)
            if (!intersect_supports(r.pieces[i].component, r.pieces[j].component).is_empty())
                return fail("components " + std::to_string(i) + " and " + std::to_string(j) +
                            " are not disjoint");

    HomologyProfile merged;
    for (const auto& piece : r.pieces)
        merged = merge_homology(merged, homology(piece.piece));
    if (merged != input)
        return fail("homology not exhausted: pieces do not add up to the input");

    for (std::size_t i = 0; i < r.pieces.size(); ++i) {
        const ThickSupport& component = r.pieces[i].component;
        HomologyProfile expected;
        if (component.is_whole()) {
            expected = input;
        } else {
            for (const Int& p : component.primes())
                expected = merge_homology(expected, restrict_profile(input, p));
        }
        if (homology(r.pieces[i].piece) != expected)
            return fail("homology distribution mismatch at piece " + std::to_string(i));
    }
    return {};
}

}  // namespace thickset
