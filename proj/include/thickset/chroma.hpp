#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace thickset {

/// A thick subcategory of finite spectra: the whole category, or a finite
/// wedge of per-prime chromatic pieces. heights[p] = n encodes C_{n,p}, the
/// finite p-torsion spectra acyclic for the (n-1)st Morava K-theory; larger
/// n means a smaller subcategory. An empty height map is the zero
/// subcategory.
class SpectraThick {
public:
    static SpectraThick whole();
    static SpectraThick torsion(std::map<std::int64_t, int> heights);
    static SpectraThick zero() { return torsion({}); }

    bool is_whole() const { return whole_; }
    bool is_zero() const { return !whole_ && heights_.empty(); }
    const std::map<std::int64_t, int>& heights() const { return heights_; }

    bool operator==(const SpectraThick& other) const = default;

private:
    bool whole_ = false;
    std::map<std::int64_t, int> heights_;
};

/// Whole is indecomposable; a torsion subcategory splits into its per-prime
/// pieces, ordered by prime. The zero subcategory yields an empty list.
std::vector<SpectraThick> decompose_spectra(const SpectraThick& t);

/// Whole is the unit; torsion pieces intersect per prime, taking the larger
/// height (deeper acyclicity) on common primes.
SpectraThick intersect_spectra(const SpectraThick& a, const SpectraThick& b);

/// Is b contained in a?
bool contains(const SpectraThick& a, const SpectraThick& b);

/// Union of per-prime pieces: smallest height wins; Whole absorbs.
SpectraThick join_spectra(const std::vector<SpectraThick>& parts);

}  // namespace thickset
