#include "thickset/chroma.hpp"

#include "thickset/errors.hpp"
#include "thickset/factor.hpp"

namespace thickset {

SpectraThick SpectraThick::whole() {
    SpectraThick t;
    t.whole_ = true;
    return t;
}

SpectraThick SpectraThick::torsion(std::map<std::int64_t, int> heights) {
    for (const auto& [p, n] : heights) {
        if (p < 2 || !is_prime(Int(p)))
            throw InvalidArgument("height key " + std::to_string(p) + " is not prime");
        if (n < 1)
            throw InvalidArgument("height at prime " + std::to_string(p) + " must be >= 1");
    }
    SpectraThick t;
    t.heights_ = std::move(heights);
    return t;
}

std::vector<SpectraThick> decompose_spectra(const SpectraThick& t) {
    if (t.is_whole())
        return {t};
    std::vector<SpectraThick> out;
    for (const auto& [p, n] : t.heights())
        out.push_back(SpectraThick::torsion({{p, n}}));
    return out;
}

SpectraThick intersect_spectra(const SpectraThick& a, const SpectraThick& b) {
    if (a.is_whole())
        return b;
    if (b.is_whole())
        return a;
    std::map<std::int64_t, int> heights;
    for (const auto& [p, n] : a.heights()) {
        auto it = b.heights().find(p);
        if (it != b.heights().end())
            heights[p] = n > it->second ? n : it->second;
    }
    return SpectraThick::torsion(std::move(heights));
}

bool contains(const SpectraThick& a, const SpectraThick& b) {
    if (a.is_whole())
        return true;
    if (b.is_whole())
        return false;
    for (const auto& [p, n] : b.heights()) {
        auto it = a.heights().find(p);
        if (it == a.heights().end() || it->second > n)
            return false;
    }
    return true;
}

SpectraThick join_spectra(const std::vector<SpectraThick>& parts) {
    std::map<std::int64_t, int> heights;
    for (const auto& part : parts) {
        if (part.is_whole())
            return SpectraThick::whole();
        for (const auto& [p, n] : part.heights()) {
            auto it = heights.find(p);
            if (it == heights.end() || n < it->second)
                heights[p] = n;
        }
    }
    return SpectraThick::torsion(std::move(heights));
}

}  // namespace thickset
