#include "thickset/k_theory.hpp"

#include "thickset/factor.hpp"

namespace thickset {

bool K0Class::is_zero() const {
    if (generic_rank && *generic_rank != 0)
        return false;
    for (const auto& [p, len] : torsion_lengths)
        if (len != 0)
            return false;
    return true;
}

bool K0Class::operator==(const K0Class& other) const {
    return ambient == other.ambient && generic_rank == other.generic_rank &&
           torsion_lengths == other.torsion_lengths;
}

K0Class k0_class(const PerfectComplexZ& c, const ThickSupport& ambient) {
    if (!ambient.model().is_spec_z())
        throw ModelMismatch("K0 classes are computed over Spec Z ambients");
    if (!support_subset(support(c), ambient))
        throw SupportNotContained("support of the complex exceeds the ambient support");

    HomologyProfile h = homology(c);
    K0Class out;
    out.ambient = ambient;
    if (ambient.is_whole()) {
        long long rank = 0;
        for (const auto& [degree, g] : h) {
            const long long sign = (degree % 2 == 0) ? 1 : -1;
            rank += sign * static_cast<long long>(g.free_rank);
        }
        out.generic_rank = rank;
        return out;
    }
    for (const Int& p : ambient.primes())
        out.torsion_lengths[p] = 0;
    for (const auto& [degree, g] : h) {
        const long long sign = (degree % 2 == 0) ? 1 : -1;
        for (const Int& d : g.torsion)
            for (const Int& p : ambient.primes())
                out.torsion_lengths[p] += sign * static_cast<long long>(p_adic_valuation(d, p));
    }
    return out;
}

namespace {

void require_same_ambient(const K0Class& a, const K0Class& b) {
    if (!(a.ambient == b.ambient))
        throw AmbientMismatch("classes live in K0 of different subcategories");
}

}  // namespace

K0Class class_add(const K0Class& a, const K0Class& b) {
    require_same_ambient(a, b);
    K0Class out = a;
    if (out.generic_rank)
        *out.generic_rank += b.generic_rank.value_or(0);
    for (const auto& [p, len] : b.torsion_lengths)
        out.torsion_lengths[p] += len;
    return out;
}

K0Class class_negate(const K0Class& a) {
    K0Class out = a;
    if (out.generic_rank)
        *out.generic_rank = -*out.generic_rank;
    for (auto& [p, len] : out.torsion_lengths)
        len = -len;
    return out;
}

EulerReport check_euler_on_cone(const ChainMap& f, const ThickSupport& ambient) {
    PerfectComplexZ cone = mapping_cone(f);  // validates f
    EulerReport report;
    report.source_class = k0_class(f.source, ambient);
    report.target_class = k0_class(f.target, ambient);
    report.cone_class = k0_class(cone, ambient);
    report.ok =
        report.cone_class == class_add(report.target_class, class_negate(report.source_class));
    return report;
}

XiReport xi_direct_sum_check(const KSDecomposition& decomp,
                             const std::vector<PerfectComplexZ>& samples) {
    if (decomp.components.size() != samples.size())
        throw InvalidArgument("need exactly one sample per component");

    const ModelRef spec_z = ModelRef::spec_z();
    ThickSupport ambient = join_supports(spec_z, decomp.components);

    XiReport report;
    PerfectComplexZ total;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (!support_subset(support(samples[i]), decomp.components[i]))
            throw SupportNotContained("sample " + std::to_string(i) +
                                      " is not supported inside its component");
        report.component_classes.push_back(k0_class(samples[i], decomp.components[i]));
        total = direct_sum(total, samples[i]);
    }
    report.total_class = k0_class(total, ambient);

    // Restriction of the total class to each component must reproduce the
    // component class; together these say the total is the concatenation.
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const K0Class& part = report.component_classes[i];
        if (decomp.components[i].is_whole()) {
            if (part.generic_rank != report.total_class.generic_rank) {
                report.ok = false;
                report.detail = "generic rank of the sum differs from component " +
                                std::to_string(i);
                return report;
            }
            continue;
        }
        for (const auto& [p, len] : part.torsion_lengths) {
            auto it = report.total_class.torsion_lengths.find(p);
            if (it == report.total_class.torsion_lengths.end() || it->second != len) {
                report.ok = false;
                report.detail = "length at (" + p.get_str() + ") differs from component " +
                                std::to_string(i);
                return report;
            }
        }
    }

    // Hypothesis behind the direct-sum isomorphism: no graded maps between
    // distinct components.
    for (std::size_t i = 0; i < samples.size(); ++i)
        for (std::size_t j = 0; j < samples.size(); ++j)
            if (i != j && !derived_hom_vanishes(samples[i], samples[j])) {
                report.ok = false;
                report.detail = "samples " + std::to_string(i) + " and " + std::to_string(j) +
                                " admit nonzero maps";
                return report;
            }
    return report;
}

}  // namespace thickset
