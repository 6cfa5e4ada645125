#pragma once

#include <optional>

#include "thickset/complex.hpp"
#include "thickset/ks_engine.hpp"

namespace thickset {

/// Class vector of a complex in K0 of the thick subcategory sitting on a
/// Spec Z ambient support. Over a finite set of closed points the group is
/// one copy of Z per prime, measured by the alternating sum of p-adic
/// lengths of the homology; over Whole it is a single Z measured by the
/// alternating sum of free ranks (torsion dies there: the multiplication
/// triangle gives [Z/n] = [Z] - [Z] = 0).
struct K0Class {
    ThickSupport ambient;
    std::optional<long long> generic_rank;      // present iff ambient is Whole
    std::map<Int, long long> torsion_lengths;   // one entry per ambient prime

    bool is_zero() const;
    bool operator==(const K0Class& other) const;
};

/// Throws SupportNotContained unless support(c) lies inside ambient;
/// ambient must live over Spec Z.
K0Class k0_class(const PerfectComplexZ& c, const ThickSupport& ambient);

K0Class class_add(const K0Class& a, const K0Class& b);
K0Class class_negate(const K0Class& a);

struct EulerReport {
    bool ok = true;
    K0Class source_class;
    K0Class target_class;
    K0Class cone_class;
};

/// Euler relation on the triangle of f: class(cone(f)) = class(target) -
/// class(source).
EulerReport check_euler_on_cone(const ChainMap& f, const ThickSupport& ambient);

struct XiReport {
    bool ok = true;
    std::string detail;
    std::vector<K0Class> component_classes;
    K0Class total_class;
};

/// Checks additivity of the K-theory direct-sum map on one sample per
/// component: the class of the direct sum restricts to each component's
/// class, and the samples pairwise satisfy derived_hom_vanishes.
XiReport xi_direct_sum_check(const KSDecomposition& decomp,
                             const std::vector<PerfectComplexZ>& samples);

}  // namespace thickset
