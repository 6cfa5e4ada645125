#pragma once

#include <map>

#include "thickset/smith.hpp"
#include "thickset/spec_model.hpp"

namespace thickset {

/// Finitely generated abelian group in structure-theorem form:
/// Z^free_rank + sum of Z/torsion[i], torsion a divisibility chain with
/// every entry > 1.
struct FgAbGroup {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;

    bool is_zero() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const FgAbGroup& other) const = default;
};

/// Degree -> FgAbGroup; zero groups are not listed.
using HomologyProfile = std::map<int, FgAbGroup>;

/// Bounded complex of finite-rank free Z-modules. differentials[n] is the
/// matrix of d_n : C_n -> C_{n-1}, with rank(n-1) rows and rank(n) columns.
/// Degrees of rank zero and differentials with an empty shape are dropped at
/// construction; everything else is kept as given and checked by validate().
class PerfectComplexZ {
public:
    PerfectComplexZ() = default;
    PerfectComplexZ(std::map<int, std::size_t> ranks, std::map<int, IntMatrix> differentials);

    std::size_t rank(int degree) const;
    const std::map<int, std::size_t>& ranks() const { return ranks_; }
    const std::map<int, IntMatrix>& differentials() const { return differentials_; }

    /// The stored matrix, or a zero matrix of the right shape.
    IntMatrix differential(int degree) const;

    bool is_zero() const { return ranks_.empty(); }
    int min_degree() const;
    int max_degree() const;

    /// Equality of presentations (ranks and differential matrices).
    bool operator==(const PerfectComplexZ& other) const = default;

private:
    std::map<int, std::size_t> ranks_;
    std::map<int, IntMatrix> differentials_;
};

/// Checks shape consistency and d.d = 0; throws DimensionMismatch or
/// NotAComplex naming the offending degree.
void validate(const PerfectComplexZ& c);

/// M(n): 0 -> Z -n-> Z -> 0 in degrees 1, 0. Requires n >= 2.
PerfectComplexZ moore_complex(const Int& n);

HomologyProfile homology(const PerfectComplexZ& c);

/// Support over Spec Z: Whole when some homology group has free rank,
/// otherwise the primes dividing a torsion divisor.
ThickSupport support(const PerfectComplexZ& c);

/// Spanier-Whitehead dual: degree n has rank(-n); its differential is
/// (-1)^n times the transpose of d_{1-n}.
PerfectComplexZ dual(const PerfectComplexZ& c);

PerfectComplexZ direct_sum(const PerfectComplexZ& a, const PerfectComplexZ& b);

/// Suspension by k: ranks shift up by k, differentials pick up (-1)^k.
PerfectComplexZ shift(const PerfectComplexZ& c, int k);

/// Canonical complex realizing a homology profile: free summands sit with
/// zero differential, each torsion divisor d of H_{n-1} contributes a
/// diagonal block mapping degree n onto degree n-1 by d.
PerfectComplexZ realization(const HomologyProfile& h);

/// Degreewise map f : source -> target; absent components are zero.
struct ChainMap {
    PerfectComplexZ source;
    PerfectComplexZ target;
    std::map<int, IntMatrix> components;
};

/// Shape checks plus commutation with the differentials; throws NotChainMap.
void validate(const ChainMap& f);

PerfectComplexZ mapping_cone(const ChainMap& f);

/// True iff Hom(H_i(a), H_j(b)) and Ext^1(H_i(a), H_j(b)) vanish for all
/// degree pairs. Over the hereditary ring Z every complex splits as its
/// shifted homology, so this decides vanishing of all graded maps a -> b.
bool derived_hom_vanishes(const PerfectComplexZ& a, const PerfectComplexZ& b);

/// Direct sum of groups, recanonicalised to a divisibility chain by merging
/// per-prime exponent multisets.
FgAbGroup merge_groups(const FgAbGroup& a, const FgAbGroup& b);
HomologyProfile merge_homology(const HomologyProfile& a, const HomologyProfile& b);

/// p-primary part (free rank discarded).
FgAbGroup restrict_to_prime(const FgAbGroup& g, const Int& p);

}  // namespace thickset
