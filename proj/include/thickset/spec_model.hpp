#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "thickset/int_matrix.hpp"

namespace thickset {

/// Finite poset of primes under containment: p <= q means q contains p,
/// i.e. q lies in the closed set V(p). Validated on construction.
class FinitePrimePoset {
public:
    FinitePrimePoset(std::vector<std::string> elements,
                     const std::vector<std::pair<std::string, std::string>>& relations);

    std::size_t size() const { return elements_.size(); }
    const std::vector<std::string>& elements() const { return elements_; }

    /// Index of a named element; throws UnknownElement.
    std::size_t index_of(const std::string& name) const;
    bool has_element(const std::string& name) const;

    bool leq(std::size_t a, std::size_t b) const { return leq_[a][b]; }
    bool leq(const std::string& a, const std::string& b) const;

    /// V(p): every element containing p (p itself included).
    std::vector<std::size_t> up_set(std::size_t p) const;

    std::optional<std::size_t> greatest() const;

    bool operator==(const FinitePrimePoset& other) const = default;

private:
    std::vector<std::string> elements_;
    std::vector<std::vector<bool>> leq_;
};

using PosetPtr = std::shared_ptr<const FinitePrimePoset>;

/// Which spectrum a support lives over: Spec Z (generic point (0) plus one
/// closed point per prime number) or a finite prime poset.
class ModelRef {
public:
    static ModelRef spec_z() { return ModelRef{}; }
    static ModelRef finite(PosetPtr poset);

    bool is_spec_z() const { return poset_ == nullptr; }
    const FinitePrimePoset& poset() const;
    const PosetPtr& poset_ptr() const { return poset_; }

    bool same_model(const ModelRef& other) const;

private:
    PosetPtr poset_;
};

/// A specialisation-closed subset of the model. Over a finite poset this is
/// an explicit up-closed set of points; over Spec Z it is either Whole
/// (the support contains the generic point) or a finite set of closed
/// points (p).
class ThickSupport {
public:
    static ThickSupport whole(const ModelRef& model);
    static ThickSupport empty(const ModelRef& model);
    /// Spec Z support on the given closed points; every entry must be prime.
    static ThickSupport closed_points(std::set<Int> primes);
    /// Finite-poset support; rejects sets that are not up-closed.
    static ThickSupport of_points(const ModelRef& model, const std::set<std::string>& points);

    const ModelRef& model() const { return model_; }
    bool is_whole() const;
    bool is_empty() const;

    const std::set<Int>& primes() const { return primes_; }
    const std::set<std::string>& points() const { return points_; }

    bool contains_prime(const Int& p) const;
    bool contains_point(const std::string& name) const;

    /// Display names: "(0)", "(2)", ... over Spec Z, element names otherwise.
    std::vector<std::string> point_names() const;

    bool operator==(const ThickSupport& other) const;

private:
    ModelRef model_;
    bool whole_ = false;               // Spec Z only
    std::set<Int> primes_;             // Spec Z closed points
    std::set<std::string> points_;     // finite model points
};

/// Smallest up-closed set containing the seeds.
ThickSupport up_closure(const ModelRef& model, const std::set<std::string>& seeds);

/// All up-closed subsets of a finite poset, ordered by size then by point
/// names. Throws PosetTooLarge beyond max_size elements.
std::vector<ThickSupport> enumerate_thick_supports(const ModelRef& model, bool nonempty_only,
                                                   std::size_t max_size = 20);

ThickSupport intersect_supports(const ThickSupport& a, const ThickSupport& b);
ThickSupport union_supports(const ThickSupport& a, const ThickSupport& b);

/// Is a contained in b?
bool support_subset(const ThickSupport& a, const ThickSupport& b);

struct CatalogEntry {
    std::string name;
    PosetPtr poset;
    std::optional<std::string> cone_point;
};

/// Built-in prime lattices: A0, A1, artinian3, pidfan3.
const std::vector<CatalogEntry>& builtin_catalog();

std::string spec_z_point_name(const Int& p);

}  // namespace thickset
