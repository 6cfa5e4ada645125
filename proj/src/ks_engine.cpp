#include "thickset/ks_engine.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace thickset {

namespace {

void check_mode(const ModelRef& model, const DecompositionMode& mode) {
    if (!mode.is_punctured())
        return;
    if (model.is_spec_z())
        throw InvalidArgument("punctured mode requires a finite poset");
    const FinitePrimePoset& poset = model.poset();
    auto g = poset.greatest();
    if (!g || poset.elements()[*g] != mode.cone_point)
        throw InvalidArgument("cone point '" + mode.cone_point +
                              "' is not the greatest element of the poset");
}

struct UnionFind {
    std::vector<std::size_t> parent;

    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<std::string> minimal_primes(const ThickSupport& s, const DecompositionMode& mode) {
    check_mode(s.model(), mode);
    if (s.model().is_spec_z()) {
        if (s.is_whole())
            return {spec_z_point_name(0)};
        if (s.is_empty())
            throw EmptySupport("no minimal primes in the empty support");
        std::vector<std::string> names;
        for (const Int& p : s.primes())
            names.push_back(spec_z_point_name(p));
        return names;
    }
    const FinitePrimePoset& poset = s.model().poset();
    std::set<std::string> working = s.points();
    if (mode.is_punctured())
        working.erase(mode.cone_point);
    if (working.empty())
        throw EmptySupport(mode.is_punctured() ? "support carries only the cone point"
                                               : "support is empty");
    std::vector<std::string> minimal;
    for (const auto& p : working) {
        bool is_minimal = true;
        for (const auto& q : working)
            if (q != p && poset.leq(q, p)) {
                is_minimal = false;
                break;
            }
        if (is_minimal)
            minimal.push_back(p);
    }
    return minimal;  // set iteration order keeps names sorted
}

SupportGraph support_graph(const ThickSupport& s, const DecompositionMode& mode) {
    SupportGraph g;
    g.vertices = minimal_primes(s, mode);
    const std::size_t n = g.vertices.size();
    UnionFind uf(n);

    if (!s.model().is_spec_z()) {
        // Adjacency: the closures meet, ignoring the cone point when punctured.
        const FinitePrimePoset& poset = s.model().poset();
        std::optional<std::size_t> cone;
        if (mode.is_punctured())
            cone = poset.index_of(mode.cone_point);
        std::vector<std::vector<std::size_t>> ups;
        for (const auto& name : g.vertices) {
            auto up = poset.up_set(poset.index_of(name));
            if (cone)
                std::erase(up, *cone);
            ups.push_back(std::move(up));
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                bool meet = false;
                for (std::size_t x : ups[i])
                    if (std::find(ups[j].begin(), ups[j].end(), x) != ups[j].end()) {
                        meet = true;
                        break;
                    }
                if (meet) {
                    g.edges.emplace_back(i, j);
                    uf.unite(i, j);
                }
            }
    }
    // Over Spec Z the generic point only occurs alone (Whole) and distinct
    // closed points have disjoint closures, so there are never any edges.

    std::map<std::size_t, std::vector<std::size_t>> by_root;
    for (std::size_t i = 0; i < n; ++i)
        by_root[uf.find(i)].push_back(i);
    for (auto& [root, verts] : by_root)
        g.components.push_back(std::move(verts));
    std::sort(g.components.begin(), g.components.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return g;
}

KSDecomposition ks_decompose(const ThickSupport& s, const DecompositionMode& mode) {
    check_mode(s.model(), mode);
    if (s.is_empty())
        throw EmptySupport("cannot decompose the empty support");

    KSDecomposition out;
    if (s.model().is_spec_z()) {
        if (s.is_whole()) {
            out.components.push_back(ThickSupport::whole(s.model()));
            return out;
        }
        for (const Int& p : s.primes())
            out.components.push_back(ThickSupport::closed_points({p}));
        return out;
    }

    const FinitePrimePoset& poset = s.model().poset();
    if (mode.is_punctured() && s.points() == std::set<std::string>{mode.cone_point})
        return out;  // the trivial subcategory decomposes into nothing

    SupportGraph g = support_graph(s, mode);
    for (const auto& component : g.components) {
        std::set<std::string> pts;
        for (std::size_t vi : component) {
            std::size_t p = poset.index_of(g.vertices[vi]);
            for (std::size_t q : poset.up_set(p))
                pts.insert(poset.elements()[q]);
        }
        // The cone point is the greatest element, so it already lies in
        // every up-closure; punctured pieces meet in exactly that point.
        out.components.push_back(ThickSupport::of_points(s.model(), pts));
    }
    return out;
}

ThickSupport join_supports(const ModelRef& model, const std::vector<ThickSupport>& parts,
                           const DecompositionMode& mode) {
    check_mode(model, mode);
    for (const auto& part : parts)
        if (!part.model().same_model(model))
            throw ModelMismatch("join_supports: part over a different model");
    if (mode.is_punctured())
        for (const auto& part : parts)
            if (!part.contains_point(mode.cone_point))
                throw InvalidArgument("punctured part must contain the cone point");

    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
            ThickSupport common = intersect_supports(parts[i], parts[j]);
            std::vector<std::string> names = common.point_names();
            if (mode.is_punctured())
                std::erase(names, mode.cone_point);
            if (!names.empty())
                throw NotDisjoint("parts " + std::to_string(i) + " and " + std::to_string(j) +
                                  " share " + names.front());
        }
    }

    ThickSupport out = ThickSupport::empty(model);
    for (const auto& part : parts)
        out = union_supports(out, part);
    return out;
}

bool is_indecomposable(const ThickSupport& s, const DecompositionMode& mode) {
    try {
        return ks_decompose(s, mode).components.size() == 1;
    } catch (const EmptySupport&) {
        return false;
    }
}

std::optional<ThickSupport> find_decomposable_support(const ModelRef& model,
                                                      const DecompositionMode& mode) {
    for (const ThickSupport& s : enumerate_thick_supports(model, /*nonempty_only=*/true))
        if (ks_decompose(s, mode).components.size() >= 2)
            return s;
    return std::nullopt;
}

bool all_supports_indecomposable(const ModelRef& model, const DecompositionMode& mode) {
    check_mode(model, mode);
    const bool computed = !find_decomposable_support(model, mode).has_value();
    if (!mode.is_punctured()) {
        const bool has_greatest = model.poset().greatest().has_value();
        if (computed != has_greatest)
            throw std::logic_error(
                "indecomposability scan disagrees with the greatest-element criterion");
    }
    return computed;
}

std::string to_dot(const SupportGraph& g) {
    std::ostringstream out;
    out << "graph support_graph {\n";
    for (std::size_t c = 0; c < g.components.size(); ++c) {
        out << "  subgraph cluster_" << c << " {\n";
        for (std::size_t vi : g.components[c])
            out << "    \"" << g.vertices[vi] << "\";\n";
        out << "  }\n";
    }
    for (const auto& [i, j] : g.edges)
        out << "  \"" << g.vertices[i] << "\" -- \"" << g.vertices[j] << "\";\n";
    out << "}\n";
    return out.str();
}

}  // namespace thickset
