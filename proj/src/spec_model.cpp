#include "thickset/spec_model.hpp"

#include <algorithm>

#include "thickset/factor.hpp"

namespace thickset {

FinitePrimePoset::FinitePrimePoset(std::vector<std::string> elements,
                                   const std::vector<std::pair<std::string, std::string>>& relations)
    : elements_(std::move(elements)) {
    const std::size_t n = elements_.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (elements_[i] == elements_[j])
                throw InvalidArgument("duplicate poset element '" + elements_[i] + "'");

    leq_.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        leq_[i][i] = true;
    for (const auto& [lo, hi] : relations)
        leq_[index_of(lo)][index_of(hi)] = true;

    // reflexive-transitive closure
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (leq_[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (leq_[k][j])
                        leq_[i][j] = true;

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (leq_[i][j] && leq_[j][i])
                throw CycleDetected("'" + elements_[i] + "' and '" + elements_[j] +
                                    "' order each other");
}

std::size_t FinitePrimePoset::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < elements_.size(); ++i)
        if (elements_[i] == name)
            return i;
    throw UnknownElement("'" + name + "' is not a poset element");
}

bool FinitePrimePoset::has_element(const std::string& name) const {
    return std::find(elements_.begin(), elements_.end(), name) != elements_.end();
}

bool FinitePrimePoset::leq(const std::string& a, const std::string& b) const {
    return leq(index_of(a), index_of(b));
}

std::vector<std::size_t> FinitePrimePoset::up_set(std::size_t p) const {
    std::vector<std::size_t> up;
    for (std::size_t q = 0; q < size(); ++q)
        if (leq_[p][q])
            up.push_back(q);
    return up;
}

std::optional<std::size_t> FinitePrimePoset::greatest() const {
    for (std::size_t g = 0; g < size(); ++g) {
        bool top = true;
        for (std::size_t p = 0; p < size(); ++p)
            if (!leq_[p][g]) {
                top = false;
                break;
            }
        if (top)
            return g;
    }
    return std::nullopt;
}

ModelRef ModelRef::finite(PosetPtr poset) {
    if (!poset)
        throw InvalidArgument("finite model requires a poset");
    ModelRef m;
    m.poset_ = std::move(poset);
    return m;
}

const FinitePrimePoset& ModelRef::poset() const {
    if (!poset_)
        throw ModelMismatch("operation requires a finite poset model");
    return *poset_;
}

bool ModelRef::same_model(const ModelRef& other) const {
    if (is_spec_z() || other.is_spec_z())
        return is_spec_z() == other.is_spec_z();
    return poset_ == other.poset_ || *poset_ == *other.poset_;
}

ThickSupport ThickSupport::whole(const ModelRef& model) {
    ThickSupport s;
    s.model_ = model;
    if (model.is_spec_z()) {
        s.whole_ = true;
    } else {
        const auto& e = model.poset().elements();
        s.points_.insert(e.begin(), e.end());
    }
    return s;
}

ThickSupport ThickSupport::empty(const ModelRef& model) {
    ThickSupport s;
    s.model_ = model;
    return s;
}

ThickSupport ThickSupport::closed_points(std::set<Int> primes) {
    for (const Int& p : primes)
        if (p < 2 || !is_prime(p))
            throw UnknownElement("(" + p.get_str() + ") is not a closed point of Spec Z");
    ThickSupport s;
    s.model_ = ModelRef::spec_z();
    s.primes_ = std::move(primes);
    return s;
}

ThickSupport ThickSupport::of_points(const ModelRef& model, const std::set<std::string>& points) {
    const FinitePrimePoset& poset = model.poset();
    std::set<std::string> pts;
    for (const auto& name : points) {
        std::size_t p = poset.index_of(name);
        for (std::size_t q = 0; q < poset.size(); ++q)
            if (poset.leq(p, q) && !points.count(poset.elements()[q]))
                throw NotUpClosed("support omits '" + poset.elements()[q] + "' above '" + name +
                                  "'");
        pts.insert(name);
    }
    ThickSupport s;
    s.model_ = model;
    s.points_ = std::move(pts);
    return s;
}

bool ThickSupport::is_whole() const {
    if (model_.is_spec_z())
        return whole_;
    return points_.size() == model_.poset().size();
}

bool ThickSupport::is_empty() const {
    if (model_.is_spec_z())
        return !whole_ && primes_.empty();
    return points_.empty();
}

bool ThickSupport::contains_prime(const Int& p) const {
    return whole_ || primes_.count(p) > 0;
}

bool ThickSupport::contains_point(const std::string& name) const {
    if (model_.is_spec_z())
        throw ModelMismatch("contains_point on a Spec Z support");
    return points_.count(name) > 0;
}

std::string spec_z_point_name(const Int& p) {
    return "(" + p.get_str() + ")";
}

std::vector<std::string> ThickSupport::point_names() const {
    std::vector<std::string> names;
    if (model_.is_spec_z()) {
        if (whole_) {
            names.push_back(spec_z_point_name(0));
        }
        for (const Int& p : primes_)
            names.push_back(spec_z_point_name(p));
    } else {
        names.assign(points_.begin(), points_.end());
    }
    return names;
}

bool ThickSupport::operator==(const ThickSupport& other) const {
    if (!model_.same_model(other.model_))
        return false;
    if (model_.is_spec_z())
        return whole_ == other.whole_ && primes_ == other.primes_;
    return points_ == other.points_;
}

ThickSupport up_closure(const ModelRef& model, const std::set<std::string>& seeds) {
    const FinitePrimePoset& poset = model.poset();
    std::set<std::string> out;
    for (const auto& name : seeds) {
        std::size_t p = poset.index_of(name);
        for (std::size_t q : poset.up_set(p))
            out.insert(poset.elements()[q]);
    }
    return ThickSupport::of_points(model, out);
}

std::vector<ThickSupport> enumerate_thick_supports(const ModelRef& model, bool nonempty_only,
                                                   std::size_t max_size) {
    const FinitePrimePoset& poset = model.poset();
    const std::size_t n = poset.size();
    if (n > max_size || n > 22)  // bitmask enumeration
        throw PosetTooLarge("poset has " + std::to_string(n) + " elements, bound is " +
                            std::to_string(max_size < 22 ? max_size : 22));

    std::vector<std::uint32_t> up_mask(n, 0);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q : poset.up_set(p))
            up_mask[p] |= std::uint32_t{1} << q;

    std::vector<ThickSupport> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        std::uint32_t closure = 0;
        for (std::size_t p = 0; p < n; ++p)
            if (mask & (std::uint32_t{1} << p))
                closure |= up_mask[p];
        if (closure != mask)
            continue;
        if (nonempty_only && mask == 0)
            continue;
        std::set<std::string> pts;
        for (std::size_t p = 0; p < n; ++p)
            if (mask & (std::uint32_t{1} << p))
                pts.insert(poset.elements()[p]);
        out.push_back(ThickSupport::of_points(model, pts));
    }
    std::sort(out.begin(), out.end(), [](const ThickSupport& a, const ThickSupport& b) {
        if (a.points().size() != b.points().size())
            return a.points().size() < b.points().size();
        return a.points() < b.points();
    });
    return out;
}

namespace {

void require_same_model(const ThickSupport& a, const ThickSupport& b) {
    if (!a.model().same_model(b.model()))
        throw ModelMismatch("supports live over different models");
}

}  // namespace

ThickSupport intersect_supports(const ThickSupport& a, const ThickSupport& b) {
    require_same_model(a, b);
    if (a.model().is_spec_z()) {
        if (a.is_whole())
            return b;
        if (b.is_whole())
            return a;
        std::set<Int> common;
        for (const Int& p : a.primes())
            if (b.primes().count(p))
                common.insert(p);
        return ThickSupport::closed_points(common);
    }
    std::set<std::string> common;
    for (const auto& p : a.points())
        if (b.points().count(p))
            common.insert(p);
    return ThickSupport::of_points(a.model(), common);
}

ThickSupport union_supports(const ThickSupport& a, const ThickSupport& b) {
    require_same_model(a, b);
    if (a.model().is_spec_z()) {
        if (a.is_whole() || b.is_whole())
            return ThickSupport::whole(a.model());
        std::set<Int> all = a.primes();
        all.insert(b.primes().begin(), b.primes().end());
        return ThickSupport::closed_points(all);
    }
    std::set<std::string> all = a.points();
    all.insert(b.points().begin(), b.points().end());
    return ThickSupport::of_points(a.model(), all);
}

bool support_subset(const ThickSupport& a, const ThickSupport& b) {
    require_same_model(a, b);
    if (a.model().is_spec_z()) {
        if (b.is_whole())
            return true;
        if (a.is_whole())
            return false;
        return std::includes(b.primes().begin(), b.primes().end(), a.primes().begin(),
                             a.primes().end());
    }
    return std::includes(b.points().begin(), b.points().end(), a.points().begin(),
                         a.points().end());
}

const std::vector<CatalogEntry>& builtin_catalog() {
    static const std::vector<CatalogEntry> catalog = [] {
        std::vector<CatalogEntry> c;
        c.push_back({"A0",
                     std::make_shared<FinitePrimePoset>(
                         std::vector<std::string>{"(0)", "(h0)"},
                         std::vector<std::pair<std::string, std::string>>{{"(0)", "(h0)"}}),
                     "(h0)"});
        c.push_back({"A1",
                     std::make_shared<FinitePrimePoset>(
                         std::vector<std::string>{"(h1)", "p0", "p1", "m"},
                         std::vector<std::pair<std::string, std::string>>{
                             {"(h1)", "p0"}, {"(h1)", "p1"}, {"p0", "m"}, {"p1", "m"}}),
                     "m"});
        c.push_back({"artinian3",
                     std::make_shared<FinitePrimePoset>(
                         std::vector<std::string>{"p", "q", "r"},
                         std::vector<std::pair<std::string, std::string>>{}),
                     std::nullopt});
        c.push_back({"pidfan3",
                     std::make_shared<FinitePrimePoset>(
                         std::vector<std::string>{"(0)", "m0", "m1", "m2"},
                         std::vector<std::pair<std::string, std::string>>{
                             {"(0)", "m0"}, {"(0)", "m1"}, {"(0)", "m2"}}),
                     std::nullopt});
        return c;
    }();
    return catalog;
}

}  // namespace thickset
