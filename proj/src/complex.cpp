#include "thickset/complex.hpp"

#include <algorithm>
#include <set>

#include "thickset/factor.hpp"

namespace thickset {

PerfectComplexZ::PerfectComplexZ(std::map<int, std::size_t> ranks,
                                 std::map<int, IntMatrix> differentials) {
    for (const auto& [degree, r] : ranks)
        if (r > 0)
            ranks_[degree] = r;
    for (auto& [degree, d] : differentials) {
        // A matrix without entries carries no information beyond its shape;
        // keep it only if the shape disagrees with the ranks, so validate()
        // can report it.
        if (d.rows() * d.cols() == 0 && rank(degree) * rank(degree - 1) == 0)
            continue;
        differentials_[degree] = std::move(d);
    }
}

std::size_t PerfectComplexZ::rank(int degree) const {
    auto it = ranks_.find(degree);
    return it == ranks_.end() ? 0 : it->second;
}

IntMatrix PerfectComplexZ::differential(int degree) const {
    auto it = differentials_.find(degree);
    if (it != differentials_.end())
        return it->second;
    return IntMatrix(rank(degree - 1), rank(degree));
}

int PerfectComplexZ::min_degree() const {
    return ranks_.empty() ? 0 : ranks_.begin()->first;
}

int PerfectComplexZ::max_degree() const {
    return ranks_.empty() ? 0 : ranks_.rbegin()->first;
}

void validate(const PerfectComplexZ& c) {
    for (const auto& [degree, d] : c.differentials()) {
        const std::size_t want_rows = c.rank(degree - 1);
        const std::size_t want_cols = c.rank(degree);
        if (d.rows() != want_rows || d.cols() != want_cols)
            throw DimensionMismatch("differential at degree " + std::to_string(degree) + " is " +
                                    std::to_string(d.rows()) + "x" + std::to_string(d.cols()) +
                                    ", ranks demand " + std::to_string(want_rows) + "x" +
                                    std::to_string(want_cols));
    }
    for (const auto& [degree, d] : c.differentials()) {
        IntMatrix next = c.differential(degree + 1);
        if (next.rows() * next.cols() == 0 || d.rows() * d.cols() == 0)
            continue;
        if (!matrix_product(d, next).is_zero())
            throw NotAComplex("d.d != 0 entering degree " + std::to_string(degree + 1));
    }
}

PerfectComplexZ moore_complex(const Int& n) {
    if (n < 2)
        throw InvalidArgument("moore_complex requires n >= 2, got " + n.get_str());
    IntMatrix d(1, 1);
    d(0, 0) = n;
    return PerfectComplexZ({{0, 1}, {1, 1}}, {{1, d}});
}

HomologyProfile homology(const PerfectComplexZ& c) {
    validate(c);
    std::map<int, std::vector<Int>> divisors;
    for (const auto& [degree, d] : c.differentials())
        divisors[degree] = smith_normal_form(d).divisors;
    auto rank_of_d = [&](int degree) -> std::size_t {
        auto it = divisors.find(degree);
        return it == divisors.end() ? 0 : it->second.size();
    };

    HomologyProfile h;
    for (const auto& [degree, r] : c.ranks()) {
        FgAbGroup g;
        g.free_rank = r - rank_of_d(degree) - rank_of_d(degree + 1);
        auto it = divisors.find(degree + 1);
        if (it != divisors.end())
            for (const Int& e : it->second)
                if (e > 1)
                    g.torsion.push_back(e);
        if (!g.is_zero())
            h[degree] = std::move(g);
    }
    return h;
}

ThickSupport support(const PerfectComplexZ& c) {
    HomologyProfile h = homology(c);
    std::set<Int> primes;
    for (const auto& [degree, g] : h) {
        if (g.free_rank > 0)
            return ThickSupport::whole(ModelRef::spec_z());
        if (!g.torsion.empty())
            for (const auto& [p, e] : factorize(g.torsion.back()))
                primes.insert(p);
    }
    return ThickSupport::closed_points(primes);
}

PerfectComplexZ dual(const PerfectComplexZ& c) {
    validate(c);
    std::map<int, std::size_t> ranks;
    for (const auto& [degree, r] : c.ranks())
        ranks[-degree] = r;
    std::map<int, IntMatrix> diffs;
    for (const auto& [degree, d] : c.differentials()) {
        const int dual_degree = 1 - degree;
        IntMatrix t = transpose(d);
        if (dual_degree % 2 != 0)
            t = negated(t);
        diffs[dual_degree] = std::move(t);
    }
    return PerfectComplexZ(std::move(ranks), std::move(diffs));
}

PerfectComplexZ direct_sum(const PerfectComplexZ& a, const PerfectComplexZ& b) {
    std::map<int, std::size_t> ranks;
    for (const auto& [degree, r] : a.ranks())
        ranks[degree] += r;
    for (const auto& [degree, r] : b.ranks())
        ranks[degree] += r;
    std::map<int, IntMatrix> diffs;
    std::set<int> degrees;
    for (const auto& [degree, d] : a.differentials())
        degrees.insert(degree);
    for (const auto& [degree, d] : b.differentials())
        degrees.insert(degree);
    for (int degree : degrees)
        diffs[degree] = block_diag(a.differential(degree), b.differential(degree));
    return PerfectComplexZ(std::move(ranks), std::move(diffs));
}

PerfectComplexZ shift(const PerfectComplexZ& c, int k) {
    std::map<int, std::size_t> ranks;
    for (const auto& [degree, r] : c.ranks())
        ranks[degree + k] = r;
    std::map<int, IntMatrix> diffs;
    for (const auto& [degree, d] : c.differentials())
        diffs[degree + k] = (k % 2 == 0) ? d : negated(d);
    return PerfectComplexZ(std::move(ranks), std::move(diffs));
}

PerfectComplexZ realization(const HomologyProfile& h) {
    // Degree n holds [free block of H_n | cycle block of H_n | killer block
    // for the torsion of H_{n-1}]; the only nonzero differential entries map
    // each killer onto its cycle by the torsion divisor.
    auto group = [&h](int degree) -> const FgAbGroup* {
        auto it = h.find(degree);
        return it == h.end() ? nullptr : &it->second;
    };

    std::map<int, std::size_t> ranks;
    for (const auto& [degree, g] : h) {
        ranks[degree] += g.free_rank + g.torsion.size();
        ranks[degree + 1] += g.torsion.size();
    }
    std::map<int, IntMatrix> diffs;
    for (const auto& [degree, g] : h) {
        if (g.torsion.empty())
            continue;
        const int n = degree + 1;
        IntMatrix d(ranks.at(degree), ranks.at(n));
        const std::size_t row0 = g.free_rank;
        const FgAbGroup* up = group(n);
        const std::size_t col0 = up ? up->free_rank + up->torsion.size() : 0;
        for (std::size_t i = 0; i < g.torsion.size(); ++i)
            d(row0 + i, col0 + i) = g.torsion[i];
        diffs[n] = std::move(d);
    }
    return PerfectComplexZ(std::move(ranks), std::move(diffs));
}

namespace {

IntMatrix component_or_zero(const ChainMap& f, int degree) {
    auto it = f.components.find(degree);
    if (it != f.components.end())
        return it->second;
    return IntMatrix(f.target.rank(degree), f.source.rank(degree));
}

}  // namespace

void validate(const ChainMap& f) {
    validate(f.source);
    validate(f.target);
    for (const auto& [degree, m] : f.components) {
        const std::size_t want_rows = f.target.rank(degree);
        const std::size_t want_cols = f.source.rank(degree);
        const bool shape_ok = (m.rows() == want_rows && m.cols() == want_cols) ||
                              (m.rows() * m.cols() == 0 && want_rows * want_cols == 0);
        if (!shape_ok)
            throw DimensionMismatch("chain map component at degree " + std::to_string(degree));
    }
    if (f.source.is_zero() || f.target.is_zero())
        return;
    const int lo = std::min(f.source.min_degree(), f.target.min_degree());
    const int hi = std::max(f.source.max_degree(), f.target.max_degree());
    for (int n = lo; n <= hi + 1; ++n) {
        IntMatrix lhs = matrix_product(f.target.differential(n), component_or_zero(f, n));
        IntMatrix rhs = matrix_product(component_or_zero(f, n - 1), f.source.differential(n));
        if (lhs != rhs)
            throw NotChainMap("does not commute with differentials at degree " +
                              std::to_string(n));
    }
}

PerfectComplexZ mapping_cone(const ChainMap& f) {
    validate(f);
    std::map<int, std::size_t> ranks;
    std::set<int> degrees;
    for (const auto& [degree, r] : f.source.ranks()) {
        ranks[degree + 1] += r;
        degrees.insert(degree + 1);
    }
    for (const auto& [degree, r] : f.target.ranks()) {
        ranks[degree] += r;
        degrees.insert(degree);
    }
    std::map<int, IntMatrix> diffs;
    for (int n : degrees) {
        const std::size_t src_rows = f.source.rank(n - 2);
        const std::size_t src_cols = f.source.rank(n - 1);
        const std::size_t tgt_rows = f.target.rank(n - 1);
        const std::size_t tgt_cols = f.target.rank(n);
        IntMatrix d(src_rows + tgt_rows, src_cols + tgt_cols);
        paste_block(d, 0, 0, negated(f.source.differential(n - 1)));
        paste_block(d, src_rows, 0, component_or_zero(f, n - 1));
        paste_block(d, src_rows, src_cols, f.target.differential(n));
        diffs[n] = std::move(d);
    }
    return PerfectComplexZ(std::move(ranks), std::move(diffs));
}

bool derived_hom_vanishes(const PerfectComplexZ& a, const PerfectComplexZ& b) {
    // Hom / Ext^1 over Z: Hom(Z, Z) = Z, Hom(Z, Z/n) = Z/n,
    // Hom(Z/m, Z) = 0, Hom(Z/m, Z/n) = Ext^1(Z/m, Z/n) = Z/gcd(m, n),
    // Ext^1(Z/m, Z) = Z/m, Ext^1(Z, -) = 0.
    HomologyProfile ha = homology(a);
    HomologyProfile hb = homology(b);
    Int g;
    for (const auto& [i, ga] : ha) {
        for (const auto& [j, gb] : hb) {
            if (ga.free_rank > 0 && gb.free_rank > 0)
                return false;  // Hom(Z, Z)
            if (ga.free_rank > 0 && !gb.torsion.empty())
                return false;  // Hom(Z, Z/n)
            if (!ga.torsion.empty() && gb.free_rank > 0)
                return false;  // Ext^1(Z/m, Z)
            for (const Int& m : ga.torsion)
                for (const Int& n : gb.torsion) {
                    mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), n.get_mpz_t());
                    if (g > 1)
                        return false;  // Hom and Ext^1 = Z/gcd
                }
        }
    }
    return true;
}

FgAbGroup merge_groups(const FgAbGroup& a, const FgAbGroup& b) {
    FgAbGroup out;
    out.free_rank = a.free_rank + b.free_rank;
    std::map<Int, std::vector<unsigned>> exponents;  // prime -> multiset, descending
    for (const auto* g : {&a, &b})
        for (const Int& d : g->torsion)
            for (const auto& [p, e] : factorize(d))
                exponents[p].push_back(e);
    std::size_t slots = 0;
    for (auto& [p, es] : exponents) {
        std::sort(es.begin(), es.end(), std::greater<>());
        slots = std::max(slots, es.size());
    }
    std::vector<Int> chain(slots, 1);
    for (const auto& [p, es] : exponents)
        for (std::size_t j = 0; j < es.size(); ++j) {
            Int pe;
            mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), es[j]);
            chain[j] *= pe;  // slot 0 is the largest divisor
        }
    out.torsion.assign(chain.rbegin(), chain.rend());
    return out;
}

HomologyProfile merge_homology(const HomologyProfile& a, const HomologyProfile& b) {
    HomologyProfile out = a;
    for (const auto& [degree, g] : b) {
        auto it = out.find(degree);
        if (it == out.end())
            out[degree] = g;
        else
            it->second = merge_groups(it->second, g);
    }
    return out;
}

FgAbGroup restrict_to_prime(const FgAbGroup& g, const Int& p) {
    FgAbGroup out;
    for (const Int& d : g.torsion) {
        unsigned v = p_adic_valuation(d, p);
        if (v > 0) {
            Int pe;
            mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), v);
            out.torsion.push_back(pe);
        }
    }
    return out;
}

}  // namespace thickset
