#include "thickset/smith.hpp"

#include <cstdlib>
#include <utility>

namespace thickset {

namespace {

// Row updates below a pivot are independent of one another, as are column
// updates to its right; those two sweeps carry essentially all of the work
// and are the parallel kernels. Everything else (pivot search, divisibility
// fix-up) is cheap bookkeeping.
constexpr long long kParallelGrain = 4096;

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        std::swap(m(i, a), m(i, b));
}

void negate_row(IntMatrix& m, std::size_t r) {
    for (std::size_t j = 0; j < m.cols(); ++j)
        m(r, j) = -m(r, j);
}

// row[dst] -= q * row[src], columns jfrom.. only
void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q, std::size_t jfrom) {
    if (q == 0)
        return;
    Int t;
    for (std::size_t j = jfrom; j < m.cols(); ++j) {
        t = q * m(src, j);
        m(dst, j) -= t;
    }
}

void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q, std::size_t ifrom) {
    if (q == 0)
        return;
    Int t;
    for (std::size_t i = ifrom; i < m.rows(); ++i) {
        t = q * m(i, src);
        m(i, dst) -= t;
    }
}

// Smallest nonzero |entry| of s[t.., t..]; first occurrence in row-major
// order breaks ties, keeping the output deterministic.
bool find_pivot(const IntMatrix& s, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best;
    for (std::size_t i = t; i < s.rows(); ++i) {
        for (std::size_t j = t; j < s.cols(); ++j) {
            if (s(i, j) == 0)
                continue;
            Int a = abs(s(i, j));
            if (!found || a < best) {
                best = a;
                pi = i;
                pj = j;
                found = true;
            }
        }
    }
    return found;
}

// Clears column t below the pivot. Returns true if some remainder survived
// (the pivot did not divide every entry), in which case another pass with a
// smaller pivot is needed.
bool clear_column(IntMatrix& s, IntMatrix& u, std::size_t t) {
    const long long nrows = static_cast<long long>(s.rows());
    const long long width = static_cast<long long>(s.cols() - t) + static_cast<long long>(u.cols());
    bool dirty = false;
#pragma omp parallel for schedule(static) reduction(|| : dirty) \
    if ((nrows - static_cast<long long>(t) - 1) * width >= kParallelGrain)
    for (long long i = static_cast<long long>(t) + 1; i < nrows; ++i) {
        if (s(i, t) == 0)
            continue;
        Int q = s(i, t) / s(t, t);  // truncated quotient
        row_axpy(s, i, t, q, t);
        row_axpy(u, i, t, q, 0);
        if (s(i, t) != 0)
            dirty = true;
    }
    return dirty;
}

bool clear_row(IntMatrix& s, IntMatrix& v, std::size_t t) {
    const long long ncols = static_cast<long long>(s.cols());
    const long long height = static_cast<long long>(s.rows() - t) + static_cast<long long>(v.rows());
    bool dirty = false;
#pragma omp parallel for schedule(static) reduction(|| : dirty) \
    if ((ncols - static_cast<long long>(t) - 1) * height >= kParallelGrain)
    for (long long j = static_cast<long long>(t) + 1; j < ncols; ++j) {
        if (s(t, j) == 0)
            continue;
        Int q = s(t, j) / s(t, t);
        col_axpy(s, j, t, q, t);
        col_axpy(v, j, t, q, 0);
        if (s(t, j) != 0)
            dirty = true;
    }
    return dirty;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    SmithDecomposition d;
    d.u = IntMatrix::identity(m);
    d.v = IntMatrix::identity(n);
    d.s = a;

    const std::size_t steps = m < n ? m : n;
    for (std::size_t t = 0; t < steps; ++t) {
        std::size_t pi = 0, pj = 0;
        if (!find_pivot(d.s, t, pi, pj))
            break;
        for (;;) {
            if (pi != t) {
                swap_rows(d.s, t, pi);
                swap_rows(d.u, t, pi);
            }
            if (pj != t) {
                swap_cols(d.s, t, pj);
                swap_cols(d.v, t, pj);
            }
            bool dirty = clear_column(d.s, d.u, t);
            dirty = clear_row(d.s, d.v, t) || dirty;
            if (dirty) {
                find_pivot(d.s, t, pi, pj);
                continue;
            }
            // Pivot now stands alone in its row and column; make it divide
            // the rest of the submatrix before moving on.
            bool fixed = true;
            for (std::size_t i = t + 1; i < m && fixed; ++i) {
                for (std::size_t j = t + 1; j < n; ++j) {
                    if (d.s(i, j) % d.s(t, t) != 0) {
                        row_axpy(d.s, t, i, Int(-1), t);
                        row_axpy(d.u, t, i, Int(-1), 0);
                        fixed = false;
                        break;
                    }
                }
            }
            if (fixed)
                break;
            find_pivot(d.s, t, pi, pj);
        }
        if (d.s(t, t) < 0) {
            negate_row(d.s, t);
            negate_row(d.u, t);
        }
    }

    for (std::size_t t = 0; t < steps; ++t)
        if (d.s(t, t) != 0)
            d.divisors.push_back(d.s(t, t));
    return d;
}

CokernelInvariants cokernel_invariants(const IntMatrix& a) {
    SmithDecomposition d = smith_normal_form(a);
    CokernelInvariants inv;
    inv.free_rank = a.rows() - d.divisors.size();
    for (const Int& e : d.divisors)
        if (e > 1)
            inv.torsion.push_back(e);
    return inv;
}

}  // namespace thickset
