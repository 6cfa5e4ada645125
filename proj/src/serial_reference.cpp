#include "thickset/smith.hpp"

#include <utility>

namespace thickset::serial {

IntMatrix matrix_product(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows())
        throw DimensionMismatch("serial matrix_product: inner dimensions differ");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += a(i, k) * b(k, j);
    return c;
}

SmithDecomposition smith_normal_form(const IntMatrix& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    SmithDecomposition d;
    d.u = IntMatrix::identity(m);
    d.v = IntMatrix::identity(n);
    d.s = a;
    IntMatrix& s = d.s;
    IntMatrix& u = d.u;
    IntMatrix& v = d.v;

    auto swap_rows = [](IntMatrix& x, std::size_t p, std::size_t q) {
        for (std::size_t j = 0; j < x.cols(); ++j)
            std::swap(x(p, j), x(q, j));
    };
    auto swap_cols = [](IntMatrix& x, std::size_t p, std::size_t q) {
        for (std::size_t i = 0; i < x.rows(); ++i)
            std::swap(x(i, p), x(i, q));
    };
    auto sub_row = [](IntMatrix& x, std::size_t dst, std::size_t src, const Int& q) {
        for (std::size_t j = 0; j < x.cols(); ++j)
            x(dst, j) -= q * x(src, j);
    };
    auto sub_col = [](IntMatrix& x, std::size_t dst, std::size_t src, const Int& q) {
        for (std::size_t i = 0; i < x.rows(); ++i)
            x(i, dst) -= q * x(i, src);
    };
    // min |nonzero| over s[t.., t..], first hit in row-major order
    auto pivot = [&s](std::size_t t, std::size_t& pi, std::size_t& pj) {
        bool found = false;
        Int best;
        for (std::size_t i = t; i < s.rows(); ++i)
            for (std::size_t j = t; j < s.cols(); ++j)
                if (s(i, j) != 0 && (!found || abs(s(i, j)) < best)) {
                    best = abs(s(i, j));
                    pi = i;
                    pj = j;
                    found = true;
                }
        return found;
    };

    const std::size_t steps = m < n ? m : n;
    for (std::size_t t = 0; t < steps; ++t) {
        std::size_t pi, pj;
        if (!pivot(t, pi, pj))
            break;
        for (;;) {
            if (pi != t) {
                swap_rows(s, t, pi);
                swap_rows(u, t, pi);
            }
            if (pj != t) {
                swap_cols(s, t, pj);
                swap_cols(v, t, pj);
            }
            bool dirty = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (s(i, t) == 0)
                    continue;
                Int q = s(i, t) / s(t, t);
                if (q != 0) {
                    sub_row(s, i, t, q);
                    sub_row(u, i, t, q);
                }
                if (s(i, t) != 0)
                    dirty = true;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (s(t, j) == 0)
                    continue;
                Int q = s(t, j) / s(t, t);
                if (q != 0) {
                    sub_col(s, j, t, q);
                    sub_col(v, j, t, q);
                }
                if (s(t, j) != 0)
                    dirty = true;
            }
            if (dirty) {
                pivot(t, pi, pj);
                continue;
            }
            bool divides_all = true;
            for (std::size_t i = t + 1; i < m && divides_all; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (s(i, j) % s(t, t) != 0) {
                        sub_row(s, t, i, Int(-1));
                        sub_row(u, t, i, Int(-1));
                        divides_all = false;
                        break;
                    }
            if (divides_all)
                break;
            pivot(t, pi, pj);
        }
        if (s(t, t) < 0) {
            for (std::size_t j = 0; j < n; ++j)
                s(t, j) = -s(t, j);
            for (std::size_t j = 0; j < m; ++j)
                u(t, j) = -u(t, j);
        }
    }

    for (std::size_t t = 0; t < steps; ++t)
        if (s(t, t) != 0)
            d.divisors.push_back(s(t, t));
    return d;
}

}  // namespace thickset::serial
