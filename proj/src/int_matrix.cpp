#include "thickset/int_matrix.hpp"

#include <sstream>

namespace thickset {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    IntMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c)
            throw DimensionMismatch("ragged row in matrix literal");
        std::size_t j = 0;
        for (long v : row)
            m(i, j++) = v;
        ++i;
    }
    return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Int>& values) {
    IntMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        m(i, i) = values[i];
    return m;
}

bool IntMatrix::is_zero() const {
    for (const Int& e : entries_)
        if (e != 0)
            return false;
    return true;
}

IntMatrix matrix_product(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows())
        throw DimensionMismatch("matrix_product: " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " times " + std::to_string(b.rows()) +
                                "x" + std::to_string(b.cols()));
    IntMatrix c(a.rows(), b.cols());
    const long long work =
        static_cast<long long>(a.rows()) * static_cast<long long>(a.cols()) * static_cast<long long>(b.cols());
#pragma omp parallel for schedule(static) if (work >= 16384)
    for (long long i = 0; i < static_cast<long long>(a.rows()); ++i) {
        Int acc, term;
        for (std::size_t j = 0; j < b.cols(); ++j) {
            acc = 0;
            for (std::size_t k = 0; k < a.cols(); ++k) {
                term = a(i, k) * b(k, j);
                acc += term;
            }
            c(i, j) = acc;
        }
    }
    return c;
}

IntMatrix transpose(const IntMatrix& a) {
    IntMatrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            t(j, i) = a(i, j);
    return t;
}

IntMatrix negated(const IntMatrix& a) {
    IntMatrix n(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            n(i, j) = -a(i, j);
    return n;
}

IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
    paste_block(m, 0, 0, a);
    paste_block(m, a.rows(), a.cols(), b);
    return m;
}

void paste_block(IntMatrix& dst, std::size_t i0, std::size_t j0, const IntMatrix& src) {
    if (i0 + src.rows() > dst.rows() || j0 + src.cols() > dst.cols())
        throw DimensionMismatch("paste_block: source exceeds destination bounds");
    for (std::size_t i = 0; i < src.rows(); ++i)
        for (std::size_t j = 0; j < src.cols(); ++j)
            dst(i0 + i, j0 + j) = src(i, j);
}

std::string to_string(const IntMatrix& a) {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < a.rows(); ++i) {
        out << (i ? ",[" : "[");
        for (std::size_t j = 0; j < a.cols(); ++j)
            out << (j ? "," : "") << a(i, j).get_str();
        out << "]";
    }
    out << "]";
    return out.str();
}

}  // namespace thickset
