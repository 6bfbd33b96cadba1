#pragma once

// Dense linear solve over any ordered field scalar (exact or floating):
// Gaussian elimination with column-max pivoting. For exact scalars the
// pivot choice is arbitrary; max-abs keeps the same code correct for
// floating scalars.

#include <stdexcept>
#include <vector>

namespace fewdist {

template <class T>
using Matrix = std::vector<std::vector<T>>;

template <class T>
std::vector<T> solve_linear(Matrix<T> a, std::vector<T> b) {
    const size_t n = a.size();
    if (b.size() != n) throw std::invalid_argument("solve_linear: size mismatch");
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("solve_linear: matrix not square");

    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        for (size_t r = col + 1; r < n; ++r)
            if (a[piv][col].abs() < a[r][col].abs()) piv = r;
        if (a[piv][col].is_zero()) throw std::domain_error("solve_linear: singular matrix");
        if (piv != col) {
            std::swap(a[piv], a[col]);
            std::swap(b[piv], b[col]);
        }
        for (size_t r = col + 1; r < n; ++r) {
            if (a[r][col].is_zero()) continue;
            T f = a[r][col] / a[col][col];
            for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<T> x(n, T(0));
    for (size_t i = n; i-- > 0;) {
        T acc = b[i];
        for (size_t j = i + 1; j < n; ++j) acc -= a[i][j] * x[j];
        x[i] = acc / a[i][i];
    }
    return x;
}

}  // namespace fewdist
