#ifndef MUSHROOM_MATRIX_HPP
#define MUSHROOM_MATRIX_HPP

#include <cstddef>
#include <vector>

namespace mushroom {

// Dense row-major matrix of doubles. Rows index presynaptic (hidden) units,
// columns index output units throughout this project.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(int r, int c, double fill = 0.0)
        : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, fill) {}

    double& at(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
    double at(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }

    double* row(int i) { return data.data() + static_cast<std::size_t>(i) * cols; }
    const double* row(int i) const { return data.data() + static_cast<std::size_t>(i) * cols; }

    bool same_shape(const Matrix& o) const { return rows == o.rows && cols == o.cols; }
};

using Vec = std::vector<double>;

} // namespace mushroom

#endif
