#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace mfg {

/// Scalar function of time sampled at the nt+1 time nodes.
using ScalarPath = std::vector<double>;

/// Scalar function on the (time x space) grid, shape (nt+1) x (nx+1),
/// stored row-major with one row per time node.
class Field {
public:
    Field() = default;
    Field(std::size_t time_nodes, std::size_t space_nodes, double value = 0.0)
        : rows_(time_nodes), cols_(space_nodes), data_(time_nodes * space_nodes, value) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double operator()(std::size_t n, std::size_t i) const { return data_[n * cols_ + i]; }
    double& operator()(std::size_t n, std::size_t i) { return data_[n * cols_ + i]; }

    std::span<const double> row(std::size_t n) const {
        return std::span<const double>(data_.data() + n * cols_, cols_);
    }
    std::span<double> row(std::size_t n) {
        return std::span<double>(data_.data() + n * cols_, cols_);
    }

    const std::vector<double>& data() const { return data_; }

    friend bool operator==(const Field&, const Field&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

} // namespace mfg
