/**
 * @file tensor.hpp
 * @brief Dense double-precision tensor with a small rank (<= 4).
 *
 * The whole library computes in double so that finite-difference gradient
 * checks are meaningful and metric accumulations stay exact at desk scale.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "stylepipe/common.hpp"

namespace stylepipe {

class Tensor {
public:
    Tensor() = default;
    explicit Tensor(std::vector<std::size_t> shape);
    Tensor(std::vector<std::size_t> shape, double fill);
    Tensor(std::vector<std::size_t> shape, std::vector<double> values);

    static Tensor zeros_like(const Tensor& other) { return Tensor(other.shape_); }
    static Tensor scalar(double v) { return Tensor({1}, {v}); }

    const std::vector<std::size_t>& shape() const { return shape_; }
    std::size_t rank() const { return shape_.size(); }
    std::size_t dim(std::size_t i) const { return shape_[i]; }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    double& operator[](std::size_t i) { return data_[i]; }
    double operator[](std::size_t i) const { return data_[i]; }

    // Rank-3 (C,H,W) accessors; the dominant layout in this library.
    double& at(std::size_t c, std::size_t h, std::size_t w) {
        return data_[(c * shape_[1] + h) * shape_[2] + w];
    }
    double at(std::size_t c, std::size_t h, std::size_t w) const {
        return data_[(c * shape_[1] + h) * shape_[2] + w];
    }

    // Rank-4 (O,I,Kh,Kw) accessor for convolution weights.
    double& at4(std::size_t o, std::size_t i, std::size_t h, std::size_t w) {
        return data_[((o * shape_[1] + i) * shape_[2] + h) * shape_[3] + w];
    }
    double at4(std::size_t o, std::size_t i, std::size_t h, std::size_t w) const {
        return data_[((o * shape_[1] + i) * shape_[2] + h) * shape_[3] + w];
    }

    bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }
    bool all_finite() const;

    double min() const;
    double max() const;
    double sum() const;
    double mean() const;

    void fill(double v);
    void add_scaled(const Tensor& other, double scale);  // *this += scale * other
    void scale(double s);

    /// FNV-1a over the raw bytes; used for determinism checks and manifests.
    std::uint64_t checksum() const;

    /// Fill with uniform values in [lo, hi) drawn from rng.
    void fill_uniform(Rng& rng, double lo, double hi);

private:
    std::vector<std::size_t> shape_;
    std::vector<double> data_;
};

/// Max over elements of |a - b|; shapes must match.
double max_abs_diff(const Tensor& a, const Tensor& b);

/// Mean of (a - b)^2 over all elements; shapes must match.
double mean_sq_diff_value(const Tensor& a, const Tensor& b);

}  // namespace stylepipe
