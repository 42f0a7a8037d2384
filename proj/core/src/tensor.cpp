#include "stylepipe/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <thread>

namespace stylepipe {

namespace {
std::size_t element_count(const std::vector<std::size_t>& shape) {
    if (shape.empty()) return 0;
    std::size_t n = 1;
    for (std::size_t d : shape) n *= d;
    return n;
}
}  // namespace

Tensor::Tensor(std::vector<std::size_t> shape)
    : shape_(std::move(shape)), data_(element_count(shape_), 0.0) {}

Tensor::Tensor(std::vector<std::size_t> shape, double fill)
    : shape_(std::move(shape)), data_(element_count(shape_), fill) {}

Tensor::Tensor(std::vector<std::size_t> shape, std::vector<double> values)
    : shape_(std::move(shape)), data_(std::move(values)) {
    if (data_.size() != element_count(shape_)) {
        throw InvalidArgumentError("Tensor: value count does not match shape");
    }
}

bool Tensor::all_finite() const {
    for (double v : data_) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

double Tensor::min() const {
    return data_.empty() ? 0.0 : *std::min_element(data_.begin(), data_.end());
}

double Tensor::max() const {
    return data_.empty() ? 0.0 : *std::max_element(data_.begin(), data_.end());
}

double Tensor::sum() const {
    return std::accumulate(data_.begin(), data_.end(), 0.0);
}

double Tensor::mean() const {
    return data_.empty() ? 0.0 : sum() / static_cast<double>(data_.size());
}

void Tensor::fill(double v) { std::fill(data_.begin(), data_.end(), v); }

void Tensor::add_scaled(const Tensor& other, double s) {
    if (!same_shape(other)) {
        throw InvalidArgumentError("Tensor::add_scaled: shape mismatch");
    }
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += s * other.data_[i];
}

void Tensor::scale(double s) {
    for (double& v : data_) v *= s;
}

std::uint64_t Tensor::checksum() const {
    std::uint64_t h = fnv1a64(data_.data(), data_.size() * sizeof(double));
    for (std::size_t d : shape_) h = fnv1a64(&d, sizeof(d), h);
    return h;
}

void Tensor::fill_uniform(Rng& rng, double lo, double hi) {
    for (double& v : data_) v = rng.uniform(lo, hi);
}

double max_abs_diff(const Tensor& a, const Tensor& b) {
    if (!a.same_shape(b)) {
        throw InvalidArgumentError("max_abs_diff: shape mismatch");
    }
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

double mean_sq_diff_value(const Tensor& a, const Tensor& b) {
    if (!a.same_shape(b)) {
        throw InvalidArgumentError("mean_sq_diff_value: shape mismatch");
    }
    if (a.size() == 0) return 0.0;
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        acc += d * d;
    }
    return acc / static_cast<double>(a.size());
}

void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& chunk_fn,
                  std::size_t min_chunk) {
    if (n == 0) return;
    const std::size_t hw = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    const std::size_t workers = std::min(hw, std::max<std::size_t>(1, n / min_chunk));
    if (workers <= 1) {
        chunk_fn(0, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(n, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&, begin, end] { chunk_fn(begin, end); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace stylepipe
