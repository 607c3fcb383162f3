#pragma once

#include <array>
#include <cstddef>
#include <cstring>
#include <initializer_list>
#include <stdexcept>

namespace seqspace {

/// Coordinate vector of a finite-dimensional realization of X.
///
/// Fixed inline capacity keeps sequence evaluation allocation-free, which
/// matters for the deep index scans done by divergence certification.
class Vec {
public:
    static constexpr std::size_t kMaxDim = 8;

    Vec() = default;

    explicit Vec(std::size_t dim, double fill = 0.0) : size_(dim) {
        check_dim(dim);
        for (std::size_t k = 0; k < dim; ++k) data_[k] = fill;
    }

    Vec(std::initializer_list<double> xs) : size_(xs.size()) {
        check_dim(xs.size());
        std::size_t k = 0;
        for (double x : xs) data_[k++] = x;
    }

    static Vec scalar(double x) { return Vec{x}; }
    static Vec zero(std::size_t dim) { return Vec(dim, 0.0); }

    std::size_t size() const { return size_; }
    double operator[](std::size_t k) const { return data_[k]; }
    double& operator[](std::size_t k) { return data_[k]; }

    const double* begin() const { return data_.data(); }
    const double* end() const { return data_.data() + size_; }

    /// True iff every component is exactly zero. Zero detection is exact by
    /// contract; there is no epsilon-thresholding anywhere in the library.
    bool is_zero() const {
        for (std::size_t k = 0; k < size_; ++k)
            if (data_[k] != 0.0) return false;
        return true;
    }

    /// Componentwise scaling with exactly one multiplication per component.
    Vec scaled(double c) const {
        Vec out;
        out.size_ = size_;
        for (std::size_t k = 0; k < size_; ++k) out.data_[k] = c * data_[k];
        return out;
    }

    friend Vec operator-(const Vec& a, const Vec& b) {
        if (a.size_ != b.size_) throw std::invalid_argument("Vec: dimension mismatch");
        Vec out;
        out.size_ = a.size_;
        for (std::size_t k = 0; k < a.size_; ++k) out.data_[k] = a.data_[k] - b.data_[k];
        return out;
    }

    friend bool operator==(const Vec& a, const Vec& b) {
        if (a.size_ != b.size_) return false;
        for (std::size_t k = 0; k < a.size_; ++k)
            if (a.data_[k] != b.data_[k]) return false;
        return true;
    }

private:
    static void check_dim(std::size_t dim) {
        if (dim > kMaxDim) throw std::length_error("Vec: dimension exceeds kMaxDim");
    }

    std::array<double, kMaxDim> data_{};
    std::size_t size_ = 0;
};

/// Bit-level equality, used by determinism tests (distinguishes -0.0, NaN).
inline bool bit_identical(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) return false;
    return std::memcmp(a.begin(), b.begin(), a.size() * sizeof(double)) == 0;
}

} // namespace seqspace
