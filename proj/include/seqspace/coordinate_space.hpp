#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

#include "seqspace/vec.hpp"

namespace seqspace {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Finite-dimensional realization of the coordinate Banach space X, with an
/// r-norm. dim == 1 recovers the scalar field case, where every exponent
/// gives the absolute value.
///
/// For exponent >= 1 the norm satisfies the triangle inequality; for
/// exponent s in (0,1) it is an s-norm: |a+b|^s <= |a|^s + |b|^s.
struct CoordinateSpace {
    std::size_t dim = 1;
    double exponent = 2.0; // r in (0, inf]; kInf selects the sup norm

    void validate() const {
        if (dim < 1 || dim > Vec::kMaxDim)
            throw std::invalid_argument("CoordinateSpace: dim outside [1, kMaxDim]");
        if (!(exponent > 0.0))
            throw std::invalid_argument("CoordinateSpace: exponent must be in (0, inf]");
    }
};

inline CoordinateSpace scalar_space() { return CoordinateSpace{1, 2.0}; }

inline CoordinateSpace make_coordinate_space(std::size_t dim, double exponent) {
    CoordinateSpace s{dim, exponent};
    s.validate();
    return s;
}

/// r-norm of a coordinate vector.
inline double vector_norm(const CoordinateSpace& space, const Vec& v) {
    if (v.size() != space.dim) throw std::invalid_argument("vector_norm: dimension mismatch");
    if (space.dim == 1) return std::abs(v[0]);
    if (space.exponent == kInf) {
        double m = 0.0;
        for (double x : v) m = std::max(m, std::abs(x));
        return m;
    }
    const double r = space.exponent;
    double s = 0.0;
    for (double x : v)
        if (x != 0.0) s += std::pow(std::abs(x), r);
    return std::pow(s, 1.0 / r);
}

} // namespace seqspace
