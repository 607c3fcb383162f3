#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seqspace/block_partition.hpp"
#include "seqspace/coordinate_space.hpp"
#include "seqspace/errors.hpp"
#include "seqspace/norms.hpp"
#include "seqspace/random.hpp"
#include "seqspace/summation.hpp"
#include "seqspace/vec.hpp"

namespace seqspace {

/// Norm-one vector of the domain space at which attainment is claimed.
struct AttainmentPoint {
    Vec x0;
};

inline AttainmentPoint make_attainment_point(const CoordinateSpace& domain, Vec x0) {
    if (x0.is_zero()) throw DegenerateDirectionError("attainment point must be nonzero");
    const double norm = vector_norm(domain, x0);
    if (std::abs(norm - 1.0) > 1e-12)
        throw std::invalid_argument("make_attainment_point: ||x0|| must be 1 within 1e-12");
    return AttainmentPoint{x0};
}

inline AttainmentPoint normalized_attainment_point(const CoordinateSpace& domain, Vec v) {
    if (v.is_zero()) throw DegenerateDirectionError("cannot normalize the zero vector");
    return make_attainment_point(domain, v.scaled(1.0 / vector_norm(domain, v)));
}

/// Explicit dual-norming covector of a norm-one x0 for the r-norm: the
/// r'-normalized sign pattern. phi(x0) = 1 and ||phi||_{r'} = 1.
inline Vec norming_functional(const CoordinateSpace& domain, const Vec& x0) {
    if (x0.is_zero()) throw DegenerateDirectionError("norming functional of the zero vector");
    const double r = domain.exponent;
    Vec phi(x0.size());
    if (r == kInf) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < x0.size(); ++k)
            if (std::abs(x0[k]) > std::abs(x0[best])) best = k;
        phi[best] = x0[best] > 0 ? 1.0 : -1.0;
        return phi;
    }
    if (r < 1.0)
        throw std::invalid_argument("norming_functional: domain exponent must be in [1, inf]");
    for (std::size_t k = 0; k < x0.size(); ++k) {
        if (x0[k] == 0.0) continue;
        const double sign = x0[k] > 0 ? 1.0 : -1.0;
        phi[k] = r == 1.0 ? sign : sign * std::pow(std::abs(x0[k]), r - 1.0);
    }
    return phi;
}

inline double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

/// Rank-one factorization u = phi (x) w kept alongside the rows; it enables
/// closed-form operator norms in the exact attainment modes.
struct RankOneData {
    Vec phi;
    std::vector<double> w;
};

/// Finite-rank operator u: (K^d, r-norm) -> lq, given by its coordinate
/// covectors: output coordinate t of u(x) is <rows[t-1], x>.
struct FiniteOperator {
    CoordinateSpace domain;
    std::vector<Vec> rows;
    double target_q = 2.0;
    std::optional<RankOneData> rank_one;
    std::optional<AttainmentPoint> attains_at;

    std::vector<double> apply(const Vec& x) const {
        std::vector<double> out;
        out.reserve(rows.size());
        for (const Vec& row : rows) out.push_back(dot(row, x));
        return out;
    }

    double apply_norm(const Vec& x) const {
        std::vector<double> out = apply(x);
        for (double& v : out) v = std::abs(v);
        return detail::lp_value(out, target_q);
    }
};

/// Builds the rank-one operator u = phi (x) w known to attain its norm at
/// x0: ||u|| = ||w||_q is reached because |phi(x0)| = 1 = ||phi||_{r'}.
inline FiniteOperator make_attaining(const CoordinateSpace& domain, const AttainmentPoint& x0,
                                     std::vector<double> w, double q) {
    if (!(q >= 1.0) || q == kInf)
        throw std::invalid_argument("make_attaining: target exponent q must be in [1, inf)");
    bool any = false;
    for (double c : w) any = any || c != 0.0;
    if (!any) throw std::invalid_argument("make_attaining: w must be nonzero");

    const Vec phi = norming_functional(domain, x0.x0);
    FiniteOperator u;
    u.domain = domain;
    u.target_q = q;
    u.rows.reserve(w.size());
    for (double wt : w) u.rows.push_back(phi.scaled(wt));
    u.rank_one = RankOneData{phi, std::move(w)};
    u.attains_at = x0;
    return u;
}

/// Sparse element of lq: (index, value) pairs with strictly increasing
/// indices.
using SparseLq = std::vector<std::pair<Index, double>>;

inline double sparse_lq_norm(const SparseLq& entries, double q) {
    KahanSum acc;
    for (const auto& [n, v] : entries)
        if (v != 0.0) acc.add(std::pow(std::abs(v), q));
    return std::pow(acc.value(), 1.0 / q);
}

/// u^{(k)}: u with its output relocated into block k of the partition;
/// output coordinate t moves to lq index block_index(k, t). Pure
/// re-indexing, so ||u^{(k)}(x)||_q = ||u(x)||_q with bit-identical
/// coordinate multisets.
struct LiftedOperator {
    FiniteOperator base;
    Index block = 1;

    SparseLq apply(const Vec& x) const {
        SparseLq out;
        out.reserve(base.rows.size());
        for (std::size_t t = 1; t <= base.rows.size(); ++t)
            out.emplace_back(block_index(block, t), dot(base.rows[t - 1], x));
        return out;
    }
};

inline LiftedOperator lift(const FiniteOperator& u, Index k) {
    if (k < 1) throw std::invalid_argument("lift: block index must be >= 1");
    return LiftedOperator{u, k};
}

/// T(a) = sum_k a_k u^{(k)}: the lifted family spanned by one attaining
/// operator. Outputs of distinct lifts occupy disjoint blocks, so
/// ||T(a)(x)||_q = ||a||_q * ||u(x)||_q holds as a finite computable
/// identity.
struct LiftedFamily {
    FiniteOperator base;
    std::vector<double> coefficients;

    SparseLq apply(const Vec& x) const {
        const std::vector<double> ux = base.apply(x);
        SparseLq out;
        for (std::size_t k = 1; k <= coefficients.size(); ++k) {
            const double ak = coefficients[k - 1];
            if (ak == 0.0) continue;
            for (std::size_t t = 1; t <= ux.size(); ++t)
                out.emplace_back(block_index(k, t), ak * ux[t - 1]);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    double apply_norm(const Vec& x) const { return sparse_lq_norm(apply(x), base.target_q); }
};

inline LiftedFamily na_combine(std::vector<double> a, FiniteOperator u) {
    return LiftedFamily{std::move(u), std::move(a)};
}

enum class AttainmentMode { Exact, Sampled };

struct AttainmentReport {
    std::size_t d = 0;
    double r = 0.0;
    double q = 0.0;
    std::size_t m = 0;
    double value_at_x0 = 0.0;  // ||T(a)(x0)||_q
    double analytic_norm = 0.0; // ||a||_q * ||u(x0)||_q
    double max_found = 0.0;     // largest ||T(a)(x)||_q over the probes
    double max_ratio = 0.0;     // max_found / value_at_x0
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    double tolerance = 0.0;
    std::string mode;

    bool pass() const { return max_found <= value_at_x0 + tolerance; }
};

/// Verifies attainment of T(a) at the base operator's attainment point.
///
/// Exact mode enumerates the extreme points for r = 1 (basis directions) or
/// uses the rank-one closed form for r = 2; otherwise a seeded unit-sphere
/// search provides a lower bound on the operator norm that must not exceed
/// the value at x0.
inline AttainmentReport attainment_check(const LiftedFamily& family, AttainmentMode mode,
                                         std::uint64_t sample_count = 10000,
                                         std::uint64_t seed = 0, double tol = 1e-9) {
    if (!family.base.attains_at)
        throw std::invalid_argument("attainment_check: operator has no attainment point");
    const CoordinateSpace& domain = family.base.domain;
    const Vec& x0 = family.base.attains_at->x0;

    AttainmentReport report;
    report.d = domain.dim;
    report.r = domain.exponent;
    report.q = family.base.target_q;
    report.m = family.coefficients.size();
    report.seed = seed;
    report.tolerance = tol;
    report.value_at_x0 = family.apply_norm(x0);

    std::vector<double> abs_a;
    for (double c : family.coefficients) abs_a.push_back(std::abs(c));
    const double a_norm = detail::lp_value(abs_a, family.base.target_q);
    report.analytic_norm = a_norm * family.base.apply_norm(x0);

    double max_found = 0.0;
    if (mode == AttainmentMode::Exact && domain.exponent == 1.0) {
        report.mode = "exact-r1";
        for (std::size_t k = 0; k < domain.dim; ++k) {
            Vec e(domain.dim);
            e[k] = 1.0;
            max_found = std::max(max_found, family.apply_norm(e));
        }
        report.samples = domain.dim;
    } else if (mode == AttainmentMode::Exact && domain.exponent == 2.0 &&
               family.base.rank_one) {
        report.mode = "exact-r2-rank-one";
        const RankOneData& r1 = *family.base.rank_one;
        std::vector<double> abs_w;
        for (double wt : r1.w) abs_w.push_back(std::abs(wt));
        const double phi_norm = vector_norm(CoordinateSpace{domain.dim, 2.0}, r1.phi);
        max_found = phi_norm * a_norm * detail::lp_value(abs_w, family.base.target_q);
        report.samples = 0;
    } else {
        if (mode == AttainmentMode::Exact)
            throw std::invalid_argument(
                "attainment_check: exact mode needs r = 1, or r = 2 with rank-one data");
        report.mode = "sampled";
        Rng rng(seed);
        for (std::uint64_t s = 0; s < sample_count; ++s) {
            const Vec x = sample_unit_vector(rng, domain);
            max_found = std::max(max_found, family.apply_norm(x));
        }
        report.samples = sample_count;
    }
    report.max_found = max_found;
    report.max_ratio = report.value_at_x0 > 0 ? max_found / report.value_at_x0 : kInf;
    return report;
}

/// sum_k ||a_k u^{(k)}|| for a rank-one attaining base operator; equals
/// ||u(x0)|| * sum |a_k| because every lift preserves the operator norm.
inline double family_l1_sum(const LiftedFamily& family) {
    if (!family.base.attains_at)
        throw std::invalid_argument("family_l1_sum: operator has no attainment point");
    const double base_norm = family.base.apply_norm(family.base.attains_at->x0);
    KahanSum acc;
    for (double c : family.coefficients)
        if (c != 0.0) acc.add(std::abs(c) * base_norm);
    return acc.value();
}

/// Linear independence of T(a^{(1)}), ..., T(a^{(n)}), decided by the rank
/// of the coefficient matrix (valid because the lifts occupy disjoint
/// blocks). Gaussian elimination with partial pivoting.
inline bool family_independence(const FiniteOperator&,
                                std::vector<std::vector<double>> coefficient_vectors) {
    const std::size_t n = coefficient_vectors.size();
    if (n == 0) return true;
    std::size_t width = 0;
    for (const auto& v : coefficient_vectors) width = std::max(width, v.size());
    for (auto& v : coefficient_vectors) v.resize(width, 0.0);
    if (n > width) return false;

    std::size_t rank = 0;
    for (std::size_t col = 0; col < width && rank < n; ++col) {
        std::size_t pivot = rank;
        for (std::size_t row = rank + 1; row < n; ++row)
            if (std::abs(coefficient_vectors[row][col]) >
                std::abs(coefficient_vectors[pivot][col]))
                pivot = row;
        if (std::abs(coefficient_vectors[pivot][col]) < 1e-14) continue;
        std::swap(coefficient_vectors[pivot], coefficient_vectors[rank]);
        const double lead = coefficient_vectors[rank][col];
        for (std::size_t row = rank + 1; row < n; ++row) {
            const double f = coefficient_vectors[row][col] / lead;
            for (std::size_t c2 = col; c2 < width; ++c2)
                coefficient_vectors[row][c2] -= f * coefficient_vectors[rank][c2];
        }
        ++rank;
    }
    return rank == n;
}

} // namespace seqspace
