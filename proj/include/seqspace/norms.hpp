#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "seqspace/envelope.hpp"
#include "seqspace/errors.hpp"
#include "seqspace/sequence.hpp"
#include "seqspace/summation.hpp"

namespace seqspace {

/// Orlicz function M: [0, inf) -> [0, inf) with caller-certified properties.
/// M(0) = 0 is required; the normalized_at_one flag records M(1) >= 1, which
/// is what makes the coordinate functionals norm-one (condition (b2) with
/// constant 1).
struct OrliczFunction {
    std::string id;
    std::function<double(double)> eval;
    bool convex = true;
    bool nondecreasing = true;
    bool normalized_at_one = true;
};

inline OrliczFunction orlicz_power(double p) {
    return OrliczFunction{"t^" + std::to_string(p),
                          [p](double t) { return std::pow(t, p); }};
}

/// M(t) = t * log(1+t) / log(2), normalized so that M(1) = 1.
inline OrliczFunction orlicz_t_log() {
    return OrliczFunction{"t*log(1+t)/log(2)", [](double t) {
                              return t * std::log1p(t) / 0.6931471805599453094;
                          }};
}

enum class SpaceFamily { Lp, Lorentz, Orlicz, C0Target };

/// An invariant sequence space with its quasi-norm evaluator parameters.
///
/// K is the zerofree-equivalence constant; it is 1 for every implemented
/// family because zero coordinates contribute nothing to any of the
/// formulas. stilde is 1 for Banach spaces and s for s-Banach spaces; the
/// Lorentz assignment min(1, p, q) is the conservative choice.
struct SpaceDescriptor {
    SpaceFamily family = SpaceFamily::Lp;
    double p = 2.0;
    double q = 2.0;
    std::optional<OrliczFunction> orlicz;
    double K = 1.0;
    double stilde = 1.0;

    std::string family_name() const {
        switch (family) {
            case SpaceFamily::Lp: return p == kInf ? "linf" : "lp";
            case SpaceFamily::Lorentz: return "lorentz";
            case SpaceFamily::Orlicz: return "orlicz:" + (orlicz ? orlicz->id : "?");
            case SpaceFamily::C0Target: return "c0";
        }
        return "?";
    }
};

inline SpaceDescriptor lp_space(double p) {
    if (!(p > 0.0)) throw std::invalid_argument("lp_space: p must be in (0, inf]");
    SpaceDescriptor s;
    s.family = SpaceFamily::Lp;
    s.p = p;
    s.q = p;
    s.stilde = p >= 1.0 ? 1.0 : p;
    return s;
}

inline SpaceDescriptor lorentz_space(double p, double q) {
    if (!(p > 0.0) || p == kInf || !(q > 0.0) || q == kInf)
        throw std::invalid_argument("lorentz_space: p, q must be in (0, inf)");
    SpaceDescriptor s;
    s.family = SpaceFamily::Lorentz;
    s.p = p;
    s.q = q;
    s.stilde = std::min({1.0, p, q});
    return s;
}

inline SpaceDescriptor orlicz_space(OrliczFunction m) {
    SpaceDescriptor s;
    s.family = SpaceFamily::Orlicz;
    s.p = std::numeric_limits<double>::quiet_NaN();
    s.q = std::numeric_limits<double>::quiet_NaN();
    s.orlicz = std::move(m);
    s.stilde = 1.0; // convex M gives a norm
    return s;
}

inline SpaceDescriptor c0_target_space() {
    SpaceDescriptor s;
    s.family = SpaceFamily::C0Target;
    s.p = kInf;
    s.q = kInf;
    return s;
}

/// Finite surrogate for a norm value: `Partial` is a lower bound coming from
/// a truncation, `CertifiedUpper` additionally includes an envelope tail
/// bound.
enum class NormDirection { Partial, CertifiedUpper };

inline const char* to_string(NormDirection d) {
    return d == NormDirection::Partial ? "partial" : "certified-upper";
}

struct PartialNormReport {
    std::string family;
    double p = std::numeric_limits<double>::quiet_NaN();
    double q = std::numeric_limits<double>::quiet_NaN();
    Index depth = 0;
    double value = 0.0;
    NormDirection direction = NormDirection::Partial;
};

namespace detail {

inline void require_finite(double v) {
    if (!std::isfinite(v)) throw NonFiniteError("coordinate norm is NaN or infinite");
}

/// sum v^q over the span, skipping exact zeros so that a sequence and its
/// zerofree version produce bit-identical accumulator states at matched
/// truncations.
inline double lp_power_sum(std::span<const double> norms, double q) {
    KahanSum acc;
    for (double v : norms) {
        require_finite(v);
        if (v != 0.0) acc.add(std::pow(v, q));
    }
    return acc.value();
}

inline double lp_value(std::span<const double> norms, double q) {
    if (q == kInf) {
        double m = 0.0;
        for (double v : norms) {
            require_finite(v);
            m = std::max(m, v);
        }
        return m;
    }
    return std::pow(lp_power_sum(norms, q), 1.0 / q);
}

/// Non-increasing rearrangement: stable sort by descending norm keeps ties
/// in ascending original-index order, which pins the result bit-for-bit.
inline std::vector<double> rearrange(std::span<const double> norms) {
    std::vector<double> sorted(norms.begin(), norms.end());
    for (double v : sorted) require_finite(v);
    std::stable_sort(sorted.begin(), sorted.end(), std::greater<double>());
    return sorted;
}

inline double lorentz_value(std::span<const double> norms, double p, double q) {
    const std::vector<double> sorted = rearrange(norms);
    const double w = q / p - 1.0;
    KahanSum acc;
    for (std::size_t n = 0; n < sorted.size(); ++n) {
        const double v = sorted[n];
        if (v == 0.0) break; // zeros are sorted to the end
        double term = std::pow(v, q);
        if (w != 0.0) term *= std::pow(static_cast<double>(n + 1), w);
        acc.add(term);
    }
    return std::pow(acc.value(), 1.0 / q);
}

/// Luxemburg gauge inf{rho > 0 : sum M(v_n / rho) <= 1} by bracketing and
/// bisection. Returns the feasible (upper) end of the final bracket, so the
/// result is always >= the true gauge and condition (b2) survives rounding.
inline double orlicz_value(std::span<const double> norms, const OrliczFunction& m,
                           double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("orlicz_value: tol must be > 0");
    double maxv = 0.0;
    for (double v : norms) {
        require_finite(v);
        maxv = std::max(maxv, v);
    }
    if (maxv == 0.0) return 0.0; // zero-sequence convention

    const auto level_sum = [&](double rho) {
        KahanSum acc;
        for (double v : norms)
            if (v != 0.0) acc.add(m.eval(v / rho));
        return acc.value();
    };

    double hi = maxv;
    int guard = 0;
    while (level_sum(hi) > 1.0) {
        hi *= 2.0;
        if (++guard > 2000) throw NoBracketError("orlicz gauge: no feasible rho found");
    }
    double lo = hi * 0.5;
    guard = 0;
    while (level_sum(lo) <= 1.0) {
        hi = lo;
        lo *= 0.5;
        if (++guard > 2000 || lo < maxv * 1e-300)
            throw NoBracketError("orlicz gauge: level sum never exceeds 1 (degenerate M)");
    }
    for (int it = 0; it < 200 && (hi - lo) > tol * 0.5 * (hi + lo); ++it) {
        const double mid = 0.5 * (lo + hi);
        if (level_sum(mid) <= 1.0)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

/// Quasi-norm value on an explicit list of coordinate norms.
inline double space_value(const SpaceDescriptor& space, std::span<const double> norms,
                          double tol = 1e-12) {
    switch (space.family) {
        case SpaceFamily::Lp: return lp_value(norms, space.p);
        case SpaceFamily::Lorentz: return lorentz_value(norms, space.p, space.q);
        case SpaceFamily::Orlicz: return orlicz_value(norms, *space.orlicz, tol);
        case SpaceFamily::C0Target: return lp_value(norms, kInf);
    }
    throw std::logic_error("space_value: unreachable");
}

inline std::vector<double> coordinate_norms(const ComputableSequence& x, Index n_depth) {
    std::vector<double> norms;
    norms.reserve(static_cast<std::size_t>(n_depth));
    for (Index n = 1; n <= n_depth; ++n) norms.push_back(x.coordinate_norm(n));
    return norms;
}

} // namespace detail

/// Partial q-norm (sum_{n<=N} ||x_n||^q)^{1/q}, or max_{n<=N} ||x_n|| for
/// q = inf. A lower bound for the true value; nondecreasing in N.
inline PartialNormReport lp_partial(const ComputableSequence& x, double q, Index n_depth) {
    if (!(q > 0.0)) throw std::invalid_argument("lp_partial: q must be in (0, inf]");
    PartialNormReport r;
    r.family = q == kInf ? "linf" : "lp";
    r.q = q;
    r.depth = n_depth;
    r.direction = NormDirection::Partial;
    if (q == kInf) {
        double m = 0.0;
        for (Index n = 1; n <= n_depth; ++n) {
            const double v = x.coordinate_norm(n);
            detail::require_finite(v);
            m = std::max(m, v);
        }
        r.value = m;
        return r;
    }
    KahanSum acc;
    for (Index n = 1; n <= n_depth; ++n) {
        const double v = x.coordinate_norm(n);
        detail::require_finite(v);
        if (v != 0.0) acc.add(std::pow(v, q));
    }
    r.value = std::pow(acc.value(), 1.0 / q);
    return r;
}

/// Lorentz partial value (sum_{n<=N} n^{q/p-1} (x*_n)^q)^{1/q} on the
/// non-increasing rearrangement x* of the first N coordinate norms.
inline PartialNormReport lorentz_partial(const ComputableSequence& x, double p, double q,
                                         Index n_depth) {
    const std::vector<double> norms = detail::coordinate_norms(x, n_depth);
    PartialNormReport r;
    r.family = "lorentz";
    r.p = p;
    r.q = q;
    r.depth = n_depth;
    r.value = detail::lorentz_value(norms, p, q);
    r.direction = NormDirection::Partial;
    return r;
}

/// Luxemburg gauge of the truncation (see detail::orlicz_value).
inline PartialNormReport orlicz_luxemburg(const ComputableSequence& x, const OrliczFunction& m,
                                          Index n_depth, double tol = 1e-9) {
    const std::vector<double> norms = detail::coordinate_norms(x, n_depth);
    PartialNormReport r;
    r.family = "orlicz:" + m.id;
    r.depth = n_depth;
    r.value = detail::orlicz_value(norms, m, tol);
    r.direction = NormDirection::Partial;
    return r;
}

/// Family dispatcher on truncations.
inline PartialNormReport space_partial(const SpaceDescriptor& space, const ComputableSequence& x,
                                       Index n_depth, double tol = 1e-12) {
    switch (space.family) {
        case SpaceFamily::Lp: return lp_partial(x, space.p, n_depth);
        case SpaceFamily::Lorentz: return lorentz_partial(x, space.p, space.q, n_depth);
        case SpaceFamily::Orlicz: return orlicz_luxemburg(x, *space.orlicz, n_depth, tol);
        case SpaceFamily::C0Target: return lp_partial(x, kInf, n_depth);
    }
    throw std::logic_error("space_partial: unreachable");
}

/// Result of a threshold search on partial q-sums. `crossed == false` is a
/// value, not an error: the partial sums did not exceed the threshold within
/// the cap, which is no membership proof either way.
struct DivergenceCertificate {
    bool crossed = false;
    Index depth = 0;    // smallest N with lp_partial(x, q, N) > threshold
    double value = 0.0; // partial value at `depth`
    double exponent = 0.0;
    double threshold = 0.0;
};

/// Finds the smallest N <= n_max with lp_partial(x, q, N) > threshold.
///
/// Single compensated forward scan with a per-term check in the power
/// domain; partial sums are nondecreasing, so the first crossing found this
/// way is exact (a doubling search plus bisection would re-evaluate the same
/// prefix sums several times over).
inline DivergenceCertificate divergence_certificate(const ComputableSequence& x, double q,
                                                    double threshold, Index n_max) {
    if (!(threshold > 0.0))
        throw std::invalid_argument("divergence_certificate: threshold must be > 0");
    if (!(q > 0.0)) throw std::invalid_argument("divergence_certificate: q must be in (0, inf]");
    DivergenceCertificate cert;
    cert.exponent = q;
    cert.threshold = threshold;
    if (q == kInf) {
        double m = 0.0;
        for (Index n = 1; n <= n_max; ++n) {
            const double v = x.coordinate_norm(n);
            detail::require_finite(v);
            m = std::max(m, v);
            if (m > threshold) {
                cert.crossed = true;
                cert.depth = n;
                cert.value = m;
                return cert;
            }
        }
        cert.depth = n_max;
        cert.value = m;
        return cert;
    }
    const double threshold_power = std::pow(threshold, q);
    KahanSum acc;
    for (Index n = 1; n <= n_max; ++n) {
        const double v = x.coordinate_norm(n);
        detail::require_finite(v);
        if (v != 0.0) acc.add(std::pow(v, q));
        if (acc.value() > threshold_power) {
            cert.crossed = true;
            cert.depth = n;
            cert.value = std::pow(acc.value(), 1.0 / q);
            return cert;
        }
    }
    cert.depth = n_max;
    cert.value = std::pow(acc.value(), 1.0 / q);
    return cert;
}

/// Upper bound on the tail sum_{n>N} ||x_n||^q from a declared envelope.
/// The declaration ||x_n|| <= g(n) is the caller's guarantee; it is spot
/// checked on a sparse grid of indices beyond N (a sanity net, not a proof).
inline double lp_tail_upper_bound(const ComputableSequence& x, double q, Index n_depth,
                                  const Envelope& envelope) {
    const double tail = envelope.tail_power_sum_upper(q, n_depth);
    std::vector<Index> probes = {n_depth + 1, n_depth + 2};
    for (Index mult : {Index{2}, Index{16}, Index{256}})
        if (n_depth <= std::numeric_limits<Index>::max() / mult) probes.push_back(mult * n_depth);
    for (Index n : probes) {
        if (n <= n_depth) continue;
        const double v = x.coordinate_norm(n);
        const double g = envelope.value(n);
        if (v > g * (1.0 + 1e-12))
            throw Error("lp_tail_upper_bound: envelope does not dominate the sequence");
    }
    return tail;
}

/// Certified upper bound on the q-norm: partial power sum plus envelope
/// tail. For q = inf: max of the partial sup and the envelope sup.
inline PartialNormReport lp_certified_upper(const ComputableSequence& x, double q, Index n_depth,
                                            const Envelope& envelope) {
    PartialNormReport r = lp_partial(x, q, n_depth);
    r.direction = NormDirection::CertifiedUpper;
    if (q == kInf) {
        r.value = std::max(r.value, envelope.sup_beyond(n_depth));
        return r;
    }
    const double partial_power = std::pow(r.value, q);
    const double tail = lp_tail_upper_bound(x, q, n_depth, envelope);
    r.value = std::pow(partial_power + tail, 1.0 / q);
    return r;
}

/// Certified upper bound on the Lorentz (p,q) value for a witness whose
/// coordinate norms are nonincreasing (so the rearrangement is the
/// identity): weighted partial power sum plus the shifted power-log tail.
inline PartialNormReport lorentz_certified_upper(const ComputableSequence& x, double p, double q,
                                                 Index n_depth, const Envelope& envelope,
                                                 bool norms_nonincreasing) {
    if (!norms_nonincreasing)
        throw std::invalid_argument(
            "lorentz_certified_upper: needs a nonincreasing witness (rearrangement unknown)");
    if (envelope.kind() != Envelope::Kind::Power && envelope.kind() != Envelope::Kind::PowerLog)
        throw std::invalid_argument("lorentz_certified_upper: envelope shape unsupported");
    // Terms beyond N: n^{q/p-1} g(n)^q = c^q n^{-(aq - q/p + 1)} log(n+1)^{-bq}.
    const double shifted_a = envelope.power_exponent() * q - (q / p - 1.0);
    const double shifted_b = envelope.log_exponent() * q;
    if (shifted_a < 0.0)
        throw EnvelopeDivergesError("lorentz tail: weighted envelope is not decreasing");
    const Envelope shifted =
        Envelope::power_log(std::pow(envelope.scale(), q), shifted_a, shifted_b);
    const double tail = shifted.tail_power_sum_upper(1.0, n_depth);

    PartialNormReport r = lorentz_partial(x, p, q, n_depth);
    r.direction = NormDirection::CertifiedUpper;
    r.value = std::pow(std::pow(r.value, q) + tail, 1.0 / q);
    return r;
}

/// Per-sample outcome of the invariant-sequence-space axiom checks.
struct AxiomsRow {
    std::size_t sample = 0;
    Index nonzero_count = 0;
    double norm_full = 0.0;    // ||x|| on the first N coordinates
    double norm_zerofree = 0.0; // ||x^0|| at the matching truncation depth
    double b1_relative_gap = 0.0;
    double b2_violation = 0.0; // max_j ||x_j|| - ||x||  (<= 0 means (b2) holds)
};

struct AxiomsReport {
    double K = 1.0;
    double max_b1_relative_gap = 0.0;
    double max_b2_violation = 0.0;
    std::vector<AxiomsRow> rows;

    bool pass(double b1_tol) const {
        return max_b1_relative_gap <= b1_tol && max_b2_violation <= 0.0;
    }
};

/// Empirical check of Definition (b1)/(b2) on truncations.
///
/// (b1): ||x|| <= K ||x^0|| with K = 1 and equality expected for every
/// implemented family, measured at matching truncation depths (the zerofree
/// version is truncated at the number of nonzero coordinates seen in the
/// first N of x). (b2): ||x_j|| <= ||x|| for every j <= N.
inline AxiomsReport check_axioms(const SpaceDescriptor& space,
                                 const std::vector<ComputableSequence>& samples, Index n_depth,
                                 double orlicz_tol = 1e-12) {
    AxiomsReport report;
    report.K = space.K;
    for (std::size_t s = 0; s < samples.size(); ++s) {
        const std::vector<double> norms = detail::coordinate_norms(samples[s], n_depth);
        std::vector<double> nonzero;
        nonzero.reserve(norms.size());
        for (double v : norms)
            if (v != 0.0) nonzero.push_back(v);

        AxiomsRow row;
        row.sample = s;
        row.nonzero_count = nonzero.size();
        row.norm_full = detail::space_value(space, norms, orlicz_tol);
        row.norm_zerofree = detail::space_value(space, nonzero, orlicz_tol);
        const double denom = std::max(row.norm_zerofree, 1e-300);
        row.b1_relative_gap = std::abs(row.norm_full - row.norm_zerofree) / denom;
        double worst = -kInf;
        for (double v : norms) worst = std::max(worst, v - row.norm_full);
        row.b2_violation = worst;

        report.max_b1_relative_gap = std::max(report.max_b1_relative_gap, row.b1_relative_gap);
        report.max_b2_violation = std::max(report.max_b2_violation, row.b2_violation);
        report.rows.push_back(row);
    }
    return report;
}

} // namespace seqspace
