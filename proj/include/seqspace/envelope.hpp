#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "seqspace/block_partition.hpp"
#include "seqspace/errors.hpp"

namespace seqspace {

/// Monotone nonincreasing dominating formula g with closed-form tail bounds,
/// used as membership-certificate data: the caller declares ||x_n|| <= g(n).
///
/// Supported shapes:
///   Constant:  g(n) = c
///   Geometric: g(n) = c * r^n,                      0 < r < 1
///   Power:     g(n) = c * n^{-a},                   a > 0
///   PowerLog:  g(n) = c * n^{-a} * log(n+1)^{-b},   a >= 0, b >= 0
class Envelope {
public:
    enum class Kind { Constant, Geometric, Power, PowerLog };

    static Envelope constant(double c) { return Envelope(Kind::Constant, c, 0, 0, 0); }
    static Envelope geometric(double c, double ratio) {
        if (!(ratio > 0.0 && ratio < 1.0))
            throw std::invalid_argument("Envelope::geometric: ratio must be in (0,1)");
        return Envelope(Kind::Geometric, c, ratio, 0, 0);
    }
    static Envelope power(double c, double a) {
        if (!(a > 0.0)) throw std::invalid_argument("Envelope::power: a must be > 0");
        return Envelope(Kind::Power, c, 0, a, 0);
    }
    static Envelope power_log(double c, double a, double b) {
        if (a < 0.0 || b < 0.0)
            throw std::invalid_argument("Envelope::power_log: a, b must be >= 0");
        return Envelope(Kind::PowerLog, c, 0, a, b);
    }

    Kind kind() const { return kind_; }
    double scale() const { return c_; }
    double power_exponent() const { return a_; }
    double log_exponent() const { return b_; }

    /// Envelope for a sequence scaled by |factor|.
    Envelope scaled(double factor) const {
        Envelope e = *this;
        e.c_ *= std::abs(factor);
        return e;
    }

    /// True iff g(n) -> 0, i.e. the envelope certifies a null sequence.
    bool vanishes() const { return kind_ != Kind::Constant || c_ == 0.0; }

    double value(Index n) const {
        const double t = static_cast<double>(n);
        switch (kind_) {
            case Kind::Constant: return c_;
            case Kind::Geometric: return c_ * std::pow(r_, t);
            case Kind::Power: return c_ * std::pow(t, -a_);
            case Kind::PowerLog:
                return c_ * std::pow(t, -a_) * std::pow(std::log(t + 1.0), -b_);
        }
        return 0.0;
    }

    /// Upper bound on sum_{n>N} g(n)^q via geometric series or integral
    /// test. Throws EnvelopeDivergesError when the tail is infinite, which
    /// means no membership certificate exists at this exponent.
    double tail_power_sum_upper(double q, Index n_from) const {
        if (!(q > 0.0)) throw std::invalid_argument("tail_power_sum_upper: q must be > 0");
        const double cq = std::pow(c_, q);
        const double nf = static_cast<double>(n_from);
        switch (kind_) {
            case Kind::Constant:
                if (c_ == 0.0) return 0.0;
                throw EnvelopeDivergesError("constant envelope has infinite tail");
            case Kind::Geometric: {
                const double rq = std::pow(r_, q);
                return cq * std::pow(r_, q * (nf + 1.0)) / (1.0 - rq);
            }
            case Kind::Power:
            case Kind::PowerLog: {
                const double aq = a_ * q;
                const double bq = b_ * q;
                if (aq > 1.0) {
                    // sum_{n>N} n^{-aq} log(n+1)^{-bq}
                    //   <= log(N+1)^{-bq} * int_N^inf t^{-aq} dt
                    double bound = cq * std::pow(nf, 1.0 - aq) / (aq - 1.0);
                    if (bq > 0.0) bound *= std::pow(std::log(nf + 1.0), -bq);
                    return bound;
                }
                if (aq == 1.0 && bq > 1.0) {
                    // int_N^inf dt / (t log^{bq} t), valid from N >= 2 because
                    // log(t+1) > log t > 0 there; the n = 2 term is added
                    // explicitly when the tail starts at N = 1.
                    if (n_from < 2) {
                        const double g2 = std::pow(value(2), q);
                        return g2 + tail_power_sum_upper(q, 2);
                    }
                    return cq * std::pow(std::log(nf), 1.0 - bq) / (bq - 1.0);
                }
                throw EnvelopeDivergesError("power-log envelope tail diverges at this exponent");
            }
        }
        throw std::logic_error("tail_power_sum_upper: unreachable");
    }

    /// sup_{n>N} g(n); every supported shape is nonincreasing.
    double sup_beyond(Index n_from) const { return value(n_from + 1); }

    std::string formula_id() const {
        switch (kind_) {
            case Kind::Constant: return "constant";
            case Kind::Geometric: return "geometric";
            case Kind::Power: return "power";
            case Kind::PowerLog: return "power-log";
        }
        return "?";
    }

private:
    Envelope(Kind kind, double c, double r, double a, double b)
        : kind_(kind), c_(c), r_(r), a_(a), b_(b) {}

    Kind kind_;
    double c_;
    double r_;
    double a_;
    double b_;
};

/// Guaranteed analytic lower bound L(N) on the partial power sums
/// sum_{n<=N} ||x_n||^q of a declared power-log witness, with L(N) -> inf.
///
/// For coordinate norms n^{-alpha} log(n+1)^{-beta} and exponent q set
/// A = alpha*q < 1, B = beta*q; then
///   sum_{n<=N} n^{-A} log(n+1)^{-B}
///     >= int_1^{N+1} t^{-A} log(t+1)^{-B} dt
///     >= ((N+1)^{1-A} - 1) / ((1-A) * log(N+2)^B).
struct DivergenceProfile {
    double q = 1.0;     // exponent certified
    double A = 0.0;     // power exponent of the q-th power terms, < 1
    double B = 0.0;     // log exponent of the q-th power terms, >= 0
    double scale = 1.0; // multiplies the bound

    double lower_bound(Index n_depth) const {
        if (!(A < 1.0)) throw std::invalid_argument("DivergenceProfile: requires A < 1");
        const double nf = static_cast<double>(n_depth);
        double lb = scale * (std::pow(nf + 1.0, 1.0 - A) - 1.0) / (1.0 - A);
        if (B > 0.0) lb /= std::pow(std::log(nf + 2.0), B);
        return lb;
    }
};

} // namespace seqspace
