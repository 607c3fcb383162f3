#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seqspace/block_partition.hpp"
#include "seqspace/envelope.hpp"
#include "seqspace/errors.hpp"
#include "seqspace/norms.hpp"
#include "seqspace/random.hpp"
#include "seqspace/sequence.hpp"

namespace seqspace {

/// Certifies ||x_{n_j}|| >= delta along a strictly increasing index stream,
/// the finite stand-in for "||x_j|| does not tend to 0".
struct DeltaSeparation {
    double delta = 1.0;
    std::function<Index(Index)> index_of; // default: identity

    Index index(Index j) const { return index_of ? index_of(j) : j; }
};

/// A sequence bundled with the certificates that make desk-scale membership
/// claims honest: an envelope (evidence of decay/membership), a divergence
/// profile (evidence of q-divergence), or a delta separation (evidence of
/// non-nullity).
struct CertifiedSample {
    ComputableSequence sequence;
    std::optional<Envelope> envelope; // ||x_n|| <= g(n) for all n, g nonincreasing
    std::optional<DivergenceProfile> divergence;
    std::optional<DeltaSeparation> separation;
};

using MembershipPredicate = std::function<bool(const CertifiedSample&, Index)>;

/// Custom avoidance predicate together with its declared conformance to the
/// generalized avoidance-set conditions:
///   (i)   x in A iff x^0 in A,
///   (ii)  multiples of subsequences of members stay members,
///   (iii) some witness with nonzero zerofree version avoids A.
/// Declarations are the caller's; check_proposition_conditions tests them
/// empirically on samples.
struct CustomPredicate {
    MembershipPredicate member;
    bool invariant_under_zerofree = true;
    bool closed_under_submultiples = true;
    std::shared_ptr<const CertifiedSample> avoiding_witness;
};

/// The set A to be avoided: a finite union of lq spaces, c0, or a custom
/// predicate satisfying the conditions above.
struct AvoidanceSet {
    enum class Kind { UnionLq, C0, Custom };

    Kind kind = Kind::UnionLq;
    std::vector<double> gamma; // UnionLq: exponents in (0, inf]
    std::optional<CustomPredicate> predicate;

    static AvoidanceSet union_lq(std::vector<double> exponents) {
        if (exponents.empty())
            throw std::invalid_argument("AvoidanceSet: Gamma must be nonempty");
        for (double q : exponents)
            if (!(q > 0.0))
                throw std::invalid_argument("AvoidanceSet: exponents must be in (0, inf]");
        AvoidanceSet a;
        a.kind = Kind::UnionLq;
        a.gamma = std::move(exponents);
        return a;
    }

    static AvoidanceSet c0() {
        AvoidanceSet a;
        a.kind = Kind::C0;
        return a;
    }

    static AvoidanceSet custom(CustomPredicate p) {
        AvoidanceSet a;
        a.kind = Kind::Custom;
        a.predicate = std::move(p);
        return a;
    }
};

/// Membership certificate for the witness's home space.
struct MembershipCertificate {
    Envelope envelope;
    bool norms_nonincreasing = false; // needed for Lorentz tail bounds
};

/// Coordinate-norm formula ||x_n|| = n^{-a} * log(n+1)^{-b} of the cataloged
/// power-log witnesses; kept so certificates can be rebuilt under rescaling.
struct PowerLogFormula {
    double a = 0.0;
    double b = 0.0;
};

/// A concrete element of E - A together with everything needed to certify
/// that claim at desk scale. All certificates refer to `sequence`.
struct Witness {
    ComputableSequence sequence;
    SpaceDescriptor home;
    std::optional<MembershipCertificate> membership;
    AvoidanceSet avoidance = AvoidanceSet::c0();
    std::vector<DivergenceProfile> divergence; // one per finite q in Gamma
    std::optional<DeltaSeparation> separation; // for c0 avoidance
    std::string formula_id;
    std::optional<PowerLogFormula> powerlog;
};

/// Certified upper bound on the home-space norm of the zerofree witness.
inline PartialNormReport certified_upper_home_norm(const Witness& w,
                                                   const ComputableSequence& x0, Index n_depth) {
    if (!w.membership)
        throw MissingMembershipCertificateError(
            "witness carries no membership certificate for its home space");
    const MembershipCertificate& cert = *w.membership;
    switch (w.home.family) {
        case SpaceFamily::Lp:
            return lp_certified_upper(x0, w.home.p, n_depth, cert.envelope);
        case SpaceFamily::Lorentz:
            return lorentz_certified_upper(x0, w.home.p, w.home.q, n_depth, cert.envelope,
                                           cert.norms_nonincreasing);
        default:
            throw MissingMembershipCertificateError(
                "no certified upper bound available for this family");
    }
}

/// The first m interleaved copies y_1, ..., y_m of the zerofree witness.
struct BasisFamily {
    Witness witness;
    ComputableSequence witness_zerofree;
    std::vector<ComputableSequence> vectors;

    std::size_t count() const { return vectors.size(); }
};

inline BasisFamily build_basis(const Witness& w, std::size_t m) {
    if (m < 1) throw std::invalid_argument("build_basis: m must be >= 1");
    ComputableSequence x0 = zerofree(w.sequence);
    std::vector<ComputableSequence> vectors;
    vectors.reserve(m);
    for (std::size_t i = 1; i <= m; ++i) vectors.push_back(interleave(x0, i));
    return BasisFamily{w, std::move(x0), std::move(vectors)};
}

/// Structural linear independence of y_1..y_m truncated to depth N:
/// disjoint nonzero supports imply independence, verified by locating one
/// nonzero coordinate per block below N.
inline bool independence_check(const BasisFamily& basis, Index n_depth) {
    for (std::size_t i = 1; i <= basis.count(); ++i) {
        const Index first = block_index(i, 1);
        if (first > n_depth)
            throw DepthTooShallowError("independence_check: block " + std::to_string(i) +
                                       " has no coordinate below the requested depth");
        if (basis.vectors[i - 1].eval(first).is_zero()) return false; // cannot happen: x0 all-nonzero
    }
    return true;
}

/// Outcome of the embedding bound ||z||^st <= K^st ||x0||^st sum |a_i|^st
/// for z = sum a_i y_i, evaluated on the block-matched truncation (inner
/// index <= N in every block). For the lp family the exact identity
/// ||z||_p^p = sum |a_i|^p ||x0||_p^p is checked as well.
struct EmbeddingReport {
    std::size_t m = 0;
    Index inner_depth = 0;
    double stilde = 1.0;
    double combination_value = 0.0;      // home value of z, block-matched
    double witness_upper = 0.0;          // certified upper norm of x0
    double coefficient_stilde_sum = 0.0; // sum |a_i|^st
    double lhs_power = 0.0;
    double rhs_power = 0.0;
    bool inequality_holds = false;
    bool has_lp_identity = false;
    double lp_identity_lhs = 0.0;
    double lp_identity_rhs = 0.0;
    double lp_identity_rel_gap = 0.0;

    bool pass() const {
        return inequality_holds && (!has_lp_identity || lp_identity_rel_gap <= 1e-12);
    }
};

inline EmbeddingReport embedding_bound_check(const std::vector<double>& a, const Witness& w,
                                             Index inner_depth) {
    bool any = false;
    for (double c : a) any = any || c != 0.0;
    if (!any) throw std::invalid_argument("embedding_bound_check: coefficients are all zero");

    const ComputableSequence x0 = zerofree(w.sequence);
    const Combination z = combine(a, x0);
    const std::size_t m = a.size();

    // Block-matched truncation: coordinates block_index(i, j), i <= m,
    // j <= inner_depth, visited in increasing index order.
    std::vector<std::pair<Index, double>> entries;
    entries.reserve(m * static_cast<std::size_t>(inner_depth));
    for (std::size_t i = 1; i <= m; ++i) {
        if (a[i - 1] == 0.0) continue;
        for (Index j = 1; j <= inner_depth; ++j)
            entries.emplace_back(block_index(i, j),
                                 vector_norm(x0.space(), z.block_eval(i, j)));
    }
    std::sort(entries.begin(), entries.end());
    std::vector<double> norms;
    norms.reserve(entries.size());
    for (const auto& [idx, v] : entries) norms.push_back(v);

    EmbeddingReport report;
    report.m = m;
    report.inner_depth = inner_depth;
    report.stilde = w.home.stilde;
    report.combination_value = detail::space_value(w.home, norms);
    report.witness_upper = certified_upper_home_norm(w, x0, inner_depth).value;

    KahanSum as;
    for (double c : a)
        if (c != 0.0) as.add(std::pow(std::abs(c), w.home.stilde));
    report.coefficient_stilde_sum = as.value();

    report.lhs_power = std::pow(report.combination_value, w.home.stilde);
    report.rhs_power = std::pow(w.home.K, w.home.stilde) *
                       std::pow(report.witness_upper, w.home.stilde) *
                       report.coefficient_stilde_sum;
    report.inequality_holds = report.lhs_power <= report.rhs_power * (1.0 + 1e-12);

    if (w.home.family == SpaceFamily::Lp && w.home.p != kInf) {
        report.has_lp_identity = true;
        const double p = w.home.p;
        report.lp_identity_lhs = detail::lp_power_sum(norms, p);
        KahanSum ap;
        for (double c : a)
            if (c != 0.0) ap.add(std::pow(std::abs(c), p));
        const std::vector<double> witness_norms = detail::coordinate_norms(x0, inner_depth);
        report.lp_identity_rhs = ap.value() * detail::lp_power_sum(witness_norms, p);
        const double denom = std::max(std::abs(report.lp_identity_rhs), 1e-300);
        report.lp_identity_rel_gap =
            std::abs(report.lp_identity_lhs - report.lp_identity_rhs) / denom;
    }
    return report;
}

/// Per-exponent outcome of the avoidance certification.
struct AvoidanceExponentRow {
    double q = 0.0;
    double scaled_threshold = 0.0; // T / |a_m|, applied to the witness itself
    DivergenceCertificate certificate;
    double block_value = 0.0; // |a_m| * certificate.value: the block-restricted partial
    double profile_bound = 0.0; // declared analytic lower bound at the crossing depth
};

struct AvoidanceReport {
    Index block = 0;    // m: the max-|a_i| block (smallest index on ties)
    double alpha = 0.0; // |a_m|, the realized alpha_m of the block identity
    Index coordinate_depth = 0;
    bool coordinate_identity_ok = false;
    bool outside_blocks_zero = false;
    std::vector<AvoidanceExponentRow> exponents;
    bool has_c0 = false;
    double delta = 0.0;
    Index c0_required = 0;
    Index c0_verified = 0;

    bool pass() const {
        if (!coordinate_identity_ok || !outside_blocks_zero) return false;
        for (const auto& row : exponents)
            if (!row.certificate.crossed) return false; // ThresholdNotReached
        if (has_c0 && c0_verified < c0_required) return false;
        return true;
    }
};

struct AvoidanceOptions {
    Index coordinate_depth = 1000; // exact block-identity checks per block
    Index c0_count = 1000;         // separated coordinates demanded for c0
};

/// Certifies that z = sum a_i y_i stays outside the avoidance set.
///
/// The block identity z_{block_index(m,j)} = a_m * x_j is checked exactly
/// (bit-for-bit: both sides are the same single multiplication). Divergence
/// is then certified on the witness itself against the threshold scaled by
/// 1/|a_m|, which is equivalent to certifying the block-m restriction of z
/// against the original threshold.
inline AvoidanceReport avoidance_check(const std::vector<double>& a, const Witness& w,
                                       double threshold, Index n_max,
                                       AvoidanceOptions opts = {}) {
    std::size_t block = 0;
    double alpha = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::abs(a[i]) > alpha) {
            alpha = std::abs(a[i]);
            block = i + 1;
        }
    }
    if (block == 0)
        throw std::invalid_argument("avoidance_check: coefficients are all zero");

    const ComputableSequence x0 = zerofree(w.sequence);
    const Combination z = combine(a, x0);
    const double a_m = a[block - 1];

    AvoidanceReport report;
    report.block = block;
    report.alpha = alpha;
    report.coordinate_depth = opts.coordinate_depth;

    bool identity_ok = true;
    for (Index j = 1; j <= opts.coordinate_depth; ++j) {
        const Vec lhs = z.eval(block_index(block, j));
        const Vec rhs = x0.eval(j).scaled(a_m);
        if (!bit_identical(lhs, rhs)) {
            identity_ok = false;
            break;
        }
    }
    report.coordinate_identity_ok = identity_ok;

    bool outside_zero = true;
    for (Index j = 1; j <= 8; ++j)
        outside_zero = outside_zero && z.eval(block_index(a.size() + 1, j)).is_zero();
    report.outside_blocks_zero = outside_zero;

    switch (w.avoidance.kind) {
        case AvoidanceSet::Kind::UnionLq: {
            for (double q : w.avoidance.gamma) {
                AvoidanceExponentRow row;
                row.q = q;
                row.scaled_threshold = threshold / alpha;
                row.certificate = divergence_certificate(x0, q, row.scaled_threshold, n_max);
                row.block_value = alpha * row.certificate.value;
                for (const auto& profile : w.divergence)
                    if (profile.q == q && q != kInf)
                        row.profile_bound = profile.lower_bound(row.certificate.depth);
                report.exponents.push_back(row);
            }
            break;
        }
        case AvoidanceSet::Kind::C0: {
            if (!w.separation)
                throw std::invalid_argument(
                    "avoidance_check: c0 avoidance needs a delta-separation certificate");
            report.has_c0 = true;
            report.delta = w.separation->delta;
            report.c0_required = opts.c0_count;
            Index verified = 0;
            for (Index j = 1; j <= opts.c0_count; ++j) {
                const Index n = w.separation->index(j);
                if (x0.coordinate_norm(n) >= w.separation->delta) ++verified;
            }
            report.c0_verified = verified;
            break;
        }
        case AvoidanceSet::Kind::Custom:
            throw std::invalid_argument(
                "avoidance_check: custom predicates go through check_proposition_conditions");
    }
    return report;
}

namespace detail {

inline ComputableSequence power_log_sequence(double a, double b) {
    auto gen = [a, b](Index n) {
        const double t = static_cast<double>(n);
        return Vec::scalar(std::pow(t, -a) * std::pow(std::log(t + 1.0), -b));
    };
    return ComputableSequence(scalar_space(), std::move(gen), Support::all_nonzero());
}

} // namespace detail

/// Constructive witness replacements for the nonconstructive existence
/// arguments. Returns std::nullopt ("NotAvailable") when the requested
/// difference is empty or not cataloged:
///
///   lp(p) vs union of lq, all q < p:   x_n = n^{-1/p} log(n+1)^{-2/p}
///       (p = inf degenerates to the constant-one sequence),
///   linf vs c0:                        x = (1, 1, 1, ...), delta = 1,
///   lorentz(p,q) vs union of lr, r<p:  x_n = n^{-1/p} log(n+1)^{-2/q}.
///
/// Any requested exponent >= p means the difference is empty (for q = inf
/// in particular, condition (b2) already forces E inside linf).
inline std::optional<Witness> witness_catalog(const SpaceDescriptor& space,
                                              const AvoidanceSet& avoid) {
    if (avoid.kind == AvoidanceSet::Kind::Custom) return std::nullopt;

    if (avoid.kind == AvoidanceSet::Kind::C0) {
        if (space.family == SpaceFamily::Lp && space.p == kInf) {
            Witness w{detail::power_log_sequence(0.0, 0.0), space};
            w.membership = MembershipCertificate{Envelope::constant(1.0), true};
            w.avoidance = AvoidanceSet::c0();
            w.separation = DeltaSeparation{1.0, {}};
            w.formula_id = "const-one";
            w.powerlog = PowerLogFormula{0.0, 0.0};
            return w;
        }
        return std::nullopt; // lp (p < inf) and Lorentz members are null sequences
    }

    // UnionLq
    const auto all_below = [&](double p) {
        for (double q : avoid.gamma)
            if (!(q < p)) return false;
        return true;
    };

    if (space.family == SpaceFamily::Lp) {
        const double p = space.p;
        if (!all_below(p)) return std::nullopt;
        const double a = p == kInf ? 0.0 : 1.0 / p;
        const double b = p == kInf ? 0.0 : 2.0 / p;
        Witness w{detail::power_log_sequence(a, b), space};
        w.membership = MembershipCertificate{
            p == kInf ? Envelope::constant(1.0) : Envelope::power_log(1.0, a, b), true};
        w.avoidance = avoid;
        for (double q : avoid.gamma)
            if (q != kInf) w.divergence.push_back(DivergenceProfile{q, a * q, b * q, 1.0});
        w.formula_id = p == kInf ? "const-one" : "powerlog";
        w.powerlog = PowerLogFormula{a, b};
        return w;
    }

    if (space.family == SpaceFamily::Lorentz) {
        if (!all_below(space.p)) return std::nullopt;
        const double a = 1.0 / space.p;
        const double b = 2.0 / space.q;
        Witness w{detail::power_log_sequence(a, b), space};
        w.membership = MembershipCertificate{Envelope::power_log(1.0, a, b), true};
        w.avoidance = avoid;
        for (double q : avoid.gamma)
            if (q != kInf) w.divergence.push_back(DivergenceProfile{q, a * q, b * q, 1.0});
        w.formula_id = "lorentz-powerlog";
        w.powerlog = PowerLogFormula{a, b};
        return w;
    }

    return std::nullopt;
}

/// The coordinate rescaling trick: raising the coordinate norms of a
/// cataloged lp(p_from) witness to the power p_from/p_to moves it to
/// lp(p_to), carrying every certificate along (the avoided exponents map to
/// q * p_to / p_from).
inline Witness rescale_witness(const Witness& w, double p_from, double p_to) {
    if (!(p_from > 0.0) || !(p_to > 0.0) || p_from == kInf || p_to == kInf)
        throw std::invalid_argument("rescale_witness: exponents must be in (0, inf)");
    if (!w.powerlog || w.home.family != SpaceFamily::Lp || w.home.p != p_from)
        throw std::invalid_argument(
            "rescale_witness: only cataloged power-log lp witnesses can be rescaled");
    const double gamma = p_from / p_to;
    const double a = w.powerlog->a * gamma;
    const double b = w.powerlog->b * gamma;

    Witness out{detail::power_log_sequence(a, b), lp_space(p_to)};
    out.membership = MembershipCertificate{Envelope::power_log(1.0, a, b), true};
    std::vector<double> new_gamma;
    for (double q : w.avoidance.gamma) new_gamma.push_back(q * p_to / p_from);
    out.avoidance = AvoidanceSet::union_lq(std::move(new_gamma));
    for (double q : out.avoidance.gamma)
        out.divergence.push_back(DivergenceProfile{q, a * q, b * q, 1.0});
    out.formula_id = "powerlog";
    out.powerlog = PowerLogFormula{a, b};
    return out;
}

// ---------------------------------------------------------------------------
// Generalized avoidance sets: predicates and the condition (i)-(iii) checks.
// ---------------------------------------------------------------------------

/// Desk-scale membership predicate for lq: a sample is recognized as a
/// member iff it carries an envelope whose q-tail converges and which
/// dominates the observed coordinates on a spot grid. Certificate-based
/// rather than threshold-based, so it is invariant under scaling and
/// subsequences by construction; the checks below test exactly that.
inline CustomPredicate lq_membership_predicate(double q) {
    auto member = [q](const CertifiedSample& s, Index depth) {
        if (!s.envelope) return false;
        double tail = 0.0;
        try {
            tail = s.envelope->tail_power_sum_upper(q, 1);
        } catch (const EnvelopeDivergesError&) {
            return false;
        }
        if (!std::isfinite(tail)) return false;
        for (Index n : {Index{1}, Index{2}, depth / 2, depth}) {
            if (n < 1) continue;
            if (s.sequence.coordinate_norm(n) > s.envelope->value(n) * (1.0 + 1e-12))
                return false;
        }
        return true;
    };
    // q-divergent witness with nonzero zerofree version: ||x_n|| = n^{-1/(2q)}.
    auto witness = std::make_shared<CertifiedSample>(
        CertifiedSample{detail::power_log_sequence(1.0 / (2.0 * q), 0.0),
                        std::nullopt,
                        DivergenceProfile{q, 0.5, 0.0, 1.0},
                        std::nullopt});
    return CustomPredicate{member, true, true, witness};
}

/// Desk-scale membership predicate for c0: an envelope that vanishes at
/// infinity and dominates the observed coordinates.
inline CustomPredicate c0_membership_predicate() {
    auto member = [](const CertifiedSample& s, Index depth) {
        if (!s.envelope || !s.envelope->vanishes()) return false;
        for (Index n : {Index{1}, Index{2}, depth / 2, depth}) {
            if (n < 1) continue;
            if (s.sequence.coordinate_norm(n) > s.envelope->value(n) * (1.0 + 1e-12))
                return false;
        }
        return true;
    };
    auto witness = std::make_shared<CertifiedSample>(CertifiedSample{
        detail::power_log_sequence(0.0, 0.0), std::nullopt, std::nullopt,
        DeltaSeparation{1.0, {}}});
    return CustomPredicate{member, true, true, witness};
}

/// x |-> x^0 on a certified sample. The envelope carries over because the
/// nonzero coordinates sit at indices n_j >= j and g is nonincreasing; at
/// matched depth the power sums only grow, so divergence carries over too.
inline CertifiedSample zerofree_sample(const CertifiedSample& s,
                                       std::optional<Index> scan_bound = std::nullopt) {
    CertifiedSample out{zerofree(s.sequence, scan_bound), s.envelope, s.divergence,
                        std::nullopt};
    if (s.separation && s.sequence.support().kind == SupportKind::AllNonzero)
        out.separation = s.separation;
    return out;
}

/// y_j = c * x_{offset + step*j}: a multiple of a subsequence, with the
/// envelope transformed accordingly (offset + step*j >= j keeps dominance).
inline CertifiedSample subsequence_multiple_sample(const CertifiedSample& s, double c,
                                                   Index step, Index offset = 0) {
    if (step < 1) throw std::invalid_argument("subsequence_multiple_sample: step must be >= 1");
    const ComputableSequence& x = s.sequence;
    auto gen = [x, c, step, offset](Index j) { return x.eval(offset + step * j).scaled(c); };
    // Submultiples of members are exactly what condition (ii) quantifies
    // over; divergence and separation evidence do not transfer.
    ComputableSequence seq(x.space(), std::move(gen), Support::unknown());
    CertifiedSample out{std::move(seq), std::nullopt, std::nullopt, std::nullopt};
    if (s.envelope) out.envelope = s.envelope->scaled(c);
    return out;
}

struct PropositionReport {
    std::size_t samples = 0;
    std::size_t members = 0;
    std::size_t zerofree_invariance_failures = 0; // condition (i)
    std::size_t submultiple_closure_failures = 0; // condition (ii)
    std::size_t submultiple_cases = 0;
    bool witness_avoids = false;          // condition (iii)
    bool witness_zerofree_nonzero = false;

    bool pass() const {
        return zerofree_invariance_failures == 0 && submultiple_closure_failures == 0 &&
               witness_avoids && witness_zerofree_nonzero;
    }
};

/// Empirical test of the avoidance-set conditions (i)-(iii) on samples.
/// Condition (ii) quantifies over all subsequences; the test samples a
/// deterministic battery of (multiple, step, offset) choices per member --
/// exhaustiveness is impossible and the report says how many cases ran.
inline PropositionReport check_proposition_conditions(const CustomPredicate& predicate,
                                                      const std::vector<CertifiedSample>& samples,
                                                      Index depth, std::uint64_t seed = 0) {
    PropositionReport report;
    report.samples = samples.size();
    for (std::size_t idx = 0; idx < samples.size(); ++idx) {
        const CertifiedSample& s = samples[idx];
        const bool in_a = predicate.member(s, depth);
        if (in_a) ++report.members;

        const bool zerofree_in_a = predicate.member(zerofree_sample(s), depth);
        if (in_a != zerofree_in_a) ++report.zerofree_invariance_failures;

        if (in_a) {
            Rng rng(seed ^ (0x5eedULL + idx));
            const double multiples[] = {0.5, 3.0, std::exp2(std::floor(rng.uniform(-3, 4)))};
            const Index steps[] = {1, 2, 1 + (rng.next() % 4)};
            for (int k = 0; k < 3; ++k) {
                const CertifiedSample y =
                    subsequence_multiple_sample(s, multiples[k], steps[k], rng.next() % 8);
                ++report.submultiple_cases;
                if (!predicate.member(y, depth)) ++report.submultiple_closure_failures;
            }
        }
    }
    if (predicate.avoiding_witness) {
        const CertifiedSample& w = *predicate.avoiding_witness;
        report.witness_avoids = !predicate.member(w, depth);
        const ComputableSequence w0 = zerofree(w.sequence);
        report.witness_zerofree_nonzero =
            w.sequence.support().kind != SupportKind::Finite && !w0.eval(1).is_zero();
    }
    return report;
}

} // namespace seqspace
