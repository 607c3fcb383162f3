#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "seqspace/random.hpp"
#include "seqspace/sequence.hpp"
#include "seqspace/spaceability.hpp"

namespace seqspace {

/// Deterministic battery of scalar and small-vector sequences for the axiom
/// checks: decaying power and geometric profiles, random signs, and
/// zero-interspersed variants (zeros on the even indices, declared through
/// structured support so the zerofree contract is exercised).
inline std::vector<ComputableSequence> axiom_sample_battery(std::uint64_t seed,
                                                            std::size_t count) {
    std::vector<ComputableSequence> samples;
    samples.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        Rng rng(seed * 1000003ull + k);
        const double amplitude = rng.uniform(0.2, 3.0);
        const double alpha = rng.uniform(0.6, 2.5);
        const double ratio = rng.uniform(0.55, 0.95);
        const std::uint64_t sign_word = rng.next();

        switch (k % 4) {
            case 0: { // power decay, mixed signs, all nonzero
                auto f = [amplitude, alpha, sign_word](Index n) {
                    const double s = ((sign_word >> (n % 61)) & 1) ? -1.0 : 1.0;
                    return s * amplitude * std::pow(static_cast<double>(n), -alpha);
                };
                samples.push_back(scalar_sequence(f, Support::all_nonzero()));
                break;
            }
            case 1: { // geometric decay
                auto f = [amplitude, ratio](Index n) {
                    return amplitude * std::pow(ratio, static_cast<double>(n));
                };
                samples.push_back(scalar_sequence(f, Support::all_nonzero()));
                break;
            }
            case 2: { // zeros on even indices, declared via structured support
                auto f = [amplitude, alpha](Index n) {
                    if (n % 2 == 0) return 0.0;
                    return amplitude * std::pow(static_cast<double>(n), -alpha);
                };
                samples.push_back(scalar_sequence(
                    f, Support::structured([](Index j) { return 2 * j - 1; })));
                break;
            }
            default: { // vector-valued (d = 3, Euclidean coordinates)
                const CoordinateSpace space = make_coordinate_space(3, 2.0);
                auto gen = [amplitude, alpha, sign_word](Index n) {
                    Vec v(3);
                    const double base = amplitude * std::pow(static_cast<double>(n), -alpha);
                    for (std::size_t c = 0; c < 3; ++c) {
                        const double s = ((sign_word >> ((n + c) % 61)) & 1) ? -1.0 : 1.0;
                        v[c] = s * base / static_cast<double>(c + 1);
                    }
                    return v;
                };
                samples.push_back(
                    ComputableSequence(space, gen, Support::all_nonzero()));
                break;
            }
        }
    }
    return samples;
}

/// Certified samples for the generalized avoidance-set checks: members carry
/// envelopes (power, power-log or geometric decay, some zero-interspersed),
/// non-members carry divergence profiles or delta separations.
inline std::vector<CertifiedSample> certified_sample_battery(std::uint64_t seed,
                                                             std::size_t count, double q) {
    std::vector<CertifiedSample> samples;
    samples.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        Rng rng(seed * 7919ull + k);
        const double amplitude = rng.uniform(0.3, 2.0);
        switch (k % 4) {
            case 0: { // member: geometric decay
                const double ratio = rng.uniform(0.4, 0.9);
                auto f = [amplitude, ratio](Index n) {
                    return amplitude * std::pow(ratio, static_cast<double>(n));
                };
                samples.push_back(CertifiedSample{
                    scalar_sequence(f, Support::all_nonzero()),
                    Envelope::geometric(amplitude, ratio), std::nullopt, std::nullopt});
                break;
            }
            case 1: { // member: power decay fast enough for lq, zeros interspersed
                const double alpha = 2.0 / q + rng.uniform(0.5, 1.5);
                auto f = [amplitude, alpha](Index n) {
                    if (n % 3 == 0) return 0.0;
                    return amplitude * std::pow(static_cast<double>(n), -alpha);
                };
                // nonzero indices 1,2,4,5,7,8,...
                auto enumerate = [](Index j) { return 3 * ((j - 1) / 2) + (j - 1) % 2 + 1; };
                samples.push_back(CertifiedSample{
                    scalar_sequence(f, Support::structured(enumerate)),
                    Envelope::power(amplitude, alpha), std::nullopt, std::nullopt});
                break;
            }
            case 2: { // non-member: q-divergent power-log sequence
                const double a = rng.uniform(0.2, 0.8) / q;
                auto f = [amplitude, a](Index n) {
                    return amplitude * std::pow(static_cast<double>(n), -a);
                };
                samples.push_back(CertifiedSample{
                    scalar_sequence(f, Support::all_nonzero()), std::nullopt,
                    DivergenceProfile{q, a * q, 0.0, std::pow(amplitude, q)}, std::nullopt});
                break;
            }
            default: { // non-member: separated from zero
                auto f = [amplitude](Index n) {
                    return amplitude * (1.0 + 1.0 / static_cast<double>(n));
                };
                samples.push_back(CertifiedSample{
                    scalar_sequence(f, Support::all_nonzero()), std::nullopt, std::nullopt,
                    DeltaSeparation{amplitude, {}}});
                break;
            }
        }
    }
    return samples;
}

} // namespace seqspace
