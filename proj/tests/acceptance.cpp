// Acceptance suite: one pass/fail line per criterion. Exit code 0 iff every
// criterion passes. The CLI determinism criterion drives the actual binary
// (path injected by the build).

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "seqspace/seqspace.hpp"

using namespace seqspace;

namespace {

struct Outcome {
    bool pass = true;
    std::string note;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            note = what;
        }
    }
};

bool bits_equal(double a, double b) { return std::memcmp(&a, &b, 8) == 0; }

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(SEQSPACE_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// ---------------------------------------------------------------------- 1
Outcome criterion_partition() {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    for (Index n = 1; n <= 1000000; ++n) {
        const BlockCoord c = block_of(n);
        if (block_index(c.i, c.j) != n) {
            out.require(false, "round-trip failed at n=" + std::to_string(n));
            return out;
        }
    }
    for (Index i = 1; i <= 20; ++i)
        for (Index j = 1;; ++j) {
            const Index n = block_index(i, j);
            if (n > 1000000) break;
            const BlockCoord c = block_of(n);
            if (c.i != i || c.j != j) {
                out.require(false, "inverse failed");
                return out;
            }
        }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.require(secs < 1.0, "too slow");
    out.note = "n <= 1e6 round-trip, " + std::to_string(secs) + " s";
    return out;
}

// ---------------------------------------------------------------------- 2
Outcome criterion_axioms() {
    Outcome out;
    std::vector<SpaceDescriptor> spaces;
    for (double p : {0.5, 1.0, 2.0, kInf}) spaces.push_back(lp_space(p));
    for (double p : {0.5, 1.0, 2.0})
        for (double q : {0.5, 1.0, 2.0}) spaces.push_back(lorentz_space(p, q));
    spaces.push_back(orlicz_space(orlicz_power(1.0)));
    spaces.push_back(orlicz_space(orlicz_power(2.0)));
    spaces.push_back(orlicz_space(orlicz_t_log()));

    const auto samples = axiom_sample_battery(0, 20);
    double worst_b1 = 0.0, worst_b2 = -kInf;
    for (const auto& space : spaces) {
        const AxiomsReport r = check_axioms(space, samples, 10000);
        worst_b1 = std::max(worst_b1, r.max_b1_relative_gap);
        worst_b2 = std::max(worst_b2, r.max_b2_violation);
        out.require(r.max_b1_relative_gap <= 1e-12,
                    space.family_name() + " b1 gap " + std::to_string(r.max_b1_relative_gap));
        out.require(r.max_b2_violation <= 0.0,
                    space.family_name() + " b2 violation " + std::to_string(r.max_b2_violation));
    }
    if (out.pass)
        out.note = "16 spaces, K=1; worst b1 gap " + std::to_string(worst_b1) +
                   ", worst b2 slack " + std::to_string(worst_b2);
    return out;
}

// ---------------------------------------------------------------------- 3
Outcome criterion_cross_checks() {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Rng rng(seed * 31 + 5);
        const double amp = rng.uniform(0.2, 2.0);
        const double decay = rng.uniform(0.8, 2.0);
        const std::uint64_t signs = rng.next();
        const auto x = scalar_sequence(
            [amp, decay, signs](Index n) {
                const double s = ((signs >> (n % 61)) & 1) ? -1.0 : 1.0;
                return s * amp * std::pow(static_cast<double>(n), -decay);
            },
            Support::all_nonzero());
        for (double p : {0.5, 1.0, 2.0}) {
            const double lor = lorentz_partial(x, p, p, 1000).value;
            const double lp = lp_partial(x, p, 1000).value;
            out.require(std::abs(lor - lp) <= 1e-9 * lp, "lorentz(p,p) vs lp mismatch");
        }
        for (double p : {1.0, 2.0}) {
            const double gauge = orlicz_luxemburg(x, orlicz_power(p), 1000, 1e-12).value;
            const double lp = lp_partial(x, p, 1000).value;
            out.require(std::abs(gauge - lp) <= 1e-9 * lp, "orlicz(t^p) vs lp mismatch");
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.require(secs < 10.0, "too slow");
    if (out.pass) out.note = "100 sequences, depth 1e3, " + std::to_string(secs) + " s";
    return out;
}

// ---------------------------------------------------------------------- 4
Outcome criterion_witness_validity() {
    Outcome out;
    std::string note;
    for (double p : {0.5, 1.0, 2.0}) {
        const double q = p / 2.0;
        const auto t0 = std::chrono::steady_clock::now();
        const auto w = witness_catalog(lp_space(p), AvoidanceSet::union_lq({q}));
        if (!w) {
            out.require(false, "witness unavailable");
            return out;
        }
        const PartialNormReport upper = certified_upper_home_norm(*w, w->sequence, 100000);
        out.require(std::isfinite(upper.value) && upper.value > 0,
                    "membership bound not finite");

        const DivergenceCertificate cert =
            divergence_certificate(w->sequence, q, 1000.0, 100000000);
        out.require(cert.crossed, "no crossing within 1e8 for p=" + std::to_string(p));
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.require(secs < 60.0, "slower than 60 s");
        note += "p=" + std::to_string(p) + " crossing N=" + std::to_string(cert.depth) + " (" +
                std::to_string(secs) + " s); ";
    }
    if (out.pass) out.note = note;
    return out;
}

// ---------------------------------------------------------------------- 5
Outcome criterion_norm_transfer() {
    Outcome out;
    const auto w = witness_catalog(lp_space(1.0), AvoidanceSet::union_lq({0.5}));
    const BasisFamily basis = build_basis(*w, 5);
    const Index J = 10000;
    for (std::size_t i = 1; i <= 5; ++i)
        for (double r : {0.5, 1.0, kInf}) {
            const double lhs = lp_partial(basis.vectors[i - 1], r, block_index(i, J)).value;
            const double rhs = lp_partial(basis.witness_zerofree, r, J).value;
            out.require(bits_equal(lhs, rhs),
                        "bit mismatch at i=" + std::to_string(i) + " r=" + std::to_string(r));
        }
    if (out.pass) out.note = "bit-identical for i<=5, r in {q, p, inf}, J=1e4";
    return out;
}

// ---------------------------------------------------------------------- 6
Outcome criterion_embedding() {
    Outcome out;
    double worst_gap = 0.0;
    for (double p : {0.5, 1.0, 2.0}) {
        const auto w = witness_catalog(lp_space(p), AvoidanceSet::union_lq({p / 2.0}));
        Rng rng(2024 + static_cast<std::uint64_t>(p * 2));
        for (int trial = 0; trial < 200; ++trial) {
            const std::size_t m = 1 + rng.next() % 6;
            std::vector<double> a(m);
            bool nonzero = false;
            for (auto& c : a) {
                c = (rng.coin() ? 1.0 : -1.0) * rng.uniform(0.25, 4.0);
                nonzero = nonzero || c != 0.0;
            }
            if (!nonzero) a[0] = 1.0;
            const EmbeddingReport r = embedding_bound_check(a, *w, 400);
            out.require(r.has_lp_identity, "missing lp identity");
            out.require(r.lp_identity_rel_gap <= 1e-12,
                        "identity gap " + std::to_string(r.lp_identity_rel_gap));
            worst_gap = std::max(worst_gap, r.lp_identity_rel_gap);
            if (p == 0.5) out.require(r.inequality_holds, "s-tilde inequality failed");
        }
    }
    if (out.pass)
        out.note = "200 vectors per p in {1/2, 1, 2}; worst identity gap " +
                   std::to_string(worst_gap);
    return out;
}

// ---------------------------------------------------------------------- 7
Outcome criterion_avoidance_scaling() {
    Outcome out;
    const auto w = witness_catalog(lp_space(1.0), AvoidanceSet::union_lq({0.5}));
    const ComputableSequence x0 = zerofree(w->sequence);
    const double q = 0.5;
    Rng rng(77);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t m = 1 + rng.next() % 5;
        std::vector<double> a(m);
        for (auto& c : a) {
            // power-of-two magnitudes keep |a|^q a power of two, so the
            // scaling identity is exact in floating point, not just in R
            const int k = static_cast<int>(rng.next() % 4) - 1;
            c = (rng.coin() ? 1.0 : -1.0) * std::exp2(2 * k);
        }
        std::size_t mi = 0;
        for (std::size_t i = 1; i < a.size(); ++i)
            if (std::abs(a[i]) > std::abs(a[mi])) mi = i;
        const Combination z = combine(a, x0);
        KahanSum lhs, witness_sum;
        for (Index j = 1; j <= 2000; ++j) {
            lhs.add(std::pow(std::abs(z.block_eval(mi + 1, j)[0]), q));
            witness_sum.add(std::pow(x0.coordinate_norm(j), q));
        }
        const double rhs = std::pow(std::abs(a[mi]), q) * witness_sum.value();
        out.require(bits_equal(lhs.value(), rhs), "scaling identity not exact");
    }
    if (out.pass) out.note = "50 seeded vectors, block sums exactly |a_m|^q * witness sums";
    return out;
}

// ---------------------------------------------------------------------- 8
Outcome criterion_c0_avoidance() {
    Outcome out;
    const auto w = witness_catalog(lp_space(kInf), AvoidanceSet::c0());
    Rng rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<double> a(1 + rng.next() % 4);
        for (auto& c : a) c = (rng.coin() ? 1.0 : -1.0) * rng.uniform(0.01, 100.0);
        const AvoidanceReport r = avoidance_check(a, *w, 10.0, 1000);
        out.require(r.has_c0 && r.c0_verified >= 1000, "separation count below 1e3");
        out.require(r.coordinate_identity_ok, "coordinate identity failed");
        out.require(r.pass(), "avoidance_check failed");
    }
    if (out.pass) out.note = "10 coefficient vectors, 1e3 separated coordinates each";
    return out;
}

// ---------------------------------------------------------------------- 9
Outcome criterion_norm_attaining() {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    for (double r : {1.0, 2.0})
        for (double q : {1.0, 2.0}) {
            const CoordinateSpace domain = make_coordinate_space(4, r);
            Rng rng(static_cast<std::uint64_t>(r * 10 + q));
            const AttainmentPoint x0 =
                normalized_attainment_point(domain, sample_unit_vector(rng, domain));
            const FiniteOperator u = make_attaining(domain, x0, {1.0, -0.5, 0.25}, q);
            std::vector<double> a(6);
            for (auto& c : a) c = (rng.coin() ? 1.0 : -1.0) * rng.uniform(0.25, 3.0);
            const LiftedFamily fam = na_combine(a, u);

            std::vector<double> abs_a;
            for (double c : a) abs_a.push_back(std::abs(c));
            const double analytic = detail::lp_value(abs_a, q) * u.apply_norm(x0.x0);
            const double at_x0 = fam.apply_norm(x0.x0);
            out.require(std::abs(at_x0 - analytic) <= 1e-12 * analytic,
                        "q-norm identity gap too large");

            const AttainmentReport rep =
                attainment_check(fam, AttainmentMode::Sampled, 10000, 42, 1e-9);
            out.require(rep.pass(), "sampled sphere search found a violation");

            const double l1_lhs = family_l1_sum(fam);
            const double l1_rhs = u.apply_norm(x0.x0) * detail::lp_value(abs_a, 1.0);
            out.require(std::abs(l1_lhs - l1_rhs) <= 1e-12 * l1_rhs, "l1-sum identity failed");
        }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.require(secs < 10.0, "too slow");
    if (out.pass)
        out.note = "d=4, r,q in {1,2}, m=6, 1e4 samples each, " + std::to_string(secs) + " s";
    return out;
}

// --------------------------------------------------------------------- 10
Outcome criterion_proposition() {
    Outcome out;
    for (double q : {1.0, 2.0}) {
        const auto samples = certified_sample_battery(7, 50, q);
        const PropositionReport r =
            check_proposition_conditions(lq_membership_predicate(q), samples, 4096, 7);
        out.require(r.pass() && r.members > 0, "lq predicate conditions failed");
    }
    const auto samples = certified_sample_battery(9, 50, 2.0);
    const PropositionReport r =
        check_proposition_conditions(c0_membership_predicate(), samples, 4096, 9);
    out.require(r.pass() && r.members > 0, "c0 predicate conditions failed");
    if (out.pass) out.note = "conditions (i)-(iii) on 50 samples per predicate";
    return out;
}

// --------------------------------------------------------------------- 11
Outcome criterion_cli() {
    Outcome out;
    const std::string common =
        " --depth 2000 --threshold 1000 --n-max 10000000 --seed 0 --format json";
    int code = run_cli("construct --family lp --p 1 --gamma 0.5 --m 5" + common +
                       " --out acceptance_cli_1.json");
    out.require(code == 0, "construct l1 exit " + std::to_string(code));
    code = run_cli("construct --family lp --p 1 --gamma 0.5 --m 5" + common +
                   " --out acceptance_cli_2.json");
    out.require(code == 0, "second run exit " + std::to_string(code));
    const std::string r1 = read_file("acceptance_cli_1.json");
    const std::string r2 = read_file("acceptance_cli_2.json");
    out.require(!r1.empty() && r1 == r2, "reports are not byte-identical");

    code = run_cli("construct --family lp --p 2 --gamma 2 --m 3" + common +
                   " --out acceptance_cli_empty.json");
    out.require(code == 2, "empty difference should exit 2, got " + std::to_string(code));

    code = run_cli("construct --family linf --avoid-c0 --m 3" + common +
                   " --out acceptance_cli_c0.json");
    out.require(code == 0, "linf/c0 construct exit " + std::to_string(code));
    if (out.pass) out.note = "byte-identical reports; exit codes 0/2/0";
    return out;
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "partition bijection", criterion_partition},
        {2, "axiom suite (b1)/(b2)", criterion_axioms},
        {3, "norm cross-checks", criterion_cross_checks},
        {4, "witness validity", criterion_witness_validity},
        {5, "norm-transfer identity", criterion_norm_transfer},
        {6, "embedding identity/inequality", criterion_embedding},
        {7, "avoidance scaling", criterion_avoidance_scaling},
        {8, "c0 avoidance", criterion_c0_avoidance},
        {9, "norm-attaining family", criterion_norm_attaining},
        {10, "proposition conditions", criterion_proposition},
        {11, "CLI determinism and exit codes", criterion_cli},
    };

    bool all_pass = true;
    for (const auto& c : criteria) {
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.pass = false;
            out.note = std::string("exception: ") + e.what();
        }
        all_pass = all_pass && out.pass;
        std::printf("[%s] criterion %2d: %s%s%s\n", out.pass ? "PASS" : "FAIL", c.id, c.name,
                    out.note.empty() ? "" : " -- ", out.note.c_str());
        std::fflush(stdout);
    }
    return all_pass ? 0 : 1;
}
