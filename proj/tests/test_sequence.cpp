#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "seqspace/sequence.hpp"

using namespace seqspace;

namespace {

ComputableSequence harmonic() {
    return scalar_sequence([](Index n) { return 1.0 / static_cast<double>(n); },
                           Support::all_nonzero());
}

} // namespace

TEST_CASE("eval: generator, overrides, finite support") {
    const auto x = harmonic();
    CHECK(x.eval(4)[0] == 0.25);

    const auto with_override = x.with_override(3, Vec::scalar(7.0));
    CHECK(with_override.eval(3)[0] == 7.0);
    CHECK(with_override.eval(4)[0] == 0.25);

    const auto finite = scalar_sequence(
        [](Index n) { return n <= 2 ? static_cast<double>(n) : 0.0; }, Support::finite(2));
    CHECK(finite.eval(5)[0] == 0.0);
    CHECK(finite.eval(2)[0] == 2.0);
}

TEST_CASE("eval is deterministic bit-for-bit") {
    const auto x = scalar_sequence(
        [](Index n) { return std::pow(static_cast<double>(n), -0.7) * std::sin(double(n)); },
        Support::unknown());
    for (Index n : {Index{1}, Index{17}, Index{12345}})
        CHECK(bit_identical(x.eval(n), x.eval(n)));
}

TEST_CASE("zerofree: interspersed zeros via structured support") {
    // x = (1, 0, 2, 0, 3, 0, ...): value (n+1)/2 at odd n
    const auto x = scalar_sequence(
        [](Index n) { return n % 2 == 1 ? static_cast<double>((n + 1) / 2) : 0.0; },
        Support::structured([](Index j) { return 2 * j - 1; }));
    const auto x0 = zerofree(x);
    REQUIRE(x0.support().kind == SupportKind::AllNonzero);
    for (Index j = 1; j <= 50; ++j) CHECK(x0.eval(j)[0] == static_cast<double>(j));
}

TEST_CASE("zerofree: finite support collapses to the zero sequence") {
    const auto x = scalar_sequence([](Index n) { return n == 1 ? 5.0 : 0.0; },
                                   Support::finite(1));
    const auto x0 = zerofree(x);
    for (Index n = 1; n <= 10; ++n) CHECK(x0.eval(n).is_zero());
}

TEST_CASE("zerofree: all-nonzero is the identity") {
    const auto x = harmonic();
    const auto x0 = zerofree(x);
    for (Index n = 1; n <= 32; ++n) CHECK(bit_identical(x0.eval(n), x.eval(n)));
}

TEST_CASE("zerofree: unknown support needs a scan bound") {
    const auto x = scalar_sequence(
        [](Index n) { return (n <= 10 && n % 2 == 0) ? 0.0 : 1.0 / double(n); },
        Support::unknown());
    CHECK_THROWS_AS(zerofree(x), UndecidableSupportError);

    const auto x0 = zerofree(x, Index{10});
    // nonzeros below the bound: 1, 3, 5, 7, 9; then everything from 11 on
    CHECK(x0.eval(1)[0] == 1.0);
    CHECK(x0.eval(2)[0] == 1.0 / 3.0);
    CHECK(x0.eval(5)[0] == 1.0 / 9.0);
    CHECK(x0.eval(6)[0] == 1.0 / 11.0);
    CHECK(x0.eval(7)[0] == 1.0 / 12.0);
}

TEST_CASE("interleave places x_j at block_index(i, j)") {
    const auto x0 = harmonic();
    const auto y1 = interleave(x0, 1);
    for (Index j = 1; j <= 20; ++j) CHECK(y1.eval(2 * j - 1)[0] == 1.0 / double(j));
    for (Index n = 2; n <= 40; n += 2) CHECK(y1.eval(n).is_zero());
}

TEST_CASE("zerofree(interleave(x0, i)) == x0") {
    const auto x0 = harmonic();
    for (Index i = 1; i <= 10; ++i) {
        const auto yi0 = zerofree(interleave(x0, i));
        for (Index j = 1; j <= 128; ++j) CHECK(bit_identical(yi0.eval(j), x0.eval(j)));
    }
}

TEST_CASE("interleaved vectors have disjoint supports") {
    const auto x0 = harmonic();
    const auto y2 = interleave(x0, 2);
    const auto y3 = interleave(x0, 3);
    for (Index n = 1; n <= 10000; ++n)
        CHECK((y2.eval(n).is_zero() || y3.eval(n).is_zero()));
}

TEST_CASE("combine: single product per coordinate, zero outside blocks") {
    const auto x0 = harmonic();
    const auto z = combine({1.0, -2.0}, x0);
    CHECK(z.eval(block_index(2, 3))[0] == -2.0 * (1.0 / 3.0));
    CHECK(z.eval(block_index(1, 5))[0] == 1.0 * (1.0 / 5.0));
    for (Index j = 1; j <= 16; ++j) CHECK(z.eval(block_index(3, j)).is_zero());

    const auto single = combine({0.0, 0.0, 5.0}, x0);
    for (Index j = 1; j <= 64; ++j) {
        CHECK(single.eval(block_index(3, j))[0] == 5.0 / double(j));
        CHECK(single.eval(block_index(1, j)).is_zero());
        CHECK(single.eval(block_index(2, j)).is_zero());
    }

    const auto empty = combine({}, x0);
    for (Index n = 1; n <= 64; ++n) CHECK(empty.eval(n).is_zero());
}

TEST_CASE("truncate evaluates the first N coordinates") {
    const auto xs = truncate(harmonic(), 3);
    REQUIRE(xs.size() == 3);
    CHECK(xs[0][0] == 1.0);
    CHECK(xs[1][0] == 0.5);
    CHECK(xs[2][0] == 1.0 / 3.0);

    const auto zeros = truncate(zero_sequence(scalar_space()), 5);
    REQUIRE(zeros.size() == 5);
    for (const Vec& v : zeros) CHECK(v.is_zero());
}
