#include <doctest.h>

#include <cmath>
#include <random>

#include "entdyn/amplitude.hpp"
#include "entdyn/error.hpp"
#include "entdyn/states.hpp"
#include "oracles.hpp"

using namespace entdyn;
using amplitude::AmplitudePair;
using states::InitialStateParam;
using states::XMatrix;

namespace {

const AmplitudePair kStart{0.0, 1.0, 0.0};
const AmplitudePair kDecayed{0.0, 0.0, 1.0};

} // namespace

TEST_CASE("alpha range") {
    CHECK_NOTHROW(InitialStateParam(0.0));
    CHECK_NOTHROW(InitialStateParam(1.0));
    CHECK_THROWS_AS(InitialStateParam(-1e-9), InvalidArgument);
    CHECK_THROWS_AS(InitialStateParam(1.5), InvalidArgument);
    CHECK_THROWS_AS(InitialStateParam(NAN), InvalidArgument);
}

TEST_CASE("partition labels round trip") {
    for (auto p : states::kAllPartitions) CHECK(states::partition_from_string(states::to_string(p)) == p);
    CHECK_THROWS_AS(states::partition_from_string("q2r2"), InvalidArgument);
}

TEST_CASE("qubit pair at t = 0 is the initial state") {
    for (double a : {0.0, 0.35, 1.0}) {
        const XMatrix m = states::rho_q1q2(InitialStateParam(a), kStart);
        CHECK(m.a == doctest::Approx(a / 3.0));
        CHECK(m.b == doctest::Approx(1.0 / 3.0));
        CHECK(m.c == doctest::Approx(1.0 / 3.0));
        CHECK(m.z.real() == doctest::Approx(1.0 / 3.0));
        CHECK(m.d == doctest::Approx((1.0 - a) / 3.0));
        CHECK(m.w == std::complex<double>{});
    }
}

TEST_CASE("qubit pair after full decay sits in |00>") {
    const XMatrix m = states::rho_q1q2(InitialStateParam(0.35), kDecayed);
    CHECK(m.a == 0.0);
    CHECK(m.b == 0.0);
    CHECK(m.c == 0.0);
    CHECK(m.z == std::complex<double>{});
    CHECK(m.d == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("reservoirs start in vacuum") {
    for (double a : {0.0, 0.5, 1.0}) {
        const XMatrix m = states::rho_r1r2(InitialStateParam(a), kStart);
        CHECK(m.a == 0.0);
        CHECK(m.b == 0.0);
        CHECK(m.z == std::complex<double>{});
        CHECK(m.d == doctest::Approx(1.0).epsilon(1e-15));
    }
}

TEST_CASE("qubit-reservoir blocks at t = 0") {
    const double a = 0.4;
    const XMatrix own = states::rho_q1r1(InitialStateParam(a), kStart);
    CHECK(own.b == doctest::Approx((1 + a) / 3));
    CHECK(own.c == 0.0);
    CHECK(own.z == std::complex<double>{});
    CHECK(own.d == doctest::Approx((2 - a) / 3));
    CHECK(own.trace() == doctest::Approx(1.0).epsilon(1e-15));

    const XMatrix other = states::rho_q1r2(InitialStateParam(a), kStart);
    CHECK(other.a == 0.0);
    CHECK(other.b == doctest::Approx((1 + a) / 3));
    CHECK(other.c == 0.0);
    CHECK(other.z == std::complex<double>{});
    CHECK(other.d == doctest::Approx((2 - a) / 3));
}

TEST_CASE("all builders give unit-trace physical states (property)") {
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> ua(0.0, 1.0);
    for (int i = 0; i < 10000; ++i) {
        const InitialStateParam alpha(ua(rng));
        const AmplitudePair amp = testing::random_amplitude(rng);
        for (auto p : states::kAllPartitions) {
            const XMatrix m = states::reduced_state(p, alpha, amp);
            REQUIRE(std::abs(m.trace() - 1.0) < 1e-12);
            const auto report = states::validate_density_matrix(m);
            REQUIRE_MESSAGE(report.valid(), report.describe());
        }
    }
}

TEST_CASE("reservoir pair is the qubit pair with amplitudes swapped (property)") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> ua(0.0, 1.0);
    for (int i = 0; i < 2000; ++i) {
        const InitialStateParam alpha(ua(rng));
        const AmplitudePair amp = testing::random_amplitude(rng);
        const AmplitudePair swapped{amp.t, amp.c_tilde, amp.c0};
        REQUIRE(states::rho_r1r2(alpha, amp) == states::rho_q1q2(alpha, swapped));
    }
}

TEST_CASE("own-reservoir coherence saturates the positivity bound") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ua(0.0, 1.0);
    for (int i = 0; i < 2000; ++i) {
        const auto m = states::rho_q1r1(InitialStateParam(ua(rng)), testing::random_amplitude(rng));
        REQUIRE(std::abs(std::norm(m.z) - m.b * m.c) < 1e-15);
    }
}

TEST_CASE("sign of C0 only flips z") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> ua(0.0, 1.0);
    for (int i = 0; i < 500; ++i) {
        const InitialStateParam alpha(ua(rng));
        const AmplitudePair amp = testing::random_amplitude(rng);
        const AmplitudePair flipped{amp.t, -amp.c0, amp.c_tilde};
        for (auto builder : {&states::rho_q1r1, &states::rho_q1r2}) {
            XMatrix m = builder(alpha, amp);
            const XMatrix f = builder(alpha, flipped);
            CHECK(f.z == -m.z);
            m.z = f.z;
            CHECK(m == f);
        }
    }
}

TEST_CASE("q1r2 with alpha = 0 has a vanishing |11> population") {
    const AmplitudePair amp = AmplitudePair::from_c0(0.0, 0.6);
    const XMatrix m = states::rho_q1r2(InitialStateParam(0.0), amp);
    CHECK(m.a == 0.0);
    CHECK(m.z.real() == doctest::Approx(0.6 * 0.8 / 3.0));
}

TEST_CASE("validation report") {
    const XMatrix bad{0.0, 0.5, 0.5, 0.0, {0.6, 0.0}, {0.0, 0.0}};
    const auto r = states::validate_density_matrix(bad);
    REQUIRE_FALSE(r.valid());
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].condition == "|z| > sqrt(bc)");
    CHECK(r.violations[0].magnitude == doctest::Approx(0.1));

    CHECK(states::validate_density_matrix({0.25, 0.25, 0.25, 0.25, {}, {}}).valid());

    const XMatrix skewed{0.5, 0.5, 0.5, 0.0, {}, {}};
    CHECK(states::validate_density_matrix(skewed).violations.front().condition == "trace != 1");

    const XMatrix negative{-0.1, 0.6, 0.5, 0.0, {}, {}};
    CHECK(states::validate_density_matrix(negative).violations.front().condition == "a < 0");

    const XMatrix outer{0.25, 0.25, 0.25, 0.25, {}, {0.3, 0.0}};
    CHECK(states::validate_density_matrix(outer).violations.front().condition == "|w| > sqrt(ad)");
}
