#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "decor/vandermonde.hpp"
#include "fixtures.hpp"
#include "test_util.hpp"

using namespace decor;
using decor::test::matrix_from;
using namespace decor::test;

namespace {

RationalMatrix random_rational_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    RationalMatrix m(r, c);
    for (auto& x : m.data) x = Rational(num(rng), den(rng));
    return m;
}

}  // namespace

TEST_CASE("vandermonde matrix: spin-1 physical") {
    const auto v = build_vandermonde(SpinValue::one(), NodeConvention::Physical);
    CHECK(v == matrix_from({{"1", "-1", "1"}, {"1", "0", "0"}, {"1", "1", "1"}}));
}

TEST_CASE("vandermonde matrix: spin-2 physical, first row") {
    const auto v = build_vandermonde(SpinValue(4), NodeConvention::Physical);
    REQUIRE(v.rows == 5);
    const std::vector<std::string> want{"1", "-2", "4", "-8", "16"};
    for (std::size_t j = 0; j < 5; ++j) CHECK(v.at(0, j) == Rational::from_string(want[j]));
}

TEST_CASE("vandermonde matrix: spin-1/2 normalized") {
    const auto v = build_vandermonde(SpinValue::half(), NodeConvention::Normalized);
    CHECK(v == matrix_from({{"1", "-1"}, {"1", "1"}}));
}

TEST_CASE("invert_exact reproduces the printed inverse tables exactly") {
    for (const auto& [twice, fixture] : kInverseFixtures) {
        CAPTURE(twice);
        const auto inv = invert_exact(build_vandermonde(SpinValue(twice), NodeConvention::Physical));
        CHECK(inv == matrix_from(*fixture));
    }
}

TEST_CASE("invert_exact: identity and error paths") {
    CHECK(invert_exact(RationalMatrix::identity(3)) == RationalMatrix::identity(3));

    RationalMatrix singular(2, 2);
    singular.at(0, 0) = Rational(1);
    singular.at(0, 1) = Rational(2);
    singular.at(1, 0) = Rational(2);
    singular.at(1, 1) = Rational(4);
    CHECK_THROWS_AS(invert_exact(singular), std::domain_error);
    CHECK_THROWS_AS(invert_exact(RationalMatrix(2, 3)), std::domain_error);
}

TEST_CASE("inverse times matrix is the identity, exactly, for every small spin") {
    for (int twice = 1; twice <= 6; ++twice)
        for (auto conv : {NodeConvention::Physical, NodeConvention::Normalized}) {
            CAPTURE(twice);
            const auto v = build_vandermonde(SpinValue(twice), conv);
            const auto inv = invert_exact(v);
            CHECK(multiply(inv, v) == RationalMatrix::identity(v.rows));
            CHECK(multiply(v, inv) == RationalMatrix::identity(v.rows));
        }
}

TEST_CASE("stirling numbers of the first kind: base cases and recurrence anchors") {
    CHECK(stirling_first_unsigned(0, 0) == BigInt(1));
    CHECK(stirling_first_unsigned(5, 0).is_zero());
    CHECK(stirling_first_unsigned(3, 7).is_zero());
    CHECK(stirling_first_unsigned(4, 2) == BigInt(11));
    CHECK(stirling_first_unsigned(8, 3) == BigInt(13132));
    for (unsigned n = 1; n <= 8; ++n) {
        CHECK(stirling_first_unsigned(n, n) == BigInt(1));
        CHECK(stirling_first_unsigned(n, 1) == BigInt::factorial(n - 1));
    }
}

TEST_CASE("stirling numbers count permutations by cycles") {
    // Independent oracle: enumerate S_4 and S_5, count cycles directly.
    for (int n : {4, 5}) {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<int> by_cycles(n + 1, 0);
        do {
            std::vector<bool> seen(n, false);
            int cycles = 0;
            for (int start = 0; start < n; ++start) {
                if (seen[start]) continue;
                ++cycles;
                for (int i = start; !seen[i]; i = perm[i]) seen[i] = true;
            }
            ++by_cycles[cycles];
        } while (std::next_permutation(perm.begin(), perm.end()));
        for (int k = 0; k <= n; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            CHECK(stirling_first_unsigned(n, k) == BigInt(by_cycles[k]));
        }
    }
}

TEST_CASE("stirling row sums are factorials") {
    for (unsigned n = 0; n <= 9; ++n) {
        BigInt sum;
        for (unsigned k = 0; k <= n; ++k) sum += stirling_first_unsigned(n, k);
        CHECK(sum == BigInt::factorial(n));
    }
}

TEST_CASE("closed-form inverse elements: frozen spot values") {
    CHECK(inverse_element_closed_form(SpinValue(3), 1, 2, NodeConvention::Physical) ==
          Rational(9, 16));
    CHECK(inverse_element_closed_form(SpinValue(2), 1, 2, NodeConvention::Physical) ==
          Rational(1));
    CHECK(inverse_element_closed_form(SpinValue(4), 3, 3, NodeConvention::Physical) ==
          Rational(-5, 4));
    CHECK_THROWS_AS(inverse_element_closed_form(SpinValue(2), 0, 1, NodeConvention::Physical),
                    std::out_of_range);
    CHECK_THROWS_AS(inverse_element_closed_form(SpinValue(2), 1, 4, NodeConvention::Physical),
                    std::out_of_range);
}

TEST_CASE("closed form agrees with exact inversion for every entry, spin <= 3") {
    for (int twice = 1; twice <= 6; ++twice)
        for (auto conv : {NodeConvention::Physical, NodeConvention::Normalized}) {
            const SpinValue s(twice);
            const auto inv = invert_exact(build_vandermonde(s, conv));
            const int n = s.moment_count();
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    CAPTURE(twice);
                    CAPTURE(i);
                    CAPTURE(j);
                    CHECK(inverse_element_closed_form(s, i, j, conv) ==
                          inv.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)));
                }
        }
}

TEST_CASE("kron of two spin-1 node matrices matches the printed 9x9 table") {
    const auto v1 = build_vandermonde(SpinValue::one(), NodeConvention::Physical);
    CHECK(kron(v1, v1) == matrix_from(kV11));
}

TEST_CASE("kron: identities, inverse factorization, associativity") {
    CHECK(kron(RationalMatrix::identity(2), RationalMatrix::identity(3)) ==
          RationalMatrix::identity(6));

    const auto v1 = build_vandermonde(SpinValue::one(), NodeConvention::Physical);
    const auto inv1 = invert_exact(v1);
    CHECK(multiply(kron(inv1, inv1), kron(v1, v1)) == RationalMatrix::identity(9));

    std::mt19937 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        const auto a = random_rational_matrix(rng, 2, 3);
        const auto b = random_rational_matrix(rng, 3, 2);
        const auto c = random_rational_matrix(rng, 2, 2);
        CHECK(kron(kron(a, b), c) == kron(a, kron(b, c)));
    }
}

TEST_CASE("kron refuses to blow past the entry cap") {
    RationalMatrix big(200, 200);
    CHECK_THROWS_AS(kron(big, big), std::length_error);
    CHECK_THROWS_AS(kron(Matrix(200, 200), Matrix(200, 200)), std::length_error);
    CHECK_NOTHROW(kron(Matrix(200, 200), Matrix(5, 5)));
}

TEST_CASE("apply_kronecker equals the materialized product") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);

    const auto a = to_real(random_rational_matrix(rng, 3, 3));
    const auto b = to_real(random_rational_matrix(rng, 2, 2));
    const auto c = to_real(random_rational_matrix(rng, 4, 4));
    const auto full = kron(kron(a, b), c);

    std::vector<double> v(full.cols);
    for (double& x : v) x = dist(rng);

    const auto got = apply_kronecker({a, b, c}, v);
    REQUIRE(got.size() == full.rows);
    for (std::size_t i = 0; i < full.rows; ++i) {
        double want = 0.0;
        for (std::size_t j = 0; j < full.cols; ++j) want += full.at(i, j) * v[j];
        CHECK(got[i] == doctest::Approx(want).epsilon(1e-12));
    }
}

TEST_CASE("inverse_vandermonde_kron matches factor-by-factor inversion") {
    const Legs legs{SpinValue::half(), SpinValue::one()};
    const auto conv = NodeConvention::Physical;
    const auto joint = inverse_vandermonde_kron(legs, conv);
    const auto direct = kron(invert_exact(build_vandermonde(legs[0], conv)),
                             invert_exact(build_vandermonde(legs[1], conv)));
    CHECK(joint == direct);
}
