#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "decor/spin.hpp"
#include "decor/vandermonde.hpp"

using namespace decor;

TEST_CASE("spin values") {
    CHECK(SpinValue::half().moment_count() == 2);
    CHECK(SpinValue(2).moment_count() == 3);
    CHECK(SpinValue(3).is_half_odd());
    CHECK_FALSE(SpinValue(4).is_half_odd());
    CHECK(SpinValue(3).value() == doctest::Approx(1.5));
    CHECK_THROWS_AS(SpinValue(0), std::invalid_argument);
    CHECK_THROWS_AS(SpinValue(-2), std::invalid_argument);
}

TEST_CASE("moments: spin-1 physical") {
    const auto m = moments(SpinValue::one(), NodeConvention::Physical);
    REQUIRE(m.size() == 3);
    CHECK(m[0] == -1.0);
    CHECK(m[1] == 0.0);
    CHECK(m[2] == 1.0);
}

TEST_CASE("moments: spin-1/2 normalized is the +-1 Ising pair") {
    const auto m = moments(SpinValue::half(), NodeConvention::Normalized);
    REQUIRE(m.size() == 2);
    CHECK(m[0] == -1.0);
    CHECK(m[1] == 1.0);
}

TEST_CASE("moments: spin-3/2 physical") {
    const auto m = moments(SpinValue(3), NodeConvention::Physical);
    REQUIRE(m.size() == 4);
    CHECK(m[0] == -1.5);
    CHECK(m[1] == -0.5);
    CHECK(m[2] == 0.5);
    CHECK(m[3] == 1.5);
}

TEST_CASE("moments are ascending, equally spaced, and span the right range") {
    for (int twice = 1; twice <= 6; ++twice)
        for (auto conv : {NodeConvention::Physical, NodeConvention::Normalized}) {
            const SpinValue s(twice);
            const auto m = moments(s, conv);
            REQUIRE(static_cast<int>(m.size()) == twice + 1);
            const double span = conv == NodeConvention::Physical ? s.value() : 1.0;
            CHECK(m.front() == doctest::Approx(-span));
            CHECK(m.back() == doctest::Approx(span));
            for (std::size_t j = 1; j < m.size(); ++j)
                CHECK(m[j] - m[j - 1] == doctest::Approx(2.0 * span / twice));
        }
}

TEST_CASE("linear_index: examples for two spin-1 legs") {
    const Legs legs{SpinValue::one(), SpinValue::one()};
    CHECK(linear_index(legs, {0, 0}) == 0);
    CHECK(linear_index(legs, {1, 2}) == 5);   // J_{1,2} is the sixth entry
    CHECK(linear_index(legs, {0, 1}) == 1);   // configuration (-1, 0) is row two
}

TEST_CASE("linear_index is a bijection with components_at") {
    const Legs legs{SpinValue(2), SpinValue(1), SpinValue(3)};
    const std::size_t n = state_count(legs);
    CHECK(n == 3 * 2 * 4);
    for (std::size_t p = 0; p < n; ++p)
        CHECK(linear_index(legs, components_at(legs, p)) == p);
}

TEST_CASE("linear_index rejects out-of-range components") {
    const Legs legs{SpinValue::one(), SpinValue::one()};
    CHECK_THROWS_AS(linear_index(legs, {3, 0}), std::out_of_range);
    CHECK_THROWS_AS(linear_index(legs, {0, -1}), std::out_of_range);
    CHECK_THROWS_AS(linear_index(legs, {0}), std::out_of_range);
    CHECK_THROWS_AS(components_at(legs, 9), std::out_of_range);
}

TEST_CASE("monomial examples") {
    const Legs legs{SpinValue::one(), SpinValue::one()};
    const auto conv = NodeConvention::Physical;
    // config (-1,-1) with exponents (1,1)
    CHECK(monomial(legs, conv, {0, 0}, {1, 1}) == 1.0);
    // all-zero exponents: empty product, also on a zero node
    CHECK(monomial(legs, conv, {1, 0}, {0, 0}) == 1.0);
    // config (0, 1) with exponents (2,1)
    CHECK(monomial(legs, conv, {1, 2}, {2, 1}) == 0.0);
}

TEST_CASE("monomial matrix equals the Kronecker Vandermonde for two spin-1 legs") {
    const Legs legs{SpinValue::one(), SpinValue::one()};
    const auto conv = NodeConvention::Physical;
    const Matrix v = to_real(kron(build_vandermonde(legs[0], conv),
                                  build_vandermonde(legs[1], conv)));
    const std::size_t n = state_count(legs);
    REQUIRE(v.rows == n);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t k = 0; k < n; ++k)
            CHECK(monomial(legs, conv, components_at(legs, c), components_at(legs, k)) ==
                  v.at(c, k));
}

TEST_CASE("coupling vector accessors and validation") {
    const Legs legs{SpinValue::half(), SpinValue::one()};
    auto j = CouplingVector::zeros(legs, NodeConvention::Physical);
    REQUIRE(j.size() == 6);
    j.set({1, 2}, 0.75);
    CHECK(j.at({1, 2}) == 0.75);
    CHECK(j.entries[linear_index(legs, {1, 2})] == 0.75);
    j.validate();

    j.entries[0] = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(j.validate(), std::invalid_argument);
    j.entries[0] = 0.0;
    j.entries.push_back(0.0);
    CHECK_THROWS_AS(j.validate(), std::invalid_argument);
}

TEST_CASE("node convention names round-trip") {
    CHECK(node_convention_from_string("physical") == NodeConvention::Physical);
    CHECK(node_convention_from_string("normalized") == NodeConvention::Normalized);
    CHECK(to_string(NodeConvention::Normalized) == "normalized");
    CHECK_THROWS_AS(node_convention_from_string("madeup"), std::invalid_argument);
}
