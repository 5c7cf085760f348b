#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>

#include "unitdist/density.hpp"
#include "unitdist/errors.hpp"

using namespace unitdist;

namespace {

// Brute-force oracle: scan the whole grid k, l <= bound, keep the minimal
// k+l (ties: minimal k) solution, comparing exactly on squares.
std::optional<std::tuple<unsigned, unsigned>> grid_oracle(const Rational& target,
                                                          const Rational& eps, unsigned bound) {
    const Rational hi2 = (target + eps) * (target + eps);
    const Rational lo = target - eps;
    const bool lo_active = lo.sign() > 0;
    const Rational lo2 = lo * lo;
    std::optional<std::tuple<unsigned, unsigned, unsigned>> best;  // cost, k, l
    for (unsigned k = 0; k <= bound; ++k) {
        for (unsigned l = 0; l <= bound; ++l) {
            Rational v2(1);
            for (unsigned i = 0; i < k; ++i) v2 *= Rational(8, 9);
            for (unsigned i = 0; i < l; ++i) v2 *= Rational(3);
            if (hi2 < v2) continue;
            if (lo_active && v2 < lo2) continue;
            std::tuple<unsigned, unsigned, unsigned> c{k + l, k, l};
            if (!best || c < *best) best = c;
        }
    }
    if (!best) return std::nullopt;
    return std::make_tuple(std::get<1>(*best), std::get<2>(*best));
}

}  // namespace

TEST_CASE("exact hits") {
    ApproximationResult r = approximate_distance(Rational(1), Rational(1, 100), 10);
    CHECK(r.k == 0);
    CHECK(r.l == 0);
    CHECK(r.value_squared == Rational(1));
    CHECK(r.error_bound.is_zero());
}

TEST_CASE("the target 2 with eps 1/20 is reached at (7, 2)") {
    ApproximationResult r = approximate_distance(Rational(2), Rational(1, 20), 20);
    CHECK(r.k == 7);
    CHECK(r.l == 2);
    CHECK(r.value_squared == Rational(2097152, 531441));
    CHECK(r.error_bound <= Rational(1, 20));
    // |value - 2| is about 0.0135
    CHECK(r.error_bound <= Rational(14, 1000));
    CHECK(Rational(13, 1000) <= r.error_bound);
    // the value really squares to (8/9)^7 * 9
    CHECK(r.value.square() == TowerElem::constant(r.value.tower(), r.value_squared));
    // the grid oracle agrees even over the wider bound
    auto oracle = grid_oracle(Rational(2), Rational(1, 20), 40);
    REQUIRE(oracle.has_value());
    CHECK(std::get<0>(*oracle) == 7);
    CHECK(std::get<1>(*oracle) == 2);
}

TEST_CASE("oracle agreement across targets and tolerances") {
    const std::vector<Rational> targets = {Rational(1, 2),       Rational(1),  Rational(3, 2),
                                           Rational(2),          Rational(5, 2),
                                           Rational(271828, 100000)};
    for (const Rational& t : targets) {
        for (const Rational& eps : {Rational(1, 10), Rational(1, 100)}) {
            auto oracle = grid_oracle(t, eps, 40);
            if (!oracle) {
                CHECK_THROWS_AS(approximate_distance(t, eps, 40), SearchExhaustedError);
                continue;
            }
            ApproximationResult r = approximate_distance(t, eps, 40);
            CHECK(r.k == std::get<0>(*oracle));
            CHECK(r.l == std::get<1>(*oracle));
            CHECK(r.error_bound <= eps);
        }
    }
}

TEST_CASE("monotone refinement: smaller eps never lowers k+l") {
    const Rational t(7, 3);
    unsigned prev = 0;
    for (const Rational& eps :
         {Rational(1, 2), Rational(1, 4), Rational(1, 10), Rational(1, 25), Rational(1, 50)}) {
        ApproximationResult r = approximate_distance(t, eps, 60);
        CHECK(r.k + r.l >= prev);
        prev = r.k + r.l;
    }
}

TEST_CASE("input validation and exhaustion") {
    CHECK_THROWS_AS(approximate_distance(Rational(0), Rational(1, 10), 10), DomainError);
    CHECK_THROWS_AS(approximate_distance(Rational(-1), Rational(1, 10), 10), DomainError);
    CHECK_THROWS_AS(approximate_distance(Rational(2), Rational(0), 10), DomainError);
    CHECK_THROWS_AS(approximate_distance(Rational(2), Rational(1, 100), 40),
                    SearchExhaustedError);
}

TEST_CASE("witness_for_target couples search and construction") {
    auto [r, s] = witness_for_target(Rational(1), Rational(1, 10), 10);
    CHECK(r.k == 0);
    CHECK(r.l == 0);
    CHECK(s.points().size() == 2);
    s.validate();

    // sqrt3 as an exactly representable rational-squared target is (0, 1):
    // |sqrt3 - 433/250| < 1/500 fails, so pick eps covering it
    auto [r3, s3] = witness_for_target(Rational(433, 250), Rational(1, 100), 10);
    CHECK(r3.k == 0);
    CHECK(r3.l == 1);
    CHECK(s3.points().size() == 7);

    // the (7,2) solution exceeds the default depth guard
    CHECK_THROWS_AS(witness_for_target(Rational(2), Rational(1, 20), 20), CapacityError);
}
