#include "qgame/fock.hpp"

#include <doctest.h>

#include "qgame/operator_core.hpp"
#include "qgame/scenario.hpp"
#include "test_support.hpp"

using namespace qgame;
using test::slow_expectation;

TEST_CASE("ladder actions on the lowest levels") {
    const FockSpace space(4);
    const LadderPair ladder = build_ladder(space);

    StateVector vacuum = StateVector::Zero(space.dim());
    vacuum[0] = 1.0;
    const StateVector lifted = ladder.raising * vacuum;
    CHECK(lifted[1] == Complex(1.0, 0.0));
    CHECK(lifted.norm() == doctest::Approx(1.0).epsilon(1e-15));

    CHECK((ladder.lowering * vacuum).norm() == 0.0);
    CHECK(max_abs(ladder.lowering - ladder.raising.adjoint()) == 0.0);
}

TEST_CASE("truncated ladder commutator on a dim-5 space") {
    const FockSpace space(4);
    const LadderPair ladder = build_ladder(space);
    const OperatorMatrix comm = commutator(ladder.lowering, ladder.raising);

    OperatorMatrix expected = identity(space.dim());
    expected(4, 4) = -4.0;
    CHECK(max_abs(comm - expected) <= 1e-12);
}

TEST_CASE("truncation defect is rank one at the top level") {
    for (int n_max : {1, 2, 7, 32}) {
        const FockSpace space(n_max);
        const LadderPair ladder = build_ladder(space);
        const OperatorMatrix comm =
            commutator(ladder.lowering, ladder.raising);
        const int top = n_max;
        // the commutator's top diagonal value is -n_max, so the deviation
        // from I is confined to that single entry
        CHECK(std::abs(comm(top, top) - Complex(-n_max, 0.0)) <= 1e-12);
        const OperatorMatrix defect = comm - identity(space.dim());
        for (int r = 0; r < space.dim(); ++r) {
            for (int c = 0; c < space.dim(); ++c) {
                if (r == top && c == top) continue;
                CHECK(std::abs(defect(r, c)) <= 1e-12);
            }
        }
    }
}

TEST_CASE("number operator equals a+ a- and counts rounds") {
    const FockSpace space(5);
    const OperatorMatrix number = build_number(space);
    const LadderPair ladder = build_ladder(space);

    CHECK(max_abs(number - ladder.raising * ladder.lowering) <= 1e-13);

    StateVector three = StateVector::Zero(space.dim());
    three[3] = 1.0;
    CHECK((number * three - 3.0 * three).norm() == 0.0);

    // [N, a+] equals a+ on all columns below n_max
    const OperatorMatrix lhs = commutator(number, ladder.raising);
    for (int c = 0; c < space.n_max; ++c) {
        CHECK((lhs.col(c) - ladder.raising.col(c)).cwiseAbs().maxCoeff() <=
              1e-12);
    }
}

TEST_CASE("payoff matrices for the 2-level game") {
    const FockSpace space(1);
    const PayoffPair payoffs = build_payoffs(space, PayoffUnits(1.0, 1.0));
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(payoffs.pi1(0, 1) - Complex(inv_sqrt2, 0)) <= 1e-15);
    CHECK(std::abs(payoffs.pi1(1, 0) - Complex(inv_sqrt2, 0)) <= 1e-15);
    CHECK(std::abs(payoffs.pi1(0, 0)) == 0.0);
    CHECK(std::abs(payoffs.pi2(0, 1) - Complex(0, -inv_sqrt2)) <= 1e-15);
    CHECK(std::abs(payoffs.pi2(1, 0) - Complex(0, inv_sqrt2)) <= 1e-15);
}

TEST_CASE("payoff commutator equals i kappa1 kappa2 on the interior") {
    for (const auto& [k1, k2] : std::vector<std::pair<double, double>>{
             {1.0, 1.0}, {1.0, 2.0}, {0.7, 3.1}, {9.3, 8.8}}) {
        for (int n_max : {1, 2, 5, 20}) {
            const FockSpace space(n_max);
            const PayoffPair payoffs =
                build_payoffs(space, PayoffUnits(k1, k2));
            const OperatorMatrix comm = commutator(payoffs.pi1, payoffs.pi2);
            CHECK(std::abs(comm(0, 0) - Complex(0.0, k1 * k2)) <= 1e-13);

            const OperatorMatrix target =
                Complex(0.0, k1 * k2) * identity(space.dim());
            CHECK(max_abs_on(comm - target, space.interior_indices()) <=
                  1e-12);
        }
    }
}

TEST_CASE("payoffs are exactly Hermitian and linear in their units") {
    const FockSpace space(6);
    const PayoffPair base = build_payoffs(space, PayoffUnits(1.3, 0.4));
    CHECK(hermiticity_defect(base.pi1) == 0.0);
    CHECK(hermiticity_defect(base.pi2) == 0.0);

    const PayoffPair doubled = build_payoffs(space, PayoffUnits(2.6, 0.4));
    CHECK(max_abs(doubled.pi1 - 2.0 * base.pi1) <= 1e-15);
    CHECK(max_abs(doubled.pi2 - base.pi2) == 0.0);
}

TEST_CASE("payoff round-trip recovers the ladder pair") {
    for (const auto& [k1, k2] : std::vector<std::pair<double, double>>{
             {1.0, 1.0}, {2.5, 0.3}}) {
        const FockSpace space(8);
        const LadderPair direct = build_ladder(space);
        const LadderPair recovered = ladder_from_payoffs(
            build_payoffs(space, PayoffUnits(k1, k2)), PayoffUnits(k1, k2));
        CHECK(max_abs(recovered.raising - direct.raising) <= 1e-12);
        CHECK(max_abs(recovered.lowering - direct.lowering) <= 1e-12);
    }
}

TEST_CASE("interior ladder algebra across dimensions") {
    for (int n_max = 1; n_max <= 63; n_max += (n_max < 8 ? 1 : 11)) {
        const FockSpace space(n_max);
        const LadderPair ladder = build_ladder(space);
        const OperatorMatrix number = build_number(space);
        const PayoffPair payoffs = build_payoffs(space, PayoffUnits(1, 1));
        const auto interior = space.interior_indices();
        const OperatorMatrix eye = identity(space.dim());

        CHECK(max_abs_on(commutator(ladder.lowering, ladder.raising) - eye,
                         interior) <= 1e-12);
        CHECK(max_abs_on(commutator(number, ladder.raising) - ladder.raising,
                         interior) <= 1e-12);
        CHECK(max_abs_on(commutator(payoffs.pi1, payoffs.pi2) -
                             Complex(0, 1) * eye,
                         interior) <= 1e-12);
    }
}

TEST_CASE("vacuum saturates the uncertainty bound") {
    const FockSpace space(6);
    const PayoffPair payoffs = build_payoffs(space, PayoffUnits(1, 1));
    const GameState vacuum = decay_game_state(space, {{0, 1.0}});

    const UncertaintyResult r =
        uncertainty_product(payoffs.pi1, payoffs.pi2, vacuum);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK(r.delta1 == doctest::Approx(inv_sqrt2).epsilon(1e-13));
    CHECK(r.delta2 == doctest::Approx(inv_sqrt2).epsilon(1e-13));
    CHECK(r.product == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(r.bound == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(r.product >= r.bound - 1e-10);
}

TEST_CASE("first excited state: product 3/2 against bound 1/2") {
    const FockSpace space(6);
    const PayoffPair payoffs = build_payoffs(space, PayoffUnits(1, 1));
    const GameState one = decay_game_state(space, {{1, 1.0}});

    const UncertaintyResult r =
        uncertainty_product(payoffs.pi1, payoffs.pi2, one);
    CHECK(r.product == doctest::Approx(1.5).epsilon(1e-13));
    CHECK(r.bound == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("uncertainty bound holds for random interior states") {
    const FockSpace space(9);
    const PayoffPair payoffs = build_payoffs(space, PayoffUnits(1.4, 0.6));
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        StateVector amps = StateVector::Zero(space.dim());
        const StateVector inner = test::random_state(space.n_max, rng);
        amps.head(space.n_max) = inner;
        const GameState state(space.game_space(), amps);
        const UncertaintyResult r =
            uncertainty_product(payoffs.pi1, payoffs.pi2, state);
        CHECK(r.product >= r.bound - 1e-10);
    }
}

TEST_CASE("uncertainty rejects boundary-supported states") {
    const FockSpace space(3);
    const PayoffPair payoffs = build_payoffs(space, PayoffUnits(1, 1));
    const GameState top = decay_game_state(space, {{3, 1.0}});
    CHECK_THROWS_AS(uncertainty_product(payoffs.pi1, payoffs.pi2, top),
                    TruncationError);
}

TEST_CASE("decay game states") {
    const FockSpace space(4);
    const OperatorMatrix number = build_number(space);

    const GameState vacuum = decay_game_state(space, {{0, 1.0}});
    CHECK(std::real(slow_expectation(number, vacuum.amplitudes())) == 0.0);

    const GameState half = decay_game_state(space, {{0, 1.0}, {1, 1.0}});
    CHECK(std::real(slow_expectation(number, half.amplitudes())) ==
          doctest::Approx(0.5).epsilon(1e-14));

    const PayoffPair payoffs = build_payoffs(space, PayoffUnits(1, 1));
    const GameState skip =
        decay_game_state(space, {{0, 1.0}, {2, Complex(0.0, 1.0)}});
    CHECK(std::abs(slow_expectation(payoffs.pi1, skip.amplitudes())) <=
          1e-15);

    // duplicates are summed before normalization
    const GameState cancel_free =
        decay_game_state(space, {{0, 1.0}, {0, 1.0}});
    CHECK(std::abs(cancel_free.amplitudes()[0] - Complex(1.0, 0.0)) <= 1e-15);

    CHECK_THROWS_AS(decay_game_state(space, {}), StateError);
    CHECK_THROWS_AS(decay_game_state(space, {{0, 1.0}, {0, -1.0}}),
                    StateError);
    CHECK_THROWS_AS(decay_game_state(space, {{7, 1.0}}), DimensionError);
}

TEST_CASE("fock game space labels and interior") {
    const FockSpace space(3);
    const GameSpacePtr gs = space.game_space();
    CHECK(gs->dim() == 4);
    CHECK(gs->label(0) == "n=0");
    CHECK(gs->label(3) == "n=3");
    CHECK(gs->is_interior(2));
    CHECK_FALSE(gs->is_interior(3));
    CHECK(gs->truncated());
    CHECK(space.interior_dim() == 3);
}
