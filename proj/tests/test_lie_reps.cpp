#include "qgame/lie_reps.hpp"

#include <doctest.h>

#include "test_support.hpp"

using namespace qgame;
using test::slow_commutator;

namespace {

const Complex kI(0.0, 1.0);

HalfInteger half(const char* text) { return HalfInteger::parse(text); }

} // namespace

TEST_CASE("half-integer parsing and formatting") {
    CHECK(half("3/2").twice() == 3);
    CHECK(half("-1/2").twice() == -1);
    CHECK(half("2").twice() == 4);
    CHECK(half("1.5").twice() == 3);
    CHECK(half("3/2").str() == "3/2");
    CHECK(half("2").str() == "2");
    CHECK(half("-1/2").value() == -0.5);
    CHECK_THROWS_AS(half("0.3"), RepresentationError);
    CHECK_THROWS_AS(half("x"), RepresentationError);
    CHECK_THROWS_AS(HalfInteger::from_double(0.707), RepresentationError);
}

TEST_CASE("kappa=0 singlet is three 1x1 zeros") {
    const Su2Irrep rep = build_su2_irrep(half("0"));
    CHECK(rep.dim() == 1);
    CHECK(max_abs(rep.pi1) == 0.0);
    CHECK(max_abs(rep.pi2) == 0.0);
    CHECK(max_abs(rep.pi3) == 0.0);
    CHECK(max_abs(su2_casimir(rep)) == 0.0);
}

TEST_CASE("doublet spectrum and ladder phases") {
    const Su2Irrep rep = build_su2_irrep(half("1/2"));
    CHECK(rep.pi3(0, 0) == Complex(-0.5, 0.0));
    CHECK(rep.pi3(1, 1) == Complex(0.5, 0.0));
    // Condon-Shortley: pi1 + i pi2 has real nonnegative entries
    const OperatorMatrix raising = rep.pi1 + kI * rep.pi2;
    CHECK(raising(1, 0).real() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(raising(1, 0).imag()) == 0.0);
}

TEST_CASE("kappa=1 commutators against the brute-force oracle") {
    const Su2Irrep rep = build_su2_irrep(half("1"));
    CHECK(rep.pi3(0, 0) == Complex(-1.0, 0.0));
    CHECK(rep.pi3(1, 1) == Complex(0.0, 0.0));
    CHECK(rep.pi3(2, 2) == Complex(1.0, 0.0));

    CHECK(max_abs(slow_commutator(rep.pi1, rep.pi2) - kI * rep.pi3) <= 1e-15);
    CHECK(max_abs(commutator(rep.pi1, rep.pi2) - kI * rep.pi3) <= 1e-12);
    CHECK(max_abs(commutator(rep.pi2, rep.pi3) - kI * rep.pi1) <= 1e-12);
    CHECK(max_abs(commutator(rep.pi3, rep.pi1) - kI * rep.pi2) <= 1e-12);
}

TEST_CASE("su(2) exactness, Casimir and tracelessness up to kappa = 10") {
    for (long twice = 0; twice <= 20; ++twice) {
        const Su2Irrep rep = build_su2_irrep(HalfInteger::from_twice(twice));
        const double k = rep.kappa.value();

        CHECK(max_abs(commutator(rep.pi1, rep.pi2) - kI * rep.pi3) <= 1e-12);
        CHECK(max_abs(commutator(rep.pi2, rep.pi3) - kI * rep.pi1) <= 1e-12);
        CHECK(max_abs(commutator(rep.pi3, rep.pi1) - kI * rep.pi2) <= 1e-12);

        const OperatorMatrix casimir = su2_casimir(rep);
        CHECK(max_abs(casimir - k * (k + 1.0) * identity(rep.dim())) <=
              1e-12);

        CHECK(std::abs(rep.pi1.trace()) <= 1e-12);
        CHECK(std::abs(rep.pi2.trace()) <= 1e-12);
        CHECK(std::abs(rep.pi3.trace()) <= 1e-12);

        // pi3 spectrum is exactly -kappa..kappa (constructed diagonal)
        for (int m = 0; m < rep.dim(); ++m) {
            CHECK(rep.pi3(m, m) ==
                  Complex(0.5 * static_cast<double>(-twice + 2 * m), 0.0));
        }
    }
}

TEST_CASE("all three su(2) payoffs share one spectrum") {
    for (const char* kappa : {"1/2", "1", "5/2", "4"}) {
        const Su2Irrep rep = build_su2_irrep(half(kappa));
        const EigenSystem e1 = hermitian_eigensystem(rep.pi1);
        const EigenSystem e2 = hermitian_eigensystem(rep.pi2);
        for (int m = 0; m < rep.dim(); ++m) {
            const double mu = std::real(rep.pi3(m, m));
            CHECK(std::abs(e1.values[m] - mu) <= 1e-10);
            CHECK(std::abs(e2.values[m] - mu) <= 1e-10);
        }
    }
}

TEST_CASE("casimir frozen values") {
    CHECK(max_abs(su2_casimir(build_su2_irrep(half("1/2"))) -
                  0.75 * identity(2)) <= 1e-15);
    CHECK(max_abs(su2_casimir(build_su2_irrep(half("2"))) -
                  6.0 * identity(5)) <= 1e-13);
}

TEST_CASE("su(2) rejects negative kappa") {
    CHECK_THROWS_AS(build_su2_irrep(HalfInteger::from_twice(-1)),
                    RepresentationError);
}

TEST_CASE("round_to_kappa bridges counting eigenvalues to spin") {
    CHECK(round_to_kappa(0, 0).twice() == 0);
    CHECK(round_to_kappa(1, 0).str() == "1/2");
    CHECK(round_to_kappa(2, 1).str() == "3/2");
    CHECK_THROWS_AS(round_to_kappa(-1, 0), DimensionError);
}

namespace {

std::vector<BilinearPayoff> pauli_generators() {
    OperatorMatrix s1(2, 2), s2(2, 2), s3(2, 2);
    s1 << 0.0, 0.5, 0.5, 0.0;
    s2 << Complex(0, 0), Complex(0, -0.5), Complex(0, 0.5), Complex(0, 0);
    s3 << 0.5, 0.0, 0.0, -0.5;
    return {{s1, "J1"}, {s2, "J2"}, {s3, "J3"}};
}

} // namespace

TEST_CASE("schwinger blocks reproduce the spin ladder") {
    const MultiGameSpace space({6, 6});
    const auto blocks = schwinger_blocks(space, pauli_generators());
    REQUIRE(blocks.size() == 7); // totals 0..6

    CHECK(blocks[0].kappa.twice() == 0);
    CHECK(blocks[0].indices.size() == 1);

    CHECK(blocks[1].kappa.str() == "1/2");
    CHECK(blocks[1].indices.size() == 2);

    for (const auto& block : blocks) {
        CHECK(block.residual <= 1e-10);
        CHECK(block.indices.size() == block.kappa.twice() + 1);
    }

    // sector with total 2 carries kappa=1 whose Casimir is 2 I
    const OperatorMatrix casimir = su2_casimir(build_su2_irrep(half("1")));
    CHECK(max_abs(casimir - 2.0 * identity(3)) <= 1e-13);
}

TEST_CASE("schwinger blocks validate their inputs") {
    const MultiGameSpace space({2, 2});
    auto generators = pauli_generators();
    std::swap(generators[0], generators[1]);
    CHECK_THROWS_AS(schwinger_blocks(space, generators), CoefficientError);

    CHECK_THROWS_AS(schwinger_blocks(MultiGameSpace({2, 2, 2}),
                                     pauli_generators()),
                    DimensionError);

    auto two = pauli_generators();
    two.pop_back();
    CHECK_THROWS_AS(schwinger_blocks(space, two), CoefficientError);
}

TEST_CASE("classical limit profile decreases as 1/(kappa+1)") {
    std::vector<HalfInteger> kappas;
    for (long t = 1; t <= 20; ++t) kappas.push_back(HalfInteger::from_twice(t));
    const auto rows = classical_limit_profile(kappas);
    REQUIRE(rows.size() == 20);
    CHECK(rows[0].second == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(rows[1].second == doctest::Approx(0.5).epsilon(1e-12));
    for (size_t i = 0; i < rows.size(); ++i) {
        const double k = rows[i].first.value();
        CHECK(std::abs(rows[i].second - 1.0 / (k + 1.0)) <= 1e-12);
        if (i > 0) CHECK(rows[i].second < rows[i - 1].second);
    }
    CHECK_THROWS_AS(classical_limit_profile({HalfInteger::from_twice(0)}),
                    RepresentationError);
}

TEST_CASE("su(1,1) bound-below spectrum starts at kappa + 1") {
    const Su11Irrep rep = build_su11_irrep(0.0, Su11Bound::below, 5);
    for (int m = 0; m < 5; ++m) {
        CHECK(rep.pi3(m, m) == Complex(m + 1.0, 0.0));
    }
    CHECK(rep.mu0 == 1.0);
}

TEST_CASE("su(1,1) commutators hold on the interior") {
    for (double kappa : {0.0, 0.5, 1.0, 1.5, 0.37}) {
        for (const Su11Bound bound : {Su11Bound::below, Su11Bound::above}) {
            const Su11Irrep rep = build_su11_irrep(kappa, bound, 20);
            const auto interior = rep.interior_indices();
            CHECK(max_abs_on(commutator(rep.pi1, rep.pi2) + kI * rep.pi3,
                             interior) <= 1e-12);
            CHECK(max_abs_on(commutator(rep.pi2, rep.pi3) - kI * rep.pi1,
                             interior) <= 1e-12);
            CHECK(max_abs_on(commutator(rep.pi3, rep.pi1) - kI * rep.pi2,
                             interior) <= 1e-12);
            CHECK(hermiticity_defect(rep.pi1) == 0.0);
            CHECK(hermiticity_defect(rep.pi2) == 0.0);
        }
    }
}

TEST_CASE("su(1,1) Casimir equals kappa(kappa+1) on the interior") {
    for (double kappa : {0.0, 0.5, 1.0, 1.5}) {
        const Su11Irrep rep = build_su11_irrep(kappa, Su11Bound::below, 20);
        const OperatorMatrix casimir = su11_casimir(rep);
        const OperatorMatrix target =
            kappa * (kappa + 1.0) * identity(rep.dim());
        CHECK(max_abs_on(casimir - target, rep.interior_indices()) <= 1e-10);

        // Casimir commutes with every generator on the interior
        // (shrunk by one more level: the commutator sees the boundary).
        std::vector<int> deep_interior;
        for (int i = 0; i + 2 < rep.dim(); ++i) deep_interior.push_back(i);
        for (const OperatorMatrix* gen : {&rep.pi1, &rep.pi2, &rep.pi3}) {
            CHECK(max_abs_on(commutator(casimir, *gen), deep_interior) <=
                  1e-10);
        }
    }
}

TEST_CASE("flipping the Casimir signs destroys the invariant") {
    const Su11Irrep rep = build_su11_irrep(0.5, Su11Bound::below, 12);
    const OperatorMatrix wrong = rep.pi1 * rep.pi1 + rep.pi2 * rep.pi2 +
                                 rep.pi3 * rep.pi3;
    double lo = 1e300, hi = -1e300;
    for (int i : rep.interior_indices()) {
        lo = std::min(lo, std::real(wrong(i, i)));
        hi = std::max(hi, std::real(wrong(i, i)));
    }
    CHECK(hi - lo > 1.0); // nowhere near a multiple of the identity
}

TEST_CASE("bound above mirrors bound below") {
    const Su11Irrep below = build_su11_irrep(0.5, Su11Bound::below, 8);
    const Su11Irrep above = build_su11_irrep(0.5, Su11Bound::above, 8);
    CHECK(max_abs(above.pi3 + below.pi3) == 0.0);
    CHECK(max_abs(above.pi2 + below.pi2) == 0.0);
    CHECK(max_abs(above.pi1 - below.pi1) == 0.0);
    CHECK(above.mu0 == -1.5);
}

TEST_CASE("su(1,1) payoff grows with the truncation (unbounded game)") {
    const Su11Irrep small = build_su11_irrep(0.0, Su11Bound::below, 4);
    const Su11Irrep large = build_su11_irrep(0.0, Su11Bound::below, 40);
    CHECK(spectral_norm(large.pi3) > 9.0 * spectral_norm(small.pi3));
    // contrast: su(2) payoff stays at kappa no matter the irrep size
    CHECK(spectral_norm(build_su2_irrep(half("4")).pi3) ==
          doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("su(1,1) rejects non-unitarizable parameters") {
    CHECK_THROWS_AS(build_su11_irrep(-1.0, Su11Bound::below, 5),
                    RepresentationError);
    CHECK_THROWS_AS(build_su11_irrep(-2.0, Su11Bound::below, 5),
                    RepresentationError);
    CHECK_THROWS_AS(build_su11_irrep(0.0, Su11Bound::below, 1),
                    DimensionError);
}

TEST_CASE("single-mode bilinears realize su(1,1)") {
    const FockSpace fock(9);
    const SingleModeSu11 rep = single_mode_su11(fock);

    // k3 on the vacuum is 1/4
    CHECK(rep.k3(0, 0) == Complex(0.25, 0.0));

    const auto interior = rep.space->interior_indices();
    CHECK(interior.size() == 8); // top two levels excluded
    CHECK(max_abs_on(commutator(rep.k1, rep.k2) + kI * rep.k3, interior) <=
          1e-12);
    CHECK(max_abs_on(commutator(rep.k2, rep.k3) - kI * rep.k1, interior) <=
          1e-12);
    CHECK(max_abs_on(commutator(rep.k3, rep.k1) - kI * rep.k2, interior) <=
          1e-12);
}

TEST_CASE("single-mode generators preserve level parity") {
    const SingleModeSu11 rep = single_mode_su11(FockSpace(7));
    for (const OperatorMatrix* gen : {&rep.k1, &rep.k2, &rep.k3}) {
        for (int r = 0; r < gen->rows(); ++r) {
            for (int c = 0; c < gen->cols(); ++c) {
                if ((r + c) % 2 == 1) {
                    CHECK(std::abs((*gen)(r, c)) == 0.0);
                }
            }
        }
    }
}

TEST_CASE("single-mode realization needs at least four levels") {
    CHECK_THROWS_AS(single_mode_su11(FockSpace(2)), DimensionError);
}

TEST_CASE("irrep game space labels") {
    const Su2Irrep rep = build_su2_irrep(half("1/2"));
    const GameSpacePtr gs = rep.game_space();
    CHECK(gs->label(0) == "kappa=1/2,mu=-1/2");
    CHECK(gs->label(1) == "kappa=1/2,mu=1/2");
    CHECK_FALSE(gs->truncated());

    const Su11Irrep hyper = build_su11_irrep(0.5, Su11Bound::below, 3);
    const GameSpacePtr hs = hyper.game_space();
    CHECK(hs->label(0) == "mu=3/2");
    CHECK(hs->label(2) == "mu=7/2");
    CHECK(hs->truncated());
}
