#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "gaingraph/errors.hpp"
#include "gaingraph/generators.hpp"
#include "gaingraph/spectra.hpp"
#include "oracles.hpp"

using namespace gaingraph;

namespace {

GainGraph triangle(Gain a, Gain b, Gain c) {
    const Edge edges[] = {{0, 1, a}, {1, 2, b}, {0, 2, c}};
    return GainGraph(3, edges);
}

void check_decomposition(const HermitianMatrix& m, const Spectrum& s) {
    const std::size_t n = m.size();
    REQUIRE(s.eigenvectors.size() == n);
    for (std::size_t k = 0; k < n; ++k) {
        auto mv = m.apply(s.eigenvectors[k]);
        double r = 0.0;
        for (std::size_t i = 0; i < n; ++i) r += std::norm(mv[i] - s.eigenvalues[k] * s.eigenvectors[k][i]);
        CHECK(std::sqrt(r) <= 1e-8 * (1.0 + m.frobenius_norm()));
        for (std::size_t l = k; l < n; ++l) {
            Complex dot{};
            for (std::size_t i = 0; i < n; ++i) dot += std::conj(s.eigenvectors[k][i]) * s.eigenvectors[l][i];
            CHECK(std::abs(dot - (k == l ? 1.0 : 0.0)) < 1e-10);
        }
    }
}

}  // namespace

TEST_CASE("eigenvalues match the inertia oracle on random Hermitian matrices") {
    std::mt19937_64 rng(31);
    for (std::size_t n = 1; n <= 24; n += 3) {
        HermitianMatrix m = oracle::random_hermitian(n, rng);
        Spectrum s = eigen_hermitian(m);
        CHECK(oracle::max_abs_diff(s.eigenvalues, oracle::eigenvalues(m)) < 1e-9);
        CHECK(std::is_sorted(s.eigenvalues.rbegin(), s.eigenvalues.rend()));
        check_decomposition(m, s);
    }
}

TEST_CASE("repeated eigenvalues get orthonormal eigenvectors") {
    HermitianMatrix a = adjacency(complete_graph(7));
    Spectrum s = eigen_hermitian(a);
    CHECK(s.eigenvalues[0] == doctest::Approx(6.0).epsilon(1e-12));
    for (std::size_t k = 1; k < 7; ++k) CHECK(s.eigenvalues[k] == doctest::Approx(-1.0).epsilon(1e-12));
    check_decomposition(a, s);

    HermitianMatrix l = laplacian(cycle_graph(6, Gain::rational(1, 3)));
    check_decomposition(l, eigen_hermitian(l));
}

TEST_CASE("eigensolver on tiny and diagonal inputs") {
    CHECK(eigen_hermitian(HermitianMatrix(0)).size() == 0);
    HermitianMatrix d(3);
    d.set(0, 0, 2.0);
    d.set(1, 1, -1.0);
    d.set(2, 2, 5.0);
    Spectrum s = eigen_hermitian(d);
    CHECK(s.eigenvalues == std::vector<double>{5.0, 2.0, -1.0});
    HermitianMatrix single(2);
    single.set(0, 1, Complex(0, 1));
    Spectrum e = eigen_hermitian(single);
    CHECK(e.eigenvalues[0] == doctest::Approx(1.0));
    CHECK(e.eigenvalues[1] == doctest::Approx(-1.0));
}

TEST_CASE("sweep limit raises ConvergenceError") {
    std::mt19937_64 rng(2);
    EigenOptions o;
    o.max_sweeps = 1;
    CHECK_THROWS_AS(eigen_hermitian(oracle::random_hermitian(16, rng), o), ConvergenceError);
}

TEST_CASE("cycle closed form agrees with the eigensolver") {
    std::mt19937_64 rng(6);
    const Gain thetas[] = {Gain(), Gain::rational(1, 4), Gain::half_turn(), Gain::from_radians(1.0), Gain::from_fixed(rng())};
    for (std::size_t n = 3; n <= 12; ++n)
        for (const Gain& t : thetas) {
            GainGraph c = cycle_graph(n, t);
            GraphSpectra cf = cycle_spectrum(n, t);
            CHECK(oracle::max_abs_diff(eigen_hermitian(adjacency(c)).eigenvalues, cf.adjacency.eigenvalues) < 1e-9);
            CHECK(oracle::max_abs_diff(eigen_hermitian(laplacian(c)).eigenvalues, cf.laplacian.eigenvalues) < 1e-9);
        }
    GraphSpectra c3 = cycle_spectrum(3, Gain::half_turn());
    CHECK(oracle::max_abs_diff(c3.adjacency.eigenvalues, {1.0, 1.0, -2.0}) < 1e-15);
    CHECK(oracle::max_abs_diff(c3.laplacian.eigenvalues, {4.0, 1.0, 1.0}) < 1e-15);
    CHECK_THROWS_AS(cycle_spectrum(2, Gain()), GraphError);
}

TEST_CASE("path closed form") {
    GraphSpectra p = path_spectrum(4);
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    CHECK(oracle::max_abs_diff(p.adjacency.eigenvalues, {phi, phi - 1.0, 1.0 - phi, -phi}) < 1e-14);
    CHECK(oracle::max_abs_diff(p.laplacian.eigenvalues, {2.0 + std::sqrt(2.0), 2.0, 2.0 - std::sqrt(2.0), 0.0}) < 1e-14);
    CHECK(std::abs(path_spectrum(1).adjacency.eigenvalues.at(0)) < 1e-15);
    CHECK_THROWS_AS(path_spectrum(0), GraphError);
}

TEST_CASE("spectral radius and Rayleigh quotient") {
    Spectrum s = eigen_hermitian(adjacency(cycle_graph(3, Gain::half_turn())));
    CHECK(spectral_radius(s) == doctest::Approx(2.0));
    CHECK_THROWS_AS(spectral_radius(Spectrum{}), NumericalError);

    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int t = 0; t < 50; ++t) {
        HermitianMatrix m = oracle::random_hermitian(9, rng);
        Spectrum sp = eigen_hermitian(m);
        std::vector<Complex> x(9);
        for (auto& z : x) z = Complex(u(rng), u(rng));
        const double r = rayleigh_quotient(m, x);
        CHECK(r >= sp.smallest() - 1e-12);
        CHECK(r <= sp.largest() + 1e-12);
    }
    std::vector<Complex> zero(3);
    CHECK_THROWS_AS(rayleigh_quotient(HermitianMatrix(3), zero), GraphError);
}

TEST_CASE("moments match dense matrix powers") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        GainGraph g = random_graph(10, 0.45, seed);
        HermitianMatrix a = adjacency(g), l = laplacian(g);
        ClosedFormMoments cf = closed_form_moments(g);
        const double ma[] = {cf.m1.corrected, cf.m2.corrected, cf.m3.corrected};
        const double nl[] = {cf.n1.corrected, cf.n2.corrected, cf.n3.corrected};
        for (int k = 1; k <= 3; ++k) {
            const double pa = oracle::power_moment(a, k), pl = oracle::power_moment(l, k);
            CHECK(std::abs(moment(a, k) - pa) <= 1e-10 * (1.0 + std::abs(pa)));
            CHECK(std::abs(moment(l, k) - pl) <= 1e-10 * (1.0 + std::abs(pl)));
            CHECK(std::abs(ma[k - 1] - pa) <= 1e-10 * (1.0 + std::abs(pa)));
            CHECK(std::abs(nl[k - 1] - pl) <= 1e-10 * (1.0 + std::abs(pl)));
        }
    }
    CHECK_THROWS_AS(moment(HermitianMatrix(2), 4), GraphError);
}

TEST_CASE("closed-form moments of the all-negative triangle") {
    Gain m = Gain::half_turn();
    ClosedFormMoments cf = closed_form_moments(triangle(m, m, m));
    CHECK(cf.m1.corrected == doctest::Approx(-6.0));
    CHECK(cf.m2.corrected == doctest::Approx(12.0));
    CHECK(cf.m2.printed == doctest::Approx(12.0));
    CHECK(cf.m3.corrected == doctest::Approx(-24.0));
    CHECK(cf.n1.corrected == doctest::Approx(12.0));
    CHECK(cf.n2.corrected == doctest::Approx(48.0));
    CHECK(cf.n3.corrected == doctest::Approx(192.0));
    CHECK(cf.n3.printed == doctest::Approx(192.0));
}

TEST_CASE("printed and corrected second moments differ for complex net degrees") {
    Gain i = Gain::rational(1, 4);
    ClosedFormMoments cf = closed_form_moments(triangle(i, i, i));
    // net degrees 2i, 0, -2i
    CHECK(cf.m2.corrected == doctest::Approx(8.0));
    CHECK(cf.m2.printed == doctest::Approx(-8.0));
    CHECK(cf.m2.corrected == doctest::Approx(oracle::power_moment(adjacency(triangle(i, i, i)), 2)));
}

TEST_CASE("characteristic polynomial values") {
    Spectrum s = eigen_hermitian(laplacian(broom_graph(4)));
    // lambda (lambda^3 - 6 lambda^2 + 10 lambda - 4) for N = 4
    for (double t : {0.5, 1.5, 3.0, 5.0}) {
        const double expected = t * (t * t * t - 6 * t * t + 10 * t - 4);
        CHECK(char_poly_eval(s, t) == doctest::Approx(expected).epsilon(1e-10));
    }
    CHECK(s.largest() == doctest::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-12));
    CHECK(count_above(s, 1e-8) == 3);
}

TEST_CASE("Weyl inequalities and Cauchy interlacing on random matrices") {
    std::mt19937_64 rng(101);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 2 + rng() % 12;
        HermitianMatrix a = oracle::random_hermitian(n, rng), b = oracle::random_hermitian(n, rng);
        auto la = eigen_hermitian(a).eigenvalues, lb = eigen_hermitian(b).eigenvalues;
        auto lab = eigen_hermitian(a + b).eigenvalues;
        for (std::size_t k = 0; k < n; ++k) {
            CHECK(la[k] + lb[n - 1] <= lab[k] + 1e-8);
            CHECK(lab[k] <= la[k] + lb[0] + 1e-8);
        }
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < n; ++i)
            if (rng() % 2) keep.push_back(i);
        if (keep.empty()) continue;
        const std::size_t r = keep.size();
        auto lr = eigen_hermitian(a.principal_submatrix(keep)).eigenvalues;
        for (std::size_t k = 0; k < r; ++k) {
            CHECK(la[k + n - r] <= lr[k] + 1e-8);
            CHECK(lr[k] <= la[k] + 1e-8);
        }
    }
}
