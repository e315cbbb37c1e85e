#include <doctest.h>

#include <random>
#include <sstream>

#include "gaingraph/errors.hpp"
#include "gaingraph/generators.hpp"
#include "gaingraph/matrices.hpp"
#include "gaingraph/switching.hpp"

using namespace gaingraph;

namespace {

double max_entry_diff(const HermitianMatrix& a, const HermitianMatrix& b) {
    double worst = 0.0;
    for (std::size_t k = 0; k < a.data().size(); ++k) worst = std::max(worst, std::abs(a.data()[k] - b.data()[k]));
    return worst;
}

}  // namespace

TEST_CASE("adjacency and laplacian entries") {
    Gain i = Gain::rational(1, 4);
    const Edge edges[] = {{0, 1, i}, {2, 1, Gain::half_turn()}};
    GainGraph g(3, edges);
    HermitianMatrix a = adjacency(g);
    CHECK(a(0, 1) == Complex(0, 1));
    CHECK(a(1, 0) == Complex(0, -1));
    CHECK(a(1, 2) == Complex(-1, 0));
    CHECK(a(0, 2) == Complex(0, 0));
    CHECK(a.trace() == 0.0);
    HermitianMatrix l = laplacian(g);
    CHECK(l(1, 1) == Complex(2, 0));
    CHECK(l(0, 1) == Complex(0, -1));
    CHECK(max_entry_diff(l, degree_matrix(g) - a) == 0.0);
    HermitianMatrix q = signless_laplacian(g);
    CHECK(q(0, 1) == Complex(1, 0));
    CHECK(q(1, 2) == Complex(1, 0));
}

TEST_CASE("incidence columns and the Gram identity") {
    Gain i = Gain::rational(1, 4);
    const Edge edges[] = {{0, 1, i}};
    IncidenceMatrix h = incidence(GainGraph(2, edges));
    CHECK(h(1, 0) == Complex(1, 0));
    CHECK(h(0, 0) == Complex(0, -1));
    CHECK(gram_check(cycle_graph(3, Gain::rational(1, 4))) == 0.0);
    GainGraph r = random_graph(8, 0.5, 2024);
    CHECK(gram_check(r) <= 1e-12 * (static_cast<double>(r.max_degree()) + 1.0));
}

TEST_CASE("gram identity on random graphs up to 64 vertices") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        GainGraph r = random_graph(8 + 3 * seed, 0.3, seed);
        CHECK(gram_check(r) <= 1e-12 * (static_cast<double>(r.max_degree()) + 1.0));
    }
}

TEST_CASE("rescaling incidence columns by unit complex numbers leaves H H^* unchanged") {
    GainGraph r = random_graph(10, 0.5, 8);
    IncidenceMatrix h = incidence(r);
    auto before = h.gram();
    std::mt19937_64 rng(1);
    for (std::size_t e = 0; e < h.cols(); ++e) {
        Complex s = Gain::from_fixed(rng()).value();
        for (std::size_t v = 0; v < h.rows(); ++v) h.at(v, e) *= s;
    }
    auto after = h.gram();
    double worst = 0.0;
    for (std::size_t k = 0; k < before.size(); ++k) worst = std::max(worst, std::abs(before[k] - after[k]));
    CHECK(worst < 1e-14);
}

TEST_CASE("quadratic form equals x^* L x") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-1, 1);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        GainGraph g = random_graph(12, 0.4, seed);
        HermitianMatrix l = laplacian(g);
        for (int t = 0; t < 10; ++t) {
            std::vector<Complex> x(12);
            double norm2 = 0.0;
            for (auto& z : x) {
                z = Complex(u(rng), u(rng));
                norm2 += std::norm(z);
            }
            auto lx = l.apply(x);
            Complex direct{};
            for (std::size_t k = 0; k < x.size(); ++k) direct += std::conj(x[k]) * lx[k];
            CHECK(std::abs(direct.imag()) < 1e-12);
            CHECK(std::abs(quadratic_form(g, x) - direct.real()) <= 1e-10 * (1.0 + norm2 * g.max_degree()));
        }
    }
    std::vector<Complex> wrong(3);
    CHECK_THROWS_AS(quadratic_form(random_graph(4, 0.5, 0), wrong), GraphError);
}

TEST_CASE("switching conjugates the adjacency and Laplacian matrices") {
    std::mt19937_64 rng(4);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        GainGraph g = random_graph(10, 0.5, seed);
        SwitchingFunction z;
        for (std::size_t v = 0; v < 10; ++v) z.values.push_back(Gain::from_fixed(rng()));
        GainGraph s = apply_switch(g, z);
        CHECK(max_entry_diff(conjugate_by_switch(adjacency(g), z), adjacency(s)) < 1e-14);
        CHECK(max_entry_diff(conjugate_by_switch(laplacian(g), z), laplacian(s)) < 1e-14);
    }
}

TEST_CASE("matrix writers") {
    const Edge edges[] = {{0, 1, Gain::rational(1, 4)}};
    HermitianMatrix a = adjacency(GainGraph(2, edges));
    std::ostringstream csv;
    write_matrix_csv(csv, a);
    CHECK(csv.str() == "0+0i,0+1i\n0-1i,0+0i\n");
    std::ostringstream json;
    write_matrix_json(json, a);
    CHECK(json.str() == "[[[0.0,0.0],[0.0,1.0]],[[0.0,-1.0],[0.0,0.0]]]\n");
}

TEST_CASE("principal submatrix and arithmetic") {
    HermitianMatrix l = laplacian(complete_graph(4));
    const std::size_t keep[] = {0, 2};
    HermitianMatrix sub = l.principal_submatrix(keep);
    CHECK(sub.size() == 2);
    CHECK(sub(0, 0) == Complex(3, 0));
    CHECK(sub(0, 1) == Complex(-1, 0));
    CHECK_THROWS_AS(l + sub, GraphError);
    CHECK(l.frobenius_norm() == doctest::Approx(std::sqrt(4 * 9.0 + 12)));
}
