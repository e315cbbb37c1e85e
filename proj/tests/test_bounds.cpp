#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "gaingraph/bounds.hpp"
#include "gaingraph/ensemble.hpp"
#include "gaingraph/errors.hpp"
#include "gaingraph/generators.hpp"
#include "gaingraph/switching.hpp"

using namespace gaingraph;

namespace {

GainGraph triangle(Gain a, Gain b, Gain c) {
    const Edge edges[] = {{0, 1, a}, {1, 2, b}, {0, 2, c}};
    return GainGraph(3, edges);
}

GainGraph negative_triangle() { return triangle(Gain::half_turn(), Gain::half_turn(), Gain::half_turn()); }

const BoundReport& find(const std::vector<BoundReport>& v, const std::string& name, Variant variant) {
    auto it = std::find_if(v.begin(), v.end(), [&](const BoundReport& b) { return b.name == name && b.variant == variant; });
    REQUIRE(it != v.end());
    return *it;
}

GainGraph connected_random(std::size_t n, double p, std::uint64_t& seed) {
    for (;; ++seed) {
        GainGraph g = random_graph(n, p, seed);
        if (is_connected(g)) return g;
    }
}

SwitchingFunction random_zeta(std::size_t n, std::mt19937_64& rng) {
    SwitchingFunction z;
    for (std::size_t i = 0; i < n; ++i) z.values.push_back(Gain::from_fixed(rng()));
    return z;
}

}  // namespace

TEST_CASE("report helpers follow the tolerance policy") {
    BoundReport r = upper_bound_report("x", 1.0, 1.0 + 1e-9);
    CHECK(r.holds);
    CHECK(r.equality == Equality::tight);
    r = upper_bound_report("x", 1.0 + 1e-6, 1.0);
    CHECK_FALSE(r.holds);
    CHECK(r.equality == Equality::strict);
    BoundReport b = bracket_report("y", -1.0, 0.5, 2.0);
    CHECK(b.slack == 1.5);
    CHECK(b.tolerance == doctest::Approx(1e-8 * 4.5));
    CHECK(bracket_report("y", 0.0, -1.0, 2.0).holds == false);
}

TEST_CASE("delta bound") {
    const Edge e[] = {{0, 1, Gain::rational(1, 3)}};
    BoundReport one = delta_bound(GainGraph(2, e));
    CHECK(one.lhs == doctest::Approx(1.0));
    CHECK(one.rhs == 1.0);
    CHECK(one.equality == Equality::tight);
    BoundReport c = delta_bound(cycle_graph(7, Gain()));
    CHECK(c.lhs == doctest::Approx(2.0));
    CHECK(c.equality == Equality::tight);
    CHECK(delta_bound(random_graph(12, 0.4, 1)).holds);
}

TEST_CASE("adjacency moment bounds on the all-negative triangle") {
    auto r = adjacency_moment_bounds(negative_triangle());
    REQUIRE(r.size() == 6);
    const BoundReport& eq1 = find(r, "adjacency.moment1", Variant::corrected);
    CHECK(eq1.lhs == doctest::Approx(-2.0));
    CHECK(*eq1.lower == doctest::Approx(-2.0));
    CHECK(eq1.rhs == doctest::Approx(1.0));
    CHECK(eq1.equality == Equality::tight);
    CHECK(eq1.notes.find("tight at lower end") != std::string::npos);

    const BoundReport& printed2 = find(r, "adjacency.moment2", Variant::printed);
    CHECK(printed2.lhs == doctest::Approx(2.0));
    CHECK(printed2.rhs == doctest::Approx(1.0));
    CHECK_FALSE(printed2.holds);

    const BoundReport& radius2 = find(r, "adjacency.moment2", Variant::corrected);
    CHECK(radius2.lhs == doctest::Approx(2.0));
    CHECK(radius2.rhs == doctest::Approx(2.0));
    CHECK(radius2.holds);
    CHECK(radius2.equality == Equality::tight);
    CHECK(radius2.notes.find("lambda_1 form fails") != std::string::npos);
}

TEST_CASE("adjacency eq (1) on a neutral cycle is tight at lambda_1") {
    auto r = adjacency_moment_bounds(cycle_graph(6, Gain()));
    const BoundReport& eq1 = find(r, "adjacency.moment1", Variant::corrected);
    CHECK(eq1.lhs == doctest::Approx(2.0));
    CHECK(eq1.notes.find("tight at upper end") != std::string::npos);
}

TEST_CASE("printed second moment uses a signed root for a negative radicand") {
    Gain i = Gain::rational(1, 4);
    auto r = adjacency_moment_bounds(triangle(i, i, i));
    const BoundReport& printed2 = find(r, "adjacency.moment2", Variant::printed);
    CHECK(printed2.lhs == doctest::Approx(-std::sqrt(8.0 / 3.0)));
    CHECK(printed2.notes.find("negative radicand") != std::string::npos);
    CHECK(find(r, "adjacency.moment2", Variant::corrected).lhs == doctest::Approx(std::sqrt(8.0 / 3.0)));
}

TEST_CASE("Laplacian moment bounds") {
    auto neutral = laplacian_moment_bounds(cycle_graph(3, Gain()));
    const BoundReport& n1 = find(neutral, "laplacian.moment1", Variant::corrected);
    CHECK(std::abs(n1.lhs) < 1e-12);
    CHECK(n1.notes.find("tight at lower end") != std::string::npos);

    auto negative = laplacian_moment_bounds(negative_triangle());
    const BoundReport& m1 = find(negative, "laplacian.moment1", Variant::corrected);
    CHECK(m1.lhs == doctest::Approx(4.0));
    CHECK(m1.rhs == doctest::Approx(4.0));
    CHECK(m1.equality == Equality::tight);

    std::uint64_t seed = 0;
    for (int t = 0; t < 10; ++t, ++seed) {
        auto r = laplacian_moment_bounds(connected_random(10, 0.5, seed));
        for (const auto& b : r)
            if (b.variant == Variant::corrected) CHECK(b.holds);
    }
}

TEST_CASE("connectivity hypotheses are enforced") {
    const Edge e[] = {{0, 1, Gain()}, {2, 3, Gain()}};
    GainGraph g(4, e);
    CHECK_THROWS_AS(adjacency_moment_bounds(g), GraphError);
    CHECK_THROWS_AS(laplacian_moment_bounds(g), GraphError);
    CHECK_THROWS_AS(signless_comparison(g), GraphError);
    CHECK_THROWS_AS(corollary_upper_bounds(g), GraphError);
    CHECK_THROWS_AS(inverse_pair_bounds(g), GraphError);
    CHECK_NOTHROW(laplacian_lower_bound(g));
    CHECK_THROWS_AS(laplacian_lower_bound(GainGraph(3, {})), GraphError);
}

TEST_CASE("signless comparison and its equality characterization") {
    std::mt19937_64 rng(5);
    GainGraph switched = apply_switch(negate_gains(cycle_graph(5, Gain())), random_zeta(5, rng));
    BoundReport tight = signless_comparison(switched);
    CHECK(tight.equality == Equality::tight);
    CHECK_FALSE(tight.equality_mismatch);
    CHECK(tight.notes.find("all-negative: yes") != std::string::npos);

    BoundReport strict = signless_comparison(cycle_graph(3, Gain()));
    CHECK(strict.lhs == doctest::Approx(3.0));
    CHECK(strict.rhs == doctest::Approx(4.0));
    CHECK(strict.equality == Equality::strict);
    CHECK_FALSE(strict.equality_mismatch);

    BoundReport tree = signless_comparison(random_graph(2, 1.0, 0));
    CHECK(tree.equality == Equality::tight);
    CHECK(signless_comparison(broom_graph(9)).equality == Equality::tight);
}

TEST_CASE("corollary bounds") {
    auto star = corollary_upper_bounds(star_graph(4));
    REQUIRE(star.size() == 10);
    CHECK(star[0].rhs == 6.0);
    CHECK(star[1].rhs == doctest::Approx(4.0));
    CHECK(star[1].equality == Equality::tight);
    for (const auto& b : star) CHECK(b.holds);

    auto neg = corollary_upper_bounds(negative_triangle());
    CHECK(neg[5].rhs == 4.0);
    CHECK(neg[5].equality == Equality::tight);

    auto single = corollary_upper_bounds(GainGraph(1, {}));
    REQUIRE(single.size() == 10);
    for (const auto& b : single) {
        CHECK(b.equality == Equality::not_applicable);
        CHECK(b.notes == "no edges");
    }
}

TEST_CASE("Delta + 1 lower bound") {
    for (std::size_t n = 3; n <= 10; ++n) {
        BoundReport s = laplacian_lower_bound(star_graph(n));
        CHECK(s.rhs == doctest::Approx(static_cast<double>(n)));
        CHECK(s.equality == Equality::tight);
        CHECK_FALSE(s.equality_mismatch);
    }
    BoundReport b = laplacian_lower_bound(broom_graph(4));
    CHECK(b.lhs == 3.0);
    CHECK(b.rhs == doctest::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-12));
    CHECK(b.equality == Equality::strict);
    BoundReport c = laplacian_lower_bound(cone_triangle_graph(6, Gain::rational(1, 3)));
    CHECK(c.equality == Equality::strict);
    CHECK_FALSE(c.equality_mismatch);
}

TEST_CASE("Delta + 1 tightness iff Delta = n-1 and balanced") {
    std::mt19937_64 rng(3);
    for (std::size_t n = 3; n <= 8; ++n) {
        GainGraph k = apply_switch(complete_graph(n), random_zeta(n, rng));
        BoundReport kb = laplacian_lower_bound(k);
        CHECK(kb.equality == Equality::tight);
        CHECK_FALSE(kb.equality_mismatch);

        std::vector<Gain> gains;
        for (const Edge& e : k.edges()) gains.push_back(e.gain);
        gains[0] = gains[0] * Gain::from_fixed(rng() | 1);  // perturb one gain
        BoundReport pk = laplacian_lower_bound(k.with_gains(gains));
        CHECK(pk.equality == Equality::strict);
        CHECK_FALSE(pk.equality_mismatch);
    }
}

TEST_CASE("inverse pair bracket") {
    auto neutral = inverse_pair_bounds(complete_graph(5));
    CHECK(neutral.lower.equality == Equality::tight);
    CHECK(neutral.upper.equality == Equality::tight);
    CHECK(neutral.decomposition_error == 0.0);

    Gain i = Gain::rational(1, 4);
    auto tri = inverse_pair_bounds(triangle(Gain(), i, i.inverse()));
    CHECK(tri.lower.holds);
    CHECK(tri.upper.holds);
    CHECK(tri.upper.notes.find("2 inverse pair") != std::string::npos);

    const Edge c4[] = {{0, 1, Gain()}, {1, 2, Gain::half_turn()}, {2, 3, Gain()}, {0, 3, Gain::half_turn()}};
    auto sq = inverse_pair_bounds(GainGraph(4, c4));
    CHECK(sq.lower.holds);
    CHECK(sq.upper.holds);
    CHECK(sq.upper.rhs == doctest::Approx(4.0));  // two disjoint single edges, each with lambda_1 = 2
}

TEST_CASE("component-wise Laplacian spectral radius") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        GainGraph g = random_graph(14, 0.15, seed);
        const double full = g.edge_count() ? eigen_hermitian(laplacian(g)).largest() : 0.0;
        CHECK(laplacian_spectral_radius(g) == doctest::Approx(full).epsilon(1e-10));
    }
}

TEST_CASE("edge deletion interlacing") {
    InterlacingResult c3 = interlacing_check(cycle_graph(3, Gain()), 0, 1);
    CHECK(c3.holds);
    CHECK(c3.inequalities == 5);
    CHECK(c3.original[0] == doctest::Approx(3.0));
    CHECK(c3.original[1] == doctest::Approx(3.0));
    CHECK(c3.deleted[0] == doctest::Approx(3.0));
    CHECK(c3.deleted[1] == doctest::Approx(1.0));

    const Edge e[] = {{0, 1, Gain::rational(1, 7)}};
    InterlacingResult single = interlacing_check(GainGraph(2, e), 0, 1);
    CHECK(single.holds);
    CHECK(single.original[0] == doctest::Approx(2.0));
    CHECK(std::abs(single.deleted[0]) < 1e-15);
    CHECK_THROWS_AS(interlacing_check(GainGraph(2, e), 0, 0), GraphError);

    GainGraph r = random_graph(10, 0.4, 4);
    std::mt19937_64 rng(4);
    const Edge& pick = r.edge(rng() % r.edge_count());
    CHECK(interlacing_check(r, pick.u, pick.v).holds);
}

TEST_CASE("verify_all examples") {
    VerifyReport c3 = verify_all(cycle_graph(3, Gain()));
    CHECK(c3.passed());
    CHECK(c3.printed_violations() == 0);
    auto rank = std::find_if(c3.identities.begin(), c3.identities.end(),
                             [](const IdentityCheck& c) { return c.name == "laplacian.rank"; });
    REQUIRE(rank != c3.identities.end());
    CHECK(rank->value == 2.0);

    VerifyReport unbalanced = verify_all(triangle(Gain(), Gain(), Gain::rational(1, 4)));
    CHECK(unbalanced.passed());

    VerifyReport neg = verify_all(negative_triangle());
    CHECK(neg.passed());
    CHECK(neg.printed_violations() == 1);
    CHECK_FALSE(find(neg.bounds, "adjacency.moment2", Variant::printed).holds);

    CHECK(std::is_sorted(neg.bounds.begin(), neg.bounds.end(),
                         [](const BoundReport& a, const BoundReport& b) { return a.name < b.name; }));
}

TEST_CASE("verify_all on disconnected and trivial graphs") {
    const Edge e[] = {{0, 1, Gain::rational(1, 3)}, {2, 3, Gain()}};
    VerifyReport d = verify_all(GainGraph(5, e));
    CHECK(d.passed());
    CHECK_FALSE(d.skipped.empty());
    CHECK(verify_all(GainGraph(1, {})).passed());
    CHECK(verify_all(GainGraph(0, {})).passed());
}

TEST_CASE("verify_all passes on ensemble instances") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        EnsembleInstance inst = ensemble_instance(seed, seed % 2 == 0);
        VerifyReport r = verify_all(inst.graph);
        CHECK_MESSAGE(r.passed(), "seed " << seed);
    }
}

TEST_CASE("ensemble instances are deterministic and varied") {
    CHECK(ensemble_instance(17, true).graph == ensemble_instance(17, true).graph);
    CHECK(is_connected(ensemble_instance(17, true).graph));
    std::size_t max_n = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) max_n = std::max(max_n, ensemble_instance(seed, false).graph.vertex_count());
    CHECK(max_n <= 32);
    CHECK(ensemble_instance(3, false).construction == Construction::balanced);
    CHECK(balance_certificate(ensemble_instance(3, true).graph).balanced);
    CHECK(equivalent_to_all_negative(ensemble_instance(9, true).graph));
}
