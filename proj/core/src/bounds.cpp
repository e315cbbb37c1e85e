#include "gaingraph/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <random>

#include "gaingraph/errors.hpp"
#include "gaingraph/format.hpp"
#include "gaingraph/switching.hpp"

namespace gaingraph {
namespace {

void require_connected(const SpectralAnalysis& a, const char* what) {
    if (!a.connected()) throw GraphError(std::string(what) + " requires a connected gain graph");
}

/// Real k-th root keeping the sign of x (k = 1, 2, 3).
double signed_root(double x, int k) {
    if (k == 1) return x;
    if (k == 3) return std::cbrt(x);
    return std::copysign(std::sqrt(std::abs(x)), x);
}

void append_note(std::string& notes, const std::string& text) {
    if (!notes.empty()) notes += "; ";
    notes += text;
}

double uniform_unit(std::mt19937_64& rng) { return std::ldexp(static_cast<double>(rng() >> 11), -53); }

SwitchingFunction random_switch(std::size_t n, std::mt19937_64& rng) {
    SwitchingFunction z;
    for (std::size_t i = 0; i < n; ++i) z.values.push_back(Gain::from_fixed(rng()));
    return z;
}

double max_deviation(const std::vector<double>& a, const std::vector<double>& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

std::vector<BoundReport> moment_reports(const std::string& prefix, const std::array<MomentPair, 3>& moments,
                                        double n, double lambda_min, double lambda_max, double radius,
                                        bool radius_form_for_k2) {
    std::vector<BoundReport> out;
    for (int k = 1; k <= 3; ++k) {
        const MomentPair& mk = moments[static_cast<std::size_t>(k - 1)];
        const std::string name = prefix + std::to_string(k);

        std::string printed_notes;
        if (k == 2 && mk.printed < 0.0) printed_notes = "negative radicand, signed root used";
        out.push_back(bracket_report(name, lambda_min, signed_root(mk.printed / n, k), lambda_max, Variant::printed,
                                     printed_notes));

        const double value = signed_root(mk.corrected / n, k);
        if (k == 2 && radius_form_for_k2) {
            std::string notes = "radius form: upper end is rho";
            append_note(notes, std::string("lambda_1 form ") +
                                   (value <= lambda_max + kBoundTolerance * (1.0 + std::abs(value) + std::abs(lambda_max))
                                        ? "holds"
                                        : "fails") +
                                   " (sqrt(M2/n) = " + format_number(value) + ", lambda_1 = " + format_number(lambda_max) +
                                   ")");
            out.push_back(bracket_report(name, lambda_min, value, radius, Variant::corrected, notes));
        } else {
            out.push_back(bracket_report(name, lambda_min, value, lambda_max, Variant::corrected));
        }
    }
    return out;
}

/// max |L(Phi) - sum_pair L(pair)| over all entries.
double inverse_pair_decomposition_error(const InversePairPartition& part, const GainGraph& g) {
    HermitianMatrix total(g.vertex_count());
    for (const InversePair& pair : part.pairs) total = total + laplacian(pair.subgraph);
    const HermitianMatrix l = laplacian(g);
    double worst = 0.0;
    for (std::size_t k = 0; k < l.data().size(); ++k) worst = std::max(worst, std::abs(l.data()[k] - total.data()[k]));
    return worst;
}

}  // namespace

const char* to_string(Variant v) {
    switch (v) {
        case Variant::printed: return "printed";
        case Variant::corrected: return "corrected";
        case Variant::none: break;
    }
    return "none";
}

const char* to_string(Equality e) {
    switch (e) {
        case Equality::tight: return "tight";
        case Equality::strict: return "strict";
        case Equality::not_applicable: break;
    }
    return "n/a";
}

BoundReport upper_bound_report(std::string name, double lhs, double rhs, Variant variant, std::string notes) {
    BoundReport r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.slack = rhs - lhs;
    r.tolerance = kBoundTolerance * (1.0 + std::abs(lhs) + std::abs(rhs));
    r.holds = r.slack >= -r.tolerance;
    r.equality = std::abs(r.slack) <= r.tolerance ? Equality::tight : Equality::strict;
    r.variant = variant;
    r.notes = std::move(notes);
    return r;
}

BoundReport bracket_report(std::string name, double lower, double value, double upper, Variant variant,
                           std::string notes) {
    BoundReport r;
    r.name = std::move(name);
    r.lower = lower;
    r.lhs = value;
    r.rhs = upper;
    const double low_gap = value - lower;
    const double high_gap = upper - value;
    r.slack = std::isnan(value) ? -INFINITY : std::min(low_gap, high_gap);
    r.tolerance = kBoundTolerance * (1.0 + std::abs(lower) + std::abs(value) + std::abs(upper));
    r.holds = r.slack >= -r.tolerance;
    r.equality = std::abs(r.slack) <= r.tolerance ? Equality::tight : Equality::strict;
    r.variant = variant;
    r.notes = std::move(notes);
    if (std::abs(low_gap) <= r.tolerance) append_note(r.notes, "tight at lower end");
    if (std::abs(high_gap) <= r.tolerance) append_note(r.notes, "tight at upper end");
    return r;
}

SpectralAnalysis::SpectralAnalysis(GainGraph g, const EigenOptions& options)
    : graph_(std::move(g)), options_(options), profile_(degree_profile(graph_)) {
    adjacency_ = eigen_hermitian(adjacency(graph_), options_);
    laplacian_ = eigen_hermitian(laplacian(graph_), options_);
    signless_ = eigen_hermitian(signless_laplacian(graph_), options_);
    connected_ = is_connected(graph_);
}

BoundReport delta_bound(const SpectralAnalysis& a) {
    const double rho = a.graph().vertex_count() == 0 ? 0.0 : spectral_radius(a.adjacency_spectrum());
    return upper_bound_report("adjacency.delta", rho, static_cast<double>(a.profile().max_degree));
}

BoundReport delta_bound(const GainGraph& g) { return delta_bound(SpectralAnalysis(g)); }

std::vector<BoundReport> adjacency_moment_bounds(const SpectralAnalysis& a) {
    require_connected(a, "adjacency moment bounds");
    if (a.graph().vertex_count() == 0) throw GraphError("adjacency moment bounds need at least one vertex");
    const ClosedFormMoments cf = closed_form_moments(a.graph());
    const Spectrum& s = a.adjacency_spectrum();
    return moment_reports("adjacency.moment", {cf.m1, cf.m2, cf.m3}, static_cast<double>(a.graph().vertex_count()),
                          s.smallest(), s.largest(), spectral_radius(s), true);
}

std::vector<BoundReport> adjacency_moment_bounds(const GainGraph& g) { return adjacency_moment_bounds(SpectralAnalysis(g)); }

std::vector<BoundReport> laplacian_moment_bounds(const SpectralAnalysis& a) {
    require_connected(a, "Laplacian moment bounds");
    if (a.graph().vertex_count() == 0) throw GraphError("Laplacian moment bounds need at least one vertex");
    const ClosedFormMoments cf = closed_form_moments(a.graph());
    const Spectrum& s = a.laplacian_spectrum();
    return moment_reports("laplacian.moment", {cf.n1, cf.n2, cf.n3}, static_cast<double>(a.graph().vertex_count()),
                          s.smallest(), s.largest(), spectral_radius(s), false);
}

std::vector<BoundReport> laplacian_moment_bounds(const GainGraph& g) { return laplacian_moment_bounds(SpectralAnalysis(g)); }

BoundReport signless_comparison(const SpectralAnalysis& a) {
    require_connected(a, "signless comparison");
    const double lhs = a.graph().vertex_count() == 0 ? 0.0 : a.laplacian_spectrum().largest();
    const double rhs = a.graph().vertex_count() == 0 ? 0.0 : a.signless_spectrum().largest();
    BoundReport r = upper_bound_report("laplacian.signless", lhs, rhs);
    const bool predicate = equivalent_to_all_negative(a.graph());
    const bool numeric = std::abs(rhs - lhs) <= kSignlessEqualityTol;
    append_note(r.notes, std::string("switching equivalent to all-negative: ") + (predicate ? "yes" : "no"));
    if (predicate != numeric) {
        r.equality_mismatch = true;
        append_note(r.notes, "ERROR: spectral gap " + format_number(rhs - lhs) +
                                 " contradicts the switching-class characterization");
    }
    return r;
}

BoundReport signless_comparison(const GainGraph& g) { return signless_comparison(SpectralAnalysis(g)); }

std::vector<BoundReport> corollary_upper_bounds(const SpectralAnalysis& a) {
    require_connected(a, "corollary upper bounds");
    static const char* const kNames[10] = {
        "laplacian.corollary01.two_delta",        "laplacian.corollary02.d_plus_m",
        "laplacian.corollary03.d_plus_sqrt_dm",   "laplacian.corollary04.sqrt_2d_d_plus_m",
        "laplacian.corollary05.d_sqrt_d2_8dm",    "laplacian.corollary06.edge_di_plus_dj",
        "laplacian.corollary07.edge_weighted",    "laplacian.corollary08.edge_sqrt",
        "laplacian.corollary09.edge_two_plus_sqrt", "laplacian.corollary10.edge_mimj",
    };
    const GainGraph& g = a.graph();
    std::vector<BoundReport> out;
    if (g.edge_count() == 0) {
        for (const char* name : kNames) {
            BoundReport r;
            r.name = name;
            r.notes = "no edges";
            out.push_back(r);
        }
        return out;
    }
    const DegreeProfile& p = a.profile();
    const double lambda1 = a.laplacian_spectrum().largest();
    std::array<double, 10> bound{};
    bound.fill(-INFINITY);
    bound[0] = 2.0 * static_cast<double>(p.max_degree);
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        const double d = static_cast<double>(p.degree[i]);
        if (d == 0) continue;
        const double m = p.average_2_degree[i];
        bound[1] = std::max(bound[1], d + m);
        bound[2] = std::max(bound[2], d + std::sqrt(d * m));
        bound[3] = std::max(bound[3], std::sqrt(2.0 * d * (d + m)));
        bound[4] = std::max(bound[4], (d + std::sqrt(d * d + 8.0 * d * m)) / 2.0);
    }
    bool clamped = false;
    for (const Edge& e : g.edges()) {
        const double di = static_cast<double>(p.degree[e.u]);
        const double dj = static_cast<double>(p.degree[e.v]);
        const double mi = p.average_2_degree[e.u];
        const double mj = p.average_2_degree[e.v];
        bound[5] = std::max(bound[5], di + dj);
        bound[6] = std::max(bound[6], (di * (di + mi) + dj * (dj + mj)) / (di + dj));
        bound[7] = std::max(bound[7], std::sqrt(di * (di + mi) + dj * (dj + mj)));
        double radicand = di * (di + mi - 4.0) + dj * (dj + mj - 4.0) + 4.0;
        if (radicand < 0.0) {
            clamped = true;
            radicand = 0.0;
        }
        bound[8] = std::max(bound[8], 2.0 + std::sqrt(radicand));
        bound[9] = std::max(bound[9], (di + dj + std::sqrt((di - dj) * (di - dj) + 4.0 * mi * mj)) / 2.0);
    }
    for (std::size_t k = 0; k < 10; ++k) {
        out.push_back(upper_bound_report(kNames[k], lambda1, bound[k]));
        if (k == 8 && clamped) append_note(out.back().notes, "negative radicand clamped to 0");
    }
    return out;
}

std::vector<BoundReport> corollary_upper_bounds(const GainGraph& g) { return corollary_upper_bounds(SpectralAnalysis(g)); }

BoundReport laplacian_lower_bound(const SpectralAnalysis& a) {
    const GainGraph& g = a.graph();
    if (g.edge_count() == 0) throw GraphError("Delta + 1 lower bound needs at least one edge");
    const double delta = static_cast<double>(a.profile().max_degree);
    BoundReport r = upper_bound_report("laplacian.lower_delta_plus_one", delta + 1.0, a.laplacian_spectrum().largest());
    if (a.connected()) {
        const bool predicate = a.profile().max_degree + 1 == g.vertex_count() && balance_certificate(g).balanced;
        append_note(r.notes, std::string("Delta = n-1 and balanced: ") + (predicate ? "yes" : "no"));
        if (predicate != (r.equality == Equality::tight)) {
            r.equality_mismatch = true;
            append_note(r.notes, "ERROR: tightness contradicts the equality characterization");
        }
    } else {
        append_note(r.notes, "disconnected: equality characterization not checked");
    }
    return r;
}

BoundReport laplacian_lower_bound(const GainGraph& g) { return laplacian_lower_bound(SpectralAnalysis(g)); }

double laplacian_spectral_radius(const GainGraph& g, const EigenOptions& options) {
    const Components comps = connected_components(g);
    std::vector<std::vector<std::size_t>> members(comps.count);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) members[comps.label[v]].push_back(v);
    const HermitianMatrix l = laplacian(g);
    EigenOptions opt = options;
    opt.keep_eigenvectors = false;
    double best = 0.0;
    for (const auto& comp : members) {
        if (comp.size() < 2) continue;
        if (comp.size() == 2) {
            best = std::max(best, 2.0);  // a single edge: eigenvalues {2, 0} for any gain
            continue;
        }
        best = std::max(best, eigen_hermitian(l.principal_submatrix(comp), opt).largest());
    }
    return best;
}

InversePairBounds inverse_pair_bounds(const SpectralAnalysis& a) {
    require_connected(a, "inverse-pair bounds");
    const GainGraph& g = a.graph();
    const InversePairPartition part = inverse_pair_partition(g);
    double max_pair = 0.0;
    double sum_pair = 0.0;
    for (const InversePair& pair : part.pairs) {
        const double l1 = laplacian_spectral_radius(pair.subgraph, a.options());
        max_pair = std::max(max_pair, l1);
        sum_pair += l1;
    }
    const double lambda1 = g.vertex_count() == 0 ? 0.0 : a.laplacian_spectrum().largest();
    InversePairBounds out;
    out.decomposition_error = inverse_pair_decomposition_error(part, g);
    const std::string pairs_note = std::to_string(part.pairs.size()) + " inverse pair(s)";
    out.lower = upper_bound_report("laplacian.inverse_pairs_lower", max_pair, lambda1, Variant::none, pairs_note);
    out.upper = upper_bound_report("laplacian.inverse_pairs_upper", lambda1, sum_pair, Variant::none, pairs_note);
    append_note(out.upper.notes, "decomposition error " + format_number(out.decomposition_error));
    return out;
}

InversePairBounds inverse_pair_bounds(const GainGraph& g) { return inverse_pair_bounds(SpectralAnalysis(g)); }

InterlacingResult interlacing_check(const SpectralAnalysis& a, std::size_t u, std::size_t v) {
    const GainGraph reduced = delete_edge(a.graph(), u, v);
    EigenOptions opt = a.options();
    opt.keep_eigenvectors = false;
    InterlacingResult r;
    r.original = a.laplacian_spectrum().eigenvalues;
    r.deleted = eigen_hermitian(laplacian(reduced), opt).eigenvalues;
    const std::size_t n = r.original.size();
    r.worst_slack = INFINITY;
    auto check = [&](double small, double big) {
        const double tol = kBoundTolerance * (1.0 + std::abs(small) + std::abs(big));
        const double slack = big - small;
        r.worst_slack = std::min(r.worst_slack, slack);
        if (slack < -tol) r.holds = false;
        ++r.inequalities;
    };
    for (std::size_t k = 0; k < n; ++k) {
        check(r.deleted[k], r.original[k]);
        if (k + 1 < n) check(r.original[k + 1], r.deleted[k]);
    }
    return r;
}

InterlacingResult interlacing_check(const GainGraph& g, std::size_t u, std::size_t v) {
    if (!g.has_edge(u, v)) throw GraphError("interlacing check needs an existing edge");
    return interlacing_check(SpectralAnalysis(g), u, v);
}

std::vector<BoundReport> bound_suite(const SpectralAnalysis& a, std::vector<std::string>* skipped) {
    std::vector<BoundReport> out;
    out.push_back(delta_bound(a));
    if (a.graph().edge_count() > 0)
        out.push_back(laplacian_lower_bound(a));
    else if (skipped)
        skipped->push_back("Delta + 1 lower bound and interlacing: no edges");
    if (a.connected() && a.graph().vertex_count() > 0) {
        for (auto& r : adjacency_moment_bounds(a)) out.push_back(std::move(r));
        for (auto& r : laplacian_moment_bounds(a)) out.push_back(std::move(r));
        out.push_back(signless_comparison(a));
        for (auto& r : corollary_upper_bounds(a)) out.push_back(std::move(r));
        InversePairBounds ip = inverse_pair_bounds(a);
        out.push_back(std::move(ip.lower));
        out.push_back(std::move(ip.upper));
    } else if (skipped) {
        skipped->push_back(
            "moment bounds, signless comparison, corollary bounds, inverse-pair bounds: graph is not connected");
    }
    std::stable_sort(out.begin(), out.end(), [](const BoundReport& x, const BoundReport& y) { return x.name < y.name; });
    return out;
}

bool VerifyReport::passed() const {
    for (const BoundReport& b : bounds) {
        if (b.equality_mismatch) return false;
        if (!b.holds && b.variant != Variant::printed) return false;
    }
    return std::all_of(identities.begin(), identities.end(), [](const IdentityCheck& c) { return c.passed; });
}

std::size_t VerifyReport::printed_violations() const {
    return static_cast<std::size_t>(std::count_if(bounds.begin(), bounds.end(), [](const BoundReport& b) {
        return b.variant == Variant::printed && !b.holds;
    }));
}

VerifyReport verify_all(const GainGraph& g, const VerifyOptions& options) {
    VerifyReport report;
    const SpectralAnalysis an(g, options.eigen);
    const std::size_t n = g.vertex_count();
    const double delta = static_cast<double>(an.profile().max_degree);
    std::mt19937_64 rng(options.seed);
    EigenOptions values_only = options.eigen;
    values_only.keep_eigenvectors = false;

    auto identity = [&](std::string name, double value, double threshold, bool passed, std::string notes = {}) {
        report.identities.push_back({std::move(name), value, threshold, passed, std::move(notes)});
    };

    {
        const double dev = gram_check(g);
        const double thr = 1e-12 * (delta + 1.0);
        identity("incidence.gram", dev, thr, dev <= thr);
    }
    {
        const std::size_t numeric = count_above(an.laplacian_spectrum(), 1e-8);
        const std::size_t predicted = rank_prediction(g, options.gain_tol);
        identity("laplacian.rank", static_cast<double>(numeric), static_cast<double>(predicted), numeric == predicted,
                 "eigenvalues > 1e-8 vs n - b(Phi)");
    }
    if (n > 0) {
        const double smallest = an.laplacian_spectrum().smallest();
        identity("laplacian.psd", smallest, -1e-9, smallest >= -1e-9);
    }
    {
        const HermitianMatrix l = laplacian(g);
        double worst = 0.0;
        for (std::size_t t = 0; t < options.quadratic_form_vectors && n > 0; ++t) {
            std::vector<Complex> x(n);
            double norm2 = 0.0;
            for (auto& z : x) {
                z = Complex(2.0 * uniform_unit(rng) - 1.0, 2.0 * uniform_unit(rng) - 1.0);
                norm2 += std::norm(z);
            }
            auto lx = l.apply(x);
            Complex direct{};
            for (std::size_t i = 0; i < n; ++i) direct += std::conj(x[i]) * lx[i];
            const double err = std::abs(quadratic_form(g, x) - direct) / (1.0 + norm2 * delta);
            worst = std::max(worst, err);
        }
        identity("laplacian.quadratic_form", worst, 1e-10, worst <= 1e-10, "scaled by 1 + |x|^2 Delta");
    }
    {
        const SwitchingFunction zeta = random_switch(n, rng);
        const GainGraph switched = apply_switch(g, zeta);
        const double conj_err = [&] {
            double worst = 0.0;
            const HermitianMatrix lhs = conjugate_by_switch(adjacency(g), zeta);
            const HermitianMatrix rhs = adjacency(switched);
            for (std::size_t k = 0; k < lhs.data().size(); ++k) worst = std::max(worst, std::abs(lhs.data()[k] - rhs.data()[k]));
            const HermitianMatrix lhs_l = conjugate_by_switch(laplacian(g), zeta);
            const HermitianMatrix rhs_l = laplacian(switched);
            for (std::size_t k = 0; k < lhs_l.data().size(); ++k)
                worst = std::max(worst, std::abs(lhs_l.data()[k] - rhs_l.data()[k]));
            return worst;
        }();
        identity("switching.matrix_conjugation", conj_err, 1e-12, conj_err <= 1e-12);
        const double dev = std::max(
            max_deviation(an.adjacency_spectrum().eigenvalues, eigen_hermitian(adjacency(switched), values_only).eigenvalues),
            max_deviation(an.laplacian_spectrum().eigenvalues, eigen_hermitian(laplacian(switched), values_only).eigenvalues));
        identity("switching.spectrum_invariance", dev, 1e-8, dev <= 1e-8);
        const bool same = balance_certificate(g, options.gain_tol).balanced ==
                          balance_certificate(switched, options.gain_tol).balanced;
        identity("switching.balance_invariance", same ? 0.0 : 1.0, 0.0, same);
    }
    if (n > 0) {
        const ClosedFormMoments cf = closed_form_moments(g);
        const HermitianMatrix a = adjacency(g);
        const HermitianMatrix l = laplacian(g);
        const std::array<std::pair<double, double>, 6> pairs = {{
            {cf.m1.corrected, moment(a, 1)}, {cf.m2.corrected, moment(a, 2)}, {cf.m3.corrected, moment(a, 3)},
            {cf.n1.corrected, moment(l, 1)}, {cf.n2.corrected, moment(l, 2)}, {cf.n3.corrected, moment(l, 3)},
        }};
        double worst = 0.0;
        for (const auto& [closed, direct] : pairs)
            worst = std::max(worst, std::abs(closed - direct) / (1.0 + std::abs(direct)));
        identity("moments.closed_form", worst, 1e-8, worst <= 1e-8, "corrected closed forms vs j^* M^k j");
    }
    if (n > 0) {
        const double tr_a = std::abs(std::accumulate(an.adjacency_spectrum().eigenvalues.begin(),
                                                     an.adjacency_spectrum().eigenvalues.end(), 0.0));
        const HermitianMatrix l = laplacian(g);
        const double tr_l = std::abs(std::accumulate(an.laplacian_spectrum().eigenvalues.begin(),
                                                     an.laplacian_spectrum().eigenvalues.end(), 0.0) -
                                     l.trace());
        const double dev = std::max(tr_a, tr_l / (1.0 + l.frobenius_norm()));
        identity("spectrum.trace", dev, 1e-8, dev <= 1e-8);
    }

    report.bounds = bound_suite(an, &report.skipped);
    if (g.edge_count() > 0) {
        const std::size_t m = g.edge_count();
        const std::size_t count = std::min(options.interlacing_edges, m);
        std::vector<std::size_t> picks;
        for (std::size_t t = 0; t < count; ++t) {
            std::size_t idx = count == 1 ? 0 : t * (m - 1) / (count - 1);
            if (std::find(picks.begin(), picks.end(), idx) == picks.end()) picks.push_back(idx);
        }
        for (std::size_t idx : picks) {
            const Edge& e = g.edge(idx);
            const InterlacingResult r = interlacing_check(an, e.u, e.v);
            identity("laplacian.interlacing." + std::to_string(e.u) + "-" + std::to_string(e.v), r.worst_slack, 0.0,
                     r.holds, std::to_string(r.inequalities) + " inequalities");
        }
    }
    if (an.connected() && n > 0) {
        const double err = inverse_pair_decomposition_error(inverse_pair_partition(g), g);
        identity("laplacian.inverse_pair_decomposition", err, 1e-12, err <= 1e-12);
    }

    std::stable_sort(report.identities.begin(), report.identities.end(),
                     [](const IdentityCheck& x, const IdentityCheck& y) { return x.name < y.name; });
    return report;
}

}  // namespace gaingraph
