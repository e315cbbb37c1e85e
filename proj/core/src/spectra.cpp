#include "gaingraph/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "gaingraph/errors.hpp"
#include "gaingraph/generators.hpp"

namespace gaingraph {
namespace {

double off_diagonal_norm(const std::vector<double>& a, std::size_t dim) {
    double s = 0.0;
    for (std::size_t p = 0; p < dim; ++p)
        for (std::size_t q = 0; q < dim; ++q)
            if (p != q) s += a[p * dim + q] * a[p * dim + q];
    return std::sqrt(s);
}

/// Cyclic Jacobi on a dim x dim real symmetric row-major matrix. On return
/// the diagonal of `a` holds the eigenvalues and row k of `vt` the
/// eigenvector for diagonal entry k.
void jacobi(std::vector<double>& a, std::vector<double>& vt, std::size_t dim, const EigenOptions& opt) {
    vt.assign(dim * dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) vt[i * dim + i] = 1.0;
    double norm = 0.0;
    for (double x : a) norm += x * x;
    norm = std::sqrt(norm);

    for (int sweep = 0;; ++sweep) {
        double off = off_diagonal_norm(a, dim);
        if (off <= opt.off_diagonal_tol * norm) return;
        if (sweep >= opt.max_sweeps) {
            std::ostringstream msg;
            msg << "Jacobi did not converge in " << opt.max_sweeps << " sweeps (off-diagonal norm " << off << ")";
            throw ConvergenceError(msg.str(), off);
        }
        for (std::size_t p = 0; p + 1 < dim; ++p) {
            for (std::size_t q = p + 1; q < dim; ++q) {
                const double apq = a[p * dim + q];
                if (apq == 0.0) continue;
                const double app = a[p * dim + p];
                const double aqq = a[q * dim + q];
                const double theta = (aqq - app) / (2.0 * apq);
                double t = std::abs(theta) > 1e150 ? 0.5 / theta
                                                    : 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                if (theta < 0.0 && std::abs(theta) <= 1e150) t = -t;
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                a[p * dim + p] = app - t * apq;
                a[q * dim + q] = aqq + t * apq;
                a[p * dim + q] = 0.0;
                a[q * dim + p] = 0.0;
                double* row_p = a.data() + p * dim;
                double* row_q = a.data() + q * dim;
                for (std::size_t k = 0; k < dim; ++k) {
                    if (k == p || k == q) continue;
                    const double akp = row_p[k];
                    const double akq = row_q[k];
                    const double new_p = c * akp - s * akq;
                    const double new_q = s * akp + c * akq;
                    row_p[k] = new_p;
                    row_q[k] = new_q;
                    a[k * dim + p] = new_p;
                    a[k * dim + q] = new_q;
                }
                double* vp = vt.data() + p * dim;
                double* vq = vt.data() + q * dim;
                for (std::size_t k = 0; k < dim; ++k) {
                    const double x = vp[k];
                    const double y = vq[k];
                    vp[k] = c * x - s * y;
                    vq[k] = s * x + c * y;
                }
            }
        }
    }
}

double vector_norm(std::span<const Complex> x) {
    double s = 0.0;
    for (const Complex& z : x) s += std::norm(z);
    return std::sqrt(s);
}

Complex inner(std::span<const Complex> x, std::span<const Complex> y) {
    Complex s{};
    for (std::size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
    return s;
}

/// Orthonormal basis of `count` vectors from `candidates` by modified
/// Gram-Schmidt, always taking the candidate with the largest remainder.
std::vector<std::vector<Complex>> pivoted_orthonormalize(std::vector<std::vector<Complex>> candidates, std::size_t count) {
    std::vector<std::vector<Complex>> basis;
    while (basis.size() < count) {
        std::size_t best = 0;
        double best_norm = -1.0;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            double nrm = vector_norm(candidates[i]);
            if (nrm > best_norm) {
                best_norm = nrm;
                best = i;
            }
        }
        if (best_norm <= 1e-6) throw PairingError("embedding eigenvectors do not span the expected complex subspace");
        std::vector<Complex> q = candidates[best];
        for (Complex& z : q) z /= best_norm;
        candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(best));
        for (auto& cand : candidates) {
            Complex proj = inner(q, cand);
            for (std::size_t k = 0; k < cand.size(); ++k) cand[k] -= proj * q[k];
        }
        basis.push_back(std::move(q));
    }
    return basis;
}

}  // namespace

Spectrum eigen_hermitian(const HermitianMatrix& m, const EigenOptions& options) {
    const std::size_t n = m.size();
    Spectrum out;
    if (n == 0) return out;
    const std::size_t dim = 2 * n;
    std::vector<double> a(dim * dim);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Complex z = m(i, j);
            a[i * dim + j] = z.real();
            a[i * dim + n + j] = -z.imag();
            a[(n + i) * dim + j] = z.imag();
            a[(n + i) * dim + n + j] = z.real();
        }
    }
    std::vector<double> vt;
    jacobi(a, vt, dim, options);

    std::vector<std::size_t> order(dim);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a[x * dim + x] > a[y * dim + y]; });
    std::vector<double> doubled(dim);
    for (std::size_t k = 0; k < dim; ++k) doubled[k] = a[order[k] * dim + order[k]];

    const double scale = 1.0 + m.frobenius_norm();
    const double pair_tol = options.pair_tol * scale;
    out.eigenvalues.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double gap = doubled[2 * k] - doubled[2 * k + 1];
        if (gap > pair_tol) {
            std::ostringstream msg;
            msg << "embedding eigenvalues " << doubled[2 * k] << " and " << doubled[2 * k + 1]
                << " do not pair (gap " << gap << ")";
            throw PairingError(msg.str());
        }
        out.eigenvalues[k] = 0.5 * (doubled[2 * k] + doubled[2 * k + 1]);
    }

    // Eigenvectors: each embedding column [a; b] gives M (a + ib) = lambda (a + ib).
    // Columns of one cluster of (nearly) equal eigenvalues span twice the
    // complex dimension, so orthonormalize the cluster as a whole.
    out.eigenvectors.resize(n);
    std::size_t start = 0;
    while (start < dim) {
        std::size_t end = start + 1;
        while (end < dim && doubled[end - 1] - doubled[end] <= pair_tol) ++end;
        if ((end - start) % 2 != 0 || start % 2 != 0) throw PairingError("odd eigenvalue cluster in embedding");
        std::vector<std::vector<Complex>> candidates;
        for (std::size_t k = start; k < end; ++k) {
            const double* col = vt.data() + order[k] * dim;
            std::vector<Complex> u(n);
            for (std::size_t i = 0; i < n; ++i) u[i] = Complex(col[i], col[n + i]);
            candidates.push_back(std::move(u));
        }
        auto basis = pivoted_orthonormalize(std::move(candidates), (end - start) / 2);
        for (std::size_t r = 0; r < basis.size(); ++r) out.eigenvectors[start / 2 + r] = std::move(basis[r]);
        start = end;
    }

    double residual = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        auto mv = m.apply(out.eigenvectors[k]);
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += std::norm(mv[i] - out.eigenvalues[k] * out.eigenvectors[k][i]);
        residual = std::max(residual, std::sqrt(s));
    }
    out.residual = residual;
    if (residual > options.residual_tol * scale) {
        std::ostringstream msg;
        msg << "eigenpair residual " << residual << " exceeds " << options.residual_tol * scale;
        throw NumericalError(msg.str());
    }
    if (!options.keep_eigenvectors) out.eigenvectors.clear();
    return out;
}

double spectral_radius(const Spectrum& s) {
    if (s.eigenvalues.empty()) throw NumericalError("spectral radius of an empty spectrum");
    return std::max(std::abs(s.largest()), std::abs(s.smallest()));
}

double rayleigh_quotient(const HermitianMatrix& m, std::span<const Complex> x) {
    const double xx = std::real(inner(x, x));
    if (xx == 0.0) throw GraphError("Rayleigh quotient of the zero vector");
    auto mx = m.apply(x);
    Complex num = inner(x, mx);
    if (std::abs(num.imag()) > 1e-10 * (1.0 + m.frobenius_norm() * xx))
        throw NumericalError("Rayleigh quotient has a non-negligible imaginary part");
    return num.real() / xx;
}

double moment(const HermitianMatrix& m, int k) {
    if (k < 1 || k > 3) throw GraphError("moment order must be 1, 2 or 3");
    const std::size_t n = m.size();
    std::vector<Complex> ones(n, Complex{1.0, 0.0});
    auto w1 = m.apply(ones);
    Complex value;
    if (k == 1) {
        value = inner(ones, w1);
    } else if (k == 2) {
        value = inner(w1, w1);
    } else {
        value = inner(w1, m.apply(w1));
    }
    const double scale = 1.0 + std::pow(m.frobenius_norm(), k) * static_cast<double>(n);
    if (std::abs(value.imag()) > 1e-9 * scale) throw NumericalError("moment has a non-negligible imaginary part");
    return value.real();
}

ClosedFormMoments closed_form_moments(const GainGraph& g) {
    const DegreeProfile prof = degree_profile(g);
    const std::size_t n = g.vertex_count();
    const auto& net = prof.net_degree;
    std::vector<Complex> w(n);  // L j = d - d_net
    for (std::size_t j = 0; j < n; ++j) w[j] = static_cast<double>(prof.degree[j]) - net[j];

    ClosedFormMoments out;
    Complex sum_net{}, sum_net_sq{}, sum_w{}, sum_w_sq{}, sum_dw_sq{};
    double abs_net_sq = 0.0, abs_w_sq = 0.0, d_abs_w_sq = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double d = static_cast<double>(prof.degree[j]);
        sum_net += net[j];
        sum_net_sq += net[j] * net[j];
        abs_net_sq += std::norm(net[j]);
        sum_w += w[j];
        sum_w_sq += w[j] * w[j];
        abs_w_sq += std::norm(w[j]);
        sum_dw_sq += d * w[j] * w[j];
        d_abs_w_sq += d * std::norm(w[j]);
    }
    Complex edge_net_printed{}, edge_w_printed{};
    double edge_net_corrected = 0.0, edge_w_corrected = 0.0;
    for (const Edge& e : g.edges()) {
        const Complex phi = e.gain.value();
        edge_net_printed += phi.real() * net[e.u] * net[e.v];
        edge_w_printed += phi.real() * w[e.u] * w[e.v];
        edge_net_corrected += std::real(phi * std::conj(net[e.u]) * net[e.v]);
        edge_w_corrected += std::real(phi * std::conj(w[e.u]) * w[e.v]);
    }

    out.m1 = {sum_net.real(), sum_net.real()};
    out.m2 = {sum_net_sq.real(), abs_net_sq};
    out.m3 = {2.0 * edge_net_printed.real(), 2.0 * edge_net_corrected};
    out.n1 = {sum_w.real(), sum_w.real()};
    out.n2 = {sum_w_sq.real(), abs_w_sq};
    out.n3 = {(sum_dw_sq - 2.0 * edge_w_printed).real(), d_abs_w_sq - 2.0 * edge_w_corrected};
    return out;
}

GraphSpectra cycle_spectrum(std::size_t n, Gain cycle_gain) {
    if (n < 3) throw GraphError("cycle spectrum needs n >= 3");
    const double theta = cycle_gain.radians();
    GraphSpectra out;
    for (std::size_t j = 0; j < n; ++j) {
        const double c = 2.0 * std::cos((theta + 2.0 * std::numbers::pi * static_cast<double>(j)) / static_cast<double>(n));
        out.adjacency.eigenvalues.push_back(c);
        out.laplacian.eigenvalues.push_back(2.0 - c);
    }
    std::sort(out.adjacency.eigenvalues.rbegin(), out.adjacency.eigenvalues.rend());
    std::sort(out.laplacian.eigenvalues.rbegin(), out.laplacian.eigenvalues.rend());
    return out;
}

GraphSpectra path_spectrum(std::size_t n) {
    if (n < 1) throw GraphError("path spectrum needs n >= 1");
    const double nd = static_cast<double>(n);
    GraphSpectra out;
    for (std::size_t k = 1; k <= n; ++k)
        out.adjacency.eigenvalues.push_back(2.0 * std::cos(static_cast<double>(k) * std::numbers::pi / (nd + 1.0)));
    for (std::size_t k = 0; k < n; ++k)
        out.laplacian.eigenvalues.push_back(2.0 - 2.0 * std::cos(static_cast<double>(k) * std::numbers::pi / nd));
    std::sort(out.adjacency.eigenvalues.rbegin(), out.adjacency.eigenvalues.rend());
    std::sort(out.laplacian.eigenvalues.rbegin(), out.laplacian.eigenvalues.rend());

    const GainGraph path = path_graph(n);
    EigenOptions opt;
    opt.keep_eigenvectors = false;
    const Spectrum a = eigen_hermitian(adjacency(path), opt);
    const Spectrum l = eigen_hermitian(laplacian(path), opt);
    for (std::size_t k = 0; k < n; ++k) {
        if (std::abs(a.eigenvalues[k] - out.adjacency.eigenvalues[k]) > 1e-9 ||
            std::abs(l.eigenvalues[k] - out.laplacian.eigenvalues[k]) > 1e-9)
            throw NumericalError("path closed form disagrees with the eigensolver");
    }
    return out;
}

double char_poly_eval(const Spectrum& s, double t) {
    double p = 1.0;
    for (double lambda : s.eigenvalues) p *= t - lambda;
    return p;
}

std::size_t count_above(const Spectrum& s, double threshold) {
    return static_cast<std::size_t>(
        std::count_if(s.eigenvalues.begin(), s.eigenvalues.end(), [&](double x) { return x > threshold; }));
}

}  // namespace gaingraph
