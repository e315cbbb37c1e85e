#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gaingraph/graph.hpp"
#include "gaingraph/matrices.hpp"

namespace gaingraph {

/// Eigenvalues sorted descending (lambda_1 >= ... >= lambda_n), repeated
/// eigenvalues listed individually.
struct Spectrum {
    std::vector<double> eigenvalues;
    /// max_k || M v_k - lambda_k v_k ||_2 (0 for closed-form spectra).
    double residual = 0.0;
    /// Unit eigenvectors, eigenvectors[k] belongs to eigenvalues[k]; may be empty.
    std::vector<std::vector<Complex>> eigenvectors;

    std::size_t size() const { return eigenvalues.size(); }
    double largest() const { return eigenvalues.front(); }
    double smallest() const { return eigenvalues.back(); }
};

struct EigenOptions {
    /// Stop when the embedding's off-diagonal Frobenius norm is at most
    /// off_diagonal_tol times its Frobenius norm.
    double off_diagonal_tol = 1e-13;
    int max_sweeps = 100;
    /// Accept when residual <= residual_tol * (1 + ||M||_F).
    double residual_tol = 1e-8;
    /// Embedding eigenvalues must pair up within pair_tol * (1 + ||M||_F).
    double pair_tol = 1e-9;
    bool keep_eigenvectors = true;
};

/// Hermitian eigensolver: cyclic Jacobi on the real symmetric embedding
/// [[X, -Y], [Y, X]] of M = X + iY, whose spectrum is that of M with every
/// eigenvalue doubled. Throws ConvergenceError when the sweep limit is hit,
/// PairingError when the doubled eigenvalues do not pair up, and
/// NumericalError when the residual check fails.
Spectrum eigen_hermitian(const HermitianMatrix& m, const EigenOptions& options = {});

/// max(|lambda_1|, |lambda_n|). Throws NumericalError on an empty spectrum.
double spectral_radius(const Spectrum& s);

/// x^* M x / x^* x. Throws GraphError for the zero vector.
double rayleigh_quotient(const HermitianMatrix& m, std::span<const Complex> x);

/// j^* M^k j for k in {1, 2, 3}, via M j and M^2 j.
double moment(const HermitianMatrix& m, int k);

struct MomentPair {
    double printed = 0.0;    // literal closed form, real part at the end
    double corrected = 0.0;  // conjugate-correct closed form, equals j^* M^k j
};

/// Degree-based closed forms for M_k = j^* A^k j and N_k = j^* L^k j.
/// The printed forms square complex net degrees without conjugation; they
/// agree with the corrected forms whenever every net degree is real.
struct ClosedFormMoments {
    MomentPair m1, m2, m3;
    MomentPair n1, n2, n3;
};

ClosedFormMoments closed_form_moments(const GainGraph& g);

struct GraphSpectra {
    Spectrum adjacency;
    Spectrum laplacian;
};

/// 2cos((theta + 2 pi j)/n) and 2 - 2cos((theta + 2 pi j)/n), j = 0..n-1.
GraphSpectra cycle_spectrum(std::size_t n, Gain cycle_gain);

/// 2cos(k pi/(n+1)), k = 1..n and 2 - 2cos(k pi/n), k = 0..n-1. Both lists
/// are checked against eigen_hermitian of the path before being returned.
GraphSpectra path_spectrum(std::size_t n);

/// prod_i (t - lambda_i).
double char_poly_eval(const Spectrum& s, double t);

/// Eigenvalue count above `threshold` (numeric rank of a PSD matrix).
std::size_t count_above(const Spectrum& s, double threshold);

}  // namespace gaingraph
