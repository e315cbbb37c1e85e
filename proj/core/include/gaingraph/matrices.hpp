#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "gaingraph/graph.hpp"
#include "gaingraph/switching.hpp"

namespace gaingraph {

/// Dense n x n complex matrix that is Hermitian by construction: every
/// off-diagonal write also stores the conjugate in the mirrored slot and
/// diagonal writes keep only the real part.
class HermitianMatrix {
public:
    HermitianMatrix() = default;
    explicit HermitianMatrix(std::size_t n) : n_(n), data_(n * n) {}

    std::size_t size() const { return n_; }
    Complex operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
    /// Row-major entries.
    std::span<const Complex> data() const { return data_; }

    void set(std::size_t i, std::size_t j, Complex z);
    void add(std::size_t i, std::size_t j, Complex z) { set(i, j, (*this)(i, j) + z); }

    double trace() const;
    double frobenius_norm() const;
    std::vector<Complex> apply(std::span<const Complex> x) const;
    /// Rows and columns `keep`, in the given order.
    HermitianMatrix principal_submatrix(std::span<const std::size_t> keep) const;

    friend HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b);
    friend HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b);
    friend bool operator==(const HermitianMatrix&, const HermitianMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Complex> data_;
};

/// n x m matrix with one column per edge (insertion order).
class IncidenceMatrix {
public:
    IncidenceMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Complex operator()(std::size_t v, std::size_t e) const { return data_[e * rows_ + v]; }
    Complex& at(std::size_t v, std::size_t e) { return data_[e * rows_ + v]; }
    std::span<const Complex> column(std::size_t e) const { return {data_.data() + e * rows_, rows_}; }

    /// Row-major n x n product H H^*, computed as a plain matrix product.
    std::vector<Complex> gram() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Complex> data_;  // column-major
};

/// D(zeta) = diag(zeta(v_i)).
struct SwitchingMatrix {
    std::vector<Complex> diagonal;
};

HermitianMatrix degree_matrix(const GainGraph& g);
HermitianMatrix adjacency(const GainGraph& g);
/// D(Gamma) - A(Phi).
HermitianMatrix laplacian(const GainGraph& g);
/// Q(Gamma) = L(Gamma, -1): the Laplacian of the same graph with every gain -1.
HermitianMatrix signless_laplacian(const GainGraph& g);

/// For stored edge u->v: entry(v, e) = 1 and entry(u, e) = -phi(e_uv).
IncidenceMatrix incidence(const GainGraph& g);

/// max |(H H^*)_ij - L_ij|.
double gram_check(const GainGraph& g);

/// Sum over edges of |x_i - phi(e_ij) x_j|^2.
double quadratic_form(const GainGraph& g, std::span<const Complex> x);

SwitchingMatrix switching_matrix(const SwitchingFunction& zeta);
/// D(zeta)^* M D(zeta).
HermitianMatrix conjugate_by_switch(const HermitianMatrix& m, const SwitchingFunction& zeta);

/// Row-major [[re, im], ...] rows, 12 significant digits.
void write_matrix_json(std::ostream& out, const HermitianMatrix& m);
/// One row per line, cells "re+imi".
void write_matrix_csv(std::ostream& out, const HermitianMatrix& m);

}  // namespace gaingraph
