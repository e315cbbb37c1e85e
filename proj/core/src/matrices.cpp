#include "gaingraph/matrices.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include <json.hpp>

#include "gaingraph/errors.hpp"
#include "gaingraph/format.hpp"

namespace gaingraph {

void HermitianMatrix::set(std::size_t i, std::size_t j, Complex z) {
    if (i == j) {
        data_[i * n_ + i] = Complex(z.real(), 0.0);
        return;
    }
    data_[i * n_ + j] = z;
    data_[j * n_ + i] = std::conj(z);
}

double HermitianMatrix::trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < n_; ++i) t += data_[i * n_ + i].real();
    return t;
}

double HermitianMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const Complex& z : data_) s += std::norm(z);
    return std::sqrt(s);
}

std::vector<Complex> HermitianMatrix::apply(std::span<const Complex> x) const {
    if (x.size() != n_) throw GraphError("vector length does not match matrix size");
    std::vector<Complex> y(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        Complex acc{};
        const Complex* row = data_.data() + i * n_;
        for (std::size_t j = 0; j < n_; ++j) acc += row[j] * x[j];
        y[i] = acc;
    }
    return y;
}

HermitianMatrix HermitianMatrix::principal_submatrix(std::span<const std::size_t> keep) const {
    HermitianMatrix out(keep.size());
    for (std::size_t a = 0; a < keep.size(); ++a)
        for (std::size_t b = 0; b < keep.size(); ++b) out.data_[a * keep.size() + b] = (*this)(keep[a], keep[b]);
    return out;
}

HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b) {
    if (a.n_ != b.n_) throw GraphError("matrix sizes differ");
    HermitianMatrix out(a.n_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) out.data_[k] = a.data_[k] + b.data_[k];
    return out;
}

HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b) {
    if (a.n_ != b.n_) throw GraphError("matrix sizes differ");
    HermitianMatrix out(a.n_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) out.data_[k] = a.data_[k] - b.data_[k];
    return out;
}

std::vector<Complex> IncidenceMatrix::gram() const {
    std::vector<Complex> out(rows_ * rows_);
    for (std::size_t e = 0; e < cols_; ++e) {
        auto col = column(e);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (col[i] == Complex{}) continue;
            for (std::size_t j = 0; j < rows_; ++j) out[i * rows_ + j] += col[i] * std::conj(col[j]);
        }
    }
    return out;
}

HermitianMatrix degree_matrix(const GainGraph& g) {
    HermitianMatrix d(g.vertex_count());
    for (std::size_t i = 0; i < g.vertex_count(); ++i) d.set(i, i, static_cast<double>(g.degree(i)));
    return d;
}

HermitianMatrix adjacency(const GainGraph& g) {
    HermitianMatrix a(g.vertex_count());
    for (const Edge& e : g.edges()) a.set(e.u, e.v, e.gain.value());
    return a;
}

HermitianMatrix laplacian(const GainGraph& g) {
    HermitianMatrix l(g.vertex_count());
    for (std::size_t i = 0; i < g.vertex_count(); ++i) l.set(i, i, static_cast<double>(g.degree(i)));
    for (const Edge& e : g.edges()) l.set(e.u, e.v, -e.gain.value());
    return l;
}

HermitianMatrix signless_laplacian(const GainGraph& g) {
    std::vector<Gain> minus_one(g.edge_count(), Gain::half_turn());
    return laplacian(g.with_gains(minus_one));
}

IncidenceMatrix incidence(const GainGraph& g) {
    IncidenceMatrix h(g.vertex_count(), g.edge_count());
    for (std::size_t k = 0; k < g.edge_count(); ++k) {
        const Edge& e = g.edge(k);
        h.at(e.v, k) = 1.0;
        h.at(e.u, k) = -e.gain.value();
    }
    return h;
}

double gram_check(const GainGraph& g) {
    auto product = incidence(g).gram();
    HermitianMatrix l = laplacian(g);
    double worst = 0.0;
    for (std::size_t k = 0; k < product.size(); ++k) worst = std::max(worst, std::abs(product[k] - l.data()[k]));
    return worst;
}

double quadratic_form(const GainGraph& g, std::span<const Complex> x) {
    if (x.size() != g.vertex_count()) throw GraphError("vector length does not match vertex count");
    double total = 0.0;
    for (const Edge& e : g.edges()) total += std::norm(x[e.u] - e.gain.value() * x[e.v]);
    return total;
}

SwitchingMatrix switching_matrix(const SwitchingFunction& zeta) {
    SwitchingMatrix d;
    for (const Gain& z : zeta.values) d.diagonal.push_back(z.value());
    return d;
}

HermitianMatrix conjugate_by_switch(const HermitianMatrix& m, const SwitchingFunction& zeta) {
    if (zeta.size() != m.size()) throw GraphError("switching function length does not match matrix size");
    auto d = switching_matrix(zeta).diagonal;
    HermitianMatrix out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i; j < m.size(); ++j) out.set(i, j, std::conj(d[i]) * m(i, j) * d[j]);
    return out;
}

void write_matrix_json(std::ostream& out, const HermitianMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.size(); ++j)
            row.push_back({round_output(m(i, j).real()), round_output(m(i, j).imag())});
        rows.push_back(std::move(row));
    }
    out << rows.dump() << '\n';
}

void write_matrix_csv(std::ostream& out, const HermitianMatrix& m) {
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) out << (j ? "," : "") << format_complex(m(i, j));
        out << '\n';
    }
}

}  // namespace gaingraph
