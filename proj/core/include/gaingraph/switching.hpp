#pragma once

#include <cstddef>
#include <vector>

#include "gaingraph/graph.hpp"

namespace gaingraph {

/// A gain per vertex, zeta(v_i).
struct SwitchingFunction {
    std::vector<Gain> values;

    static SwitchingFunction identity(std::size_t n) { return {std::vector<Gain>(n)}; }
    std::size_t size() const { return values.size(); }
    SwitchingFunction inverse() const;
    /// Pointwise product; switching by a then b equals switching by a*b.
    friend SwitchingFunction operator*(const SwitchingFunction& a, const SwitchingFunction& b);
};

/// phi^zeta(e_ij) = zeta(v_i)^-1 phi(e_ij) zeta(v_j). Throws GraphError on size mismatch.
GainGraph apply_switch(const GainGraph& g, const SwitchingFunction& zeta);

struct BalanceCertificate {
    bool balanced = false;
    /// Balanced: theta with theta(v_i)^-1 theta(v_j) = phi(e_ij), neutral at
    /// each component root. Empty when unbalanced.
    std::vector<Gain> potential;
    /// Unbalanced: closed walk v_0 ... v_k (v_0 repeated at the end) whose
    /// gain is non-neutral.
    std::vector<std::size_t> witness_cycle;
    Gain witness_gain;
};

/// BFS spanning forest, potentials along tree edges, then every edge is
/// re-checked against the potential. The first failing cotree edge (BFS
/// order) yields the witness: tree path plus that edge. Not minimal.
BalanceCertificate balance_certificate(const GainGraph& g, double tol = kGainTolerance);

/// Per component balance flags, indexed like connected_components(g).label.
std::vector<bool> component_balance(const GainGraph& g, double tol = kGainTolerance);

/// b(Phi): number of balanced connected components.
std::size_t balanced_component_count(const GainGraph& g, double tol = kGainTolerance);

struct SwitchingEquivalence {
    bool equivalent = false;
    SwitchingFunction zeta;  // apply_switch(g1, zeta) == g2 when equivalent
};

/// Decided by balance of the quotient (Gamma, phi1^-1 phi2); its potential is zeta.
SwitchingEquivalence switching_equivalent(const GainGraph& g1, const GainGraph& g2, double tol = kGainTolerance);

/// Phi ~ (Gamma, -1), decided by balance of the negated gains.
bool equivalent_to_all_negative(const GainGraph& g, double tol = kGainTolerance);

/// n - b(Phi), the rank of both the incidence and the Laplacian matrix.
std::size_t rank_prediction(const GainGraph& g, double tol = kGainTolerance);

}  // namespace gaingraph
