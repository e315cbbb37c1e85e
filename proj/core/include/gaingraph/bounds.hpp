#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gaingraph/graph.hpp"
#include "gaingraph/spectra.hpp"

namespace gaingraph {

enum class Variant { printed, corrected, none };
enum class Equality { tight, strict, not_applicable };

const char* to_string(Variant v);
const char* to_string(Equality e);

/// Outcome of one inequality. A one-sided bound reads lhs <= rhs; a bracket
/// additionally has `lower` and reads lower <= lhs <= rhs, with slack the
/// smaller of the two gaps. holds <=> slack >= -tolerance, tight <=>
/// |slack| <= tolerance, tolerance = 1e-8 * (1 + |lhs| + |rhs| (+ |lower|)).
struct BoundReport {
    std::string name;
    std::optional<double> lower;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    double tolerance = 0.0;
    bool holds = true;
    Variant variant = Variant::none;
    Equality equality = Equality::not_applicable;
    /// Set when a numeric tightness verdict contradicts its combinatorial characterization.
    bool equality_mismatch = false;
    std::string notes;
};

inline constexpr double kBoundTolerance = 1e-8;
/// Spectral gap below which lambda_1(L(Phi)) = lambda_1(Q(Gamma)) is taken as equality.
inline constexpr double kSignlessEqualityTol = 1e-7;

BoundReport upper_bound_report(std::string name, double lhs, double rhs, Variant variant = Variant::none,
                               std::string notes = {});
BoundReport bracket_report(std::string name, double lower, double value, double upper, Variant variant = Variant::none,
                           std::string notes = {});

/// Graph plus the spectra every check needs, computed once.
class SpectralAnalysis {
public:
    explicit SpectralAnalysis(GainGraph g, const EigenOptions& options = {});

    const GainGraph& graph() const { return graph_; }
    const DegreeProfile& profile() const { return profile_; }
    const Spectrum& adjacency_spectrum() const { return adjacency_; }
    const Spectrum& laplacian_spectrum() const { return laplacian_; }
    const Spectrum& signless_spectrum() const { return signless_; }
    const EigenOptions& options() const { return options_; }
    bool connected() const { return connected_; }

private:
    GainGraph graph_;
    EigenOptions options_;
    DegreeProfile profile_;
    Spectrum adjacency_;
    Spectrum laplacian_;
    Spectrum signless_;
    bool connected_ = true;
};

/// rho(A(Phi)) <= Delta.
BoundReport delta_bound(const SpectralAnalysis& a);
BoundReport delta_bound(const GainGraph& g);

/// For k = 1, 2, 3 a printed and a corrected report, in that order.
/// Printed: lambda_n <= root_k(M_k^printed / n) <= lambda_1 with the signed
/// real root. Corrected k = 1, 3: the same with j^* A^k j. Corrected k = 2
/// uses the radius form lambda_n <= sqrt(M_2 / n) <= rho(A), the form the
/// Rayleigh quotient of A^2 supports. Throws GraphError if disconnected.
std::vector<BoundReport> adjacency_moment_bounds(const SpectralAnalysis& a);
std::vector<BoundReport> adjacency_moment_bounds(const GainGraph& g);

/// Same layout with N_k = j^* L^k j; all corrected forms are brackets by
/// lambda_n(L) and lambda_1(L).
std::vector<BoundReport> laplacian_moment_bounds(const SpectralAnalysis& a);
std::vector<BoundReport> laplacian_moment_bounds(const GainGraph& g);

/// lambda_1(L(Phi)) <= lambda_1(Q(Gamma)); tightness cross-checked against
/// equivalent_to_all_negative. Throws GraphError if disconnected.
BoundReport signless_comparison(const SpectralAnalysis& a);
BoundReport signless_comparison(const GainGraph& g);

/// The ten degree-based upper bounds on lambda_1(L(Phi)). Throws GraphError if disconnected.
std::vector<BoundReport> corollary_upper_bounds(const SpectralAnalysis& a);
std::vector<BoundReport> corollary_upper_bounds(const GainGraph& g);

/// Delta + 1 <= lambda_1(L(Phi)); for connected graphs tightness is
/// cross-checked against (Delta = n - 1 and balanced). Throws GraphError when edgeless.
BoundReport laplacian_lower_bound(const SpectralAnalysis& a);
BoundReport laplacian_lower_bound(const GainGraph& g);

/// max_pair lambda_1(L(pair)) <= lambda_1(L(Phi)) <= sum_pair lambda_1(L(pair)),
/// plus the check L(Phi) = sum_pair L(pair) (noted in `notes`, flagged via
/// equality_mismatch on failure). Throws GraphError if disconnected.
struct InversePairBounds {
    BoundReport lower;
    BoundReport upper;
    double decomposition_error = 0.0;
};
InversePairBounds inverse_pair_bounds(const SpectralAnalysis& a);
InversePairBounds inverse_pair_bounds(const GainGraph& g);

/// lambda_1 of a Laplacian computed component by component.
double laplacian_spectral_radius(const GainGraph& g, const EigenOptions& options = {});

struct InterlacingResult {
    bool holds = true;
    double worst_slack = 0.0;
    std::size_t inequalities = 0;
    std::vector<double> original;
    std::vector<double> deleted;
};

/// lambda_{k+1}(L(Phi)) <= lambda_k(L(Phi \ e)) <= lambda_k(L(Phi)), all 2n-1 inequalities.
InterlacingResult interlacing_check(const SpectralAnalysis& a, std::size_t u, std::size_t v);
InterlacingResult interlacing_check(const GainGraph& g, std::size_t u, std::size_t v);

/// Every bound applicable to the graph, sorted by name: delta_bound, the
/// Delta + 1 bound when there is an edge and, for connected graphs, the
/// moment, signless, corollary and inverse-pair bounds. Skipped groups are
/// appended to `skipped` with the reason.
std::vector<BoundReport> bound_suite(const SpectralAnalysis& a, std::vector<std::string>* skipped = nullptr);

struct IdentityCheck {
    std::string name;
    double value = 0.0;
    double threshold = 0.0;
    bool passed = true;
    std::string notes;
};

struct VerifyOptions {
    EigenOptions eigen;
    double gain_tol = kGainTolerance;
    std::uint64_t seed = 0x5eedULL;
    std::size_t quadratic_form_vectors = 16;
    /// Edges examined by the interlacing check (spread over the edge list).
    std::size_t interlacing_edges = 3;
};

struct VerifyReport {
    std::vector<BoundReport> bounds;        // sorted by name
    std::vector<IdentityCheck> identities;  // sorted by name
    std::vector<std::string> skipped;

    /// No corrected/unvariant violation, no identity failure, no equality mismatch.
    bool passed() const;
    std::size_t printed_violations() const;
};

VerifyReport verify_all(const GainGraph& g, const VerifyOptions& options = {});

}  // namespace gaingraph
