#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gaingraph/bounds.hpp"
#include "gaingraph/ensemble.hpp"
#include "gaingraph/errors.hpp"
#include "gaingraph/format.hpp"
#include "gaingraph/generators.hpp"
#include "gaingraph/io.hpp"
#include "gaingraph/matrices.hpp"
#include "gaingraph/spectra.hpp"
#include "gaingraph/switching.hpp"

namespace gaingraph::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Options {
    std::string input = "-";
    std::string gen;
    std::string format = "text";
    std::optional<double> tol_eigen;
    double tol_gain = kGainTolerance;
    std::string matrix = "adjacency";
    bool closed_form = false;
    std::string zeta_path;
    std::size_t seeds = 0;
    std::uint64_t seed = 0x5eed;
    std::vector<std::string> generator;
};

/// Exit with kInputError after printing the message.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split_words(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> words;
    for (std::string w; is >> w;) words.push_back(w);
    return words;
}

GainGraph load_input(const Options& o, std::istream& in) {
    if (!o.gen.empty()) {
        if (o.input != "-") throw InputError("give either an input file or --gen, not both");
        const auto words = split_words(o.gen);
        return generate(parse_generator(words));
    }
    if (o.input == "-") return read_graph(in);
    std::ifstream file(o.input);
    if (!file) throw InputError("cannot open " + o.input);
    return read_graph(file);
}

EigenOptions eigen_options(const Options& o) {
    EigenOptions e;
    if (o.tol_eigen) e.off_diagonal_tol = *o.tol_eigen;
    return e;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

Json complex_json(Complex z) { return Json::array({round_output(z.real()), round_output(z.imag())}); }

std::string join_numbers(const std::vector<double>& v) {
    std::string s;
    for (double x : v) s += (s.empty() ? "" : " ") + format_number(x);
    return s;
}

// ---- info

int cmd_info(const Options& o, std::istream& in, std::ostream& out) {
    const GainGraph g = load_input(o, in);
    const DegreeProfile p = degree_profile(g);
    const InversePairPartition pairs = inverse_pair_partition(g);
    const std::size_t b = balanced_component_count(g, o.tol_gain);
    const Components comps = connected_components(g);

    if (o.format == "json") {
        Json j;
        j["n"] = g.vertex_count();
        j["m"] = g.edge_count();
        j["max_degree"] = p.max_degree;
        j["components"] = comps.count;
        j["balanced_components"] = b;
        Json vs = Json::array();
        for (std::size_t v = 0; v < g.vertex_count(); ++v)
            vs.push_back({{"vertex", v},
                          {"degree", p.degree[v]},
                          {"net_degree", complex_json(p.net_degree[v])},
                          {"average_2_degree", round_output(p.average_2_degree[v])}});
        j["vertices"] = vs;
        Json gains = Json::array();
        for (const Gain& x : p.used_gains) gains.push_back(x.to_string());
        j["used_gains"] = gains;
        Json ps = Json::array();
        for (const InversePair& ip : pairs.pairs)
            ps.push_back({{"gain", ip.representative.to_string()},
                          {"inverse", ip.representative.inverse().to_string()},
                          {"edges", ip.edge_indices.size()}});
        j["inverse_pairs"] = ps;
        out << j.dump(2) << '\n';
        return kOk;
    }
    if (o.format == "csv") {
        out << "vertex,degree,net_degree_re,net_degree_im,average_2_degree\n";
        for (std::size_t v = 0; v < g.vertex_count(); ++v)
            out << v << ',' << p.degree[v] << ',' << format_number(p.net_degree[v].real()) << ','
                << format_number(p.net_degree[v].imag()) << ',' << format_number(p.average_2_degree[v]) << '\n';
        return kOk;
    }
    out << "n " << g.vertex_count() << '\n'
        << "m " << g.edge_count() << '\n'
        << "max_degree " << p.max_degree << '\n'
        << "components " << comps.count << '\n'
        << "balanced_components " << b << '\n'
        << "vertex degree net_degree average_2_degree\n";
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        out << v << ' ' << p.degree[v] << ' ' << format_complex(p.net_degree[v]) << ' '
            << format_number(p.average_2_degree[v]) << '\n';
    out << "used_gains";
    for (const Gain& x : p.used_gains) out << ' ' << x.to_string();
    out << '\n' << "inverse_pairs " << pairs.pairs.size() << '\n';
    for (const InversePair& ip : pairs.pairs) {
        out << "  {" << ip.representative.to_string();
        if (!ip.self_paired) out << ", " << ip.representative.inverse().to_string();
        out << "} edges " << ip.edge_indices.size() << '\n';
    }
    return kOk;
}

// ---- spectrum

struct ClosedForm {
    std::string family;
    std::vector<double> eigenvalues;
};

/// Recognizes a gain cycle or a path and returns the matching closed-form list.
std::optional<ClosedForm> closed_form_for(const GainGraph& g, const std::string& matrix) {
    const std::size_t n = g.vertex_count();
    if (n == 0 || !is_connected(g) || g.max_degree() > 2) return std::nullopt;
    if (g.edge_count() + 1 == n) {
        const GraphSpectra s = path_spectrum(n);
        return ClosedForm{"path", matrix == "adjacency" ? s.adjacency.eigenvalues : s.laplacian.eigenvalues};
    }
    if (g.edge_count() != n || n < 3) return std::nullopt;
    std::vector<std::size_t> walk{0};
    std::size_t prev = 0;
    std::size_t cur = g.neighbors(0)[0].neighbor;
    while (cur != 0) {
        walk.push_back(cur);
        const auto nb = g.neighbors(cur);
        const std::size_t next = nb[0].neighbor == prev ? nb[1].neighbor : nb[0].neighbor;
        prev = cur;
        cur = next;
    }
    walk.push_back(0);
    Gain cycle_gain = gain_of_walk(g, walk);
    if (matrix == "signless") cycle_gain = n % 2 ? Gain::half_turn() : Gain();
    const GraphSpectra s = cycle_spectrum(n, cycle_gain);
    return ClosedForm{"cycle", matrix == "adjacency" ? s.adjacency.eigenvalues : s.laplacian.eigenvalues};
}

int cmd_spectrum(const Options& o, std::istream& in, std::ostream& out) {
    const GainGraph g = load_input(o, in);
    HermitianMatrix m;
    if (o.matrix == "adjacency")
        m = adjacency(g);
    else if (o.matrix == "laplacian")
        m = laplacian(g);
    else
        m = signless_laplacian(g);
    EigenOptions eo = eigen_options(o);
    eo.keep_eigenvectors = false;
    const Spectrum s = eigen_hermitian(m, eo);

    std::optional<ClosedForm> cf;
    double deviation = 0.0;
    if (o.closed_form) {
        cf = closed_form_for(g, o.matrix);
        if (cf)
            for (std::size_t k = 0; k < s.size(); ++k)
                deviation = std::max(deviation, std::abs(s.eigenvalues[k] - cf->eigenvalues[k]));
    }

    if (o.format == "json") {
        Json j;
        j["matrix"] = o.matrix;
        j["n"] = s.size();
        Json ev = Json::array();
        for (double x : s.eigenvalues) ev.push_back(round_output(x));
        j["eigenvalues"] = ev;
        j["residual"] = round_output(s.residual);
        if (o.closed_form) {
            if (cf) {
                Json cev = Json::array();
                for (double x : cf->eigenvalues) cev.push_back(round_output(x));
                j["closed_form"] = {{"family", cf->family}, {"eigenvalues", cev}, {"max_deviation", round_output(deviation)}};
            } else {
                j["closed_form"] = nullptr;
            }
        }
        out << j.dump(2) << '\n';
        return kOk;
    }
    if (o.format == "csv") {
        out << "index,eigenvalue" << (cf ? ",closed_form" : "") << '\n';
        for (std::size_t k = 0; k < s.size(); ++k) {
            out << k + 1 << ',' << format_number(s.eigenvalues[k]);
            if (cf) out << ',' << format_number(cf->eigenvalues[k]);
            out << '\n';
        }
        return kOk;
    }
    out << "matrix " << o.matrix << '\n'
        << "n " << s.size() << '\n'
        << "eigenvalues " << join_numbers(s.eigenvalues) << '\n'
        << "residual " << format_number(s.residual) << '\n';
    if (o.closed_form) {
        if (cf)
            out << "closed_form " << cf->family << ' ' << join_numbers(cf->eigenvalues) << '\n'
                << "closed_form_deviation " << format_number(deviation) << '\n';
        else
            out << "closed_form none (input is not a cycle or a path)\n";
    }
    return kOk;
}

// ---- balance

int cmd_balance(const Options& o, std::istream& in, std::ostream& out) {
    const GainGraph g = load_input(o, in);
    const BalanceCertificate c = balance_certificate(g, o.tol_gain);
    if (o.format == "json") {
        Json j;
        j["balanced"] = c.balanced;
        Json pot = Json::array();
        for (const Gain& x : c.potential) pot.push_back(x.to_string());
        j["potential"] = pot;
        j["witness_cycle"] = c.witness_cycle;
        j["witness_gain"] = c.balanced ? Json(nullptr) : Json(c.witness_gain.to_string());
        out << j.dump(2) << '\n';
        return kOk;
    }
    if (o.format == "csv") {
        out << "field,value\n" << "balanced," << (c.balanced ? "yes" : "no") << '\n';
        for (std::size_t v = 0; v < c.potential.size(); ++v) out << "potential" << v << ',' << c.potential[v].to_string() << '\n';
        for (std::size_t k = 0; k < c.witness_cycle.size(); ++k) out << "witness" << k << ',' << c.witness_cycle[k] << '\n';
        if (!c.balanced) out << "witness_gain," << c.witness_gain.to_string() << '\n';
        return kOk;
    }
    out << "balanced " << (c.balanced ? "yes" : "no") << '\n';
    if (c.balanced) {
        out << "potential";
        for (const Gain& x : c.potential) out << ' ' << x.to_string();
        out << '\n';
    } else {
        out << "witness";
        for (std::size_t v : c.witness_cycle) out << ' ' << v;
        out << '\n' << "witness_gain " << c.witness_gain.to_string() << '\n';
    }
    return kOk;
}

// ---- switch

SwitchingFunction read_zeta(const std::string& path, std::size_t n) {
    std::ifstream file(path);
    if (!file) throw InputError("cannot open " + path);
    SwitchingFunction z;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(file, line)) {
        ++line_no;
        line = line.substr(0, line.find('#'));
        for (const std::string& w : split_words(line)) {
            try {
                z.values.push_back(Gain::parse_angle(w));
            } catch (const std::exception& e) {
                throw ParseError(e.what(), line_no);
            }
        }
    }
    if (z.size() != n)
        throw InputError("switching file has " + std::to_string(z.size()) + " values, graph has " + std::to_string(n) +
                         " vertices");
    return z;
}

int cmd_switch(const Options& o, std::istream& in, std::ostream& out) {
    const GainGraph g = load_input(o, in);
    const GainGraph s = apply_switch(g, read_zeta(o.zeta_path, g.vertex_count()));
    if (o.format == "json")
        write_graph_json(out, s);
    else
        write_tgg(out, s);
    return kOk;
}

// ---- bounds / verify

Json bound_json(const BoundReport& b) {
    return {{"name", b.name},
            {"variant", to_string(b.variant)},
            {"lower", b.lower ? Json(round_output(*b.lower)) : Json(nullptr)},
            {"lhs", round_output(b.lhs)},
            {"rhs", round_output(b.rhs)},
            {"slack", round_output(b.slack)},
            {"tolerance", round_output(b.tolerance)},
            {"holds", b.holds},
            {"equality", to_string(b.equality)},
            {"equality_mismatch", b.equality_mismatch},
            {"notes", b.notes}};
}

Json identity_json(const IdentityCheck& c) {
    return {{"name", c.name},
            {"value", round_output(c.value)},
            {"threshold", round_output(c.threshold)},
            {"passed", c.passed},
            {"notes", c.notes}};
}

constexpr const char* kBoundCsvHeader =
    "name,variant,lower,lhs,rhs,slack,tolerance,holds,equality,equality_mismatch,notes";

void bound_csv(std::ostream& out, const BoundReport& b) {
    out << csv_field(b.name) << ',' << to_string(b.variant) << ',' << (b.lower ? format_number(*b.lower) : "") << ','
        << format_number(b.lhs) << ',' << format_number(b.rhs) << ',' << format_number(b.slack) << ','
        << format_number(b.tolerance) << ',' << (b.holds ? "yes" : "no") << ',' << to_string(b.equality) << ','
        << (b.equality_mismatch ? "yes" : "no") << ',' << csv_field(b.notes) << '\n';
}

void bound_text(std::ostream& out, const BoundReport& b) {
    out << b.name << " [" << to_string(b.variant) << "] ";
    if (b.lower) out << format_number(*b.lower) << " <= ";
    out << format_number(b.lhs) << " <= " << format_number(b.rhs) << "  slack " << format_number(b.slack) << "  "
        << (b.holds ? "holds" : (b.variant == Variant::printed ? "VIOLATED (printed, warning)" : "VIOLATED")) << "  "
        << to_string(b.equality);
    if (!b.notes.empty()) out << "  (" << b.notes << ')';
    out << '\n';
}

void identity_text(std::ostream& out, const IdentityCheck& c) {
    out << "identity " << c.name << ' ' << format_number(c.value) << " vs " << format_number(c.threshold) << ' '
        << (c.passed ? "pass" : "FAIL");
    if (!c.notes.empty()) out << "  (" << c.notes << ')';
    out << '\n';
}

void write_reports(std::ostream& out, const std::string& format, const std::vector<BoundReport>& bounds,
                   const std::vector<IdentityCheck>* identities, const std::vector<std::string>& skipped) {
    if (format == "json") {
        Json j;
        Json bs = Json::array();
        for (const auto& b : bounds) bs.push_back(bound_json(b));
        j["bounds"] = bs;
        if (identities) {
            Json is = Json::array();
            for (const auto& c : *identities) is.push_back(identity_json(c));
            j["identities"] = is;
        }
        j["skipped"] = skipped;
        out << j.dump(2) << '\n';
        return;
    }
    if (format == "csv") {
        out << kBoundCsvHeader << '\n';
        for (const auto& b : bounds) bound_csv(out, b);
        if (identities) {
            out << "identity,value,threshold,passed,notes\n";
            for (const auto& c : *identities)
                out << csv_field(c.name) << ',' << format_number(c.value) << ',' << format_number(c.threshold) << ','
                    << (c.passed ? "yes" : "no") << ',' << csv_field(c.notes) << '\n';
        }
        return;
    }
    for (const auto& b : bounds) bound_text(out, b);
    if (identities)
        for (const auto& c : *identities) identity_text(out, c);
    for (const auto& s : skipped) out << "skipped " << s << '\n';
}

int cmd_bounds(const Options& o, std::istream& in, std::ostream& out) {
    const GainGraph g = load_input(o, in);
    const SpectralAnalysis a(g, eigen_options(o));
    std::vector<std::string> skipped;
    const auto bounds = bound_suite(a, &skipped);
    write_reports(out, o.format, bounds, nullptr, skipped);
    return kOk;
}

VerifyOptions verify_options(const Options& o) {
    VerifyOptions v;
    v.eigen = eigen_options(o);
    v.gain_tol = o.tol_gain;
    v.seed = o.seed;
    return v;
}

int cmd_verify_seeds(const Options& o, std::ostream& out) {
    const VerifyOptions vo = verify_options(o);
    std::size_t failures = 0;
    Json runs = Json::array();
    if (o.format == "csv") out << "seed,n,m,construction,connected,passed,printed_violations\n";
    for (std::size_t i = 0; i < o.seeds; ++i) {
        const std::uint64_t seed = o.seed + i;
        const EnsembleInstance inst = ensemble_instance(seed, i % 2 == 0);
        const VerifyReport r = verify_all(inst.graph, vo);
        const bool ok = r.passed();
        failures += ok ? 0 : 1;
        const bool connected = is_connected(inst.graph);
        if (o.format == "json") {
            Json run{{"seed", seed},
                     {"n", inst.graph.vertex_count()},
                     {"m", inst.graph.edge_count()},
                     {"construction", to_string(inst.construction)},
                     {"connected", connected},
                     {"passed", ok},
                     {"printed_violations", r.printed_violations()}};
            if (!ok) {
                Json bad = Json::array();
                for (const auto& b : r.bounds)
                    if ((!b.holds && b.variant != Variant::printed) || b.equality_mismatch) bad.push_back(bound_json(b));
                for (const auto& c : r.identities)
                    if (!c.passed) bad.push_back(identity_json(c));
                run["failures"] = bad;
            }
            runs.push_back(run);
        } else if (o.format == "csv") {
            out << seed << ',' << inst.graph.vertex_count() << ',' << inst.graph.edge_count() << ','
                << to_string(inst.construction) << ',' << (connected ? "yes" : "no") << ',' << (ok ? "yes" : "no") << ','
                << r.printed_violations() << '\n';
        } else {
            out << "seed " << seed << " n " << inst.graph.vertex_count() << " m " << inst.graph.edge_count() << ' '
                << to_string(inst.construction) << (connected ? " connected" : " disconnected") << ' '
                << (ok ? "pass" : "FAIL") << " printed_violations " << r.printed_violations() << '\n';
            if (!ok) {
                for (const auto& b : r.bounds)
                    if ((!b.holds && b.variant != Variant::printed) || b.equality_mismatch) bound_text(out << "  ", b);
                for (const auto& c : r.identities)
                    if (!c.passed) identity_text(out << "  ", c);
            }
        }
    }
    if (o.format == "json")
        out << Json{{"runs", runs}, {"failures", failures}}.dump(2) << '\n';
    else if (o.format == "text")
        out << "result " << (failures == 0 ? "PASS" : "FAIL") << " (" << failures << " of " << o.seeds
            << " instances failed)\n";
    return failures == 0 ? kOk : kCheckFailed;
}

int cmd_verify(const Options& o, std::istream& in, std::ostream& out) {
    if (o.seeds > 0) {
        if (!o.gen.empty() || o.input != "-") throw InputError("--seeds runs the random ensemble and takes no input graph");
        return cmd_verify_seeds(o, out);
    }
    const GainGraph g = load_input(o, in);
    const VerifyReport r = verify_all(g, verify_options(o));
    write_reports(out, o.format, r.bounds, &r.identities, r.skipped);
    if (o.format == "text")
        out << "printed_violations " << r.printed_violations() << '\n'
            << "result " << (r.passed() ? "PASS" : "FAIL") << '\n';
    return r.passed() ? kOk : kCheckFailed;
}

// ---- generate

int cmd_generate(const Options& o, std::ostream& out) {
    const GainGraph g = generate(parse_generator(o.generator));
    if (o.format == "json")
        write_graph_json(out, g);
    else
        write_tgg(out, g);
    return kOk;
}

void add_input(CLI::App* sub, Options& o) {
    sub->add_option("input", o.input, "Graph file in TGG or JSON format ('-' for stdin)");
    sub->add_option("--gen", o.gen, "Generator spec instead of an input file, e.g. \"cycle 5 0.5turns\"");
}

void add_common(CLI::App* sub, Options& o) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--tol-eigen", o.tol_eigen, "Relative off-diagonal stopping threshold of the eigensolver")
        ->check(CLI::PositiveNumber);
    sub->add_option("--tol-gain", o.tol_gain, "Tolerance in turns for comparing inexact gains")
        ->check(CLI::NonNegativeNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Spectral analysis of complex unit gain graphs", "gaingraph"};
    app.require_subcommand(1);

    CLI::App* info = app.add_subcommand("info", "Sizes, degrees, net degrees, used gains, inverse pairs, b(Phi)");
    CLI::App* spectrum = app.add_subcommand("spectrum", "Eigenvalues of a graph matrix");
    CLI::App* balance = app.add_subcommand("balance", "Balance certificate: potential or unbalanced witness cycle");
    CLI::App* sw = app.add_subcommand("switch", "Apply a switching function and write the switched graph");
    CLI::App* bounds = app.add_subcommand("bounds", "Evaluate the eigenvalue bounds");
    CLI::App* verify = app.add_subcommand("verify", "Bounds plus structural identities; exit 1 on failure");
    CLI::App* gen = app.add_subcommand("generate", "Write a generated graph in TGG format");

    for (CLI::App* sub : {info, spectrum, balance, sw, bounds, verify}) {
        add_input(sub, o);
        add_common(sub, o);
    }
    add_common(gen, o);

    spectrum->add_option("--matrix", o.matrix, "Matrix to diagonalize")
        ->check(CLI::IsMember({"adjacency", "laplacian", "signless"}));
    spectrum->add_flag("--closed-form", o.closed_form, "Cross-check against the cycle or path formula");
    sw->add_option("--zeta", o.zeta_path, "File with one angle per vertex")->required();
    bounds->add_option("--report", o.format, "Report format")->check(CLI::IsMember({"text", "json", "csv"}));
    verify->add_option("--report", o.format, "Report format")->check(CLI::IsMember({"text", "json", "csv"}));
    verify->add_option("--seeds", o.seeds, "Run the seeded random ensemble with this many instances");
    verify->add_option("--seed", o.seed, "Base seed for random vectors, switchings and the ensemble");
    gen->add_option("spec", o.generator, "kind and parameters, e.g. cycle 5 0.5turns | star 4 | random 12 0.4 7")
        ->required()
        ->expected(1, -1);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (info->parsed()) return cmd_info(o, in, out);
        if (spectrum->parsed()) return cmd_spectrum(o, in, out);
        if (balance->parsed()) return cmd_balance(o, in, out);
        if (sw->parsed()) return cmd_switch(o, in, out);
        if (bounds->parsed()) return cmd_bounds(o, in, out);
        if (verify->parsed()) return cmd_verify(o, in, out);
        return cmd_generate(o, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const GraphError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const NumericalError& e) {
        err << "numerical error: " << e.what() << '\n';
        return kCheckFailed;
    }
}

}  // namespace gaingraph::cli
