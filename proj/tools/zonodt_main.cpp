#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "zonodt/cache.hpp"
#include "zonodt/caps.hpp"
#include "zonodt/closed_form.hpp"
#include "zonodt/corpus.hpp"
#include "zonodt/divisor.hpp"
#include "zonodt/errors.hpp"
#include "zonodt/json_io.hpp"
#include "zonodt/partition.hpp"
#include "zonodt/pspace.hpp"
#include "zonodt/quiver.hpp"
#include "zonodt/symfunc.hpp"
#include "zonodt/tutte.hpp"
#include "zonodt/version.hpp"

using nlohmann::json;
using namespace zonodt;

namespace {

struct CommonFlags {
    int threads = 0;
    std::string cache_dir;
    bool no_cache = false;
    long long max_edges = kMaxEdgesDefault;
    long long max_group_order = kMaxGroupOrderDefault;
    long long degree_cap = kDegreeCapDefault;
};

struct InputSource {
    std::string inline_text;
    std::string file_path;

    bool present() const { return !inline_text.empty() || !file_path.empty(); }

    std::string load(const char* what) const {
        const bool has_inline = !inline_text.empty();
        const bool has_file = !file_path.empty();
        if (has_inline == has_file)
            throw ValidationError(std::string("provide exactly one of --") + what +
                                  " and --" + what + "-file");
        if (has_inline) return inline_text;
        std::ifstream in(file_path);
        if (!in) throw ValidationError("cannot open " + file_path);
        std::stringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--threads", flags.threads, "Worker thread count (0 = library default)");
    cmd->add_option("--cache-dir", flags.cache_dir, "Directory for cached results");
    cmd->add_flag("--no-cache", flags.no_cache, "Skip the result cache");
    cmd->add_option("--max-edges", flags.max_edges, "Edge-count cap for enumerations");
    cmd->add_option("--max-group-order", flags.max_group_order,
                    "Cap on enumerated group elements");
    cmd->add_option("--degree-cap", flags.degree_cap, "Inverse-system degree cap");
}

void add_graph_input(CLI::App* cmd, InputSource& src) {
    cmd->add_option("--graph", src.inline_text, "Graph as inline JSON");
    cmd->add_option("--graph-file", src.file_path, "Path to a graph JSON file");
}

void add_quiver_input(CLI::App* cmd, InputSource& src) {
    cmd->add_option("--quiver", src.inline_text, "Quiver as inline JSON");
    cmd->add_option("--quiver-file", src.file_path, "Path to a quiver JSON file");
}

json check_json(const std::string& name, const CheckReport& r) {
    json out{{"name", name}, {"pass", r.pass}, {"checks", r.checks}};
    if (!r.pass) out["detail"] = r.detail;
    return out;
}

json verify_graph(const Multigraph& g, const CommonFlags& flags) {
    json checks = json::array();

    const MacaulayReport mac = macaulay_check(g, flags.max_edges);
    json mac_json{{"name", "macaulay"}, {"pass", mac.pass}, {"checks", mac.checks}};
    if (!mac.pass) mac_json["detail"] = mac.witness;
    checks.push_back(mac_json);

    checks.push_back(check_json("break-vanishing", check_break_vanishing(g)));
    checks.push_back(
        check_json("orientable-vanishing", check_orientable_vanishing(g, flags.max_edges)));

    const GradedDims dims = pspace_hilbert(g, flags.max_edges);
    const auto tutte_route = tutte(g).central_hilbert(g.genus());
    bool hilbert_ok = dims.size() == tutte_route.size();
    for (std::size_t i = 0; hilbert_ok && i < dims.size(); ++i)
        hilbert_ok = mpz_class(static_cast<long>(dims[i])) == tutte_route[i];
    checks.push_back(json{{"name", "hilbert-tutte-match"}, {"pass", hilbert_ok}});

    bool pass = true;
    for (const json& c : checks) pass = pass && c["pass"].get<bool>();
    return json{{"pass", pass}, {"checks", checks}};
}

json verify_corpus(const CommonFlags& flags) {
    json graphs = json::array();
    bool pass = true;
    for (const CorpusGraph& entry : corpus_graphs()) {
        json result = verify_graph(entry.graph, flags);
        result["graph"] = entry.name;
        pass = pass && result["pass"].get<bool>();
        graphs.push_back(result);
    }

    json quivers = json::array();
    for (const CorpusQuiver& entry : corpus_quivers()) {
        const CoveringGraph cov = covering_graph(entry.quiver, entry.gamma);
        const bool ok = cov.graph.genus() == n_gamma(entry.quiver, entry.gamma) - 1;
        pass = pass && ok;
        quivers.push_back(json{{"quiver", entry.name}, {"name", "genus-n-gamma"}, {"pass", ok}});
    }

    json triangle = json::array();
    for (long long m = 1; m <= 2; ++m) {
        for (long long n = 2; n <= 4; ++n) {
            for (const Partition& lambda : partitions_of(n)) {
                const mpz_class closed = dt_multipartite(m, lambda);

                std::vector<std::vector<long long>> a(lambda.size(),
                                                      std::vector<long long>(lambda.size(), m));
                for (std::size_t i = 0; i < lambda.size(); ++i) a[i][i] = m + 1;
                const long long direct = numerical_dt(SymmetricQuiver(a), lambda);

                const long long mn = m * n;
                const long long genus = m * n * (n - 1) / 2 - n + 1;
                const mpz_class orbit = orbit_formula(m, lambda, ((genus % mn) + mn) % mn);

                const bool ok = closed == static_cast<long>(direct) &&
                                orbit == closed * static_cast<long>(n);
                pass = pass && ok;
                triangle.push_back(json{{"m", m},
                                        {"lambda", lambda},
                                        {"pass", ok},
                                        {"dt", closed.get_str()}});
            }
        }
    }

    return json{{"pass", pass},
                {"graphs", graphs},
                {"quivers", quivers},
                {"consistency_triangle", triangle}};
}

int finish(const json& envelope, std::chrono::steady_clock::time_point started) {
    std::cout << envelope.dump() << "\n";
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - started)
                             .count();
    std::cerr << "elapsed_ms=" << elapsed << "\n";
    if (envelope["subcommand"] == "verify" && !envelope["payload"]["pass"].get<bool>())
        return 1;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Donaldson-Thomas invariants of symmetric quivers via break divisors"};
    app.require_subcommand(1);

    CommonFlags flags;
    InputSource graph_src, quiver_src;

    bool interior_only = false;
    bool h_central = false, h_external = false, h_internal = false;
    int parking_root = 1;
    std::string frob_basis = "h";
    std::string formula_kind;
    long long f_m = 1, f_n = 1, f_s = 0, f_d = 1, f_b = 0;
    std::vector<long long> f_lambda;

    CLI::App* c_dt = app.add_subcommand("dt", "Numerical DT invariant of a quiver");
    add_quiver_input(c_dt, quiver_src);

    CLI::App* c_qdt = app.add_subcommand("quantum-dt", "Quantum DT invariant of a quiver");
    add_quiver_input(c_qdt, quiver_src);

    CLI::App* c_brk = app.add_subcommand("break-divisors", "Enumerate break divisors");
    add_graph_input(c_brk, graph_src);

    CLI::App* c_ori =
        app.add_subcommand("orientable-divisors", "Enumerate orientable divisors");
    add_graph_input(c_ori, graph_src);
    c_ori->add_flag("--interior", interior_only, "Keep only interior points");

    CLI::App* c_hil = app.add_subcommand("hilbert", "Graded dimensions of a zonotopal space");
    add_graph_input(c_hil, graph_src);
    c_hil->add_flag("--central", h_central, "Central space (default)");
    c_hil->add_flag("--external", h_external, "External space");
    c_hil->add_flag("--internal", h_internal, "Internal space");

    CLI::App* c_tut = app.add_subcommand("tutte", "Tutte polynomial");
    add_graph_input(c_tut, graph_src);

    CLI::App* c_prk = app.add_subcommand("parking", "G-parking functions");
    add_graph_input(c_prk, graph_src);
    c_prk->add_option("--root", parking_root, "Root vertex, 1-based")->required();

    CLI::App* c_frb =
        app.add_subcommand("frobenius", "Frobenius characteristic of break divisors");
    add_graph_input(c_frb, graph_src);
    c_frb->add_option("--basis", frob_basis, "Output basis: h, m, or s")
        ->check(CLI::IsMember({"h", "m", "s"}));

    CLI::App* c_for = app.add_subcommand("formula", "Closed-form evaluations");
    c_for->add_option("kind", formula_kind, "dt-multipartite, reineke, orbit, or ramanujan")
        ->required()
        ->check(CLI::IsMember({"dt-multipartite", "reineke", "orbit", "ramanujan"}));
    c_for->add_option("--m", f_m, "Edge multiplicity parameter");
    c_for->add_option("--n", f_n, "Loop-quiver dimension");
    c_for->add_option("--s", f_s, "Residue parameter");
    c_for->add_option("--d", f_d, "Ramanujan sum modulus");
    c_for->add_option("--b", f_b, "Ramanujan sum argument");
    c_for->add_option("--lambda", f_lambda, "Partition parts");

    CLI::App* c_ver = app.add_subcommand("verify", "Vanishing and Hilbert cross-checks");
    add_graph_input(c_ver, graph_src);

    for (CLI::App* cmd : {c_dt, c_qdt, c_brk, c_ori, c_hil, c_tut, c_prk, c_frb, c_for, c_ver})
        add_common_flags(cmd, flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    const auto started = std::chrono::steady_clock::now();

    try {
        if (flags.threads < 0) throw ValidationError("--threads must be nonnegative");
        if (flags.max_edges <= 0 || flags.max_group_order <= 0 || flags.degree_cap <= 0)
            throw ValidationError("caps must be positive");
        if (flags.threads > 0) omp_set_num_threads(flags.threads);

        const Caps caps{flags.max_edges, flags.max_group_order, kMaxDsetPointsDefault,
                        flags.degree_cap};
        const std::string name = app.get_subcommands().front()->get_name();

        // Canonical form of the input, for the envelope hash and the cache key.
        std::optional<QuiverInput> quiver_in;
        std::optional<Multigraph> graph_in;
        std::string canonical;
        if (name == "dt" || name == "quantum-dt") {
            quiver_in = parse_quiver(quiver_src.load("quiver"));
            canonical =
                json{{"matrix", quiver_in->quiver.matrix()}, {"gamma", quiver_in->gamma}}.dump();
        } else if (name == "formula") {
            canonical = json{{"kind", formula_kind}, {"m", f_m},      {"n", f_n},
                             {"s", f_s},            {"d", f_d},      {"b", f_b},
                             {"lambda", f_lambda}}
                            .dump();
        } else if (name == "verify" && !graph_src.present()) {
            canonical = "corpus";
        } else {
            graph_in = parse_graph(graph_src.load("graph"));
            canonical = graph_to_json(*graph_in).dump();
        }

        const std::string option_sig = json{{"interior", interior_only},
                                            {"central", h_central},
                                            {"external", h_external},
                                            {"internal", h_internal},
                                            {"root", parking_root},
                                            {"basis", frob_basis}}
                                           .dump();
        const std::string cache_key = hash_hex(name + "|" + option_sig + "|" + canonical);

        ResultCache cache(flags.cache_dir, kVersion,
                          !flags.no_cache && !flags.cache_dir.empty());
        if (auto hit = cache.get(cache_key)) return finish(*hit, started);

        json payload;
        if (name == "dt") {
            payload = json{{"numerical", numerical_dt(quiver_in->quiver, quiver_in->gamma)},
                           {"n_gamma", n_gamma(quiver_in->quiver, quiver_in->gamma)}};
        } else if (name == "quantum-dt") {
            const QuantumDT out = quantum_dt(quiver_in->quiver, quiver_in->gamma, caps);
            payload = json{{"dims", dims_json(out.dims)},
                           {"gradings", out.gradings},
                           {"chi", out.chi},
                           {"numerical", out.numerical},
                           {"n_gamma", out.n_gamma}};
        } else if (name == "formula") {
            mpz_class value;
            if (formula_kind == "dt-multipartite") {
                value = dt_multipartite(f_m, f_lambda);
            } else if (formula_kind == "reineke") {
                value = reineke_dt(f_m, f_n);
            } else if (formula_kind == "orbit") {
                value = orbit_formula(f_m, f_lambda, f_s);
            } else {
                value = static_cast<long>(ramanujan_sum(f_d, f_b));
            }
            payload = json{{"value", value.get_str()}};
        } else if (name == "verify" && !graph_in) {
            payload = verify_corpus(flags);
        } else if (name == "break-divisors") {
            const bool cap_set = app.get_subcommands().front()->count("--max-edges") > 0;
            const auto divisors = enumerate_break_divisors(
                *graph_in, cap_set ? flags.max_edges : kMaxBreakEdgesDefault);
            payload = json{{"count", divisors.size()}, {"divisors", divisors_json(divisors)}};
        } else if (name == "orientable-divisors") {
            const auto divisors = interior_only
                                      ? interior_orientable_divisors(*graph_in, flags.max_edges)
                                      : enumerate_orientable_divisors(*graph_in, flags.max_edges);
            payload = json{{"count", divisors.size()},
                           {"interior", interior_only},
                           {"divisors", divisors_json(divisors)}};
        } else if (name == "hilbert") {
            if (h_central + h_external + h_internal > 1)
                throw ValidationError("choose at most one of --central, --external, --internal");
            if (h_external || h_internal) {
                const PowerIdeal ideal = pm_power_ideal(*graph_in, h_external ? 1 : -1);
                const GradedDims dims =
                    ideal.is_unit ? GradedDims{}
                                  : inverse_system_dims(ideal.generators,
                                                        graph_in->num_vertices(),
                                                        flags.degree_cap);
                payload = json{{"kind", h_external ? "external" : "internal"},
                               {"dims", dims_json(dims)},
                               {"total", graded_total(dims)}};
            } else {
                const GradedDims dims = pspace_hilbert(*graph_in, flags.max_edges);
                payload = json{{"kind", "central"},
                               {"dims", dims_json(dims)},
                               {"total", graded_total(dims)}};
            }
        } else if (name == "tutte") {
            payload = tutte_json(tutte(*graph_in));
        } else if (name == "parking") {
            if (parking_root < 1 || parking_root > graph_in->num_vertices())
                throw ValidationError("--root out of the 1.." +
                                      std::to_string(graph_in->num_vertices()) + " range");
            const auto functions = g_parking_functions(*graph_in, parking_root - 1);
            json fs = json::array();
            for (const auto& f : functions) fs.push_back(f);
            payload = json{{"count", functions.size()}, {"functions", fs}};
        } else if (name == "frobenius") {
            const SymFunc f = convert(frobenius_h(*graph_in), frob_basis[0]);
            payload = symfunc_json(f);
        } else {
            payload = verify_graph(*graph_in, flags);
        }

        json envelope{{"schema", 1},
                      {"subcommand", name},
                      {"input_hash", hash_hex(canonical)},
                      {"version", kVersion},
                      {"payload", payload}};
        cache.put(cache_key, envelope);
        return finish(envelope, started);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
