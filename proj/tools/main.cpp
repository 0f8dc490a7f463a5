#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"

#include "vdc/complex.hpp"
#include "vdc/decompose.hpp"
#include "vdc/graph.hpp"
#include "vdc/harness.hpp"
#include "vdc/io.hpp"
#include "vdc/shedding.hpp"

namespace {

// Exit codes: 0 success, 1 internal error, 2 malformed input or usage,
// 3 hypothesis violation (not bipartite / disconnected), 4 cap exceeded.
constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitParse = 2;
constexpr int kExitHypothesis = 3;
constexpr int kExitCap = 4;

// The complex machinery enumerates vertex sets in 64-bit masks.
constexpr int kHardVertexCap = 64;

class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw vdc::ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string format_cycle(const std::vector<int>& cycle) {
    std::string out = "(";
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(cycle[i]);
    }
    return out + ")";
}

struct DecomposeArgs {
    std::string graph_file;
    bool verify = false;
};

int run_decompose(const DecomposeArgs& args) {
    const vdc::Graph g = vdc::parse_edge_list(slurp(args.graph_file));
    const auto cert = vdc::decompose_bipartite_complement(g);
    if (args.verify) {
        if (g.vertex_count() > kHardVertexCap)
            throw CapExceeded("--verify needs at most " + std::to_string(kHardVertexCap) +
                              " vertices");
        const auto cx = vdc::independence_complex(vdc::complement(g));
        if (const auto vr = vdc::verify_certificate(cx, cert); !vr.ok)
            throw std::runtime_error("generated certificate failed verification: " + vr.reason);
    }
    std::cout << vdc::write_certificate_document(cert) << "\n";
    return kExitOk;
}

struct CheckVdArgs {
    std::string complex_file;
    bool certificate = false;
    int max_n = 10;
};

int run_check_vd(const CheckVdArgs& args) {
    const auto cx = vdc::parse_facet_list(slurp(args.complex_file));
    const int cap = std::min(args.max_n, kHardVertexCap);
    if (cx.vertex_count() > cap)
        throw CapExceeded("complex has " + std::to_string(cx.vertex_count()) +
                          " vertices, above the cap of " + std::to_string(cap) +
                          " (raise with --max-n, hard limit " + std::to_string(kHardVertexCap) +
                          ")");
    const auto res = vdc::is_vertex_decomposable_bruteforce(cx);
    std::cout << (res.decomposable ? "true" : "false") << "\n";
    if (args.certificate && res.decomposable)
        std::cout << vdc::write_certificate_document(res.certificate) << "\n";
    return kExitOk;
}

struct VerifyArgs {
    std::string complex_file;
    std::string certificate_file;
};

int run_verify(const VerifyArgs& args) {
    const auto cx = vdc::parse_facet_list(slurp(args.complex_file));
    const auto cert = vdc::parse_certificate_document(slurp(args.certificate_file));
    if (const auto vr = vdc::verify_certificate(cx, cert); !vr.ok) {
        std::cerr << "invalid certificate: " << vr.reason << "\n";
        return kExitInternal;
    }
    return kExitOk;
}

int run_shelling(const VerifyArgs& args) {
    const auto cx = vdc::parse_facet_list(slurp(args.complex_file));
    const auto cert = vdc::parse_certificate_document(slurp(args.certificate_file));
    vdc::ShellingOrder order;
    try {
        order = vdc::shelling_from_certificate(cx, cert);
    } catch (const std::domain_error& e) {
        std::cerr << e.what() << "\n";
        return kExitInternal;
    }
    for (const auto& f : order) std::cout << vdc::facet_line(f) << "\n";
    return kExitOk;
}

int run_check_shelling(const std::string& complex_file) {
    const auto cx = vdc::parse_facet_list(slurp(complex_file));
    const auto order = vdc::read_facet_lines(std::cin);
    try {
        std::cout << (vdc::is_shelling_order(cx, order) ? "true" : "false") << "\n";
    } catch (const std::domain_error& e) {
        // The order does not even list the facets of this complex.
        throw vdc::ParseError(e.what());
    }
    return kExitOk;
}

struct ShedArgs {
    std::string graph_file;
    bool use_complement = false;
};

int run_shed(const ShedArgs& args) {
    vdc::Graph g = vdc::parse_edge_list(slurp(args.graph_file));
    if (args.use_complement) g = vdc::complement(g);
    if (g.vertex_count() > kHardVertexCap)
        throw CapExceeded("shed needs at most " + std::to_string(kHardVertexCap) + " vertices");
    const auto cx = vdc::independence_complex(g);
    for (int v = 0; v < g.vertex_count(); ++v)
        std::cout << v << " "
                  << (vdc::is_shedding_vertex_complex(cx, v) ? "true" : "false") << "\n";
    return kExitOk;
}

struct SuiteArgs {
    int max_n = 8;
    int oracle_max_n = 7;
    std::uint64_t seed = 0;
    int jobs = 1;
    bool timings = false;
    std::string out_file;
};

int run_suite_cmd(const SuiteArgs& args) {
    vdc::SuiteOptions options;
    options.max_n = args.max_n;
    options.oracle_max_n = args.oracle_max_n;
    options.seed = args.seed;
    options.jobs = args.jobs > 0 ? args.jobs
                                 : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    const auto report = vdc::run_suite(options);
    const std::string doc = vdc::write_report_json(report, args.timings);
    if (args.out_file.empty()) {
        std::cout << doc << "\n";
    } else {
        std::ofstream out(args.out_file);
        if (!out) throw std::runtime_error("cannot write to " + args.out_file);
        out << doc << "\n";
    }
    return report.all_passed() ? kExitOk : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"vertex-decomposition certificates for independence complexes of "
                 "complements of connected bipartite graphs"};
    app.require_subcommand(1);

    DecomposeArgs decompose_args;
    auto* cmd_decompose =
        app.add_subcommand("decompose",
                           "build a certificate for the complement of a connected bipartite graph");
    cmd_decompose->add_option("graph-file", decompose_args.graph_file, "edge-list file")
        ->required();
    cmd_decompose->add_flag("--verify", decompose_args.verify,
                            "re-verify the certificate before printing");

    CheckVdArgs check_vd_args;
    auto* cmd_check_vd =
        app.add_subcommand("check-vd", "brute-force vertex-decomposability verdict for a complex");
    cmd_check_vd->add_option("complex-file", check_vd_args.complex_file, "facet-list file")
        ->required();
    cmd_check_vd->add_flag("--certificate", check_vd_args.certificate,
                           "also print a certificate when decomposable");
    cmd_check_vd->add_option("--max-n", check_vd_args.max_n, "vertex-count cap (default 10)");

    VerifyArgs verify_args;
    auto* cmd_verify = app.add_subcommand("verify", "check a certificate against a complex");
    cmd_verify->add_option("complex-file", verify_args.complex_file, "facet-list file")->required();
    cmd_verify
        ->add_option("certificate-file", verify_args.certificate_file,
                     "certificate JSON ('-' for stdin)")
        ->required();

    VerifyArgs shelling_args;
    auto* cmd_shelling =
        app.add_subcommand("shelling", "print the facet order derived from a certificate");
    cmd_shelling->add_option("complex-file", shelling_args.complex_file, "facet-list file")
        ->required();
    cmd_shelling->add_option("certificate-file", shelling_args.certificate_file, "certificate JSON")
        ->required();

    std::string check_shelling_file;
    auto* cmd_check_shelling =
        app.add_subcommand("check-shelling", "check a facet order read from stdin");
    cmd_check_shelling->add_option("complex-file", check_shelling_file, "facet-list file")
        ->required();

    ShedArgs shed_args;
    auto* cmd_shed =
        app.add_subcommand("shed", "per-vertex shedding verdicts for the independence complex");
    cmd_shed->add_option("graph-file", shed_args.graph_file, "edge-list file")->required();
    cmd_shed->add_flag("--complement", shed_args.use_complement,
                       "apply to the complement of the input graph");

    SuiteArgs suite_args;
    auto* cmd_suite = app.add_subcommand("suite", "run the exhaustive verification suite");
    cmd_suite->add_option("--max-n", suite_args.max_n, "largest vertex count to enumerate");
    cmd_suite->add_option("--oracle-max-n", suite_args.oracle_max_n,
                          "largest vertex count for the brute-force oracle");
    cmd_suite->add_option("--seed", suite_args.seed, "seed recorded in the report");
    cmd_suite->add_option("--jobs", suite_args.jobs, "worker threads (0 = all cores)");
    cmd_suite->add_flag("--timings", suite_args.timings,
                        "include (non-deterministic) stage timings in the report");
    cmd_suite->add_option("--out", suite_args.out_file, "write the report to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitParse;
    }

    try {
        if (*cmd_decompose) return run_decompose(decompose_args);
        if (*cmd_check_vd) return run_check_vd(check_vd_args);
        if (*cmd_verify) return run_verify(verify_args);
        if (*cmd_shelling) return run_shelling(shelling_args);
        if (*cmd_check_shelling) return run_check_shelling(check_shelling_file);
        if (*cmd_shed) return run_shed(shed_args);
        if (*cmd_suite) return run_suite_cmd(suite_args);
    } catch (const vdc::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const vdc::NotBipartiteError& e) {
        std::cerr << "not bipartite; odd cycle witness " << format_cycle(e.odd_cycle()) << "\n";
        return kExitHypothesis;
    } catch (const vdc::DisconnectedError& e) {
        std::cerr << "not connected; vertices " << e.first_component_vertex() << " and "
                  << e.second_component_vertex() << " lie in different components\n";
        return kExitHypothesis;
    } catch (const CapExceeded& e) {
        std::cerr << e.what() << "\n";
        return kExitCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInternal;
}
