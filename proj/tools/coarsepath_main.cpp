#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "coarsepath/errors.hpp"
#include "coarsepath/harness.hpp"
#include "coarsepath/json_io.hpp"
#include "coarsepath/quasi_isometry.hpp"

namespace {

using namespace coarsepath;

struct InputOpts {
    std::string path;
    std::string inline_graph;
    std::string format = "graph6";
};

void add_input_flags(CLI::App* cmd, InputOpts& in) {
    cmd->add_option("input", in.path, "graph file");
    cmd->add_option("--inline", in.inline_graph, "graph given directly on the command line");
    cmd->add_option("--format", in.format, "input format")
        ->check(CLI::IsMember({"graph6", "edgelist"}))
        ->capture_default_str();
}

Graph load_input(const InputOpts& in) {
    if (in.path.empty() == in.inline_graph.empty())
        throw ParseError("provide exactly one input source (file or --inline)");
    std::string text = in.inline_graph;
    if (!in.path.empty()) {
        std::ifstream f(in.path);
        if (!f) throw ParseError("cannot open " + in.path);
        std::ostringstream buf;
        buf << f.rdbuf();
        text = buf.str();
    }
    return load_graph(text, in.format == "graph6" ? GraphFormat::graph6
                                                  : GraphFormat::edgelist);
}

void add_caps_flags(CLI::App* cmd, Caps& caps) {
    cmd->add_option("--pl-max-n", caps.pl_max_n, "largest n for the exact pl/pb search")
        ->capture_default_str();
    cmd->add_option("--adc-max-n", caps.adc_max_n, "largest n for the exact adc search")
        ->capture_default_str();
    cmd->add_option("--dsp-path-cap", caps.dsp_path_cap,
                    "total geodesics enumerated for exact dsp")
        ->capture_default_str();
}

int run_params(const InputOpts& in, const Caps& caps, const std::string& output) {
    Graph g = load_input(in);
    auto report = compute_all_parameters(g, caps);
    if (output == "csv") {
        std::cout << report_csv_header() << "\n"
                  << report_csv_row(report, g.n()) << "\n";
    } else if (output == "text") {
        auto j = report_json(report, g.n());
        for (auto& [key, value] : j.items())
            if (key != "witnesses" && key != "absent")
                std::cout << key << ": " << value.dump() << "\n";
    } else {
        std::cout << report_json(report, g.n()).dump(2) << "\n";
    }
    return 0;
}

struct VerifyOpts {
    int exhaustive = -1;
    int random_count = -1;
    int n_min = 8, n_max = 14;
    double p = 0.3;
    std::uint64_t seed = 0;
    std::string report_jsonl;
    std::string csv;
    std::string violations_json;
};

int run_verify(const VerifyOpts& opt, const Caps& caps) {
    std::vector<Graph> corpus;
    if (opt.exhaustive >= 0) {
        for (int n = 1; n <= opt.exhaustive; ++n)
            for (auto& g : enumerate_connected_graphs(n)) corpus.push_back(std::move(g));
    } else {
        for (int i = 0; i < opt.random_count; ++i) {
            std::mt19937_64 mix(opt.seed + 0x9e3779b97f4a7c15ull * (i + 1));
            int n = opt.n_min +
                    static_cast<int>(mix() % (opt.n_max - opt.n_min + 1));
            corpus.push_back(random_connected_graph(n, opt.p, mix()));
        }
    }

    std::vector<ParameterReport> reports(corpus.size());
    parallel_for(static_cast<int>(corpus.size()), [&](int i) {
        reports[i] = compute_all_parameters(corpus[i], caps);
    });

    std::ofstream jsonl;
    if (!opt.report_jsonl.empty()) jsonl.open(opt.report_jsonl);
    std::ofstream csv;
    if (!opt.csv.empty()) {
        csv.open(opt.csv);
        csv << report_csv_header() << "\n";
    }

    long long checked = 0, skipped = 0;
    Json violations = Json::array();
    for (std::size_t i = 0; i < reports.size(); ++i) {
        auto outcome = check_inequalities(reports[i]);
        checked += outcome.checked;
        skipped += outcome.skipped;
        for (const auto& v : outcome.violations) {
            std::cerr << "violation: " << v.rule << " (" << v.lhs << " > " << v.rhs
                      << ") on " << v.graph6 << "\n";
            violations.push_back(Json{{"rule", v.rule},
                                      {"lhs", v.lhs},
                                      {"rhs", v.rhs},
                                      {"graph6", v.graph6}});
        }
        if (jsonl.is_open())
            jsonl << report_json(reports[i], corpus[i].n()).dump() << "\n";
        if (csv.is_open()) csv << report_csv_row(reports[i], corpus[i].n()) << "\n";
    }
    if (!opt.violations_json.empty()) {
        std::ofstream vf(opt.violations_json);
        vf << violations.dump(2) << "\n";
    }
    std::cout << "graphs: " << corpus.size() << "\nrows checked: " << checked
              << "\nrows skipped: " << skipped
              << "\nviolations: " << violations.size() << "\n";
    return violations.empty() ? 0 : 1;
}

int run_witness(const InputOpts& in, const std::string& kind, int K, const Caps& caps) {
    Graph g = load_input(in);
    Json out;
    if (kind == "decomposition") {
        auto res = exact_path_length(g, caps.pl_max_n);
        out["witness"] = decomposition_json(res.witness);
        out["metrics"] = metrics_json(metrics(g, res.witness));
        out["verified"] = validate(g, res.witness).empty();
    } else if (kind == "caterpillar") {
        auto approx = approx_adc(g);
        out["witness"] = caterpillar_json(approx.tree);
        out["distortion"] = approx.distortion;
        out["verified"] = distortion(g, approx.tree) == approx.distortion;
    } else if (kind == "qi") {
        auto qi = quasi_isometry_to_path(g);
        out["witness"] = qi_json(qi.path, qi.map);
        out["verified"] = verify_qi(g, qi.path, qi.map).ok;
    } else if (kind == "ccp") {
        int k = pcc(g);
        auto layout = cocomparability_layout(power(g, k));
        LinearLayout claimed{layout->sigma, k};
        out["witness"] = layout_json(claimed);
        out["verified"] = verify_ccp(g, claimed.sigma, claimed.mu).ok;
    } else if (kind == "dompair") {
        auto pair = dpr(g);
        out["witness"] = domination_json(pair);
        out["verified"] = pair.pair.first < 0 ||
                          is_k_dominating_pair(g, pair.pair.first, pair.pair.second,
                                               pair.k);
    } else if (kind == "dsp") {
        auto path = exact_dsp(g, caps.dsp_path_cap);
        out["witness"] = domination_json(path);
        require_shortest_path(g, path.path);
        out["verified"] = path_eccentricity(g, path.path) == path.k;
    } else {  // fatminor
        auto w = extract_fat_minor(g, K);
        out["witness"] = fat_minor_json(w);
        out["verified"] = verify_fat_minor(g, w).ok;
    }
    if (!out["verified"].get<bool>()) {
        std::cerr << "witness failed verification\n";
        return 1;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph parameters tied to path-shaped structure: compute, witness, verify"};
    app.require_subcommand(1);

    InputOpts params_in, witness_in;
    Caps params_caps, verify_caps, witness_caps;
    std::string params_output = "json";
    VerifyOpts verify_opt;
    std::string witness_kind;
    int witness_K = 1;

    auto* cmd_params = app.add_subcommand("params", "full parameter report for one graph");
    add_input_flags(cmd_params, params_in);
    add_caps_flags(cmd_params, params_caps);
    cmd_params->add_option("--output", params_output, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();

    auto* cmd_verify = app.add_subcommand("verify", "check the inequality ledger over a corpus");
    cmd_verify->add_option("--exhaustive", verify_opt.exhaustive,
                           "all connected graphs up to this many vertices")
        ->check(CLI::Range(1, 8));
    cmd_verify->add_option("--random", verify_opt.random_count, "number of random graphs")
        ->check(CLI::PositiveNumber);
    auto* nflag = cmd_verify->add_option_function<int>(
        "--n", [&](int n) { verify_opt.n_min = verify_opt.n_max = n; },
        "fixed vertex count for random graphs");
    nflag->check(CLI::PositiveNumber);
    cmd_verify->add_option("--n-min", verify_opt.n_min)->capture_default_str();
    cmd_verify->add_option("--n-max", verify_opt.n_max)->capture_default_str();
    cmd_verify->add_option("--p", verify_opt.p, "edge probability")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    cmd_verify->add_option("--seed", verify_opt.seed)->capture_default_str();
    cmd_verify->add_option("--report-jsonl", verify_opt.report_jsonl,
                           "write one report per line here");
    cmd_verify->add_option("--csv", verify_opt.csv, "write a CSV summary here");
    cmd_verify->add_option("--violations-json", verify_opt.violations_json,
                           "write machine-readable violations here");
    add_caps_flags(cmd_verify, verify_caps);

    auto* cmd_witness = app.add_subcommand("witness", "emit one verified witness");
    add_input_flags(cmd_witness, witness_in);
    cmd_witness
        ->add_option("--kind", witness_kind)
        ->required()
        ->check(CLI::IsMember({"decomposition", "caterpillar", "qi", "ccp", "dompair",
                               "dsp", "fatminor"}));
    cmd_witness->add_option("--K", witness_K, "fatness constant for fatminor")
        ->capture_default_str();
    add_caps_flags(cmd_witness, witness_caps);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_params->parsed()) return run_params(params_in, params_caps, params_output);
        if (cmd_verify->parsed()) {
            if ((verify_opt.exhaustive >= 0) == (verify_opt.random_count >= 0)) {
                std::cerr << "choose exactly one of --exhaustive / --random\n";
                return 2;
            }
            if (verify_opt.n_min < 1 || verify_opt.n_min > verify_opt.n_max) {
                std::cerr << "invalid vertex range\n";
                return 2;
            }
            return run_verify(verify_opt, verify_caps);
        }
        return run_witness(witness_in, witness_kind, witness_K, witness_caps);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionFailed& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return 3;
    } catch (const TooManyPaths& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return 3;
    } catch (const TooLarge& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
