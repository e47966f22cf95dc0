/*
 * heisvc — classification queries, fixed-set queries, homology runs, and
 * the aggregated verification suite, with JSON reports.
 *
 * Exit codes: 0 success, 1 check failure, 2 usage error, 3 I/O or format
 * error.
 */

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "heisvc/chain.hpp"
#include "heisvc/model.hpp"
#include "heisvc/version.hpp"
#include "report.hpp"
#include "verify_suites.hpp"

namespace {

using namespace heisvc;
using cli::Check;
using cli::Report;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct OutputOpts {
    bool json = false;
    std::string out_path;
};

int emit(const Report& report, const OutputOpts& opts) {
    std::string text =
        opts.json ? report.to_json().dump(2) + "\n" : report.to_text();
    if (opts.out_path.empty()) {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream f(opts.out_path);
    if (!f) {
        std::cerr << "cannot open output file: " << opts.out_path << "\n";
        return kExitIo;
    }
    f << text;
    return kExitOk;
}

nlohmann::json element_json(const HeisElement& g) {
    return {{"a", g.a}, {"b", g.b}, {"c", g.c}};
}

nlohmann::json class_json(const ConjClassId& cls) {
    if (cls.kind == ClassKind::Center) return "Z";
    return {{"a", cls.a}, {"b", cls.b}, {"c_residue", cls.c_residue}};
}

int run_classify(Int a, Int b, Int c, const OutputOpts& opts) {
    HeisElement g{a, b, c};
    if (is_identity(g)) {
        std::cerr << "classify: the identity generates no cyclic subgroup\n";
        return kExitUsage;
    }
    Report report;
    report.command = "classify " + to_triple(g);
    report.checks.push_back(cli::timed_check("classify", [&](bool& passed) {
        passed = true;
        PrimitiveDecomposition pd = primitive_root(g);
        nlohmann::json data;
        data["element"] = element_json(g);
        data["root"] = element_json(pd.root);
        data["exponent"] = pd.exponent;
        data["class"] = class_json(canonical_class(pd.root));
        if (is_central(g)) {
            data["normalizer"] = nullptr;  // the whole group
            data["zh_comparison"] = nullptr;
        } else {
            NormalizerLattice n = normalizer(pd.root);
            data["normalizer"] = {{"direction_gen", element_json(n.direction_gen)},
                                  {"center_gen", element_json(n.center_gen)}};
            ZhComparison zh = compare_normalizer_zh(pd.root);
            data["zh_comparison"] = {{"equal", zh.equal}, {"index", zh.index}};
            if (!zh.equal) {
                report.findings.push_back(
                    {{"finding", "normalizer_exceeds_center_times_generator"},
                     {"class", canonical_class(pd.root).to_string()},
                     {"index", zh.index}});
            }
        }
        return data;
    }));
    int io = emit(report, opts);
    if (io != kExitOk) return io;
    return report.all_passed() ? kExitOk : kExitCheckFailure;
}

std::vector<HeisElement> parse_generators(const std::vector<std::string>& args) {
    std::string joined;
    for (const auto& a : args) {
        if (!joined.empty()) joined += ' ';
        joined += a;
    }
    std::vector<HeisElement> gens;
    std::size_t start = 0;
    while (start <= joined.size()) {
        std::size_t semi = joined.find(';', start);
        std::string part = joined.substr(
            start, semi == std::string::npos ? std::string::npos : semi - start);
        gens.push_back(parse_triple(part));  // throws on malformed triples
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    return gens;
}

int run_fixed_set(const std::vector<std::string>& args, Int bound,
                  const OutputOpts& opts) {
    std::vector<HeisElement> gens;
    try {
        gens = parse_generators(args);
    } catch (const std::invalid_argument& e) {
        std::cerr << "fixed-set: " << e.what() << "\n";
        return kExitUsage;
    }
    SubgroupSpec spec{gens};
    Report report;
    {
        std::ostringstream cmd;
        cmd << "fixed-set";
        for (std::size_t i = 0; i < gens.size(); ++i) {
            cmd << (i ? " ; " : " ") << to_triple(gens[i]);
        }
        report.command = cmd.str();
    }
    report.checks.push_back(cli::timed_check("fixed_set", [&](bool& passed) {
        passed = true;
        nlohmann::json data;
        nlohmann::json gen_list = nlohmann::json::array();
        for (const auto& g : gens) gen_list.push_back(element_json(g));
        data["generators"] = gen_list;
        data["result"] = nlohmann::json::parse(fixed_set_report_json(spec, bound));
        return data;
    }));
    int io = emit(report, opts);
    if (io != kExitOk) return io;
    return report.all_passed() ? kExitOk : kExitCheckFailure;
}

nlohmann::json homology_json(const HomologyResult& h) {
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t k = 0; k < h.groups.size(); ++k) {
        arr.push_back({{"degree", k},
                       {"betti", h.groups[k].betti},
                       {"torsion", h.groups[k].torsion},
                       {"group", h.groups[k].to_string()}});
    }
    return arr;
}

int run_homology(const std::string& target, const OutputOpts& opts) {
    ChainComplex complex;
    if (target == "s3") {
        ProductResult torus = product_complex(circle_complex(), circle_complex());
        complex = double_cylinder_complex(torus.proj_first, torus.proj_second);
    } else if (target == "torus") {
        complex = product_complex(circle_complex(), circle_complex()).complex;
    } else if (target == "join-s3") {
        SimplicialComplex tri{3, {{0, 1}, {0, 2}, {1, 2}}};
        complex = from_simplicial(simplicial_join(tri, tri));
    } else {
        std::ifstream f(target);
        if (!f) {
            std::cerr << "homology: cannot read " << target << "\n";
            return kExitIo;
        }
        std::stringstream buffer;
        buffer << f.rdbuf();
        std::string text = buffer.str();
        try {
            if (text.find("\"ranks\"") != std::string::npos) {
                complex = complex_from_json_text(text);
            } else {
                complex = from_simplicial(simplicial_from_json_text(text));
            }
        } catch (const std::invalid_argument& e) {
            std::cerr << "homology: " << target << ": " << e.what() << "\n";
            return kExitIo;
        }
    }
    Report report;
    report.command = "homology " + target;
    report.checks.push_back(cli::timed_check("homology", [&](bool& passed) {
        passed = true;
        HomologyResult h = homology(complex);
        return nlohmann::json{{"target", target},
                              {"ranks", complex.ranks},
                              {"groups", homology_json(h)}};
    }));
    int io = emit(report, opts);
    if (io != kExitOk) return io;
    return report.all_passed() ? kExitOk : kExitCheckFailure;
}

int run_verify_all(Int bound, const OutputOpts& opts) {
    Report report;
    report.command = "verify-all --bound " + std::to_string(bound);
    for (auto& c : cli::group_suite(bound)) report.checks.push_back(std::move(c));
    for (auto& c : cli::action_suite(bound)) report.checks.push_back(std::move(c));
    for (auto& c : cli::census_suite(bound)) report.checks.push_back(std::move(c));
    for (auto& c : cli::homology_suite()) report.checks.push_back(std::move(c));
    report.findings = cli::normalizer_findings(bound);
    report.sort_checks();
    int io = emit(report, opts);
    if (io != kExitOk) return io;
    return report.all_passed() ? kExitOk : kExitCheckFailure;
}

int run_bf_verify(Int bound, const OutputOpts& opts) {
    BfReport report = bf_verify(bound);
    std::string text = report.to_json_text() + "\n";
    if (opts.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(opts.out_path);
        if (!f) {
            std::cerr << "cannot open output file: " << opts.out_path << "\n";
            return kExitIo;
        }
        f << text;
    }
    return report.all_passed() ? kExitOk : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification toolkit for the discrete Heisenberg group"};
    app.set_version_flag("--version", std::string("heisvc ") + kVersion);
    app.require_subcommand(1);

    OutputOpts opts;
    Int bound = 3;

    auto add_output_flags = [&](CLI::App* cmd) {
        cmd->add_flag("--json", opts.json, "emit the report as JSON");
        cmd->add_option("--out", opts.out_path, "write the report to a file");
    };
    auto add_bound = [&](CLI::App* cmd, Int lo, Int hi) {
        cmd->add_option("--bound", bound, "enumeration ball radius")
            ->envname("HEISVC_BOUND")
            ->check(CLI::Range(lo, hi));
    };

    Int ca = 0, cb = 0, cc = 0;
    CLI::App* classify =
        app.add_subcommand("classify", "classify the cyclic subgroup <(a,b,c)>");
    classify->add_option("a", ca)->required();
    classify->add_option("b", cb)->required();
    classify->add_option("c", cc)->required();
    add_output_flags(classify);

    std::vector<std::string> gen_args;
    CLI::App* fixed = app.add_subcommand(
        "fixed-set", "fixed set of the subgroup generated by ';'-separated triples");
    fixed->add_option("generators", gen_args, "triples like \"1 0 0 ; 0 1 0\"")
        ->required()
        ->take_all();
    add_bound(fixed, 1, 8);
    add_output_flags(fixed);

    std::string target;
    CLI::App* hom = app.add_subcommand(
        "homology", "homology of s3 | torus | join-s3 | a complex file");
    hom->add_option("target", target)->required();
    add_output_flags(hom);

    CLI::App* verify =
        app.add_subcommand("verify-all", "run the aggregated verification suites");
    add_bound(verify, 1, 6);
    add_output_flags(verify);

    CLI::App* bf = app.add_subcommand(
        "bf-verify", "emit the brute-force cross-check report as JSON");
    add_bound(bf, 1, 8);
    bf->add_option("--out", opts.out_path, "write the report to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (classify->parsed()) return run_classify(ca, cb, cc, opts);
        if (fixed->parsed()) return run_fixed_set(gen_args, bound, opts);
        if (hom->parsed()) return run_homology(target, opts);
        if (verify->parsed()) return run_verify_all(bound, opts);
        if (bf->parsed()) return run_bf_verify(bound, opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    }
    return kExitUsage;
}
