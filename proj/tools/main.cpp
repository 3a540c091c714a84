#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cumulantkit/cumulants.hpp"
#include "cumulantkit/errors.hpp"
#include "cumulantkit/genfun.hpp"
#include "cumulantkit/independence.hpp"
#include "cumulantkit/moments.hpp"
#include "cumulantkit/partitions.hpp"
#include "cumulantkit/verify.hpp"

namespace {

using namespace cumulantkit;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot write \"" + out_path + "\"");
    out << text;
}

struct PartitionsArgs {
    int n = 0;
    std::string kind = "all";
    bool count_only = false;
    int max_n = kDefaultEnumerationBound;
};

int run_partitions(const PartitionsArgs& a) {
    if (a.kind == "monotone") {
        const auto list = enumerate_monotone_partitions(a.n, a.max_n);
        if (a.count_only) {
            std::cout << list.size() << "\n";
        } else {
            for (const auto& p : list) std::cout << ordered_partition_to_json_text(p) << "\n";
        }
        return kExitOk;
    }
    PartitionKind kind = PartitionKind::All;
    if (a.kind == "nc") kind = PartitionKind::NonCrossing;
    if (a.kind == "interval") kind = PartitionKind::Interval;
    const auto list = enumerate_partitions(a.n, kind, a.max_n);
    if (a.count_only) {
        std::cout << list.size() << "\n";
    } else {
        for (const auto& p : list) std::cout << partition_to_json_text(p) << "\n";
    }
    return kExitOk;
}

struct CumulantsArgs {
    std::string flavor;
    std::string method = "partition";
    std::string moments_path;
    int max_order = 5;
    std::string out_path;
};

CumulantFunctional cumulants_via_dot(Flavor flavor, const MomentFunctional& phi, int max_order) {
    if (max_order > phi.max_len)
        throw DepthError("moment data reaches length " + std::to_string(phi.max_len) +
                         ", requested order " + std::to_string(max_order) + " (word \"" +
                         word_key(Word(static_cast<std::size_t>(max_order), 1)) + "\" unavailable)");
    CumulantFunctional k;
    k.flavor = flavor;
    k.num_vars = phi.num_vars;
    k.max_order = max_order;
    DotCalculator calc(flavor, phi);
    for (const auto& w : all_words(phi.num_vars, max_order)) k.table[w] = calc.cumulant(w);
    return k;
}

int run_cumulants(const CumulantsArgs& a) {
    const Flavor flavor = flavor_from_string(a.flavor);
    const MomentFunctional phi = load_moments(a.moments_path);
    if (a.method != "partition") {
        // the copy expansion costs N^n mixed moments per word
        if (a.max_order > 9)
            throw std::invalid_argument("order " + std::to_string(a.max_order) +
                                        " exceeds the expansion cap (9); use --method partition");
        if (a.max_order > 7)
            std::cerr << "warning: the copy expansion grows as N^n; order " << a.max_order
                      << " may take a long time\n";
    }
    if (a.method == "both") {
        const CumulantFunctional by_dot = cumulants_via_dot(flavor, phi, a.max_order);
        const CumulantFunctional by_partitions = cumulants_from_moments(flavor, phi, a.max_order);
        std::vector<std::string> diffs;
        for (const auto& [w, value] : by_dot.table) {
            const Rational& other = by_partitions.table.at(w);
            if (value != other)
                diffs.push_back("word " + word_key(w) + ": coefficient-of-N " + value.str() +
                                " vs partition sum " + other.str());
        }
        if (!a.out_path.empty()) emit(cumulants_to_json_text(by_partitions), a.out_path);
        if (diffs.empty()) {
            std::cout << "pass\n";
            return kExitOk;
        }
        for (const auto& d : diffs) std::cout << d << "\n";
        std::cout << "FAIL (" << diffs.size() << " mismatches)\n";
        return kExitCheckFailed;
    }
    const CumulantFunctional k = a.method == "dot" ? cumulants_via_dot(flavor, phi, a.max_order)
                                                   : cumulants_from_moments(flavor, phi, a.max_order);
    emit(cumulants_to_json_text(k), a.out_path);
    return kExitOk;
}

struct MomentsArgs {
    std::string flavor;
    std::string cumulants_path;
    int max_order = 0;
    std::string out_path;
};

int run_moments(const MomentsArgs& a) {
    const CumulantFunctional k = load_cumulants(a.cumulants_path);
    if (!a.flavor.empty() && flavor_from_string(a.flavor) != k.flavor)
        throw std::invalid_argument("--flavor " + a.flavor + " does not match the file (" +
                                    to_string(k.flavor) + ")");
    const int order = a.max_order > 0 ? a.max_order : k.max_order;
    emit(moments_to_json_text(moments_from_cumulants(k, order)), a.out_path);
    return kExitOk;
}

struct MixedMomentArgs {
    std::string flavor;
    std::vector<std::string> family;
    std::string word;
};

int run_mixed_moment(const MixedMomentArgs& a) {
    const Flavor flavor = flavor_from_string(a.flavor);
    AlgebraFamily fam;
    for (const auto& entry : a.family) {
        const auto eq = entry.find('=');
        if (eq == std::string::npos)
            throw ParseError("--family expects label=path, got \"" + entry + "\"");
        int label = 0;
        try {
            label = std::stoi(entry.substr(0, eq));
        } catch (const std::exception&) {
            throw ParseError("--family label must be an integer in \"" + entry + "\"");
        }
        fam.add(label, load_moments(entry.substr(eq + 1)));
    }
    std::string text = a.word;
    if (text.empty() || text[0] != '{') {
        std::ifstream in(a.word);
        if (!in) throw ParseError("cannot open labeled word file \"" + a.word + "\"");
        std::stringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    const LabeledWord w = labeled_word_from_json_text(text);
    std::cout << mixed_moment(flavor, fam, w).str() << "\n";
    return kExitOk;
}

struct VerifyArgs {
    std::string suite;
    VerifyOptions options;
    std::string flavor;
    bool json = false;
};

int run_verify(const VerifyArgs& a) {
    VerifyOptions options = a.options;
    if (!a.flavor.empty()) options.flavor = flavor_from_string(a.flavor);
    const VerifySuiteReport report = run_suite(a.suite, options);
    std::cout << (a.json ? report.to_json_text() : report.to_text());
    std::cerr << "wall time: " << report.wall_seconds << " s\n";
    return report.pass() ? kExitOk : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact joint cumulants and generating-function checks for the four natural "
                 "independences (tensor, free, boolean, monotone)"};
    app.require_subcommand(1);

    PartitionsArgs pa;
    auto* partitions_cmd = app.add_subcommand(
        "partitions", "enumerate set partitions, non-crossing/interval classes, or ordered "
                      "non-crossing sequences");
    partitions_cmd->add_option("--n", pa.n, "ground set size")->required()->check(CLI::PositiveNumber);
    partitions_cmd->add_option("--kind", pa.kind, "all|nc|interval|monotone")
        ->check(CLI::IsMember({"all", "nc", "interval", "monotone"}));
    partitions_cmd->add_flag("--count-only", pa.count_only, "print only the count");
    partitions_cmd->add_option("--max-n", pa.max_n, "enumeration bound")
        ->envname("CUMULANTKIT_MAX_N");

    CumulantsArgs ca;
    auto* cumulants_cmd =
        app.add_subcommand("cumulants", "moments file -> cumulants file for one independence");
    cumulants_cmd->add_option("--flavor", ca.flavor, "tensor|free|boolean|monotone")
        ->required()
        ->check(CLI::IsMember({"tensor", "free", "boolean", "monotone"}));
    cumulants_cmd->add_option("--method", ca.method, "dot|partition|both")
        ->check(CLI::IsMember({"dot", "partition", "both"}));
    cumulants_cmd->add_option("--moments", ca.moments_path, "moment file (JSON)")->required();
    cumulants_cmd->add_option("--max-order", ca.max_order, "highest cumulant order (default 5)");
    cumulants_cmd->add_option("--out", ca.out_path, "output path (default stdout)");

    MomentsArgs ma;
    auto* moments_cmd =
        app.add_subcommand("moments", "cumulants file -> moments file (partition sums)");
    moments_cmd->add_option("--cumulants", ma.cumulants_path, "cumulant file (JSON)")->required();
    moments_cmd->add_option("--flavor", ma.flavor, "must match the file when given")
        ->check(CLI::IsMember({"tensor", "free", "boolean", "monotone"}));
    moments_cmd->add_option("--max-order", ma.max_order, "order (default: the file's max_order)");
    moments_cmd->add_option("--out", ma.out_path, "output path (default stdout)");

    MixedMomentArgs xa;
    auto* mixed_cmd = app.add_subcommand(
        "mixed-moment", "evaluate a labeled word across independent algebras");
    mixed_cmd->add_option("--flavor", xa.flavor, "tensor|free|boolean|monotone")
        ->required()
        ->check(CLI::IsMember({"tensor", "free", "boolean", "monotone"}));
    mixed_cmd->add_option("--family", xa.family, "label=moments.json (repeatable)")->required();
    mixed_cmd->add_option("--word", xa.word, "labeled word: inline JSON or a file path")->required();

    VerifyArgs va;
    auto* verify_cmd = app.add_subcommand("verify", "run an identity-verification suite");
    verify_cmd->add_option("--suite", va.suite, "which identity suite to run")
        ->required()
        ->check(CLI::IsMember(suite_names()));
    verify_cmd->add_option("--r", va.options.r, "number of variables (default 2)");
    verify_cmd->add_option("--degree", va.options.degree, "series truncation degree");
    verify_cmd->add_option("--order", va.options.order, "word length bound");
    verify_cmd->add_option("--n", va.options.max_n, "ground set bound for the counts suite");
    verify_cmd->add_option("--seed", va.options.seed, "master seed (default 42)");
    verify_cmd->add_option("--trials", va.options.trials, "number of random functionals");
    verify_cmd->add_option("--threads", va.options.threads, "worker threads (default 1)");
    verify_cmd->add_option("--flavor", va.flavor, "restrict to one independence")
        ->check(CLI::IsMember({"tensor", "free", "boolean", "monotone"}));
    verify_cmd->add_flag("--json", va.json, "machine-readable report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (partitions_cmd->parsed()) return run_partitions(pa);
        if (cumulants_cmd->parsed()) return run_cumulants(ca);
        if (moments_cmd->parsed()) return run_moments(ma);
        if (mixed_cmd->parsed()) return run_mixed_moment(xa);
        if (verify_cmd->parsed()) return run_verify(va);
    } catch (const DepthError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
    return kExitUsage;
}
