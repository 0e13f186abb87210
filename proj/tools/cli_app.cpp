#include "cli_app.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "flagmorph/io.hpp"
#include "flagmorph/symmetric.hpp"

namespace flagmorph::cli {

namespace {

using io::json;

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
    std::vector<int> values;
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            values.push_back(v);
        } catch (const std::exception&) {
            throw CLI::ValidationError(what, "'" + token + "' is not an integer");
        }
    }
    if (values.empty()) throw CLI::ValidationError(what, "expected a comma-separated list");
    return values;
}

std::vector<long long> parse_long_list(const std::string& text, const std::string& what) {
    std::vector<long long> values;
    for (int v : parse_int_list(text, what)) values.push_back(v);
    return values;
}

linalg::Vec parse_point(const std::string& text) {
    linalg::Vec point;
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) point.push_back(io::parse_rational(token));
    if (point.empty()) throw CLI::ValidationError("--point", "expected a comma-separated list");
    return point;
}

// Flag-variety input: either explicit dims or the consecutive-complement
// (m, i) pair on the same --n.
struct FlagInput {
    int n = 0;
    std::string dims_text;
    int m = 0;
    int i = 0;
    bool has_dims() const { return !dims_text.empty(); }

    chow::FlagVariety resolve(std::optional<int> decide_m = std::nullopt) const {
        if (has_dims()) return chow::FlagVariety(n, parse_int_list(dims_text, "--dims"));
        int run_m = m != 0 ? m : decide_m.value_or(0);
        return chow::to_flag_variety(chow::ConsecutiveComplementForm{n, run_m, i});
    }
};

void add_flag_options(CLI::App* cmd, FlagInput& input, bool with_m) {
    cmd->add_option("--n", input.n, "rank of the ambient type-A diagram")->required();
    auto* dims = cmd->add_option("--dims", input.dims_text, "marked dimensions, e.g. 1,3,4");
    auto* i_opt = cmd->add_option("--i", input.i, "start of the unmarked consecutive run");
    if (with_m) cmd->add_option("--m", input.m, "source projective dimension")->required();
    dims->excludes(i_opt);
}

int cmd_chow_present(const FlagInput& input, const std::string& format, std::ostream& out) {
    chow::FlagVariety fv = input.resolve();
    chow::ChowPresentation pres = chow::presentation(fv);
    if (format == "text") {
        out << "A_" << fv.n << "/P(";
        for (std::size_t idx = 0; idx < fv.dims.size(); ++idx)
            out << (idx ? "," : "") << fv.dims[idx];
        out << ")\n";
        out << "variables: X1..X" << fv.variable_count() << "\n";
        for (std::size_t b = 0; b < pres.blocks.size(); ++b)
            out << "block " << b + 1 << ": X" << pres.blocks[b].first << "..X"
                << pres.blocks[b].second << "\n";
        for (const auto& [degree, poly] : pres.relations)
            out << "relation degree " << degree << ": " << poly.to_string() << "\n";
        return 0;
    }
    out << io::dump(io::presentation_json(pres));
    return 0;
}

int cmd_decide(const FlagInput& input, int m, long long bound, double cap, bool no_evidence,
               std::ostream& out) {
    chow::FlagVariety fv = input.resolve(m);
    obstruction::DecideOptions options;
    options.attach_evidence = !no_evidence;
    options.bound = bound;
    options.limits.candidate_cap = cap;
    options.limits.threads = worker_count_from_env();
    obstruction::Verdict verdict = obstruction::decide_pm_to_flag(fv.n, m, fv.dims, options);
    out << io::dump(io::verdict_json(verdict));
    return 0;
}

int cmd_search(const FlagInput& input, int m, long long bound, double cap,
               const std::string& format, std::ostream& out) {
    chow::FlagVariety fv = input.resolve(m);
    obstruction::ConstraintSystem system = obstruction::build_system(fv, m);
    obstruction::SearchLimits limits;
    limits.candidate_cap = cap;
    limits.threads = worker_count_from_env();
    auto solutions = obstruction::bounded_search(system, bound, limits);
    if (format == "csv") {
        out << io::search_csv(system, solutions);
    } else {
        out << io::dump(io::search_json(system, bound, solutions));
    }
    return 0;
}

}  // namespace

int worker_count_from_env() {
    const char* env = std::getenv("FLAGMORPH_THREADS");
    if (env == nullptr) return 1;
    int value = std::atoi(env);
    return value < 1 ? 1 : value;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Chow-ring obstruction engine for morphisms from projective spaces to type-A "
                 "flag varieties"};
    app.require_subcommand(1);

    long long bound = 4;
    double cap = 1e9;
    std::string format = "json";

    // chow present
    auto* chow_cmd = app.add_subcommand("chow", "Chow ring presentations");
    chow_cmd->require_subcommand(1);
    FlagInput present_input;
    auto* present = chow_cmd->add_subcommand("present", "print the quotient presentation");
    add_flag_options(present, present_input, false);
    present->add_option("--m", present_input.m, "complement-run source dimension");
    present->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    // decide
    FlagInput decide_input;
    int decide_m = 0;
    bool no_evidence = false;
    auto* decide = app.add_subcommand("decide", "decide constancy of maps from P^m");
    decide->add_option("--n", decide_input.n)->required();
    decide->add_option("--m", decide_m, "source projective dimension")->required();
    auto* decide_dims = decide->add_option("--dims", decide_input.dims_text);
    auto* decide_i = decide->add_option("--i", decide_input.i);
    decide_dims->excludes(decide_i);
    decide->add_option("--bound", bound, "search bound for Unknown evidence");
    decide->add_option("--cap", cap, "candidate-count cap");
    decide->add_flag("--no-evidence", no_evidence, "skip the bounded search on Unknown");

    // decide-flag
    int source_n = 0;
    std::string source_dims;
    FlagInput target_input;
    int target_m = 0;
    auto* decide_flag = app.add_subcommand("decide-flag", "decide flag-to-flag constancy");
    decide_flag->add_option("--source-n", source_n)->required();
    decide_flag->add_option("--source-dims", source_dims)->required();
    decide_flag->add_option("--n", target_input.n)->required();
    decide_flag->add_option("--m", target_m)->required();
    auto* target_dims = decide_flag->add_option("--dims", target_input.dims_text);
    auto* target_i = decide_flag->add_option("--i", target_input.i);
    target_dims->excludes(target_i);

    // search
    FlagInput search_input;
    int search_m = 0;
    auto* search = app.add_subcommand("search", "exhaustive admissible-assignment search");
    search->add_option("--n", search_input.n)->required();
    search->add_option("--m", search_m)->required();
    auto* search_dims = search->add_option("--dims", search_input.dims_text);
    auto* search_i = search->add_option("--i", search_input.i);
    search_dims->excludes(search_i);
    search->add_option("--bound", bound);
    search->add_option("--cap", cap);
    search->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    // identity
    auto* identity = app.add_subcommand("identity", "symmetric-polynomial identity checks");
    identity->require_subcommand(1);
    int claim_j = 0, claim_k = 0;
    auto* claim = identity->add_subcommand("claim", "even/odd split of complete homogeneous");
    claim->add_option("--j", claim_j)->required();
    claim->add_option("--k", claim_k)->required();
    int genfun_k = 0, genfun_degree = 0;
    auto* genfun = identity->add_subcommand("genfun", "generating-function identities");
    genfun->add_option("--k", genfun_k)->required();
    genfun->add_option("--max-degree", genfun_degree)->required();
    long long parity_a = 6, parity_b = 6;
    int parity_l = 10;
    auto* parity = identity->add_subcommand("parity", "sign facts of the pullback recurrence");
    parity->add_option("--a-max", parity_a);
    parity->add_option("--b-max", parity_b);
    parity->add_option("--l-max", parity_l);

    // witness
    auto* witness_cmd = app.add_subcommand("witness", "symplectic witness morphism");
    witness_cmd->require_subcommand(1);
    int wit_n = 0, wit_i = 0, wit_m = 0;
    std::string wit_point;
    auto* wit_build = witness_cmd->add_subcommand("build", "image flag of one source point");
    wit_build->add_option("--n", wit_n)->required();
    wit_build->add_option("--i", wit_i)->required();
    wit_build->add_option("--m", wit_m)->required();
    wit_build->add_option("--point", wit_point, "m+1 rational coordinates, e.g. 1,0,0,1/2")
        ->required();
    int verify_n = 0;
    std::string verify_dims, verify_file;
    auto* wit_verify = witness_cmd->add_subcommand("verify", "check a flag point file");
    wit_verify->add_option("--n", verify_n)->required();
    wit_verify->add_option("--dims", verify_dims)->required();
    wit_verify->add_option("--file", verify_file, "flag point JSON ('-' for stdin)")->required();

    // bundle
    auto* bundle = app.add_subcommand("bundle", "uniform bundle splitting classifier");
    bundle->require_subcommand(1);
    int bundle_m = 0;
    std::string bundle_type;
    auto* bundle_classify = bundle->add_subcommand("classify", "apply the splitting rules");
    bundle_classify->add_option("--m", bundle_m)->required();
    bundle_classify->add_option("--type", bundle_type, "splitting type, e.g. 2,1,1,1,1")->required();

    std::vector<const char*> argv;
    argv.push_back("flagmorph");
    for (const auto& arg : args) argv.push_back(arg.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (present->parsed()) return cmd_chow_present(present_input, format, out);
        if (decide->parsed())
            return cmd_decide(decide_input, decide_m, bound, cap, no_evidence, out);
        if (decide_flag->parsed()) {
            chow::FlagVariety target = target_input.resolve(target_m);
            obstruction::Verdict verdict = obstruction::decide_flag_to_flag(
                source_n, parse_int_list(source_dims, "--source-dims"), target.n, target_m,
                target.dims);
            out << io::dump(io::verdict_json(verdict));
            return 0;
        }
        if (search->parsed()) return cmd_search(search_input, search_m, bound, cap, format, out);
        if (claim->parsed()) {
            bool holds = sym::claim_check(claim_j, claim_k);
            out << io::dump(json{{"identity", "claim"}, {"j", claim_j}, {"k", claim_k},
                                 {"holds", holds}});
            return 0;
        }
        if (genfun->parsed()) {
            bool holds = sym::genfun_check(genfun_k, genfun_degree);
            out << io::dump(json{{"identity", "genfun"}, {"k", genfun_k},
                                 {"max_degree", genfun_degree}, {"holds", holds}});
            return 0;
        }
        if (parity->parsed()) {
            obstruction::ParityReport report = obstruction::parity_facts_check(parity_a, parity_b,
                                                                               parity_l);
            json value{{"identity", "parity"}, {"a_max", parity_a}, {"b_max", parity_b},
                       {"l_max", parity_l}, {"holds", report.pass},
                       {"pairs_checked", report.pairs_checked}};
            if (report.counterexample)
                value["counterexample"] = json{{"a", report.counterexample->a},
                                               {"b1", report.counterexample->b1},
                                               {"l", report.counterexample->index},
                                               {"fact", report.counterexample->fact}};
            out << io::dump(value);
            return 0;
        }
        if (wit_build->parsed()) {
            witness::FlagPoint point = witness::embed_in_fiber(wit_n, wit_i, wit_m,
                                                               parse_point(wit_point));
            chow::FlagVariety fv =
                chow::to_flag_variety(chow::ConsecutiveComplementForm{wit_n, wit_m, wit_i});
            json value = io::flag_point_json(point);
            value["verified"] = witness::verify_flag_point(fv, point);
            out << io::dump(value);
            return 0;
        }
        if (wit_verify->parsed()) {
            json value;
            if (verify_file == "-") {
                value = json::parse(std::cin);
            } else {
                std::ifstream in(verify_file);
                if (!in) throw std::invalid_argument("cannot open '" + verify_file + "'");
                value = json::parse(in);
            }
            witness::FlagPoint point = io::flag_point_from_json(value);
            chow::FlagVariety fv(verify_n, parse_int_list(verify_dims, "--dims"));
            out << io::dump(json{{"valid", witness::verify_flag_point(fv, point)}});
            return 0;
        }
        if (bundle_classify->parsed()) {
            bundles::SplittingType type(bundle_m, parse_long_list(bundle_type, "--type"));
            out << io::dump(io::classification_json(type, bundles::classify(type)));
            return 0;
        }
        err << "usage error: no subcommand selected\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace flagmorph::cli
