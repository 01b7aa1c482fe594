#include "rulerfold/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rulerfold/density.hpp"
#include "rulerfold/errors.hpp"
#include "rulerfold/extremal.hpp"
#include "rulerfold/io.hpp"
#include "rulerfold/search.hpp"
#include "rulerfold/solvers.hpp"
#include "rulerfold/svg.hpp"

namespace rulerfold::cli {

namespace {

class IoFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RulerInstance load_instance(const RunConfig& config) {
    if (!config.input_path) throw InputError("--input FILE is required");
    return parse_instance(read_file(*config.input_path));
}

void emit(const RunConfig& config, std::ostream& out, const std::string& text) {
    if (!config.output_path) {
        out << text;
        return;
    }
    std::ofstream file(*config.output_path, std::ios::binary);
    if (!file) throw IoFailure("cannot write " + *config.output_path);
    file << text;
}

void emit(const RunConfig& config, std::ostream& out, const Json& j) { emit(config, out, j.dump(2) + "\n"); }

int solve(const RunConfig& config, std::ostream& out) {
    RulerInstance instance = load_instance(config);
    StepCoverResult result = config.brute
        ? brute_force_step_cover(instance, config.brute_force_limit)
        : branch_and_bound_step_cover(instance, BranchAndBoundOptions{config.node_limit});
    Json j{{"n", instance.size()}, {"method", config.brute ? "brute-force" : "branch-and-bound"}};
    j.update(to_json(result));
    emit(config, out, j);
    return kOk;
}

int greedy(const RunConfig& config, std::ostream& out) {
    emit(config, out, to_json(greedy_fold(load_instance(config))));
    return kOk;
}

int extremal(const RunConfig& config, std::ostream& out) {
    ExtremalInstance ext = build_extremal(config.m);
    Json j = to_json(ext);
    j["alternating_range"] = alternating_range(ext).str();
    int code = kOk;
    if (config.verify) {
        LowerBoundReport report = verify_lower_bound(ext, config.brute_force_limit);
        j["verification"] = to_json(report);
        if (!report.holds()) code = kCheckFailed;
    }
    emit(config, out, j);
    return code;
}

int certify(const RunConfig& config, std::ostream& out) {
    RulerInstance instance = load_instance(config);
    if (config.reduce) {
        instance = merge_reduce(pad_with_zeros(instance, (4 - instance.size() % 4) % 4));
    }
    std::optional<Rational> eps;
    if (config.epsilon_override) eps = Rational::parse(*config.epsilon_override);
    BoundCertificate cert = certify_upper_bound(instance, eps);
    Json j = to_json(cert);
    j["lengths"] = to_json(instance)["lengths"];
    emit(config, out, j);
    return cert.holds ? kOk : kCheckFailed;
}

int density(const RunConfig& config, std::ostream& out, std::ostream& err) {
    RulerInstance instance = load_instance(config);
    if (!adjacent_sums_exceed_one(instance)) {
        err << "warning: some adjacent steps sum to at most 1; the doubling bound does not apply (see merge_reduce)\n";
    }
    std::vector<PiecewiseConstantDensity> qs = pipeline(instance);
    if (config.index) {
        if (*config.index >= qs.size()) {
            throw InputError("--index must be at most " + std::to_string(qs.size() - 1));
        }
        Json j = to_json(qs[*config.index]);
        j["index"] = *config.index;
        emit(config, out, j);
        return kOk;
    }
    Json all = Json::array();
    for (std::size_t i = 0; i < qs.size(); ++i) {
        Json j = to_json(qs[i]);
        j["index"] = i;
        all.push_back(std::move(j));
    }
    emit(config, out, all);
    return kOk;
}

int search(const RunConfig& config, std::ostream& out) {
    const std::size_t last = config.n_through.value_or(config.n);
    if (last < config.n) throw InputError("--through must not be below --n");
    std::vector<FitEstimate> rows;
    for (std::size_t n = config.n; n <= last; ++n) {
        SearchOptions options;
        options.max_n = config.brute_force_limit;
        if (!rows.empty()) options.seeds.push_back(pad_with_zeros(rows.back().best_instance, 1));
        rows.push_back(fit_lower_bound_search(n, config.budget, config.seed, options));
    }
    MonotonicityReport report = fit_monotonicity_check(rows);
    if (config.csv) {
        emit(config, out, fit_estimates_to_csv(report.repaired));
    } else {
        Json j{{"rows", Json::array()}};
        for (const FitEstimate& est : report.repaired) j["rows"].push_back(to_json(est));
        j["monotonicity"] = to_json(report);
        emit(config, out, j);
    }
    return report.ok() ? kOk : kCheckFailed;
}

int render(const RunConfig& config, std::ostream& out) {
    RulerInstance instance = load_instance(config);
    SignVector signs = SignVector::parse(config.signs);
    emit(config, out, render_folding_svg(instance, signs, SvgOptions{config.schematic}));
    return kOk;
}

}  // namespace

int execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        switch (config.subcommand) {
            case Subcommand::Solve: return solve(config, out);
            case Subcommand::Greedy: return greedy(config, out);
            case Subcommand::Extremal: return extremal(config, out);
            case Subcommand::Certify: return certify(config, out);
            case Subcommand::Density: return density(config, out, err);
            case Subcommand::Search: return search(config, out);
            case Subcommand::Render: return render(config, out);
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kParseError;
    } catch (const SizeLimitError& e) {
        err << "size limit: " << e.what() << '\n';
        return kSizeLimit;
    } catch (const InputError& e) {
        err << "precondition violated: " << e.what() << '\n';
        return kPrecondition;
    } catch (const IoFailure& e) {
        err << "i/o error: " << e.what() << '\n';
        return kIoError;
    }
    return kUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig config;
    CLI::App app{"Exact solver and certificate checker for one-dimensional ruler folding"};
    app.require_subcommand(1);

    auto add_io = [&](CLI::App* sub, bool needs_input) {
        auto* opt = sub->add_option("--input,-i", config.input_path, "Instance JSON file");
        if (needs_input) opt->required();
        sub->add_option("--out,-o", config.output_path, "Write output here instead of stdout");
    };

    auto* solve_cmd = app.add_subcommand("solve", "Exact step-cover of an instance");
    add_io(solve_cmd, true);
    solve_cmd->add_option("--limit", config.node_limit, "Branch-and-bound node cap (0 = unlimited)");
    solve_cmd->add_flag("--brute", config.brute, "Use exhaustive enumeration");
    solve_cmd->add_option("--max-n", config.brute_force_limit, "Largest n accepted by brute force");

    auto* greedy_cmd = app.add_subcommand("greedy", "Greedy folding with every |s_i| <= 1");
    add_io(greedy_cmd, true);

    auto* extremal_cmd = app.add_subcommand("extremal", "Build the lower-bound instance for m");
    extremal_cmd->add_option("--m", config.m, "Construction parameter (n = 4m - 1)")->required();
    extremal_cmd->add_flag("--verify", config.verify, "Enumerate every folding and check f = 2 - delta");
    extremal_cmd->add_option("--max-n", config.brute_force_limit, "Largest n accepted for verification");
    extremal_cmd->add_option("--out,-o", config.output_path, "Write output here instead of stdout");

    auto* certify_cmd = app.add_subcommand("certify", "Fringe-mass certificate for a range <= 2 - eps folding");
    add_io(certify_cmd, true);
    certify_cmd->add_option("--epsilon", config.epsilon_override, "Override eps, as p/q");
    certify_cmd->add_flag("--reduce", config.reduce, "Zero-pad to a multiple of 4 and merge-reduce first");

    auto* density_cmd = app.add_subcommand("density", "Exact walk densities q_0 .. q_n");
    add_io(density_cmd, true);
    density_cmd->add_option("--index", config.index, "Only emit q_index");

    auto* search_cmd = app.add_subcommand("search", "Heuristic lower bound on the fit p_n");
    search_cmd->add_option("--n", config.n, "Number of steps")->required()->check(CLI::PositiveNumber);
    search_cmd->add_option("--through", config.n_through, "Search every n up to this value");
    search_cmd->add_option("--budget", config.budget, "Step-cover evaluations per n");
    search_cmd->add_option("--seed", config.seed, "Random seed");
    search_cmd->add_option("--max-n", config.brute_force_limit, "Largest n accepted");
    search_cmd->add_flag("--csv", config.csv, "Emit CSV rows instead of JSON");
    search_cmd->add_option("--out,-o", config.output_path, "Write output here instead of stdout");

    auto* render_cmd = app.add_subcommand("render", "SVG drawing of a folding");
    render_cmd->add_option("--input,-i", config.input_path, "Instance JSON file")->required();
    render_cmd->add_option("--signs", config.signs, "Folding, e.g. \"--+++-+\"")->required();
    render_cmd->add_flag("--schematic", config.schematic, "Evenly spaced levels instead of true scale");
    render_cmd->add_option("--out,-o", config.output_path, "SVG output file")->required();

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsage;
    }

    const std::pair<CLI::App*, Subcommand> table[] = {
        {solve_cmd, Subcommand::Solve},       {greedy_cmd, Subcommand::Greedy}, {extremal_cmd, Subcommand::Extremal},
        {certify_cmd, Subcommand::Certify},   {density_cmd, Subcommand::Density},
        {search_cmd, Subcommand::Search},     {render_cmd, Subcommand::Render},
    };
    for (const auto& [cmd, sub] : table) {
        if (cmd->parsed()) config.subcommand = sub;
    }
    return execute(config, out, err);
}

}  // namespace rulerfold::cli
