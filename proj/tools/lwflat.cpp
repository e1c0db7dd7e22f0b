// lwflat — analyses and desk-scale experiments for Littlewood and
// Newman-Bourgain polynomials.
//
//   lwflat analyze    one sequence (file or family) -> JSON report
//   lwflat sweep      (q, trial) grid of a family -> CSV
//   lwflat verify     canned experiment main1|main2|main3|appendix|all
//   lwflat covariance covariance diagnostics rows -> CSV
//
// Exit code 0 iff every requested check passed and all outputs were
// written.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "lwflat/covariance.hpp"
#include "lwflat/experiments.hpp"
#include "lwflat/generators.hpp"
#include "lwflat/report.hpp"
#include "lwflat/sequence_io.hpp"
#include "lwflat/sequences.hpp"

namespace {

using namespace lwflat;

// Family flags shared by analyze, sweep, and covariance.
struct FamilyCli {
    std::string name;
    double p = 0.5;
    double density = 0.5;
    std::uint64_t prime = 0;
    unsigned k = 0;
    std::uint64_t seed = 0;
    bool endpoint_convention = false;

    CLI::Option* name_option = nullptr;

    void attach(CLI::App& cmd) {
        name_option =
            cmd.add_option("--family", name,
                           "family: random_p, rudin_shapiro, legendre, "
                           "palindromic_random, nb_density")
                ->check(CLI::IsMember({"random_p", "rudin_shapiro", "legendre",
                                       "palindromic_random", "nb_density"}));
        cmd.add_option("--p", p, "-1 frequency for random_p (default 0.5)");
        cmd.add_option("--density", density,
                       "interior 1-density for nb_density (default 0.5)");
        cmd.add_option("--prime", prime, "odd prime length for legendre");
        cmd.add_option("--k", k, "rudin_shapiro exponent (length 2^k)");
        cmd.add_option("--seed", seed, "base seed (default 0)");
        cmd.add_flag("--endpoint-convention", endpoint_convention,
                     "force entries 0 and q-1 to +1 for random_p");
    }

    bool given() const { return name_option->count() > 0; }

    FamilySpec spec() const {
        FamilySpec out;
        out.kind = parse_family_kind(name);
        out.p = p;
        out.density = density;
        out.prime = prime;
        out.k = k;
        out.seed = seed;
        out.endpoint_convention = endpoint_convention;
        return out;
    }
};

// Streams text to stdout or to --out; false when the file cannot be
// written.
bool deliver(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return true;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot write output file: " << out_path << "\n";
        return false;
    }
    out << text;
    return out.good();
}

BinarySequence as_binary(const SequenceVariant& v) {
    if (const auto* s = std::get_if<SignSequence>(&v)) return to_binary(*s);
    return std::get<BinarySequence>(v);
}

// analyze needs a single length; sweeps take the whole list.
std::size_t single_length(const FamilySpec& spec, const FamilyCli& family,
                          const std::vector<std::size_t>& q_list) {
    if (spec.kind == FamilyKind::rudin_shapiro && family.k > 0)
        return std::size_t{1} << family.k;
    if (spec.kind == FamilyKind::legendre && family.prime > 0)
        return static_cast<std::size_t>(family.prime);
    if (q_list.size() == 1) return q_list.front();
    throw std::invalid_argument(
        "analyze: select one length with --q-list Q (or --k / --prime)");
}

int run_analyze(const std::string& input, const FamilyCli& family,
                const std::vector<std::size_t>& q_list,
                const std::vector<double>& alphas,
                const std::string& out_path) {
    ReportOptions opts;
    if (!alphas.empty()) opts.alphas = alphas;

    FlatnessReport report;
    if (!input.empty()) {
        const auto sequences = parse_sequence_file(input);
        if (sequences.size() != 1)
            throw std::invalid_argument(
                "analyze: input must hold exactly one sequence, got " +
                std::to_string(sequences.size()));
        report = std::visit([&](const auto& s) { return analyze(s, opts); },
                            sequences.front());
    } else {
        const FamilySpec spec = family.spec();
        const SequenceVariant seq =
            generate(spec, single_length(spec, family, q_list), 0);
        report = std::visit([&](const auto& s) { return analyze(s, opts); },
                            seq);
    }
    return deliver(to_json(report).dump(2) + "\n", out_path) ? 0 : 1;
}

int run_sweep_cmd(const FamilyCli& family,
                  const std::vector<std::size_t>& q_list,
                  const std::vector<double>& alphas, std::size_t trials,
                  bool no_timestamp, const std::string& out_path) {
    SweepConfig config;
    config.family = family.spec();
    config.q_list = q_list;
    if (!alphas.empty()) config.alphas = alphas;
    config.trials = trials;
    config.emit_timestamp = !no_timestamp;

    const std::vector<SweepRow> rows = run_sweep(config);
    std::ostringstream csv;
    write_sweep_csv(csv, config, rows);
    return deliver(csv.str(), out_path) ? 0 : 1;
}

int run_verify(const std::string& id) {
    std::vector<CheckReport> reports;
    if (id == "main1" || id == "all")
        reports.push_back(verify_frequency_interval());
    if (id == "main2" || id == "all")
        reports.push_back(verify_alpha_above_two());
    if (id == "main3" || id == "all")
        reports.push_back(verify_palindromic_criterion());
    if (id == "appendix" || id == "all")
        reports.push_back(verify_appendix_obstruction());

    bool all_passed = true;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        if (i > 0) std::cout << "\n";
        print_check_report(std::cout, reports[i]);
        all_passed = all_passed && reports[i].passed();
    }
    return all_passed ? 0 : 2;
}

int run_covariance(const std::string& input, const FamilyCli& family,
                   const std::vector<std::size_t>& q_list, std::size_t trials,
                   bool oracle, bool no_timestamp,
                   const std::string& out_path) {
    CovarianceOptions opts;
    opts.oracle = oracle;

    std::vector<std::string> header;
    std::vector<BinarySequence> instances;
    if (!input.empty()) {
        header.push_back("input: " + input);
        for (const SequenceVariant& v : parse_sequence_file(input))
            instances.push_back(as_binary(v));
    } else {
        const FamilySpec spec = family.spec();
        if (q_list.empty())
            throw std::invalid_argument("covariance: --q-list is required "
                                        "with --family");
        header.push_back("family: " + spec.to_config_string());
        std::string qs = "q_list:";
        for (std::size_t q : q_list) qs += ' ' + std::to_string(q);
        header.push_back(qs);
        header.push_back("trials: " + std::to_string(trials));
        for (std::size_t q : q_list)
            for (std::size_t trial = 0; trial < trials; ++trial)
                instances.push_back(as_binary(generate(spec, q, trial)));
    }

    if (oracle)
        for (const BinarySequence& b : instances)
            if (b.size() > 64) {
                std::cerr << "covariance: --oracle is limited to q <= 64 "
                             "(instance has q = "
                          << b.size() << ")\n";
                return 1;
            }

    std::vector<CovarianceRow> rows(instances.size());
    parallel_for(instances.size(), [&](std::size_t i) {
        rows[i] = covariance_row(instances[i], opts);
    });

    std::ostringstream csv;
    write_covariance_csv(csv, header, rows, !no_timestamp);
    return deliver(csv.str(), out_path) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Littlewood / Newman-Bourgain flatness toolkit"};
    app.require_subcommand(1);

    std::string input, out_path, verify_id;
    std::vector<std::size_t> q_list;
    std::vector<double> alphas;
    std::size_t trials = 1;
    bool no_timestamp = false, oracle = false;
    FamilyCli analyze_family, sweep_family, cov_family;

    CLI::App* analyze_cmd =
        app.add_subcommand("analyze", "analyze one sequence -> JSON report");
    analyze_cmd->add_option("input", input,
                            "sequence file holding exactly one sequence");
    analyze_family.attach(*analyze_cmd);
    analyze_cmd->add_option("--q-list", q_list, "single length q")
        ->delimiter(',');
    analyze_cmd->add_option("--alphas", alphas, "exponents (default 0,0.5,1,2,4)")
        ->delimiter(',');
    analyze_cmd->add_option("--out", out_path, "write JSON here instead of stdout");
    analyze_cmd->add_flag("--no-timestamp", no_timestamp,
                          "accepted for interface symmetry; analyze output "
                          "never carries a timestamp");

    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "sweep a family over (q, trial) -> CSV");
    sweep_family.attach(*sweep_cmd);
    sweep_family.name_option->required();
    sweep_cmd->add_option("--q-list", q_list, "ascending lengths")
        ->delimiter(',')
        ->required();
    sweep_cmd->add_option("--alphas", alphas, "exponents (default 0,0.5,1,2,4)")
        ->delimiter(',');
    sweep_cmd->add_option("--trials", trials, "trials per q (default 1)");
    sweep_cmd->add_option("--out", out_path, "write CSV here instead of stdout");
    sweep_cmd->add_flag("--no-timestamp", no_timestamp,
                        "suppress the generated: header line");

    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "run a canned experiment and report each check");
    verify_cmd
        ->add_option("id", verify_id, "main1, main2, main3, appendix, or all")
        ->required()
        ->check(CLI::IsMember({"main1", "main2", "main3", "appendix", "all"}));

    CLI::App* cov_cmd = app.add_subcommand(
        "covariance", "covariance diagnostics rows -> CSV");
    cov_cmd->add_option("input", input,
                        "sequence file (sign sequences are mapped to 0/1 "
                        "via T)");
    cov_family.attach(*cov_cmd);
    cov_cmd->add_option("--q-list", q_list, "lengths (family mode)")
        ->delimiter(',');
    cov_cmd->add_option("--trials", trials, "trials per q (default 1)");
    cov_cmd->add_flag("--oracle", oracle,
                      "brute-force quadrature check (q <= 64 only)");
    cov_cmd->add_option("--out", out_path, "write CSV here instead of stdout");
    cov_cmd->add_flag("--no-timestamp", no_timestamp,
                      "suppress the generated: header line");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze_cmd->parsed()) {
            if (input.empty() == !analyze_family.given()) {
                std::cerr << "analyze: pass a sequence file or --family, "
                             "not both\n";
                return 1;
            }
            return run_analyze(input, analyze_family, q_list, alphas,
                               out_path);
        }
        if (sweep_cmd->parsed())
            return run_sweep_cmd(sweep_family, q_list, alphas, trials,
                                 no_timestamp, out_path);
        if (verify_cmd->parsed()) return run_verify(verify_id);
        if (cov_cmd->parsed()) {
            if (input.empty() == !cov_family.given()) {
                std::cerr << "covariance: pass a sequence file or --family, "
                             "not both\n";
                return 1;
            }
            return run_covariance(input, cov_family, q_list, trials, oracle,
                                  no_timestamp, out_path);
        }
    } catch (const SequenceParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
