#include <cctype>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mcdm/io.hpp"

namespace {

struct CommonOptions {
    std::string input;
    std::string output;
    std::string format = "plain";
    bool full_precision = false;
};

void add_common_flags(CLI::App* cmd, CommonOptions& options) {
    cmd->add_option("--input", options.input,
                    "CSV matrix file (default: bundled reference dataset)");
    cmd->add_option("--output", options.output, "Write the report here (default: stdout)");
    cmd->add_option("--format", options.format, "Report format")
        ->check(CLI::IsMember({"plain", "csv", "structured"}));
    cmd->add_flag("--full-precision", options.full_precision,
                  "Show full-precision values instead of 4 decimals");
}

mcdm::ReportFormat to_format(const std::string& name) {
    if (name == "csv") return mcdm::ReportFormat::DelimitedValues;
    if (name == "structured") return mcdm::ReportFormat::StructuredText;
    return mcdm::ReportFormat::PlainTable;
}

std::string lowercase(std::string text) {
    for (char& c : text) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return text;
}

mcdm::WeightMethod to_weight_method(const std::string& name) {
    const std::string t = lowercase(name);
    if (t == "equal") return mcdm::WeightMethod::Equal;
    if (t == "entropy") return mcdm::WeightMethod::Entropy;
    if (t == "merec") return mcdm::WeightMethod::Merec;
    if (t == "lopcow") return mcdm::WeightMethod::Lopcow;
    if (t == "spc") return mcdm::WeightMethod::Spc;
    throw mcdm::Error(mcdm::ErrorCode::ParseError,
                      "unknown weighting method \"" + name +
                          "\" (use equal, entropy, merec, lopcow, or spc)");
}

mcdm::RankingMethod to_ranking_method(const std::string& name) {
    const std::string t = lowercase(name);
    if (t == "probability") return mcdm::RankingMethod::Probability;
    if (t == "topsis") return mcdm::RankingMethod::Topsis;
    if (t == "ram") return mcdm::RankingMethod::Ram;
    throw mcdm::Error(mcdm::ErrorCode::ParseError,
                      "unknown ranking method \"" + name +
                          "\" (use probability, topsis, or ram)");
}

mcdm::DecisionMatrix load_matrix(const CommonOptions& options) {
    if (options.input.empty()) return mcdm::load_reference_dataset();
    return mcdm::parse_matrix_file(options.input);
}

int run_with_output(const CommonOptions& options,
                    const std::function<void(std::ostream&)>& emit) {
    if (options.output.empty()) {
        emit(std::cout);
        return 0;
    }
    std::ofstream file(options.output);
    if (!file) {
        throw mcdm::Error(mcdm::ErrorCode::WriteFailure,
                          "cannot open output file: " + options.output);
    }
    emit(file);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multi-criteria decision analysis: objective weighting, ranking, and "
                 "rank-stability studies"};
    app.require_subcommand(1);

    CommonOptions weights_options;
    std::string weights_method;
    bool weights_all = false;
    CLI::App* weights_cmd =
        app.add_subcommand("weights", "Compute criteria weights from a decision matrix");
    weights_cmd->add_option("--method", weights_method,
                            "Weighting method: equal, entropy, merec, lopcow, spc");
    CLI::Option* all_flag =
        weights_cmd->add_flag("--all", weights_all, "Compute all five weighting methods");
    weights_cmd->get_option("--method")->excludes(all_flag);
    add_common_flags(weights_cmd, weights_options);

    CommonOptions rank_options;
    std::string rank_weighting;
    std::string rank_method;
    CLI::App* rank_cmd =
        app.add_subcommand("rank", "Score and rank alternatives with one method combination");
    rank_cmd->add_option("--weighting", rank_weighting,
                         "Weighting method: equal, entropy, merec, lopcow, spc")
        ->required();
    rank_cmd->add_option("--method", rank_method, "Ranking method: probability, topsis, ram")
        ->required();
    add_common_flags(rank_cmd, rank_options);

    CommonOptions study_options;
    CLI::App* study_cmd = app.add_subcommand(
        "study", "Run the full 5x3 weighting/ranking cross-product with stability metrics");
    add_common_flags(study_cmd, study_options);

    CommonOptions dataset_options;
    CLI::App* dataset_cmd =
        app.add_subcommand("dataset", "Print the bundled reference decision matrix");
    add_common_flags(dataset_cmd, dataset_options);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (weights_cmd->parsed()) {
            const mcdm::DecisionMatrix matrix = load_matrix(weights_options);
            std::vector<mcdm::WeightVector> rows;
            if (!weights_method.empty()) {
                rows.push_back(mcdm::compute_weights(to_weight_method(weights_method), matrix));
            } else {
                for (mcdm::WeightMethod method : mcdm::kStudyWeightMethods) {
                    rows.push_back(mcdm::compute_weights(method, matrix));
                }
            }
            return run_with_output(weights_options, [&](std::ostream& out) {
                mcdm::emit_weights(rows, matrix.criterion_names(), to_format(weights_options.format),
                                   out, weights_options.full_precision);
            });
        }

        if (rank_cmd->parsed()) {
            const mcdm::DecisionMatrix matrix = load_matrix(rank_options);
            const mcdm::WeightVector weights =
                mcdm::compute_weights(to_weight_method(rank_weighting), matrix);
            const mcdm::ScoreTable table =
                mcdm::compute_scores(to_ranking_method(rank_method), matrix, weights);
            return run_with_output(rank_options, [&](std::ostream& out) {
                mcdm::emit_score_table(table, matrix.alternatives(), to_format(rank_options.format),
                                       out, rank_options.full_precision);
            });
        }

        if (study_cmd->parsed()) {
            const mcdm::DecisionMatrix matrix = load_matrix(study_options);
            const mcdm::StudyReport report = mcdm::run_study(matrix);
            return run_with_output(study_options, [&](std::ostream& out) {
                mcdm::emit_study(report, matrix.alternatives(), matrix.criterion_names(),
                                 to_format(study_options.format), out,
                                 study_options.full_precision);
            });
        }

        const mcdm::DecisionMatrix matrix = load_matrix(dataset_options);
        return run_with_output(dataset_options, [&](std::ostream& out) {
            mcdm::emit_matrix(matrix, to_format(dataset_options.format), out,
                              dataset_options.full_precision);
        });
    } catch (const mcdm::Error& e) {
        std::cerr << "error (" << mcdm::error_code_name(e.code()) << "): " << e.what() << '\n';
        return e.is_input_error() ? 2 : 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}
