#include "relweights/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "relweights/model_io.hpp"
#include "relweights/random_instances.hpp"
#include "relweights/relevance.hpp"
#include "relweights/simplex.hpp"

namespace relweights {

namespace {

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case errc::iteration_limit:
            return kExitSolverLimit;
        case errc::empty_corpus:
        case errc::empty_vocabulary:
        case errc::unreadable_model:
        case errc::bad_input:
        case errc::length_mismatch:
        case errc::negative_value:
            return kExitInputError;
        default:
            return kExitVerifyFailed;
    }
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(errc::bad_input, "cannot read " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fmt(double v) {
    nlohmann::json j = v;  // shortest exact decimal
    return j.dump();
}

struct ScoredItem {
    std::string item_id;
    RelevanceReport report;
    double dropped_mass = 0.0;
};

void print_score_text(std::ostream& out, const ScoredItem& item) {
    out << "item: " << item.item_id << "\n"
        << "  corpus:        " << item.report.corpus_id << "\n"
        << "  r:             " << fmt(item.report.r) << "\n"
        << "  s:             " << fmt(item.report.s) << "\n"
        << "  alpha_support: " << fmt(item.report.alpha_support) << "\n"
        << "  alpha_cover:   " << fmt(item.report.alpha_cover) << "\n"
        << "  relevant:      " << (item.report.relevant ? "yes" : "no") << "\n"
        << "  margin:        " << fmt(item.report.margin) << "\n"
        << "  scale:         " << fmt(item.report.scale) << "\n"
        << "  dropped_mass:  " << fmt(item.dropped_mass) << "\n";
}

void print_score_json(std::ostream& out, const ScoredItem& item) {
    nlohmann::ordered_json j;
    j["item"] = item.item_id;
    j["corpus_id"] = item.report.corpus_id;
    j["r"] = item.report.r;
    j["s"] = item.report.s;
    j["alpha_support"] = item.report.alpha_support;
    j["alpha_cover"] = item.report.alpha_cover;
    j["relevant"] = item.report.relevant;
    j["margin"] = item.report.margin;
    j["scale"] = item.report.scale;
    j["dropped_mass"] = item.dropped_mass;
    out << j.dump() << "\n";
}

struct InstanceCheck {
    bool ok = true;
    double gap = 0.0;
    double gap_covering = 0.0;
    double max_violation = 0.0;
    std::ostringstream notes;
};

InstanceCheck check_instance(const FunctionSet& set, const std::optional<OracleHooks>& oracle) {
    InstanceCheck check;
    const DualityReport report = verify_theorem3(set);
    check.gap = report.gap;
    check.gap_covering = report.gap_covering;
    check.max_violation = report.max_violation;
    if (!report.within(kDualityGapTol, kSlacknessTol)) {
        check.ok = false;
        for (const auto& v : report.slackness_violations) {
            check.notes << "  slackness violation " << v.label << " residual " << fmt(v.residual)
                        << "\n";
        }
        if (report.gap > kDualityGapTol || report.gap_covering > kDualityGapTol) {
            check.notes << "  duality gap " << fmt(report.gap) << " / "
                        << fmt(report.gap_covering) << " exceeds " << fmt(kDualityGapTol) << "\n";
        }
    }
    if (oracle && set.domain_size() <= 8 && set.num_members() <= 8) {
        const auto [alpha_max, x_max] = oracle->maxmin(set);
        const auto [alpha_min, x_min] = oracle->minimax(set);
        const double d_support = std::abs(alpha_max - report.alpha_primal);
        const double d_cover = std::abs(alpha_min - report.alpha_covering);
        check.max_violation = std::max({check.max_violation, d_support, d_cover});
        if (d_support > kOracleMatchTol || d_cover > kOracleMatchTol) {
            check.ok = false;
            check.notes << "  oracle mismatch: supporting " << fmt(d_support) << ", covering "
                        << fmt(d_cover) << "\n";
        }
    }
    return check;
}

}  // namespace

int cmd_build(const BuildOptions& options, std::ostream& out, std::ostream& err) {
    try {
        if (!std::filesystem::is_directory(options.corpus_dir)) {
            throw Error(errc::bad_input,
                        options.corpus_dir.string() + " is not a directory");
        }
        std::vector<std::filesystem::path> files;
        for (const auto& entry : std::filesystem::directory_iterator(options.corpus_dir)) {
            if (entry.is_regular_file() && entry.path().extension() == ".txt") {
                files.push_back(entry.path());
            }
        }
        std::sort(files.begin(), files.end());
        std::vector<std::pair<std::string, std::string>> docs;
        for (const auto& f : files) {
            docs.emplace_back(f.filename().string(), read_file(f));
        }
        const std::string corpus_id =
            options.id.empty() ? options.corpus_dir.filename().string() : options.id;
        CorpusBundle bundle = build_bundle(corpus_id, docs, options.tokenizer);

        const WeightSolution support = supporting_weight(bundle.functions);
        const WeightSolution cover = covering_weight(bundle.functions);
        const DualityReport duality = verify_theorem3(bundle.functions);
        const SupportReport sparsity = support_report(support, bundle);

        Provenance provenance{utc_timestamp(), fnv1a_hex(docs)};
        WeightModel model = make_model(bundle, support, cover, options.tokenizer, provenance);
        const std::filesystem::path out_path =
            options.out.empty() ? std::filesystem::path(corpus_id + ".model.json") : options.out;
        save_model(model, out_path);

        out << "corpus:        " << corpus_id << " (" << bundle.functions.num_members()
            << " docs, " << bundle.vocabulary->size() << " terms)\n"
            << "alpha_support: " << fmt(support.alpha) << "\n"
            << "alpha_cover:   " << fmt(cover.alpha) << "\n"
            << "duality gaps:  " << fmt(duality.gap) << " / " << fmt(duality.gap_covering) << "\n"
            << "max violation: " << fmt(duality.max_violation) << "\n"
            << "support size:  " << sparsity.support_size << " ("
            << fmt(sparsity.support_fraction) << " of vocabulary)\n"
            << "model:         " << out_path.string() << "\n";

        if (duality.max_violation > kBuildMaxViolation) {
            err << "verification failed: max violation " << fmt(duality.max_violation) << " > "
                << fmt(kBuildMaxViolation) << "\n";
            return kExitVerifyFailed;
        }
        return kExitOk;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return exit_code_for(e);
    }
}

int cmd_score(const ScoreOptions& options, std::ostream& out, std::ostream& err) {
    try {
        const WeightModel model = load_model(options.model);
        const auto vocab = model_vocabulary(model);
        const WeightSolution support = model_supporting_solution(model);
        const WeightSolution cover = model_covering_solution(model);

        std::vector<ScoredItem> items;
        if (options.text) {
            const auto bag = bag_of(tokenize(read_file(*options.text), model.tokenizer));
            Projection proj = project(bag, vocab);
            items.push_back({options.text->filename().string(),
                             classify(proj.function, support, cover, model.corpus_id,
                                      options.normalize),
                             proj.dropped_mass});
        } else if (options.matrix) {
            const FunctionSet rows = read_matrix_tsv(*options.matrix);
            for (std::size_t i = 0; i < rows.num_members(); ++i) {
                std::map<std::string, double> bag;
                auto row = rows.row(i);
                for (std::size_t j = 0; j < row.size(); ++j) {
                    if (row[j] != 0.0) bag[rows.domain()->label(j)] = row[j];
                }
                Projection proj = project(bag, vocab);
                items.push_back({rows.members()->label(i),
                                 classify(proj.function, support, cover, model.corpus_id,
                                          options.normalize),
                                 proj.dropped_mass});
            }
        } else {
            throw Error(errc::bad_input, "score needs a text file or --matrix");
        }
        for (const auto& item : items) {
            if (options.json) {
                print_score_json(out, item);
            } else {
                print_score_text(out, item);
            }
        }
        return kExitOk;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return exit_code_for(e);
    }
}

int cmd_classify(const ClassifyOptions& options, std::ostream& out, std::ostream& err) {
    if (options.models.empty()) {
        err << "classify needs at least one model\n";
        return kExitInputError;
    }
    std::string text;
    try {
        text = read_file(options.text);
    } catch (const Error& e) {
        err << e.what() << "\n";
        return kExitInputError;
    }

    std::vector<CorpusScoringInput> inputs;
    std::vector<std::pair<std::string, double>> dropped;  // corpus_id -> OOV mass
    for (const auto& path : options.models) {
        try {
            const WeightModel model = load_model(path);
            const auto vocab = model_vocabulary(model);
            Projection proj = project(bag_of(tokenize(text, model.tokenizer)), vocab);
            inputs.push_back({model.corpus_id, std::move(proj.function),
                              model_supporting_solution(model), model_covering_solution(model)});
            dropped.emplace_back(model.corpus_id, proj.dropped_mass);
        } catch (const Error& e) {
            err << path.string() << ": " << e.what() << "\n";
        }
    }
    if (inputs.empty()) {
        err << "no loadable models\n";
        return kExitInputError;
    }

    const MultiClassifyResult result = multi_classify(inputs, options.normalize);
    for (const auto& [corpus_id, message] : result.errors) {
        err << corpus_id << ": " << message << "\n";
    }
    out << "rank\tcorpus\trelevant\tr\talpha_support\tratio\tdropped_mass\n";
    for (std::size_t i = 0; i < result.ranking.size(); ++i) {
        const auto& rep = result.ranking[i];
        const double ratio = rep.alpha_support > 0.0 ? rep.r / rep.alpha_support : rep.r;
        double oov = 0.0;
        for (const auto& [corpus_id, mass] : dropped) {
            if (corpus_id == rep.corpus_id) oov = mass;
        }
        out << (i + 1) << '\t' << rep.corpus_id << '\t' << (rep.relevant ? "yes" : "no") << '\t'
            << fmt(rep.r) << '\t' << fmt(rep.alpha_support) << '\t' << fmt(ratio) << '\t'
            << fmt(oov) << "\n";
    }
    return kExitOk;
}

int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err) {
    try {
        bool all_ok = true;
        double worst = 0.0;
        int checked = 0;
        auto run_one = [&](const std::string& name, const FunctionSet& set) {
            const InstanceCheck check = check_instance(set, options.oracle);
            ++checked;
            worst = std::max(worst, check.max_violation);
            if (!check.ok) {
                all_ok = false;
                out << name << ": FAIL\n" << check.notes.str();
            }
            return check;
        };

        if (options.matrix) {
            const FunctionSet set = read_matrix_tsv(*options.matrix);
            const InstanceCheck check = run_one(options.matrix->string(), set);
            out << "duality gaps: " << fmt(check.gap) << " / " << fmt(check.gap_covering) << "\n";
            if (!options.oracle || set.domain_size() > 8 || set.num_members() > 8) {
                out << "oracle comparison skipped (" << set.num_members() << "x"
                    << set.domain_size() << ")\n";
            }
        }
        if (options.random_count > 0) {
            Rng rng(options.seed);
            for (int i = 0; i < options.random_count; ++i) {
                const FunctionSet set = random_function_set(rng, options.rows, options.cols);
                run_one("random[" + std::to_string(i) + "]", set);
            }
        }
        if (checked == 0) {
            throw Error(errc::bad_input, "verify needs a matrix file or --random N");
        }
        out << "instances checked: " << checked << "\n"
            << "max violation:     " << fmt(worst) << "\n"
            << "result:            " << (all_ok ? "PASS" : "FAIL") << "\n";
        return all_ok ? kExitOk : kExitVerifyFailed;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return exit_code_for(e);
    }
}

}  // namespace relweights
