#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "relweights/cli.hpp"

#ifdef RELWEIGHTS_WITH_ORACLE
#include "relweights/oracle.hpp"
#endif

namespace {

relweights::TokenizerConfig load_tokenizer(bool lowercase, std::size_t min_token_length,
                                           const std::string& stopwords_file) {
    relweights::TokenizerConfig config;
    config.lowercase = lowercase;
    config.min_token_length = min_token_length;
    if (!stopwords_file.empty()) {
        std::ifstream in(stopwords_file);
        if (!in) {
            throw relweights::Error(relweights::errc::bad_input,
                                    "cannot read stopword file " + stopwords_file);
        }
        std::string word;
        while (std::getline(in, word)) {
            while (!word.empty() && (word.back() == '\r' || word.back() == ' ')) word.pop_back();
            if (!word.empty()) config.stopwords.insert(word);
        }
    }
    return config;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"supporting/covering weight construction and relevance scoring"};
    app.require_subcommand(1);

    // build
    auto* build = app.add_subcommand("build", "build a weight model from a directory of .txt files");
    std::string corpus_dir, build_id, build_out, stopwords_file;
    bool lowercase = true;
    std::size_t min_token_length = 2;
    build->add_option("corpus_dir", corpus_dir, "directory of UTF-8 .txt documents")->required();
    build->add_option("--id", build_id, "corpus identifier (default: directory name)");
    build->add_option("--out", build_out, "output model path (default: <id>.model.json)");
    build->add_flag("--lowercase,!--no-lowercase", lowercase, "lowercase ASCII letters (default on)");
    build->add_option("--min-token-length", min_token_length, "minimum token length (default 2)");
    build->add_option("--stopwords", stopwords_file, "file with one stopword per line");

    // score
    auto* score = app.add_subcommand("score", "score a document or matrix rows against a model");
    std::string score_model, score_text, score_matrix;
    bool normalize = false, json_output = false;
    score->add_option("model", score_model, "model file")->required();
    score->add_option("text", score_text, "document to score");
    score->add_option("--matrix", score_matrix, "TSV matrix; scores every row");
    score->add_flag("--normalize", normalize, "rescale input to the mean member norm");
    score->add_flag("--json", json_output, "one JSON record per scored item");

    // classify
    auto* classify = app.add_subcommand("classify", "rank corpora by relevance to a document");
    std::vector<std::string> model_paths;
    std::string classify_text;
    bool classify_normalize = false;
    classify->add_option("models", model_paths, "model files")->required()->expected(-1);
    classify->add_option("--text", classify_text, "document to classify")->required();
    classify->add_flag("--normalize", classify_normalize, "rescale input per corpus");

    // verify
    auto* verify = app.add_subcommand("verify", "check duality and slackness on a matrix or random instances");
    std::string verify_matrix;
    int random_count = 0;
    std::size_t rows = 6, cols = 6;
    std::uint64_t seed = 42;
    verify->add_option("matrix", verify_matrix, "TSV matrix file");
    verify->add_option("--random", random_count, "number of random instances");
    verify->add_option("--rows", rows, "max members per random instance (default 6)");
    verify->add_option("--cols", cols, "max domain size per random instance (default 6)");
    verify->add_option("--seed", seed, "random seed (default 42)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*build) {
            relweights::BuildOptions options;
            options.corpus_dir = corpus_dir;
            options.id = build_id;
            options.out = build_out;
            options.tokenizer = load_tokenizer(lowercase, min_token_length, stopwords_file);
            return relweights::cmd_build(options, std::cout, std::cerr);
        }
        if (*score) {
            relweights::ScoreOptions options;
            options.model = score_model;
            if (!score_text.empty()) options.text = score_text;
            if (!score_matrix.empty()) options.matrix = score_matrix;
            options.normalize = normalize;
            options.json = json_output;
            return relweights::cmd_score(options, std::cout, std::cerr);
        }
        if (*classify) {
            relweights::ClassifyOptions options;
            options.models.assign(model_paths.begin(), model_paths.end());
            options.text = classify_text;
            options.normalize = classify_normalize;
            return relweights::cmd_classify(options, std::cout, std::cerr);
        }
        if (*verify) {
            relweights::VerifyOptions options;
            if (!verify_matrix.empty()) options.matrix = verify_matrix;
            options.random_count = random_count;
            options.rows = rows;
            options.cols = cols;
            options.seed = seed;
#ifdef RELWEIGHTS_WITH_ORACLE
            relweights::OracleHooks hooks;
            hooks.maxmin = [](const relweights::FunctionSet& set) {
                auto res = relweights::oracle_maxmin(set);
                return std::make_pair(res.alpha, std::move(res.x));
            };
            hooks.minimax = [](const relweights::FunctionSet& set) {
                auto res = relweights::oracle_minimax(set);
                return std::make_pair(res.alpha, std::move(res.x));
            };
            options.oracle = std::move(hooks);
#endif
            return relweights::cmd_verify(options, std::cout, std::cerr);
        }
    } catch (const relweights::Error& e) {
        std::cerr << e.what() << "\n";
        return relweights::kExitInputError;
    }
    return relweights::kExitInputError;
}
