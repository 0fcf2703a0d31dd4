#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "relweights/core.hpp"
#include "relweights/corpus.hpp"

namespace relweights {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitSolverLimit = 3;

/// Verification gate applied by cmd_build before a model is accepted.
inline constexpr double kBuildMaxViolation = 1e-6;
/// Oracle agreement tolerance used by cmd_verify on small instances.
inline constexpr double kOracleMatchTol = 1e-6;

struct BuildOptions {
    std::filesystem::path corpus_dir;
    std::string id;  // defaults to the directory name
    std::filesystem::path out;  // defaults to <id>.model.json
    TokenizerConfig tokenizer;
};

struct ScoreOptions {
    std::filesystem::path model;
    std::optional<std::filesystem::path> text;    // UTF-8 document
    std::optional<std::filesystem::path> matrix;  // TSV, one report per row
    bool normalize = false;
    bool json = false;  // one JSON record per line instead of the text block
};

struct ClassifyOptions {
    std::vector<std::filesystem::path> models;
    std::filesystem::path text;
    bool normalize = false;
};

/// The verify command cross-checks the duality structure on a TSV matrix or
/// on seeded random instances. Oracle hooks are optional so release builds
/// of the CLI can link without the enumeration oracle.
struct OracleHooks {
    std::function<std::pair<double, WeightVector>(const FunctionSet&)> maxmin;
    std::function<std::pair<double, WeightVector>(const FunctionSet&)> minimax;
};

struct VerifyOptions {
    std::optional<std::filesystem::path> matrix;
    int random_count = 0;
    std::size_t rows = 6;
    std::size_t cols = 6;
    std::uint64_t seed = 42;
    std::optional<OracleHooks> oracle;
};

/// Builds a bundle from a directory of .txt files (doc_id = filename), solves
/// both problems, verifies the duality structure, and writes the model.
/// Returns 2 on input errors, 3 on solver iteration limits, 1 when the
/// verification max violation exceeds kBuildMaxViolation.
int cmd_build(const BuildOptions& options, std::ostream& out, std::ostream& err);

int cmd_score(const ScoreOptions& options, std::ostream& out, std::ostream& err);

/// Ranks every loadable model against the document; unloadable models are
/// reported on `err` and skipped.
int cmd_classify(const ClassifyOptions& options, std::ostream& out, std::ostream& err);

/// Exit 0 iff every checked instance meets the duality, slackness, and (when
/// hooks are present and dimensions fit the budget) oracle tolerances.
int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);

}  // namespace relweights
