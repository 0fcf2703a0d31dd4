#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "relweights/core.hpp"
#include "relweights/corpus.hpp"
#include "relweights/weights.hpp"

namespace relweights {

inline constexpr int kModelFormatVersion = 1;
/// Loaded weight maps must re-sum to 1 within this tolerance.
inline constexpr double kModelSumTol = 1e-8;

struct Provenance {
    std::string created_utc;
    std::string input_digest;  // FNV-1a over doc ids and contents
};

/// Self-contained scoring model: everything cmd_score/cmd_classify need
/// without the original corpus. Weight maps hold nonzero entries only, so
/// file size grows with the support and member count, not the vocabulary.
struct WeightModel {
    int format_version = kModelFormatVersion;
    std::string corpus_id;
    std::vector<std::string> vocabulary;
    double alpha_support = 0.0;
    double alpha_cover = 0.0;
    std::map<std::string, double> supporting_weights;  // term -> weight
    std::map<std::string, double> covering_weights;
    std::map<std::string, double> dual_supporting;  // doc_id -> weight
    std::map<std::string, double> dual_covering;
    double mean_member_norm = 0.0;
    TokenizerConfig tokenizer;
    Provenance provenance;
};

WeightModel make_model(const CorpusBundle& bundle, const WeightSolution& support,
                       const WeightSolution& cover, const TokenizerConfig& tokenizer,
                       Provenance provenance);

/// JSON with exact-round-trip reals: every stored double reloads bit-identical.
void save_model(const WeightModel& model, const std::filesystem::path& path);

/// Throws Error(errc::unreadable_model) on parse failures, unknown format
/// versions, or weight maps that fail to re-sum to 1 within kModelSumTol.
WeightModel load_model(const std::filesystem::path& path);

/// Rehydrates weight solutions for scoring. Tight sets are not stored; the
/// returned solutions carry empty ones.
WeightSolution model_supporting_solution(const WeightModel& model);
WeightSolution model_covering_solution(const WeightModel& model);
IndexSetPtr model_vocabulary(const WeightModel& model);

/// Matrix interchange format: tab-separated, header row `doc_id<TAB>term...`,
/// one labeled row per member, nonnegative real entries.
FunctionSet read_matrix_tsv(const std::filesystem::path& path);
void write_matrix_tsv(const FunctionSet& set, const std::filesystem::path& path);

std::string fnv1a_hex(const std::vector<std::pair<std::string, std::string>>& docs);
std::string utc_timestamp();

}  // namespace relweights
