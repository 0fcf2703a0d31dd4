#pragma once

#include <string>
#include <vector>

#include "relweights/core.hpp"
#include "relweights/weights.hpp"

namespace relweights {

/// Scores for one function against one corpus's weights, plus the decision.
/// `relevant` holds exactly when r >= alpha_support - 1e-12. The scores are
/// computed after the optional rescaling, which `scale` records (1.0 when
/// normalization is off or f is zero).
struct RelevanceReport {
    std::string corpus_id;
    double r = 0.0;  // pairing with the supporting weight
    double s = 0.0;  // pairing with the covering weight
    double alpha_support = 0.0;
    double alpha_cover = 0.0;
    bool relevant = false;
    double margin = 0.0;  // r - alpha_support
    double scale = 1.0;
};

inline constexpr double kRelevanceDecisionTol = 1e-12;

/// Sum_v f(v) x(v) against a supporting weight. Homogeneous in f; the
/// decision rule compares it with the fixed threshold alpha_support, so the
/// raw score is scale-sensitive by design.
double relevance_score(const NonnegFunction& f, const WeightSolution& w);

/// The covering-weight counterpart; decreases as relevance grows.
double irrelevance_score(const NonnegFunction& f, const WeightSolution& w);

/// Scores f against a supporting/covering pair built from the same set.
/// With `normalize` set, f is first rescaled so its L1 norm equals the mean
/// member norm recorded in the solutions, making differently sized inputs
/// comparable; the factor is recorded in the report.
RelevanceReport classify(const NonnegFunction& f, const WeightSolution& support_w,
                         const WeightSolution& cover_w, std::string corpus_id, bool normalize);

/// One corpus's weights plus the test function already projected onto that
/// corpus's vocabulary.
struct CorpusScoringInput {
    std::string corpus_id;
    NonnegFunction f;
    WeightSolution support;
    WeightSolution cover;
};

struct MultiClassifyResult {
    std::vector<RelevanceReport> ranking;
    std::vector<std::pair<std::string, std::string>> errors;  // (corpus_id, message)
};

/// Classifies against every corpus and ranks by r / alpha_support descending
/// (raw r where alpha_support is zero), ties broken by corpus_id. Per-corpus
/// failures are collected, not thrown.
MultiClassifyResult multi_classify(const std::vector<CorpusScoringInput>& inputs,
                                   bool normalize = false);

}  // namespace relweights
