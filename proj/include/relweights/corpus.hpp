#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "relweights/core.hpp"
#include "relweights/weights.hpp"

namespace relweights {

/// Mechanical tokenization: tokens are contiguous runs of letters/digits
/// (bytes >= 0x80 count as letters so UTF-8 sequences stay intact),
/// everything else separates. Deterministic by construction.
struct TokenizerConfig {
    bool lowercase = true;          // ASCII A-Z only
    std::size_t min_token_length = 2;
    std::set<std::string> stopwords;  // dropped after lowercasing; empty = none
};

std::vector<std::string> tokenize(std::string_view text, const TokenizerConfig& config);

/// A corpus as a function set: one member per document, entries are raw term
/// counts. The vocabulary is the sorted union of surviving tokens, so it has
/// no zero columns.
struct CorpusBundle {
    std::string corpus_id;
    IndexSetPtr vocabulary;  // V
    FunctionSet functions;   // rows labeled by doc_id
};

/// Builds a bundle from (doc_id, text) pairs. Throws EmptyCorpus with no
/// documents and EmptyVocabulary when no token survives filtering.
CorpusBundle build_bundle(std::string corpus_id,
                          const std::vector<std::pair<std::string, std::string>>& docs,
                          const TokenizerConfig& config);

/// The frequency baseline: weight(v) = count of v across the corpus divided
/// by the total count of all terms.
WeightVector frequency_weight(const CorpusBundle& bundle);

struct Projection {
    NonnegFunction function;
    double dropped_mass = 0.0;  // total count of out-of-vocabulary terms
};

/// Restricts a term-count bag to a vocabulary; out-of-vocabulary counts are
/// dropped and reported. A fully out-of-vocabulary bag projects to zero.
Projection project(const std::map<std::string, double>& bag, const IndexSetPtr& vocabulary);

/// Counts a token list into a bag, for feeding project().
std::map<std::string, double> bag_of(const std::vector<std::string>& tokens);

struct SupportReport {
    std::size_t support_size = 0;   // terms with weight > 1e-8
    double support_fraction = 0.0;  // support_size / |V|
    std::vector<std::pair<std::string, double>> top_terms;  // descending weight
};

/// Sparsity report for a solved weight against its corpus. support_size never
/// exceeds the number of documents: at a basic optimum the nonzero weight
/// coordinates fit in the basis together with the slacks and alpha.
SupportReport support_report(const WeightSolution& w, const CorpusBundle& bundle);

}  // namespace relweights
