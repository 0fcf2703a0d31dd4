#include "relweights/corpus.hpp"

#include <algorithm>
#include <utility>

namespace relweights {

std::vector<std::string> tokenize(std::string_view text, const TokenizerConfig& config) {
    if (config.min_token_length < 1) {
        throw Error(errc::bad_input, "min_token_length must be at least 1");
    }
    auto is_token_char = [](unsigned char c) {
        return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
               c >= 0x80;
    };
    std::vector<std::string> tokens;
    std::string current;
    auto flush = [&] {
        if (current.size() >= config.min_token_length && !config.stopwords.count(current)) {
            tokens.push_back(current);
        }
        current.clear();
    };
    for (unsigned char c : text) {
        if (is_token_char(c)) {
            if (config.lowercase && c >= 'A' && c <= 'Z') c = static_cast<unsigned char>(c + 32);
            current.push_back(static_cast<char>(c));
        } else if (!current.empty()) {
            flush();
        }
    }
    if (!current.empty()) flush();
    return tokens;
}

CorpusBundle build_bundle(std::string corpus_id,
                          const std::vector<std::pair<std::string, std::string>>& docs,
                          const TokenizerConfig& config) {
    if (docs.empty()) {
        throw Error(errc::empty_corpus, "corpus '" + corpus_id + "' has no documents");
    }
    std::vector<std::map<std::string, double>> counts;
    counts.reserve(docs.size());
    std::set<std::string> terms;
    for (const auto& [doc_id, text] : docs) {
        auto bag = bag_of(tokenize(text, config));
        for (const auto& [term, count] : bag) {
            (void)count;
            terms.insert(term);
        }
        counts.push_back(std::move(bag));
    }
    if (terms.empty()) {
        throw Error(errc::empty_vocabulary,
                    "no token of corpus '" + corpus_id + "' survived filtering");
    }

    auto vocabulary = IndexSet::make({terms.begin(), terms.end()});
    std::vector<std::string> doc_ids;
    doc_ids.reserve(docs.size());
    for (const auto& [doc_id, text] : docs) {
        (void)text;
        doc_ids.push_back(doc_id);
    }
    auto members = IndexSet::make(std::move(doc_ids));

    std::vector<double> matrix(members->size() * vocabulary->size(), 0.0);
    for (std::size_t i = 0; i < counts.size(); ++i) {
        for (const auto& [term, count] : counts[i]) {
            matrix[i * vocabulary->size() + *vocabulary->find(term)] = count;
        }
    }
    return CorpusBundle{std::move(corpus_id), vocabulary,
                        FunctionSet(vocabulary, std::move(members), std::move(matrix))};
}

WeightVector frequency_weight(const CorpusBundle& bundle) {
    const auto& set = bundle.functions;
    std::vector<double> totals(set.domain_size(), 0.0);
    for (std::size_t i = 0; i < set.num_members(); ++i) {
        auto row = set.row(i);
        for (std::size_t j = 0; j < row.size(); ++j) totals[j] += row[j];
    }
    return WeightVector::renormalized(bundle.vocabulary, std::move(totals));
}

std::map<std::string, double> bag_of(const std::vector<std::string>& tokens) {
    std::map<std::string, double> bag;
    for (const auto& token : tokens) bag[token] += 1.0;
    return bag;
}

Projection project(const std::map<std::string, double>& bag, const IndexSetPtr& vocabulary) {
    std::vector<double> values(vocabulary->size(), 0.0);
    double dropped = 0.0;
    for (const auto& [term, count] : bag) {
        if (count < 0.0) {
            throw Error(errc::negative_value, "negative count for term '" + term + "'");
        }
        if (auto pos = vocabulary->find(term)) {
            values[*pos] += count;
        } else {
            dropped += count;
        }
    }
    return Projection{NonnegFunction(vocabulary, std::move(values)), dropped};
}

SupportReport support_report(const WeightSolution& w, const CorpusBundle& bundle) {
    if (!same_index_set(w.primal.domain(), bundle.vocabulary)) {
        throw Error(errc::index_set_mismatch,
                    "weight solution was not built from this corpus's vocabulary");
    }
    SupportReport report;
    for (std::size_t v = 0; v < w.primal.size(); ++v) {
        if (w.primal[v] > kSupportTol) {
            report.top_terms.emplace_back(bundle.vocabulary->label(v), w.primal[v]);
        }
    }
    std::sort(report.top_terms.begin(), report.top_terms.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    report.support_size = report.top_terms.size();
    report.support_fraction =
        static_cast<double>(report.support_size) / static_cast<double>(bundle.vocabulary->size());
    return report;
}

}  // namespace relweights
