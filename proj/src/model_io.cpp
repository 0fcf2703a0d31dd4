#include "relweights/model_io.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>
#include <string_view>
#include <utility>

#include "json.hpp"

namespace relweights {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json weight_map_json(const std::map<std::string, double>& m) {
    ordered_json out = ordered_json::object();
    for (const auto& [k, v] : m) out[k] = v;
    return out;
}

std::map<std::string, double> weight_map_from_json(const ordered_json& j, const char* field) {
    if (!j.is_object()) {
        throw Error(errc::unreadable_model, std::string(field) + " must be an object");
    }
    std::map<std::string, double> out;
    for (const auto& [k, v] : j.items()) out[k] = v.get<double>();
    return out;
}

void check_sums_to_one(const std::map<std::string, double>& m, const char* field) {
    double sum = 0.0;
    for (const auto& [k, v] : m) {
        (void)k;
        if (!(v >= 0.0) || !std::isfinite(v)) {
            throw Error(errc::unreadable_model, std::string(field) + " has an invalid weight");
        }
        sum += v;
    }
    if (std::abs(sum - 1.0) > kModelSumTol) {
        throw Error(errc::unreadable_model,
                    std::string(field) + " re-sums to " + std::to_string(sum));
    }
}

std::map<std::string, double> nonzero_entries(const WeightVector& w) {
    std::map<std::string, double> out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] != 0.0) out[w.domain()->label(i)] = w[i];
    }
    return out;
}

WeightVector weights_from_map(const IndexSetPtr& domain, const std::map<std::string, double>& m,
                              const char* field) {
    std::vector<double> values(domain->size(), 0.0);
    for (const auto& [label, value] : m) {
        auto pos = domain->find(label);
        if (!pos) {
            throw Error(errc::unreadable_model,
                        std::string(field) + " references unknown label '" + label + "'");
        }
        values[*pos] = value;
    }
    return WeightVector::renormalized(domain, std::move(values));
}

}  // namespace

WeightModel make_model(const CorpusBundle& bundle, const WeightSolution& support,
                       const WeightSolution& cover, const TokenizerConfig& tokenizer,
                       Provenance provenance) {
    WeightModel model;
    model.corpus_id = bundle.corpus_id;
    model.vocabulary = bundle.vocabulary->labels();
    model.alpha_support = support.alpha;
    model.alpha_cover = cover.alpha;
    model.supporting_weights = nonzero_entries(support.primal);
    model.covering_weights = nonzero_entries(cover.primal);
    model.dual_supporting = nonzero_entries(support.dual);
    model.dual_covering = nonzero_entries(cover.dual);
    model.mean_member_norm = support.mean_member_norm;
    model.tokenizer = tokenizer;
    model.provenance = std::move(provenance);
    return model;
}

void save_model(const WeightModel& model, const std::filesystem::path& path) {
    ordered_json j;
    j["format_version"] = model.format_version;
    j["corpus_id"] = model.corpus_id;
    j["vocabulary"] = model.vocabulary;
    j["alpha_support"] = model.alpha_support;
    j["alpha_cover"] = model.alpha_cover;
    j["supporting_weights"] = weight_map_json(model.supporting_weights);
    j["covering_weights"] = weight_map_json(model.covering_weights);
    j["dual_supporting"] = weight_map_json(model.dual_supporting);
    j["dual_covering"] = weight_map_json(model.dual_covering);
    j["mean_member_norm"] = model.mean_member_norm;
    j["tokenizer"] = {{"lowercase", model.tokenizer.lowercase},
                      {"min_token_length", model.tokenizer.min_token_length},
                      {"stopwords", model.tokenizer.stopwords}};
    j["provenance"] = {{"created_utc", model.provenance.created_utc},
                       {"input_digest", model.provenance.input_digest}};
    std::ofstream out(path);
    if (!out) {
        throw Error(errc::bad_input, "cannot write model file " + path.string());
    }
    out << j.dump(2) << '\n';
}

WeightModel load_model(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(errc::unreadable_model, "cannot open model file " + path.string());
    }
    ordered_json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw Error(errc::unreadable_model, path.string() + ": " + e.what());
    }
    WeightModel model;
    try {
        model.format_version = j.at("format_version").get<int>();
        if (model.format_version != kModelFormatVersion) {
            throw Error(errc::unreadable_model,
                        "unsupported format_version " + std::to_string(model.format_version));
        }
        model.corpus_id = j.at("corpus_id").get<std::string>();
        model.vocabulary = j.at("vocabulary").get<std::vector<std::string>>();
        model.alpha_support = j.at("alpha_support").get<double>();
        model.alpha_cover = j.at("alpha_cover").get<double>();
        model.supporting_weights =
            weight_map_from_json(j.at("supporting_weights"), "supporting_weights");
        model.covering_weights = weight_map_from_json(j.at("covering_weights"), "covering_weights");
        model.dual_supporting = weight_map_from_json(j.at("dual_supporting"), "dual_supporting");
        model.dual_covering = weight_map_from_json(j.at("dual_covering"), "dual_covering");
        model.mean_member_norm = j.at("mean_member_norm").get<double>();
        const auto& tok = j.at("tokenizer");
        model.tokenizer.lowercase = tok.at("lowercase").get<bool>();
        model.tokenizer.min_token_length = tok.at("min_token_length").get<std::size_t>();
        model.tokenizer.stopwords = tok.at("stopwords").get<std::set<std::string>>();
        const auto& prov = j.at("provenance");
        model.provenance.created_utc = prov.at("created_utc").get<std::string>();
        model.provenance.input_digest = prov.at("input_digest").get<std::string>();
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw Error(errc::unreadable_model, path.string() + ": " + e.what());
    }
    if (model.vocabulary.empty()) {
        throw Error(errc::unreadable_model, "empty vocabulary");
    }
    check_sums_to_one(model.supporting_weights, "supporting_weights");
    check_sums_to_one(model.covering_weights, "covering_weights");
    check_sums_to_one(model.dual_supporting, "dual_supporting");
    check_sums_to_one(model.dual_covering, "dual_covering");
    return model;
}

IndexSetPtr model_vocabulary(const WeightModel& model) {
    return IndexSet::make(model.vocabulary);
}

WeightSolution model_supporting_solution(const WeightModel& model) {
    auto vocab = model_vocabulary(model);
    auto docs = IndexSet::make([&] {
        std::vector<std::string> ids;
        for (const auto& [id, v] : model.dual_supporting) {
            (void)v;
            ids.push_back(id);
        }
        return ids;
    }());
    return WeightSolution{WeightKind::supporting,
                          model.alpha_support,
                          weights_from_map(vocab, model.supporting_weights, "supporting_weights"),
                          weights_from_map(docs, model.dual_supporting, "dual_supporting"),
                          {},
                          {},
                          model.mean_member_norm,
                          0};
}

WeightSolution model_covering_solution(const WeightModel& model) {
    auto vocab = model_vocabulary(model);
    auto docs = IndexSet::make([&] {
        std::vector<std::string> ids;
        for (const auto& [id, v] : model.dual_covering) {
            (void)v;
            ids.push_back(id);
        }
        return ids;
    }());
    return WeightSolution{WeightKind::covering,
                          model.alpha_cover,
                          weights_from_map(vocab, model.covering_weights, "covering_weights"),
                          weights_from_map(docs, model.dual_covering, "dual_covering"),
                          {},
                          {},
                          model.mean_member_norm,
                          0};
}

FunctionSet read_matrix_tsv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(errc::bad_input, "cannot open matrix file " + path.string());
    }
    auto split = [](const std::string& line) {
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ss(line);
        while (std::getline(ss, cell, '\t')) cells.push_back(cell);
        return cells;
    };
    std::string line;
    if (!std::getline(in, line)) {
        throw Error(errc::bad_input, "matrix file is empty");
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto header = split(line);
    if (header.size() < 2) {
        throw Error(errc::bad_input, "matrix header needs doc_id plus at least one term");
    }
    std::vector<std::string> terms(header.begin() + 1, header.end());

    std::vector<std::string> doc_ids;
    std::vector<double> data;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto cells = split(line);
        if (cells.size() != terms.size() + 1) {
            throw Error(errc::bad_input, "matrix row '" + cells.front() + "' has " +
                                             std::to_string(cells.size() - 1) + " entries, expected " +
                                             std::to_string(terms.size()));
        }
        doc_ids.push_back(cells.front());
        for (std::size_t j = 1; j < cells.size(); ++j) {
            try {
                data.push_back(std::stod(cells[j]));
            } catch (const std::exception&) {
                throw Error(errc::bad_input, "bad matrix entry '" + cells[j] + "'");
            }
        }
    }
    if (doc_ids.empty()) {
        throw Error(errc::bad_input, "matrix file has no rows");
    }
    return FunctionSet(IndexSet::make(std::move(terms)), IndexSet::make(std::move(doc_ids)),
                       std::move(data));
}

void write_matrix_tsv(const FunctionSet& set, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw Error(errc::bad_input, "cannot write matrix file " + path.string());
    }
    ordered_json cell;  // reuse the JSON double printer for round-trip-exact reals
    out << "doc_id";
    for (const auto& term : set.domain()->labels()) out << '\t' << term;
    out << '\n';
    for (std::size_t i = 0; i < set.num_members(); ++i) {
        out << set.members()->label(i);
        for (double v : set.row(i)) {
            cell = v;
            out << '\t' << cell.dump();
        }
        out << '\n';
    }
}

std::string fnv1a_hex(const std::vector<std::pair<std::string, std::string>>& docs) {
    std::uint64_t hash = 1469598103934665603ull;
    auto mix = [&hash](std::string_view s) {
        for (unsigned char c : s) {
            hash ^= c;
            hash *= 1099511628211ull;
        }
        hash ^= 0xff;
        hash *= 1099511628211ull;
    };
    for (const auto& [id, text] : docs) {
        mix(id);
        mix(text);
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

std::string utc_timestamp() {
    std::time_t now = std::time(nullptr);
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

}  // namespace relweights
