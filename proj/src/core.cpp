#include "relweights/core.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace relweights {

const char* errc_name(errc code) noexcept {
    switch (code) {
        case errc::negative_value: return "NegativeValue";
        case errc::not_normalized: return "NotNormalized";
        case errc::length_mismatch: return "LengthMismatch";
        case errc::index_set_mismatch: return "IndexSetMismatch";
        case errc::kind_mismatch: return "KindMismatch";
        case errc::empty_corpus: return "EmptyCorpus";
        case errc::empty_vocabulary: return "EmptyVocabulary";
        case errc::infeasible: return "Infeasible";
        case errc::unbounded: return "Unbounded";
        case errc::iteration_limit: return "IterationLimit";
        case errc::budget_exceeded: return "BudgetExceeded";
        case errc::unreadable_model: return "UnreadableModel";
        case errc::bad_input: return "BadInput";
    }
    return "Unknown";
}

Error::Error(errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

IndexSet::IndexSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    position_.reserve(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        position_.emplace(labels_[i], i);
    }
}

std::shared_ptr<const IndexSet> IndexSet::make(std::vector<std::string> labels) {
    if (labels.empty()) {
        throw Error(errc::bad_input, "index set must have at least one label");
    }
    for (const auto& label : labels) {
        if (label.empty()) {
            throw Error(errc::bad_input, "index set labels must be non-empty");
        }
    }
    auto set = std::shared_ptr<IndexSet>(new IndexSet(std::move(labels)));
    if (set->position_.size() != set->labels_.size()) {
        throw Error(errc::bad_input, "index set labels must be unique");
    }
    return set;
}

std::optional<std::size_t> IndexSet::find(const std::string& label) const {
    auto it = position_.find(label);
    if (it == position_.end()) return std::nullopt;
    return it->second;
}

bool same_index_set(const IndexSetPtr& a, const IndexSetPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

namespace {

void check_values(const IndexSetPtr& domain, const std::vector<double>& values) {
    if (!domain) {
        throw Error(errc::bad_input, "null index set");
    }
    if (values.size() != domain->size()) {
        throw Error(errc::length_mismatch, "expected " + std::to_string(domain->size()) +
                                               " values, got " + std::to_string(values.size()));
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i])) {
            throw Error(errc::bad_input, "non-finite value at '" + domain->label(i) + "'");
        }
        if (values[i] < 0.0) {
            throw Error(errc::negative_value, "negative value at '" + domain->label(i) + "'");
        }
    }
}

}  // namespace

NonnegFunction::NonnegFunction(IndexSetPtr domain, std::vector<double> values)
    : domain_(std::move(domain)), values_(std::move(values)) {
    check_values(domain_, values_);
}

double NonnegFunction::l1_norm() const {
    double sum = 0.0;
    for (double v : values_) sum += v;
    return sum;
}

WeightVector::WeightVector(IndexSetPtr domain, std::vector<double> values)
    : fn_(std::move(domain), std::move(values)) {
    const double sum = fn_.l1_norm();
    if (std::abs(sum - 1.0) > kWeightSumTol) {
        throw Error(errc::not_normalized, "values sum to " + std::to_string(sum));
    }
}

WeightVector WeightVector::renormalized(IndexSetPtr domain, std::vector<double> values) {
    NonnegFunction fn(std::move(domain), std::move(values));
    const double sum = fn.l1_norm();
    if (sum <= 0.0) {
        throw Error(errc::not_normalized, "cannot normalize a zero vector");
    }
    std::vector<double> scaled(fn.values().begin(), fn.values().end());
    for (double& v : scaled) v /= sum;
    return WeightVector(NonnegFunction(fn.domain(), std::move(scaled)));
}

std::vector<std::size_t> WeightVector::support(double threshold) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i) {
        if (fn_[i] > threshold) out.push_back(i);
    }
    return out;
}

WeightVector make_weight(IndexSetPtr domain, std::vector<double> values) {
    return WeightVector(std::move(domain), std::move(values));
}

namespace {

double pairing_impl(const IndexSetPtr& da, std::span<const double> a, const IndexSetPtr& db,
                    std::span<const double> b) {
    if (!same_index_set(da, db)) {
        throw Error(errc::index_set_mismatch, "pairing requires a shared index set");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
    return sum;
}

}  // namespace

double pairing(const NonnegFunction& x, const NonnegFunction& m) {
    return pairing_impl(x.domain(), x.values(), m.domain(), m.values());
}
double pairing(const WeightVector& x, const NonnegFunction& m) {
    return pairing_impl(x.domain(), x.values(), m.domain(), m.values());
}
double pairing(const NonnegFunction& x, const WeightVector& m) {
    return pairing_impl(x.domain(), x.values(), m.domain(), m.values());
}
double pairing(const WeightVector& x, const WeightVector& m) {
    return pairing_impl(x.domain(), x.values(), m.domain(), m.values());
}

FunctionSet::FunctionSet(IndexSetPtr domain, IndexSetPtr members, std::vector<double> row_major)
    : domain_(std::move(domain)), members_(std::move(members)), data_(std::move(row_major)) {
    if (!domain_ || !members_) {
        throw Error(errc::bad_input, "null index set");
    }
    if (data_.size() != domain_->size() * members_->size()) {
        throw Error(errc::length_mismatch,
                    "matrix has " + std::to_string(data_.size()) + " entries, expected " +
                        std::to_string(domain_->size() * members_->size()));
    }
    for (double v : data_) {
        if (!std::isfinite(v)) throw Error(errc::bad_input, "non-finite matrix entry");
        if (v < 0.0) throw Error(errc::negative_value, "negative matrix entry");
    }
}

double FunctionSet::at(std::size_t member, std::size_t v) const {
    if (member >= num_members() || v >= domain_size()) {
        throw Error(errc::bad_input, "matrix index out of range");
    }
    return data_[member * domain_size() + v];
}

std::span<const double> FunctionSet::row(std::size_t member) const {
    if (member >= num_members()) {
        throw Error(errc::bad_input, "member index out of range");
    }
    return std::span<const double>(data_).subspan(member * domain_size(), domain_size());
}

NonnegFunction FunctionSet::member_function(std::size_t member) const {
    auto r = row(member);
    return NonnegFunction(domain_, std::vector<double>(r.begin(), r.end()));
}

NonnegFunction FunctionSet::column_function(std::size_t v) const {
    if (v >= domain_size()) {
        throw Error(errc::bad_input, "domain index out of range");
    }
    std::vector<double> col(num_members());
    for (std::size_t i = 0; i < num_members(); ++i) col[i] = data_[i * domain_size() + v];
    return NonnegFunction(members_, std::move(col));
}

double FunctionSet::max_entry() const {
    double best = 0.0;
    for (double v : data_) best = std::max(best, v);
    return best;
}

double FunctionSet::mean_member_norm() const {
    double total = 0.0;
    for (double v : data_) total += v;
    return total / static_cast<double>(num_members());
}

FunctionSet transpose(const FunctionSet& set) {
    const std::size_t rows = set.num_members();
    const std::size_t cols = set.domain_size();
    std::vector<double> data(rows * cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            data[j * rows + i] = set.data()[i * cols + j];
        }
    }
    return FunctionSet(set.members(), set.domain(), std::move(data));
}

}  // namespace relweights
