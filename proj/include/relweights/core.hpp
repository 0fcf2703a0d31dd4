#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace relweights {

enum class errc {
    negative_value,
    not_normalized,
    length_mismatch,
    index_set_mismatch,
    kind_mismatch,
    empty_corpus,
    empty_vocabulary,
    infeasible,
    unbounded,
    iteration_limit,
    budget_exceeded,
    unreadable_model,
    bad_input,
};

const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message);
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

/// Normalization tolerance accepted when validating a weight vector.
inline constexpr double kWeightSumTol = 1e-9;

/// An ordered set of distinct, non-empty labels. The order is stable and
/// defines coordinate indexing for every vector and matrix built on it.
/// Instances are immutable and shared by pointer.
class IndexSet {
public:
    static std::shared_ptr<const IndexSet> make(std::vector<std::string> labels);

    std::size_t size() const noexcept { return labels_.size(); }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::optional<std::size_t> find(const std::string& label) const;
    bool contains(const std::string& label) const { return find(label).has_value(); }

    bool operator==(const IndexSet& other) const { return labels_ == other.labels_; }

private:
    explicit IndexSet(std::vector<std::string> labels);

    std::vector<std::string> labels_;
    std::unordered_map<std::string, std::size_t> position_;
};

using IndexSetPtr = std::shared_ptr<const IndexSet>;

/// True when both sets are the same object or have identical label sequences.
bool same_index_set(const IndexSetPtr& a, const IndexSetPtr& b);

/// A finite nonnegative function on an index set. No normalization required.
class NonnegFunction {
public:
    NonnegFunction(IndexSetPtr domain, std::vector<double> values);

    const IndexSetPtr& domain() const noexcept { return domain_; }
    std::span<const double> values() const noexcept { return values_; }
    double operator[](std::size_t i) const { return values_.at(i); }
    std::size_t size() const noexcept { return values_.size(); }
    double l1_norm() const;

private:
    IndexSetPtr domain_;
    std::vector<double> values_;
};

/// A probability weight: nonnegative values summing to 1 (within kWeightSumTol
/// at construction). Immutable.
class WeightVector {
public:
    WeightVector(IndexSetPtr domain, std::vector<double> values);

    /// Divides by the computed sum so downstream invariants hold exactly.
    /// Values must be nonnegative with a strictly positive sum.
    static WeightVector renormalized(IndexSetPtr domain, std::vector<double> values);

    const IndexSetPtr& domain() const noexcept { return fn_.domain(); }
    std::span<const double> values() const noexcept { return fn_.values(); }
    double operator[](std::size_t i) const { return fn_[i]; }
    std::size_t size() const noexcept { return fn_.size(); }
    const NonnegFunction& as_function() const noexcept { return fn_; }

    /// Indices with value strictly above `threshold`.
    std::vector<std::size_t> support(double threshold = 0.0) const;

private:
    explicit WeightVector(NonnegFunction fn) : fn_(std::move(fn)) {}
    NonnegFunction fn_;
};

/// make_weight in operation form; equivalent to the validating constructor.
WeightVector make_weight(IndexSetPtr domain, std::vector<double> values);

/// Bilinear pairing Sum_v x(v) m(v). Both arguments must share an index set.
double pairing(const NonnegFunction& x, const NonnegFunction& m);
double pairing(const WeightVector& x, const NonnegFunction& m);
double pairing(const NonnegFunction& x, const WeightVector& m);
double pairing(const WeightVector& x, const WeightVector& m);

/// A finite set M of nonnegative functions on a common domain V, stored as a
/// dense row-major |M| x |V| matrix: one row per member, one column per
/// domain element.
class FunctionSet {
public:
    FunctionSet(IndexSetPtr domain, IndexSetPtr members, std::vector<double> row_major);

    const IndexSetPtr& domain() const noexcept { return domain_; }
    const IndexSetPtr& members() const noexcept { return members_; }
    std::size_t domain_size() const noexcept { return domain_->size(); }
    std::size_t num_members() const noexcept { return members_->size(); }

    double at(std::size_t member, std::size_t v) const;
    std::span<const double> row(std::size_t member) const;
    const std::vector<double>& data() const noexcept { return data_; }

    /// Row `member` as a function on V.
    NonnegFunction member_function(std::size_t member) const;
    /// Column `v` as a function on M (the hat construction: m -> m(v)).
    NonnegFunction column_function(std::size_t v) const;

    double max_entry() const;
    /// Mean L1 norm of the member rows.
    double mean_member_norm() const;

private:
    IndexSetPtr domain_;
    IndexSetPtr members_;
    std::vector<double> data_;
};

/// Role swap: domain and members trade places, entries v_hat(m) = m(v).
/// Exact involution (bit-identical entries).
FunctionSet transpose(const FunctionSet& set);

}  // namespace relweights
