#include "relweights/relevance.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace relweights {

namespace {

void require_kind(const WeightSolution& w, WeightKind kind) {
    if (w.kind != kind) {
        throw Error(errc::kind_mismatch,
                    std::string("expected a ") + weight_kind_name(kind) + " weight solution");
    }
}

}  // namespace

double relevance_score(const NonnegFunction& f, const WeightSolution& w) {
    require_kind(w, WeightKind::supporting);
    return pairing(f, w.primal);
}

double irrelevance_score(const NonnegFunction& f, const WeightSolution& w) {
    require_kind(w, WeightKind::covering);
    return pairing(f, w.primal);
}

RelevanceReport classify(const NonnegFunction& f, const WeightSolution& support_w,
                         const WeightSolution& cover_w, std::string corpus_id, bool normalize) {
    require_kind(support_w, WeightKind::supporting);
    require_kind(cover_w, WeightKind::covering);
    if (!same_index_set(support_w.primal.domain(), cover_w.primal.domain()) ||
        !same_index_set(f.domain(), support_w.primal.domain())) {
        throw Error(errc::index_set_mismatch, "function and weights live on different domains");
    }

    double scale = 1.0;
    if (normalize) {
        const double norm = f.l1_norm();
        if (norm > 0.0 && support_w.mean_member_norm > 0.0) {
            scale = support_w.mean_member_norm / norm;
        }
    }

    RelevanceReport report;
    report.corpus_id = std::move(corpus_id);
    report.scale = scale;
    report.r = scale * pairing(f, support_w.primal);
    report.s = scale * pairing(f, cover_w.primal);
    report.alpha_support = support_w.alpha;
    report.alpha_cover = cover_w.alpha;
    report.relevant = report.r >= report.alpha_support - kRelevanceDecisionTol;
    report.margin = report.r - report.alpha_support;
    return report;
}

MultiClassifyResult multi_classify(const std::vector<CorpusScoringInput>& inputs,
                                   bool normalize) {
    MultiClassifyResult result;
    for (const auto& input : inputs) {
        try {
            result.ranking.push_back(
                classify(input.f, input.support, input.cover, input.corpus_id, normalize));
        } catch (const Error& e) {
            result.errors.emplace_back(input.corpus_id, e.what());
        }
    }
    auto rank_key = [](const RelevanceReport& rep) {
        return rep.alpha_support > 0.0 ? rep.r / rep.alpha_support : rep.r;
    };
    std::sort(result.ranking.begin(), result.ranking.end(),
              [&](const RelevanceReport& a, const RelevanceReport& b) {
                  const double ka = rank_key(a);
                  const double kb = rank_key(b);
                  if (ka != kb) return ka > kb;
                  return a.corpus_id < b.corpus_id;
              });
    return result;
}

}  // namespace relweights
