#include "mnw/eval.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace mnw {

namespace {

size_t multiset_matches(const SubtokenSeq& a, const SubtokenSeq& b) {
    std::map<std::string, size_t> counts;
    for (const auto& t : a) ++counts[t];
    size_t matches = 0;
    for (const auto& t : b) {
        auto it = counts.find(t);
        if (it != counts.end() && it->second > 0) {
            --it->second;
            ++matches;
        }
    }
    return matches;
}

double f1_of(double p, double r) {
    return p + r > 0.0 ? 2.0 * p * r / (p + r) : 0.0;
}

PrfScores prf_from_confusion(size_t tp, size_t fp, size_t fn) {
    PrfScores s;
    s.precision = tp + fp > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fp) : 0.0;
    s.recall = tp + fn > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fn) : 0.0;
    s.f1 = f1_of(s.precision, s.recall);
    return s;
}

double normal_sf_times_two(double z) {
    // two-sided p for a statistic z standard deviations below the mean
    return std::erfc(-z / std::sqrt(2.0));
}

// Midranks of |differences|; also returns the tie-group sizes.
std::vector<double> midranks(const std::vector<double>& diffs,
                             std::vector<size_t>& tie_sizes) {
    const size_t n = diffs.size();
    std::vector<size_t> order(n);
    for (size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return std::fabs(diffs[a]) < std::fabs(diffs[b]);
    });

    std::vector<double> ranks(n, 0.0);
    size_t i = 0;
    while (i < n) {
        size_t j = i;
        while (j + 1 < n &&
               std::fabs(diffs[order[j + 1]]) == std::fabs(diffs[order[i]])) {
            ++j;
        }
        const double rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        tie_sizes.push_back(j - i + 1);
        for (size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
        i = j + 1;
    }
    return ranks;
}

// Exact two-sided p = min(1, 2 * P(T <= W)) where T is the sum of ranks
// assigned '+' under the null. Computed by a subset-sum count over doubled
// ranks (doubling makes midranks integral), which enumerates the same
// distribution as walking all 2^n sign assignments.
double exact_p_value(const std::vector<double>& ranks, double w) {
    std::vector<uint64_t> doubled(ranks.size());
    uint64_t total = 0;
    for (size_t i = 0; i < ranks.size(); ++i) {
        doubled[i] = static_cast<uint64_t>(std::llround(2.0 * ranks[i]));
        total += doubled[i];
    }
    const uint64_t threshold = static_cast<uint64_t>(std::floor(2.0 * w + 1e-9));

    std::vector<double> count(total + 1, 0.0);
    count[0] = 1.0;
    for (uint64_t r : doubled) {
        for (uint64_t s = total; s >= r; --s) {
            count[s] += count[s - r];
        }
    }
    double below = 0.0;
    for (uint64_t s = 0; s <= std::min(threshold, total); ++s) below += count[s];
    const double assignments = std::pow(2.0, static_cast<double>(ranks.size()));
    return std::min(1.0, 2.0 * below / assignments);
}

double normal_p_value(const std::vector<double>& ranks,
                      const std::vector<size_t>& tie_sizes, double w) {
    const double n = static_cast<double>(ranks.size());
    const double mu = n * (n + 1.0) / 4.0;
    double sigma2 = n * (n + 1.0) * (2.0 * n + 1.0) / 24.0;
    for (size_t t : tie_sizes) {
        const double td = static_cast<double>(t);
        sigma2 -= (td * td * td - td) / 48.0;
    }
    if (sigma2 <= 0.0) return 1.0;  // every difference tied at one magnitude
    const double z = (w - mu + 0.5) / std::sqrt(sigma2);
    return std::min(1.0, normal_sf_times_two(z));
}

}  // namespace

PrfScores prf(const SubtokenSeq& pred, const SubtokenSeq& gold) {
    if (gold.empty()) throw EmptyGold("prf: gold sequence is empty");
    const size_t matches = multiset_matches(pred, gold);
    PrfScores s;
    s.precision = pred.empty()
                      ? 0.0
                      : static_cast<double>(matches) / static_cast<double>(pred.size());
    s.recall = static_cast<double>(matches) / static_cast<double>(gold.size());
    s.f1 = f1_of(s.precision, s.recall);
    return s;
}

bool exact_match(const SubtokenSeq& pred, const SubtokenSeq& gold) {
    return pred == gold;
}

MccMetrics mcc_metrics(
    const std::vector<std::pair<ConsistencyLabel, ConsistencyLabel>>& predicted_gold) {
    if (predicted_gold.empty()) throw EmptyInput("mcc_metrics: no verdicts");

    size_t tp = 0, fp = 0, fn = 0, tn = 0;  // inconsistent as positive
    for (const auto& [pred, gold] : predicted_gold) {
        const bool p = pred == ConsistencyLabel::inconsistent;
        const bool g = gold == ConsistencyLabel::inconsistent;
        if (p && g) ++tp;
        else if (p && !g) ++fp;
        else if (!p && g) ++fn;
        else ++tn;
    }

    MccMetrics m;
    m.inconsistent = prf_from_confusion(tp, fp, fn);
    m.consistent = prf_from_confusion(tn, fn, fp);
    m.total = predicted_gold.size();
    m.accuracy = static_cast<double>(tp + tn) / static_cast<double>(m.total);
    return m;
}

WilcoxonResult wilcoxon_signed_rank(
    const std::vector<std::pair<double, double>>& pairs, WilcoxonMethod method) {
    if (pairs.empty()) throw EmptyInput("wilcoxon_signed_rank: no pairs");

    std::vector<double> diffs;
    diffs.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
        const double d = a - b;
        if (d != 0.0) diffs.push_back(d);
    }

    WilcoxonResult result;
    result.n_nonzero = diffs.size();
    if (diffs.empty()) {
        result.p_value = 1.0;  // all differences zero: no evidence either way
        return result;
    }

    std::vector<size_t> tie_sizes;
    const std::vector<double> ranks = midranks(diffs, tie_sizes);

    double w_plus = 0.0, w_minus = 0.0;
    for (size_t i = 0; i < diffs.size(); ++i) {
        (diffs[i] > 0.0 ? w_plus : w_minus) += ranks[i];
    }
    result.statistic = std::min(w_plus, w_minus);

    const bool use_exact =
        method == WilcoxonMethod::exact ||
        (method == WilcoxonMethod::automatic && diffs.size() <= 20);
    result.p_value = use_exact
                         ? exact_p_value(ranks, result.statistic)
                         : normal_p_value(ranks, tie_sizes, result.statistic);
    return result;
}

LengthBlock length_analysis(const std::vector<SubtokenSeq>& preds,
                            const std::vector<SubtokenSeq>& golds) {
    if (preds.size() != golds.size()) {
        throw LengthMismatch("length_analysis: " + std::to_string(preds.size()) +
                             " predictions vs " + std::to_string(golds.size()) +
                             " golds");
    }

    LengthBlock block;
    block.buckets.assign(8, LengthBucket{});
    std::vector<std::pair<double, double>> length_pairs;
    length_pairs.reserve(preds.size());

    for (size_t i = 0; i < preds.size(); ++i) {
        const size_t gold_len = golds[i].size();
        const size_t bucket = gold_len == 0 ? 0 : std::min<size_t>(gold_len, 8) - 1;
        auto& b = block.buckets[bucket];
        ++b.count;
        if (exact_match(preds[i], golds[i])) ++b.exact;
        ++block.pred_length_histogram[preds[i].size()];
        ++block.gold_length_histogram[gold_len];
        length_pairs.emplace_back(static_cast<double>(preds[i].size()),
                                  static_cast<double>(gold_len));
    }
    for (auto& b : block.buckets) {
        b.em_rate = b.count > 0
                        ? static_cast<double>(b.exact) / static_cast<double>(b.count)
                        : 0.0;
    }
    block.length_test = wilcoxon_signed_rank(length_pairs);
    return block;
}

EvalReport evaluate_names(const std::vector<SubtokenSeq>& preds,
                          const std::vector<SubtokenSeq>& golds) {
    if (preds.size() != golds.size()) {
        throw LengthMismatch("evaluate_names: list sizes differ");
    }
    if (preds.empty()) throw EmptyInput("evaluate_names: nothing to score");

    EvalReport report;
    report.per_example.reserve(preds.size());
    size_t exact = 0;
    for (size_t i = 0; i < preds.size(); ++i) {
        const PrfScores s = prf(preds[i], golds[i]);
        const bool em = exact_match(preds[i], golds[i]);
        if (em) ++exact;
        report.mean_precision += s.precision;
        report.mean_recall += s.recall;
        report.mean_f1 += s.f1;
        report.per_example.emplace_back(s, em);
    }
    const double n = static_cast<double>(preds.size());
    report.mean_precision /= n;
    report.mean_recall /= n;
    report.mean_f1 /= n;
    report.em_rate = static_cast<double>(exact) / n;
    report.length_block = length_analysis(preds, golds);
    return report;
}

}  // namespace mnw
