#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "mnw/labels.hpp"
#include "mnw/tokenize.hpp"

namespace mnw {

struct PrfScores {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

// Multiset subtoken precision/recall/F1. Matches are counted with multiset
// intersection, so repeated subtokens are not over-credited. Precision is 0
// when pred is empty; gold must be non-empty (EmptyGold otherwise).
PrfScores prf(const SubtokenSeq& pred, const SubtokenSeq& gold);

// True iff the sequences are equal element-wise, in order.
bool exact_match(const SubtokenSeq& pred, const SubtokenSeq& gold);

struct MccMetrics {
    PrfScores inconsistent;  // inconsistent treated as the positive class
    PrfScores consistent;    // consistent treated as the positive class
    double accuracy = 0.0;
    size_t total = 0;
};

// Per-class P/R/F1 plus overall accuracy from (predicted, gold) label pairs.
// Throws EmptyInput on an empty list.
MccMetrics mcc_metrics(
    const std::vector<std::pair<ConsistencyLabel, ConsistencyLabel>>& predicted_gold);

enum class WilcoxonMethod {
    automatic,      // exact for n <= 20 nonzero differences, else normal
    exact,          // enumeration of sign assignments
    normal_approx,  // with tie and continuity corrections
};

struct WilcoxonResult {
    double statistic = 0.0;  // W = min(W+, W-)
    double p_value = 1.0;
    size_t n_nonzero = 0;    // differences left after dropping zeros
};

// Two-sided Wilcoxon signed-rank test on paired samples. Zero differences
// are dropped; |differences| are ranked with midrank ties. All-zero input
// returns p = 1.0; an empty list is EmptyInput.
WilcoxonResult wilcoxon_signed_rank(
    const std::vector<std::pair<double, double>>& pairs,
    WilcoxonMethod method = WilcoxonMethod::automatic);

struct LengthBucket {
    size_t count = 0;
    size_t exact = 0;
    double em_rate = 0.0;
};

struct LengthBlock {
    // Buckets by gold name length 1..7 and 8+ (index 0 is length 1).
    std::vector<LengthBucket> buckets;
    std::map<size_t, size_t> pred_length_histogram;
    std::map<size_t, size_t> gold_length_histogram;
    WilcoxonResult length_test;  // paired (pred length, gold length)
};

// Exact-match rates bucketed by gold name length plus length histograms and
// the signed-rank test on paired lengths. Lists must be the same size.
LengthBlock length_analysis(const std::vector<SubtokenSeq>& preds,
                            const std::vector<SubtokenSeq>& golds);

struct EvalReport {
    std::vector<std::pair<PrfScores, bool>> per_example;
    double mean_precision = 0.0;
    double mean_recall = 0.0;
    double mean_f1 = 0.0;
    double em_rate = 0.0;
    std::optional<MccMetrics> mcc_block;
    std::optional<LengthBlock> length_block;
};

// Macro-averaged report over (pred, gold) name pairs, with the length block
// filled in. Gold names must be non-empty.
EvalReport evaluate_names(const std::vector<SubtokenSeq>& preds,
                          const std::vector<SubtokenSeq>& golds);

}  // namespace mnw
