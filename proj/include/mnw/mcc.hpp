#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "mnw/corpus.hpp"
#include "mnw/labels.hpp"
#include "mnw/mnr.hpp"
#include "mnw/negsample.hpp"

namespace mnw {

// Desk-scale stand-in for the prompt-tuned encoder: a handful of lexical
// features of the presented name against the method's contexts.
struct FeatureVector {
    double overlap_f1 = 0.0;          // presented name vs body, multiset F1
    double class_overlap = 0.0;       // vs class name
    double sibling_max_sim = 0.0;     // best F1 against any sibling
    double first_token_in_body = 0.0; // 0/1
    double name_length = 0.0;         // token count
    double bias = 1.0;

    static constexpr size_t kCount = 6;
    std::array<double, kCount> values() const {
        return {overlap_f1, class_overlap, sibling_max_sim,
                first_token_in_body, name_length, bias};
    }
    static const std::array<std::string, kCount>& names();
};

FeatureVector extract_features(const MethodRecord& record,
                               const SubtokenSeq& presented_name);
FeatureVector extract_features(const LabeledExample& example);

struct ClassifierModel {
    std::vector<double> weights;  // one per feature
    std::string fitted_on;        // corpus digest
    double final_loss = 0.0;

    bool fitted() const { return weights.size() == FeatureVector::kCount; }

    // Versioned text format "mccmodel v1": one feature<TAB>weight per line.
    void save(const std::filesystem::path& path) const;
    static ClassifierModel load(const std::filesystem::path& path);
};

// Logistic model minimizing the mean true-or-false cross-entropy by
// full-batch gradient descent from a zero start. Gradients are accumulated
// with midpoint-pairwise summation, so the result is independent of example
// order up to floating-point association and exactly invariant under dataset
// duplication. Throws SingleClassData unless both labels are present.
ClassifierModel fit_classifier(const std::vector<LabeledExample>& examples,
                               int epochs, double learning_rate, uint64_t seed);

enum class MccStrategy { classification, generate_then_compare };

struct MccVerdict {
    ConsistencyLabel label = ConsistencyLabel::consistent;
    double score = 0.0;  // probability/confidence of "inconsistent"
    MccStrategy strategy = MccStrategy::classification;
};

// score = sigmoid(w . features); inconsistent iff score >= 0.5.
MccVerdict check_classification(const ClassifierModel& model,
                                const MethodRecord& record,
                                const SubtokenSeq& presented_name);

// Multiset subtoken F1 between the two names (symmetric, in [0,1]).
// Throws EmptyName when either sequence is empty.
double lexical_similarity(const SubtokenSeq& a, const SubtokenSeq& b);

using NameGenerator =
    std::function<std::vector<Candidate>(const MethodRecord&, int k)>;

// Prior-work strategy: generate a fresh top-1 name for the record's contexts
// and compare. score = 1 - similarity; inconsistent iff similarity < threshold.
MccVerdict check_generate_then_compare(const NameGenerator& generator,
                                       const MethodRecord& record,
                                       const SubtokenSeq& presented_name,
                                       double threshold);

}  // namespace mnw
