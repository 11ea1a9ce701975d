#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "mnw/backend.hpp"
#include "mnw/corpus.hpp"
#include "mnw/eval.hpp"
#include "mnw/java_extract.hpp"
#include "mnw/mcc.hpp"
#include "mnw/mnr.hpp"
#include "mnw/negsample.hpp"
#include "mnw/quality.hpp"

namespace mnw {

// The three-step check workflow: extract contexts, verdict every method,
// recommend candidates for the methods flagged inconsistent.
struct CheckOptions {
    std::filesystem::path root;
    std::filesystem::path model_path;   // required for classification
    MccStrategy strategy = MccStrategy::classification;
    double threshold = 0.5;             // generate-then-compare similarity
    int k = 10;
    uint64_t seed = 17;
    std::string backend_command;        // empty: native retrieval generator
    int64_t backend_timeout_ms = 10000;
    unsigned jobs = 0;
    PromptTemplate tpl = PromptTemplate::standard();
};

struct ScoredCandidate {
    SubtokenSeq name;
    double score = 0.0;
    int quality = 0;
};

struct FlaggedMethod {
    std::string path;
    std::pair<size_t, size_t> span{0, 0};
    std::string current_name;
    MccVerdict verdict;
    std::vector<ScoredCandidate> candidates;
};

struct NamingReport {
    std::string root;
    std::string strategy;
    size_t methods_checked = 0;
    size_t consistent = 0;
    size_t inconsistent = 0;
    std::vector<FlaggedMethod> flagged;   // ordered by (path, span)
    std::vector<std::string> failures;    // skipped files/methods
};

NamingReport run_check(const CheckOptions& options,
                       const DiagnosticSink& diag = stderr_diagnostics());

std::string render_report_text(const NamingReport& report);
std::string render_report_json(const NamingReport& report);

// Method name recommendation evaluation: top-1 candidates scored against the
// gold names, plus name-quality summaries of predictions and golds.
struct MnrEvaluation {
    EvalReport report;
    QualitySummary pred_quality;
    QualitySummary gold_quality;
};

MnrEvaluation evaluate_generator(const std::vector<MethodRecord>& corpus,
                                 const NameGenerator& generator);

// Consistency-checking evaluation over a labeled dataset.
MccMetrics evaluate_classification(const std::vector<LabeledExample>& dataset,
                                   const ClassifierModel& model);
MccMetrics evaluate_generate_then_compare(const std::vector<LabeledExample>& dataset,
                                          const NameGenerator& generator,
                                          double threshold);

std::string render_mnr_text(const MnrEvaluation& eval);
std::string render_mnr_json(const MnrEvaluation& eval);
std::string render_mcc_text(const MccMetrics& metrics);
std::string render_mcc_json(const MccMetrics& metrics);

// Retrieval-backed generator over an immutable index (self-match excluded
// by recommend_retrieval).
NameGenerator retrieval_generator(const RetrievalIndex& index);

}  // namespace mnw
