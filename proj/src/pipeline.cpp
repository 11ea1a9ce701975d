#include "mnw/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <memory>
#include <mutex>
#include <thread>

#include <nlohmann/json.hpp>

#include "mnw/error.hpp"

namespace mnw {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt4(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

void parallel_for(size_t n, unsigned jobs, const std::function<void(size_t)>& fn) {
    unsigned workers = jobs != 0 ? jobs : std::thread::hardware_concurrency();
    if (workers > n) workers = static_cast<unsigned>(n);
    if (workers <= 1) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

ordered_json prf_json(const PrfScores& s) {
    return ordered_json{{"precision", s.precision},
                        {"recall", s.recall},
                        {"f1", s.f1}};
}

ordered_json quality_json(const QualitySummary& q) {
    ordered_json j;
    j["mean"] = q.mean;
    j["excellent_share"] = q.excellent_share;
    j["count"] = q.count;
    j["histogram"] = q.histogram;
    return j;
}

}  // namespace

NameGenerator retrieval_generator(const RetrievalIndex& index) {
    return [&index](const MethodRecord& record, int k) {
        return recommend_retrieval(index, record, k);
    };
}

NamingReport run_check(const CheckOptions& options, const DiagnosticSink& diag) {
    NamingReport report;
    report.root = options.root.generic_string();
    report.strategy = options.strategy == MccStrategy::classification
                          ? "classification"
                          : "generate_then_compare";

    std::mutex failures_mutex;
    auto note_failure = [&](const std::string& line) {
        std::lock_guard<std::mutex> lock(failures_mutex);
        report.failures.push_back(line);
            };

    // Step 1: extract contexts.
    const std::vector<RawMethod> raws = scan_project(options.root, diag, options.jobs);
    std::vector<MethodRecord> records;
    std::vector<std::string> original_names;
    records.reserve(raws.size());
    for (const auto& raw : raws) {
        try {
            records.push_back(normalize(raw, options.tpl));
            original_names.push_back(raw.name);
        } catch (const NameUnsplittable& e) {
            note_failure(raw.path + ":" + std::to_string(raw.byte_span.first) +
                         " " + e.what());
        }
    }

    ClassifierModel model;
    if (options.strategy == MccStrategy::classification) {
        model = ClassifierModel::load(options.model_path);
    }

    // The generator serves verdicts in generate-then-compare mode and
    // candidate lists for flagged methods in both modes.
    std::unique_ptr<RetrievalIndex> index;
    std::unique_ptr<BackendClient> backend;
    NameGenerator generator;
    bool generator_parallel_safe = true;
    if (!options.backend_command.empty()) {
        backend = std::make_unique<BackendClient>(
            options.backend_command,
            std::chrono::milliseconds(options.backend_timeout_ms));
        generator = backend_generator(*backend);
        generator_parallel_safe = false;  // one in-flight request per process
    } else if (!records.empty()) {
        index = std::make_unique<RetrievalIndex>(
            build_retrieval_index(records, options.tpl));
        generator = retrieval_generator(*index);
    }

    // Step 2: verdict every method.
    struct Slot {
        bool ok = false;
        MccVerdict verdict;
    };
    std::vector<Slot> slots(records.size());
    auto verdict_of = [&](size_t i) {
        try {
            if (options.strategy == MccStrategy::classification) {
                slots[i].verdict =
                    check_classification(model, records[i], records[i].name);
            } else {
                slots[i].verdict = check_generate_then_compare(
                    generator, records[i], records[i].name, options.threshold);
            }
            slots[i].ok = true;
        } catch (const Error& e) {
            note_failure(records[i].path + ":" +
                         std::to_string(records[i].byte_span.first) + " " + e.what());
        }
    };
    const bool parallel_verdicts =
        options.strategy == MccStrategy::classification || generator_parallel_safe;
    if (parallel_verdicts) {
        parallel_for(records.size(), options.jobs, verdict_of);
    } else {
        for (size_t i = 0; i < records.size(); ++i) verdict_of(i);
    }

    // Step 3: candidates for flagged methods only; consistent methods end
    // the workflow without touching the generator.
    for (size_t i = 0; i < records.size(); ++i) {
        if (!slots[i].ok) continue;
        ++report.methods_checked;
        if (slots[i].verdict.label == ConsistencyLabel::consistent) {
            ++report.consistent;
            continue;
        }
        ++report.inconsistent;

        FlaggedMethod flagged;
        flagged.path = records[i].path;
        flagged.span = records[i].byte_span;
        flagged.current_name = original_names[i];
        flagged.verdict = slots[i].verdict;
        if (generator) {
            try {
                for (const Candidate& c : generator(records[i], options.k)) {
                    ScoredCandidate sc;
                    sc.name = c.name;
                    sc.score = c.score;
                    sc.quality =
                        score_name(join_subtokens(c.name, JoinStyle::camel),
                                   &records[i]).total;
                    flagged.candidates.push_back(std::move(sc));
                }
            } catch (const Error& e) {
                note_failure(records[i].path + ":" +
                             std::to_string(records[i].byte_span.first) +
                             " candidate generation: " + e.what());
            }
        }
        report.flagged.push_back(std::move(flagged));
    }

    std::sort(report.flagged.begin(), report.flagged.end(),
              [](const FlaggedMethod& a, const FlaggedMethod& b) {
                  return std::tie(a.path, a.span) < std::tie(b.path, b.span);
              });
    std::sort(report.failures.begin(), report.failures.end());
    return report;
}

std::string render_report_text(const NamingReport& report) {
    std::string out;
    out += "method naming report\n";
    out += "root: " + report.root + "\n";
    out += "strategy: " + report.strategy + "\n";
    out += "methods checked: " + std::to_string(report.methods_checked) +
           " (consistent " + std::to_string(report.consistent) +
           ", inconsistent " + std::to_string(report.inconsistent) + ")\n";
    for (const auto& f : report.flagged) {
        out += "\nFLAG " + f.path + ":" + std::to_string(f.span.first) + "-" +
               std::to_string(f.span.second) + " " + f.current_name +
               " score=" + fmt4(f.verdict.score) + "\n";
        size_t rank = 1;
        for (const auto& c : f.candidates) {
            out += "  " + std::to_string(rank++) + ". " +
                   join_subtokens(c.name, JoinStyle::camel) +
                   " score=" + fmt4(c.score) +
                   " quality=" + std::to_string(c.quality) + "/10\n";
        }
    }
    if (!report.failures.empty()) {
        out += "\nfailures:\n";
        for (const auto& line : report.failures) out += "  " + line + "\n";
    }
    return out;
}

std::string render_report_json(const NamingReport& report) {
    ordered_json j;
    j["root"] = report.root;
    j["strategy"] = report.strategy;
    j["summary"] = ordered_json{{"methods_checked", report.methods_checked},
                                {"consistent", report.consistent},
                                {"inconsistent", report.inconsistent}};
    ordered_json flagged = ordered_json::array();
    for (const auto& f : report.flagged) {
        ordered_json entry;
        entry["path"] = f.path;
        entry["span"] = ordered_json::array({f.span.first, f.span.second});
        entry["name"] = f.current_name;
        entry["score"] = f.verdict.score;
        entry["strategy"] = report.strategy;
        ordered_json cands = ordered_json::array();
        for (const auto& c : f.candidates) {
            cands.push_back(ordered_json{{"name", c.name},
                                         {"score", c.score},
                                         {"quality", c.quality}});
        }
        entry["candidates"] = std::move(cands);
        flagged.push_back(std::move(entry));
    }
    j["flagged"] = std::move(flagged);
    j["failures"] = report.failures;
    return j.dump(2) + "\n";
}

MnrEvaluation evaluate_generator(const std::vector<MethodRecord>& corpus,
                                 const NameGenerator& generator) {
    if (corpus.empty()) throw EmptyInput("evaluate_generator: empty corpus");

    std::vector<SubtokenSeq> preds;
    std::vector<SubtokenSeq> golds;
    preds.reserve(corpus.size());
    golds.reserve(corpus.size());
    for (const auto& rec : corpus) {
        std::vector<Candidate> candidates = generator(rec, 1);
        if (candidates.empty() || candidates.front().name.empty()) {
            throw GeneratorFailure("generator produced no candidate for " +
                                   rec.path);
        }
        preds.push_back(candidates.front().name);
        golds.push_back(rec.name);
    }

    MnrEvaluation eval;
    eval.report = evaluate_names(preds, golds);
    std::vector<std::string> pred_names, gold_names;
    pred_names.reserve(preds.size());
    gold_names.reserve(golds.size());
    for (const auto& p : preds) pred_names.push_back(join_subtokens(p, JoinStyle::camel));
    for (const auto& g : golds) gold_names.push_back(join_subtokens(g, JoinStyle::camel));
    eval.pred_quality = score_corpus(pred_names);
    eval.gold_quality = score_corpus(gold_names);
    return eval;
}

MccMetrics evaluate_classification(const std::vector<LabeledExample>& dataset,
                                   const ClassifierModel& model) {
    if (dataset.empty()) throw EmptyInput("evaluate_classification: empty dataset");
    std::vector<std::pair<ConsistencyLabel, ConsistencyLabel>> pairs;
    pairs.reserve(dataset.size());
    for (const auto& ex : dataset) {
        const MccVerdict v = check_classification(model, ex.record, ex.presented_name);
        pairs.emplace_back(v.label, ex.label);
    }
    return mcc_metrics(pairs);
}

MccMetrics evaluate_generate_then_compare(const std::vector<LabeledExample>& dataset,
                                          const NameGenerator& generator,
                                          double threshold) {
    if (dataset.empty()) {
        throw EmptyInput("evaluate_generate_then_compare: empty dataset");
    }
    std::vector<std::pair<ConsistencyLabel, ConsistencyLabel>> pairs;
    pairs.reserve(dataset.size());
    for (const auto& ex : dataset) {
        const MccVerdict v = check_generate_then_compare(generator, ex.record,
                                                         ex.presented_name,
                                                         threshold);
        pairs.emplace_back(v.label, ex.label);
    }
    return mcc_metrics(pairs);
}

std::string render_mnr_text(const MnrEvaluation& eval) {
    const EvalReport& r = eval.report;
    std::string out;
    out += "examples   " + std::to_string(r.per_example.size()) + "\n";
    out += "precision  " + fmt4(r.mean_precision) + "\n";
    out += "recall     " + fmt4(r.mean_recall) + "\n";
    out += "f1         " + fmt4(r.mean_f1) + "\n";
    out += "em         " + fmt4(r.em_rate) + "\n";
    out += "quality    generated " + fmt4(eval.pred_quality.mean) + "  human " +
           fmt4(eval.gold_quality.mean) + "\n";
    if (r.length_block) {
        const LengthBlock& lb = *r.length_block;
        out += "em by gold length:";
        for (size_t i = 0; i < lb.buckets.size(); ++i) {
            if (lb.buckets[i].count == 0) continue;
            const std::string label = i < 7 ? std::to_string(i + 1) : "8+";
            out += " " + label + ":" + fmt4(lb.buckets[i].em_rate);
        }
        out += "\n";
        out += "length test  W=" + fmt4(lb.length_test.statistic) +
               " p=" + fmt4(lb.length_test.p_value) + "\n";
    }
    return out;
}

std::string render_mnr_json(const MnrEvaluation& eval) {
    const EvalReport& r = eval.report;
    ordered_json j;
    j["examples"] = r.per_example.size();
    j["precision"] = r.mean_precision;
    j["recall"] = r.mean_recall;
    j["f1"] = r.mean_f1;
    j["em"] = r.em_rate;
    if (r.length_block) {
        const LengthBlock& lb = *r.length_block;
        ordered_json buckets = ordered_json::array();
        for (size_t i = 0; i < lb.buckets.size(); ++i) {
            buckets.push_back(ordered_json{
                {"length", i < 7 ? std::to_string(i + 1) : "8+"},
                {"count", lb.buckets[i].count},
                {"em", lb.buckets[i].em_rate}});
        }
        ordered_json hist_pred, hist_gold;
        for (const auto& [len, count] : lb.pred_length_histogram) {
            hist_pred[std::to_string(len)] = count;
        }
        for (const auto& [len, count] : lb.gold_length_histogram) {
            hist_gold[std::to_string(len)] = count;
        }
        j["length_block"] =
            ordered_json{{"buckets", buckets},
                         {"pred_histogram", hist_pred},
                         {"gold_histogram", hist_gold},
                         {"wilcoxon", ordered_json{{"w", lb.length_test.statistic},
                                                   {"p", lb.length_test.p_value},
                                                   {"n", lb.length_test.n_nonzero}}}};
    }
    j["pred_quality"] = quality_json(eval.pred_quality);
    j["gold_quality"] = quality_json(eval.gold_quality);
    return j.dump(2) + "\n";
}

std::string render_mcc_text(const MccMetrics& m) {
    std::string out;
    out += "class         precision  recall  f1\n";
    out += "inconsistent  " + fmt4(m.inconsistent.precision) + "     " +
           fmt4(m.inconsistent.recall) + "  " + fmt4(m.inconsistent.f1) + "\n";
    out += "consistent    " + fmt4(m.consistent.precision) + "     " +
           fmt4(m.consistent.recall) + "  " + fmt4(m.consistent.f1) + "\n";
    out += "overall accuracy " + fmt4(m.accuracy) + " over " +
           std::to_string(m.total) + " examples\n";
    return out;
}

std::string render_mcc_json(const MccMetrics& m) {
    ordered_json j;
    j["inconsistent"] = prf_json(m.inconsistent);
    j["consistent"] = prf_json(m.consistent);
    j["accuracy"] = m.accuracy;
    j["total"] = m.total;
    return j.dump(2) + "\n";
}

}  // namespace mnw
