#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mnw/backend.hpp"
#include "mnw/corpus.hpp"
#include "mnw/error.hpp"
#include "mnw/eval.hpp"
#include "mnw/java_extract.hpp"
#include "mnw/mcc.hpp"
#include "mnw/mnr.hpp"
#include "mnw/negsample.hpp"
#include "mnw/pipeline.hpp"
#include "mnw/quality.hpp"
#include "mnw/tokenize.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw mnw::IoFailure("cannot open for writing: " + path.string());
    out << text;
    if (!out) throw mnw::IoFailure("write failed: " + path.string());
}

std::vector<std::string> read_name_lines(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw mnw::IoFailure("cannot open names file: " + path.string());
    std::vector<std::string> names;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) names.push_back(line);
    }
    return names;
}

std::array<double, 3> parse_ratios(const std::string& text) {
    std::array<double, 3> ratios{};
    std::stringstream ss(text);
    std::string part;
    size_t i = 0;
    while (std::getline(ss, part, ',')) {
        if (i >= 3) throw mnw::Error("expected three comma-separated ratios");
        ratios[i++] = std::stod(part);
    }
    if (i != 3) throw mnw::Error("expected three comma-separated ratios");
    return ratios;
}

mnw::PromptTemplate template_from(const std::string& path) {
    return path.empty() ? mnw::PromptTemplate::standard()
                        : mnw::PromptTemplate::load(path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mnw - method naming workbench: extract Java method contexts, "
                 "check name/implementation consistency, recommend names"};
    app.require_subcommand(1);

    // ---- extract ----
    auto* extract = app.add_subcommand(
        "extract", "Scan a project root and write a normalized corpus");
    std::string ex_root, ex_out, ex_template;
    unsigned ex_jobs = 0;
    extract->add_option("--root", ex_root, "Project root directory")->required();
    extract->add_option("--out", ex_out, "Corpus output file (JSON lines)")->required();
    extract->add_option("--jobs", ex_jobs, "Parser worker threads (0 = auto)");
    extract->add_option("--template", ex_template,
                        "Prompt template override file (JSON)");

    // ---- sample ----
    auto* sample = app.add_subcommand(
        "sample", "Build a labeled consistency dataset with hard negatives");
    std::string sm_corpus, sm_out, sm_pairs;
    double sm_ratio = 1.0;
    uint64_t sm_seed = 17;
    sample->add_option("--corpus", sm_corpus, "Input corpus file")->required();
    sample->add_option("--out", sm_out, "Labeled dataset output file")->required();
    sample->add_option("--pairs", sm_pairs,
                       "Rename pairs file (old<TAB>new); estimates the edit "
                       "distribution; defaults to the built-in fallback");
    sample->add_option("--ratio", sm_ratio,
                       "Negatives per record (1.0 = balanced)");
    sample->add_option("--seed", sm_seed, "RNG seed");

    // ---- fit ----
    auto* fit = app.add_subcommand(
        "fit", "Fit the consistency classifier on a labeled dataset");
    std::string ft_dataset, ft_out;
    int ft_epochs = 500;
    double ft_lr = 0.5;
    uint64_t ft_seed = 17;
    fit->add_option("--dataset", ft_dataset, "Labeled dataset file")->required();
    fit->add_option("--out", ft_out, "Model output file")->required();
    fit->add_option("--epochs", ft_epochs, "Gradient descent epochs");
    fit->add_option("--learning-rate", ft_lr, "Gradient descent step size");
    fit->add_option("--seed", ft_seed, "RNG seed");

    // ---- split ----
    auto* split = app.add_subcommand(
        "split", "Split a corpus into train/validation/test by project");
    std::string sp_corpus, sp_train, sp_validation, sp_test;
    std::string sp_ratios = "0.8,0.1,0.1";
    uint64_t sp_seed = 17;
    split->add_option("--corpus", sp_corpus, "Input corpus file")->required();
    split->add_option("--train", sp_train, "Train output file")->required();
    split->add_option("--validation", sp_validation, "Validation output file")
        ->required();
    split->add_option("--test", sp_test, "Test output file")->required();
    split->add_option("--ratios", sp_ratios, "Three comma-separated fractions");
    split->add_option("--seed", sp_seed, "RNG seed");

    // ---- evaluate ----
    auto* evaluate = app.add_subcommand(
        "evaluate",
        "Score a generator on a corpus (--corpus) or a consistency checker on "
        "a labeled dataset (--dataset)");
    std::string ev_corpus, ev_dataset, ev_index, ev_model, ev_backend, ev_out;
    std::string ev_strategy = "classification";
    double ev_threshold = 0.5;
    int64_t ev_timeout = 10000;
    int ev_k = 10;
    evaluate->add_option("--corpus", ev_corpus,
                         "Corpus of gold records (name recommendation)");
    evaluate->add_option("--dataset", ev_dataset,
                         "Labeled dataset (consistency checking)");
    evaluate->add_option("--index", ev_index,
                         "Corpus backing the retrieval generator (defaults to "
                         "the evaluated corpus; self-matches are excluded)");
    evaluate->add_option("--model", ev_model, "Classifier model file");
    evaluate->add_option("--backend", ev_backend,
                         "Backend command speaking the line protocol");
    evaluate->add_option("--strategy", ev_strategy,
                         "MCC strategy: classification|gtc")
        ->check(CLI::IsMember({"classification", "gtc"}));
    evaluate->add_option("--threshold", ev_threshold,
                         "Similarity threshold for gtc");
    evaluate->add_option("--timeout", ev_timeout, "Backend timeout in ms");
    evaluate->add_option("--k", ev_k, "Beam width forwarded to the backend");
    evaluate->add_option("--out", ev_out, "Machine-readable report file");

    // ---- check ----
    auto* check = app.add_subcommand(
        "check", "Extract, verdict each method, recommend names for flagged ones");
    std::string ck_root, ck_model, ck_backend, ck_out, ck_template;
    std::string ck_strategy = "classification";
    std::string ck_format = "text";
    double ck_threshold = 0.5;
    int ck_k = 10;
    uint64_t ck_seed = 17;
    int64_t ck_timeout = 10000;
    unsigned ck_jobs = 0;
    check->add_option("--root", ck_root, "Project root directory")->required();
    check->add_option("--model", ck_model,
                      "Classifier model (classification strategy)");
    check->add_option("--strategy", ck_strategy, "classification|gtc")
        ->check(CLI::IsMember({"classification", "gtc"}));
    check->add_option("--threshold", ck_threshold,
                      "Similarity threshold for gtc");
    check->add_option("--k", ck_k, "Candidates per flagged method");
    check->add_option("--seed", ck_seed, "RNG seed");
    check->add_option("--backend", ck_backend,
                      "Backend command (default: native retrieval generator)");
    check->add_option("--timeout", ck_timeout, "Backend timeout in ms");
    check->add_option("--format", ck_format, "Report format: text|machine")
        ->check(CLI::IsMember({"text", "machine"}));
    check->add_option("--out", ck_out, "Report file (default: stdout)");
    check->add_option("--jobs", ck_jobs, "Worker threads (0 = auto)");
    check->add_option("--template", ck_template,
                      "Prompt template override file (JSON)");

    // ---- quality ----
    auto* quality = app.add_subcommand(
        "quality", "Score method names against the ten naming standards");
    std::string qa_names, qa_corpus, qa_verbs, qa_dictionary, qa_abbrev;
    bool qa_per_name = false;
    quality->add_option("--names", qa_names, "File with one identifier per line");
    quality->add_option("--corpus", qa_corpus, "Corpus file (scores gold names)");
    quality->add_option("--verbs", qa_verbs, "Verb lexicon override");
    quality->add_option("--dictionary", qa_dictionary, "Dictionary override");
    quality->add_option("--abbreviations", qa_abbrev,
                        "Abbreviation allowlist override");
    quality->add_flag("--per-name", qa_per_name, "Print one line per name");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*extract) {
            const mnw::PromptTemplate tpl = template_from(ex_template);
            const auto raws = mnw::scan_project(ex_root, mnw::stderr_diagnostics(),
                                                ex_jobs);
            std::vector<mnw::MethodRecord> records;
            records.reserve(raws.size());
            for (const auto& raw : raws) {
                try {
                    records.push_back(mnw::normalize(raw, tpl));
                } catch (const mnw::NameUnsplittable& e) {
                    std::cerr << "SKIP " << raw.path << ":" << raw.byte_span.first
                              << " " << e.what() << "\n";
                }
            }
            mnw::write_corpus(records, ex_out);
            std::cout << "extracted " << records.size() << " methods from "
                      << ex_root << "\n";
            return kExitOk;
        }

        if (*sample) {
            const auto records = mnw::read_corpus(sm_corpus);
            mnw::EditDistribution dist = mnw::EditDistribution::fallback();
            if (!sm_pairs.empty()) {
                dist = mnw::estimate_edit_distribution(
                    mnw::read_rename_pairs(sm_pairs));
            }
            const auto vocab = mnw::TokenVocab::from_records(records);
            const auto dataset =
                mnw::build_mcc_dataset(records, dist, vocab, sm_ratio, sm_seed);
            mnw::write_dataset(dataset, sm_out);
            std::cout << "wrote " << dataset.size() << " labeled examples ("
                      << records.size() << " consistent, "
                      << dataset.size() - records.size() << " sampled)\n";
            return kExitOk;
        }

        if (*fit) {
            const auto dataset = mnw::read_dataset(ft_dataset);
            const auto model =
                mnw::fit_classifier(dataset, ft_epochs, ft_lr, ft_seed);
            model.save(ft_out);
            std::cout << "fitted on " << dataset.size() << " examples, final loss "
                      << model.final_loss << ", digest " << model.fitted_on << "\n";
            return kExitOk;
        }

        if (*split) {
            const auto records = mnw::read_corpus(sp_corpus);
            const auto parts =
                mnw::split_by_project(records, parse_ratios(sp_ratios), sp_seed);
            mnw::write_corpus(parts.train, sp_train);
            mnw::write_corpus(parts.validation, sp_validation);
            mnw::write_corpus(parts.test, sp_test);
            std::cout << "split " << records.size() << " records into "
                      << parts.train.size() << "/" << parts.validation.size()
                      << "/" << parts.test.size() << "\n";
            return kExitOk;
        }

        if (*evaluate) {
            if (ev_corpus.empty() == ev_dataset.empty()) {
                std::cerr << "evaluate: pass exactly one of --corpus or --dataset\n";
                return kExitUsage;
            }
            std::unique_ptr<mnw::BackendClient> backend;
            std::unique_ptr<mnw::RetrievalIndex> index;
            auto make_generator = [&](const std::vector<mnw::MethodRecord>& fallback)
                -> mnw::NameGenerator {
                if (!ev_backend.empty()) {
                    backend = std::make_unique<mnw::BackendClient>(
                        ev_backend, std::chrono::milliseconds(ev_timeout));
                    return mnw::backend_generator(*backend);
                }
                const auto base = ev_index.empty()
                                      ? fallback
                                      : mnw::read_corpus(ev_index);
                index = std::make_unique<mnw::RetrievalIndex>(
                    mnw::build_retrieval_index(base));
                return mnw::retrieval_generator(*index);
            };

            if (!ev_corpus.empty()) {
                const auto corpus = mnw::read_corpus(ev_corpus);
                const auto eval =
                    mnw::evaluate_generator(corpus, make_generator(corpus));
                std::cout << mnw::render_mnr_text(eval);
                if (!ev_out.empty()) write_text_file(ev_out, mnw::render_mnr_json(eval));
            } else {
                const auto dataset = mnw::read_dataset(ev_dataset);
                mnw::MccMetrics metrics;
                if (ev_strategy == "classification") {
                    if (ev_model.empty()) {
                        std::cerr << "evaluate: classification needs --model\n";
                        return kExitUsage;
                    }
                    metrics = mnw::evaluate_classification(
                        dataset, mnw::ClassifierModel::load(ev_model));
                } else {
                    std::vector<mnw::MethodRecord> records;
                    records.reserve(dataset.size());
                    for (const auto& ex : dataset) records.push_back(ex.record);
                    metrics = mnw::evaluate_generate_then_compare(
                        dataset, make_generator(records), ev_threshold);
                }
                std::cout << mnw::render_mcc_text(metrics);
                if (!ev_out.empty()) write_text_file(ev_out, mnw::render_mcc_json(metrics));
            }
            return kExitOk;
        }

        if (*check) {
            mnw::CheckOptions options;
            options.root = ck_root;
            options.model_path = ck_model;
            options.strategy = ck_strategy == "classification"
                                   ? mnw::MccStrategy::classification
                                   : mnw::MccStrategy::generate_then_compare;
            options.threshold = ck_threshold;
            options.k = ck_k;
            options.seed = ck_seed;
            options.backend_command = ck_backend;
            options.backend_timeout_ms = ck_timeout;
            options.jobs = ck_jobs;
            options.tpl = template_from(ck_template);
            if (options.strategy == mnw::MccStrategy::classification &&
                ck_model.empty()) {
                std::cerr << "check: classification strategy needs --model\n";
                return kExitUsage;
            }

            const mnw::NamingReport report = mnw::run_check(options);
            const std::string rendered = ck_format == "machine"
                                             ? mnw::render_report_json(report)
                                             : mnw::render_report_text(report);
            if (ck_out.empty()) {
                std::cout << rendered;
            } else {
                write_text_file(ck_out, rendered);
            }
            return kExitOk;
        }

        if (*quality) {
            if (qa_names.empty() == qa_corpus.empty()) {
                std::cerr << "quality: pass exactly one of --names or --corpus\n";
                return kExitUsage;
            }
            mnw::QualityLexicons lexicons = mnw::QualityLexicons::builtin();
            if (!qa_verbs.empty() || !qa_dictionary.empty() || !qa_abbrev.empty()) {
                if (qa_verbs.empty() || qa_dictionary.empty() || qa_abbrev.empty()) {
                    std::cerr << "quality: override --verbs, --dictionary and "
                                 "--abbreviations together\n";
                    return kExitUsage;
                }
                lexicons = mnw::QualityLexicons::load(qa_verbs, qa_dictionary,
                                                      qa_abbrev);
            }

            std::vector<std::string> names;
            if (!qa_names.empty()) {
                names = read_name_lines(qa_names);
            } else {
                for (const auto& rec : mnw::read_corpus(qa_corpus)) {
                    names.push_back(mnw::join_subtokens(rec.name,
                                                        mnw::JoinStyle::camel));
                }
            }
            if (qa_per_name) {
                for (const auto& name : names) {
                    const auto s = mnw::score_name(name, nullptr, lexicons);
                    std::cout << name << " " << s.total << "/10";
                    for (size_t i = 0; i < s.passed.size(); ++i) {
                        if (!s.passed[i]) {
                            std::cout << " -" << mnw::QualityScore::standard_names()[i];
                        }
                    }
                    std::cout << "\n";
                }
            }
            const auto summary = mnw::score_corpus(names, lexicons);
            std::cout << "names " << summary.count << "  mean "
                      << summary.mean << "  excellent share "
                      << summary.excellent_share << "\n";
            return kExitOk;
        }
    } catch (const mnw::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitUsage;
}
