#include "mnw/mcc.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "mnw/error.hpp"
#include "mnw/eval.hpp"

namespace mnw {

namespace {

double safe_f1(const SubtokenSeq& a, const SubtokenSeq& b) {
    if (a.empty() || b.empty()) return 0.0;
    return prf(a, b).f1;
}

double sigmoid(double z) {
    if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
    const double e = std::exp(z);
    return e / (1.0 + e);
}

// Midpoint-split pairwise sum: sum(range) = sum(first half) + sum(second
// half), which makes the mean over a duplicated dataset bit-identical.
double pairwise_sum(const std::vector<double>& values, size_t begin, size_t end) {
    const size_t n = end - begin;
    if (n == 0) return 0.0;
    if (n <= 8) {
        double s = 0.0;
        for (size_t i = begin; i < end; ++i) s += values[i];
        return s;
    }
    const size_t mid = begin + n / 2;
    return pairwise_sum(values, begin, mid) + pairwise_sum(values, mid, end);
}

uint64_t fnv1a(uint64_t h, const std::string& s) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string dataset_digest(const std::vector<LabeledExample>& examples) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (const auto& ex : examples) {
        for (const auto& t : ex.record.name) h = fnv1a(h, t);
        for (const auto& t : ex.presented_name) h = fnv1a(h, t);
        h = fnv1a(h, ex.record.path);
        h = fnv1a(h, to_string(ex.label));
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace

const std::array<std::string, FeatureVector::kCount>& FeatureVector::names() {
    static const std::array<std::string, kCount> names = {
        "overlap_f1",          "class_overlap", "sibling_max_sim",
        "first_token_in_body", "name_length",   "bias",
    };
    return names;
}

FeatureVector extract_features(const MethodRecord& record,
                               const SubtokenSeq& presented_name) {
    if (presented_name.empty()) {
        throw EmptyName("extract_features: empty presented name");
    }
    FeatureVector f;
    f.overlap_f1 = safe_f1(presented_name, record.body);
    f.class_overlap = safe_f1(presented_name, record.class_name);
    for (const auto& sibling : record.siblings) {
        f.sibling_max_sim = std::max(f.sibling_max_sim,
                                     safe_f1(presented_name, sibling));
    }
    f.first_token_in_body =
        std::find(record.body.begin(), record.body.end(), presented_name.front()) !=
                record.body.end()
            ? 1.0
            : 0.0;
    f.name_length = static_cast<double>(presented_name.size());
    return f;
}

FeatureVector extract_features(const LabeledExample& example) {
    return extract_features(example.record, example.presented_name);
}

ClassifierModel fit_classifier(const std::vector<LabeledExample>& examples,
                               int epochs, double learning_rate, uint64_t seed) {
    (void)seed;  // zero initialization; the seed is part of the signature so
                 // a stochastic optimizer could slot in without API changes
    bool has_pos = false, has_neg = false;
    for (const auto& ex : examples) {
        (ex.label == ConsistencyLabel::inconsistent ? has_pos : has_neg) = true;
    }
    if (!has_pos || !has_neg) {
        throw SingleClassData("fit_classifier: need both consistent and "
                              "inconsistent examples");
    }

    const size_t n = examples.size();
    constexpr size_t dim = FeatureVector::kCount;
    std::vector<std::array<double, dim>> features(n);
    std::vector<double> labels(n);
    for (size_t i = 0; i < n; ++i) {
        features[i] = extract_features(examples[i]).values();
        labels[i] = examples[i].label == ConsistencyLabel::inconsistent ? 1.0 : 0.0;
    }

    std::vector<double> weights(dim, 0.0);
    std::vector<double> scratch(n);
    auto mean_of = [&](auto&& fill) {
        for (size_t i = 0; i < n; ++i) scratch[i] = fill(i);
        return pairwise_sum(scratch, 0, n) / static_cast<double>(n);
    };

    for (int epoch = 0; epoch < epochs; ++epoch) {
        std::array<double, dim> grad{};
        std::vector<double> residual(n);
        for (size_t i = 0; i < n; ++i) {
            double z = 0.0;
            for (size_t d = 0; d < dim; ++d) z += weights[d] * features[i][d];
            residual[i] = sigmoid(z) - labels[i];
        }
        for (size_t d = 0; d < dim; ++d) {
            grad[d] = mean_of([&](size_t i) { return residual[i] * features[i][d]; });
        }
        for (size_t d = 0; d < dim; ++d) weights[d] -= learning_rate * grad[d];
    }

    ClassifierModel model;
    model.weights.assign(weights.begin(), weights.end());
    model.fitted_on = dataset_digest(examples);
    model.final_loss = mean_of([&](size_t i) {
        double z = 0.0;
        for (size_t d = 0; d < dim; ++d) z += weights[d] * features[i][d];
        // -[y log p + (1-y) log(1-p)] without overflow
        return z > 0.0 ? (1.0 - labels[i]) * z + std::log1p(std::exp(-z))
                       : -labels[i] * z + std::log1p(std::exp(z));
    });
    return model;
}

void ClassifierModel::save(const std::filesystem::path& path) const {
    if (!fitted()) throw ModelUnfitted("cannot save an unfitted model");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoFailure("cannot open for writing: " + path.string());
    out << "mccmodel v1\n";
    char buf[64];
    for (size_t d = 0; d < FeatureVector::kCount; ++d) {
        std::snprintf(buf, sizeof(buf), "%.17g", weights[d]);
        out << FeatureVector::names()[d] << '\t' << buf << '\n';
    }
    if (!out) throw IoFailure("write failed: " + path.string());
}

ClassifierModel ClassifierModel::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure("cannot open model file: " + path.string());
    std::string line;
    if (!std::getline(in, line) || line != "mccmodel v1") {
        throw Error("model file " + path.string() +
                    ": missing \"mccmodel v1\" header");
    }
    ClassifierModel model;
    model.weights.assign(FeatureVector::kCount, 0.0);
    std::array<bool, FeatureVector::kCount> seen{};
    size_t line_number = 1;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.empty()) continue;
        const size_t tab = line.find('\t');
        if (tab == std::string::npos) {
            throw MalformedLine("model line " + std::to_string(line_number) +
                                ": no tab separator", line_number);
        }
        const std::string feature = line.substr(0, tab);
        const auto& names = FeatureVector::names();
        const auto it = std::find(names.begin(), names.end(), feature);
        if (it == names.end()) {
            throw MalformedLine("model line " + std::to_string(line_number) +
                                ": unknown feature \"" + feature + "\"",
                                line_number);
        }
        const size_t idx = static_cast<size_t>(it - names.begin());
        try {
            model.weights[idx] = std::stod(line.substr(tab + 1));
        } catch (const std::exception&) {
            throw MalformedLine("model line " + std::to_string(line_number) +
                                ": bad weight", line_number);
        }
        seen[idx] = true;
    }
    for (size_t d = 0; d < FeatureVector::kCount; ++d) {
        if (!seen[d]) {
            throw Error("model file " + path.string() + ": missing feature \"" +
                        FeatureVector::names()[d] + "\"");
        }
    }
    return model;
}

MccVerdict check_classification(const ClassifierModel& model,
                                const MethodRecord& record,
                                const SubtokenSeq& presented_name) {
    if (!model.fitted()) {
        throw ModelUnfitted("check_classification: model has no weights");
    }
    const auto values = extract_features(record, presented_name).values();
    double z = 0.0;
    for (size_t d = 0; d < FeatureVector::kCount; ++d) {
        z += model.weights[d] * values[d];
    }
    MccVerdict verdict;
    verdict.strategy = MccStrategy::classification;
    verdict.score = sigmoid(z);
    verdict.label = verdict.score >= 0.5 ? ConsistencyLabel::inconsistent
                                         : ConsistencyLabel::consistent;
    return verdict;
}

double lexical_similarity(const SubtokenSeq& a, const SubtokenSeq& b) {
    if (a.empty() || b.empty()) {
        throw EmptyName("lexical_similarity: empty name");
    }
    return prf(a, b).f1;
}

MccVerdict check_generate_then_compare(const NameGenerator& generator,
                                       const MethodRecord& record,
                                       const SubtokenSeq& presented_name,
                                       double threshold) {
    if (presented_name.empty()) {
        throw EmptyName("check_generate_then_compare: empty presented name");
    }
    if (!(threshold > 0.0 && threshold < 1.0)) {
        throw Error("generate-then-compare threshold must lie in (0,1)");
    }

    std::vector<Candidate> candidates;
    try {
        candidates = generator(record, 1);
    } catch (const Error&) {
        throw;  // backend failures keep their precise type
    } catch (const std::exception& e) {
        throw GeneratorFailure(std::string("generator failed: ") + e.what());
    }
    if (candidates.empty() || candidates.front().name.empty()) {
        throw GeneratorFailure("generator produced no usable candidate");
    }
    sort_candidates(candidates);

    const double similarity =
        lexical_similarity(candidates.front().name, presented_name);
    MccVerdict verdict;
    verdict.strategy = MccStrategy::generate_then_compare;
    verdict.score = 1.0 - similarity;
    verdict.label = similarity < threshold ? ConsistencyLabel::inconsistent
                                           : ConsistencyLabel::consistent;
    return verdict;
}

}  // namespace mnw
