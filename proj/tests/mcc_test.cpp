#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <fstream>

#include "mnw/error.hpp"
#include "mnw/eval.hpp"
#include "mnw/mcc.hpp"
#include "mnw/rng.hpp"
#include "test_support.hpp"

using mnw::ClassifierModel;
using mnw::ConsistencyLabel;
using mnw::LabeledExample;
using mnw::MethodRecord;
using mnw::SubtokenSeq;
using mnw::check_classification;
using mnw::check_generate_then_compare;
using mnw::extract_features;
using mnw::fit_classifier;
using mnw::lexical_similarity;

namespace {

MethodRecord record_with(SubtokenSeq name, SubtokenSeq body,
                         SubtokenSeq class_name = {"widget"},
                         std::vector<SubtokenSeq> siblings = {}) {
    MethodRecord rec;
    rec.name = std::move(name);
    rec.body = std::move(body);
    rec.class_name = std::move(class_name);
    rec.siblings = std::move(siblings);
    rec.signature = {"void"};
    rec.project_id = "p";
    rec.path = "p/W.java";
    rec.byte_span = {0, 10};
    return rec;
}

LabeledExample example(MethodRecord rec, SubtokenSeq presented,
                       ConsistencyLabel label) {
    LabeledExample ex;
    ex.record = std::move(rec);
    ex.presented_name = std::move(presented);
    ex.label = label;
    ex.provenance = label == ConsistencyLabel::consistent
                        ? LabeledExample::Provenance::original
                        : LabeledExample::Provenance::sampled;
    return ex;
}

// Separable toy set: consistent names overlap their body, inconsistent don't.
std::vector<LabeledExample> separable_dataset(size_t per_class) {
    std::vector<LabeledExample> out;
    for (size_t i = 0; i < per_class; ++i) {
        const std::string tag = std::to_string(i);
        MethodRecord rec = record_with({"load", "value"},
                                       {"load", "value", "store", tag});
        out.push_back(example(rec, {"load", "value"},
                              ConsistencyLabel::consistent));
        out.push_back(example(rec, {"paint", "widget" + tag},
                              ConsistencyLabel::inconsistent));
    }
    return out;
}

}  // namespace

TEST_CASE("extract_features matches the prf-based definitions") {
    const MethodRecord rec = record_with(
        {"get", "name"}, {"name", "name", "get"}, {"get", "name"},
        {{"get", "id"}, {"reset"}});
    const auto f = extract_features(rec, {"get", "name"});

    const auto expected = testsupport::oracle_prf({"get", "name"},
                                                  {"name", "name", "get"});
    CHECK(f.overlap_f1 == doctest::Approx(expected.f1));
    CHECK(f.class_overlap == doctest::Approx(1.0));  // identical tokens
    const auto sib = testsupport::oracle_prf({"get", "name"}, {"get", "id"});
    CHECK(f.sibling_max_sim == doctest::Approx(sib.f1));
    CHECK(f.first_token_in_body == 1.0);
    CHECK(f.name_length == 2.0);
    CHECK(f.bias == 1.0);
}

TEST_CASE("features are zero for fully disjoint contexts") {
    const MethodRecord rec = record_with({"alpha"}, {"beta", "gamma"},
                                         {"delta"}, {{"epsilon"}});
    const auto f = extract_features(rec, {"omega"});
    CHECK(f.overlap_f1 == 0.0);
    CHECK(f.class_overlap == 0.0);
    CHECK(f.sibling_max_sim == 0.0);
    CHECK(f.first_token_in_body == 0.0);
    CHECK_THROWS_AS(extract_features(rec, {}), mnw::EmptyName);
}

TEST_CASE("fit_classifier separates a separable toy set") {
    const auto dataset = separable_dataset(20);
    const auto model = fit_classifier(dataset, 2000, 1.0, 1);
    size_t correct = 0;
    for (const auto& ex : dataset) {
        const auto verdict =
            check_classification(model, ex.record, ex.presented_name);
        if (verdict.label == ex.label) ++correct;
    }
    CHECK(correct == dataset.size());  // training accuracy 1.0
    CHECK(model.final_loss < std::log(2.0));
    CHECK(model.fitted_on.size() == 16);
}

TEST_CASE("descent lowers the loss from the zero start") {
    const auto dataset = separable_dataset(10);
    const auto one = fit_classifier(dataset, 1, 0.5, 1);
    const auto many = fit_classifier(dataset, 300, 0.5, 1);
    CHECK(many.final_loss <= one.final_loss);
    CHECK(one.final_loss <= std::log(2.0) + 1e-12);  // zero weights give ln 2
}

TEST_CASE("duplicating the dataset leaves the fitted model identical") {
    const auto dataset = separable_dataset(8);
    std::vector<LabeledExample> doubled = dataset;
    doubled.insert(doubled.end(), dataset.begin(), dataset.end());
    const auto base = fit_classifier(dataset, 200, 0.5, 1);
    const auto twice = fit_classifier(doubled, 200, 0.5, 1);
    for (size_t d = 0; d < base.weights.size(); ++d) {
        CHECK(base.weights[d] == twice.weights[d]);  // bit-identical
    }
}

TEST_CASE("example order does not change the fit") {
    auto dataset = separable_dataset(8);
    const auto base = fit_classifier(dataset, 200, 0.5, 1);
    std::reverse(dataset.begin(), dataset.end());
    const auto reversed = fit_classifier(dataset, 200, 0.5, 1);
    for (size_t d = 0; d < base.weights.size(); ++d) {
        CHECK(base.weights[d] ==
              doctest::Approx(reversed.weights[d]).epsilon(1e-9));
    }
}

TEST_CASE("fit_classifier needs both labels") {
    std::vector<LabeledExample> one_sided;
    for (int i = 0; i < 5; ++i) {
        one_sided.push_back(example(record_with({"a"}, {"a"}), {"a"},
                                    ConsistencyLabel::consistent));
    }
    CHECK_THROWS_AS(fit_classifier(one_sided, 10, 0.5, 1), mnw::SingleClassData);
}

TEST_CASE("check_classification decision rule at the boundary") {
    ClassifierModel zeros;
    zeros.weights.assign(mnw::FeatureVector::kCount, 0.0);
    const MethodRecord rec = record_with({"a"}, {"b"});
    const auto verdict = check_classification(zeros, rec, {"a"});
    CHECK(verdict.score == doctest::Approx(0.5));
    CHECK(verdict.label == ConsistencyLabel::inconsistent);  // >= 0.5 rule
    CHECK(verdict.strategy == mnw::MccStrategy::classification);

    ClassifierModel biased;
    biased.weights.assign(mnw::FeatureVector::kCount, 0.0);
    biased.weights.back() = -10.0;  // bias weight
    MethodRecord empty_rec = record_with({"a"}, {});
    empty_rec.class_name.clear();
    empty_rec.signature.clear();
    const auto sure = check_classification(biased, empty_rec, {"zz"});
    CHECK(sure.score < 0.001);
    CHECK(sure.label == ConsistencyLabel::consistent);

    CHECK_THROWS_AS(check_classification(ClassifierModel{}, rec, {"a"}),
                    mnw::ModelUnfitted);
}

TEST_CASE("verdicts depend only on the feature vector") {
    const auto dataset = separable_dataset(10);
    const auto model = fit_classifier(dataset, 100, 0.5, 1);
    // same features from different records/names -> identical verdicts
    const MethodRecord r1 = record_with({"x"}, {"alpha", "beta"}, {"cls"});
    const MethodRecord r2 = record_with({"y"}, {"alpha", "beta"}, {"cls"});
    const auto v1 = check_classification(model, r1, {"gamma", "delta"});
    const auto v2 = check_classification(model, r2, {"delta", "gamma"});
    CHECK(v1.score == v2.score);
    CHECK(v1.label == v2.label);
}

TEST_CASE("model files round-trip exactly") {
    const auto model = fit_classifier(separable_dataset(6), 150, 0.7, 1);
    namespace fs = std::filesystem;
    const fs::path path = fs::temp_directory_path() / "mnw_model.txt";
    model.save(path);
    const auto loaded = ClassifierModel::load(path);
    for (size_t d = 0; d < model.weights.size(); ++d) {
        CHECK(model.weights[d] == loaded.weights[d]);
    }
    std::ofstream(path) << "not a model\n";
    CHECK_THROWS_AS(ClassifierModel::load(path), mnw::Error);
    fs::remove(path);
    CHECK_THROWS_AS(ClassifierModel::load(path), mnw::IoFailure);
}

TEST_CASE("lexical similarity reproduces the motivating name pairs") {
    CHECK(lexical_similarity({"create", "form", "data"},
                             {"delete", "form", "data"}) ==
          doctest::Approx(2.0 / 3.0));
    CHECK(lexical_similarity({"do", "setup"},
                             {"do", "bind", "current", "configuration"}) ==
          doctest::Approx(1.0 / 3.0));
    CHECK(lexical_similarity({"run"}, {"run"}) == 1.0);
    CHECK(lexical_similarity({"a"}, {"b"}) == 0.0);
    CHECK_THROWS_AS(lexical_similarity({}, {"a"}), mnw::EmptyName);
}

TEST_CASE("lexical similarity is symmetric and permutation-invariant") {
    mnw::Rng rng(5001);
    for (int trial = 0; trial < 300; ++trial) {
        SubtokenSeq a = testsupport::random_seq(rng, 1, 5);
        const SubtokenSeq b = testsupport::random_seq(rng, 1, 5);
        const double ab = lexical_similarity(a, b);
        CHECK(ab == doctest::Approx(lexical_similarity(b, a)).epsilon(1e-12));
        rng.shuffle(a);
        CHECK(ab == doctest::Approx(lexical_similarity(a, b)).epsilon(1e-12));
    }
}

namespace {

mnw::NameGenerator fixed_generator(SubtokenSeq name) {
    return [name](const MethodRecord&, int) {
        return std::vector<mnw::Candidate>{{name, 1.0}};
    };
}

}  // namespace

TEST_CASE("generate-then-compare reproduces the motivating verdicts") {
    const MethodRecord rec = record_with({"do", "setup"}, {"bind", "unbind"});

    // generated doBindCurrentConfiguration vs presented doSetup: flagged
    auto verdict = check_generate_then_compare(
        fixed_generator({"do", "bind", "current", "configuration"}), rec,
        {"do", "setup"}, 0.5);
    CHECK(verdict.label == ConsistencyLabel::inconsistent);
    CHECK(verdict.score == doctest::Approx(1.0 - 1.0 / 3.0));
    CHECK(verdict.strategy == mnw::MccStrategy::generate_then_compare);

    // generated getSysProps vs presented getSystemProperties: flagged
    verdict = check_generate_then_compare(
        fixed_generator({"get", "sys", "props"}), rec,
        {"get", "system", "properties"}, 0.5);
    CHECK(verdict.label == ConsistencyLabel::inconsistent);

    // identical generation stays consistent at any threshold below 1
    verdict = check_generate_then_compare(
        fixed_generator({"do", "setup"}), rec, {"do", "setup"}, 0.99);
    CHECK(verdict.label == ConsistencyLabel::consistent);
    CHECK(verdict.score == doctest::Approx(0.0));
}

TEST_CASE("raising the threshold never flips inconsistent to consistent") {
    mnw::Rng rng(5002);
    const MethodRecord rec = record_with({"a"}, {"b"});
    for (int trial = 0; trial < 200; ++trial) {
        const SubtokenSeq generated = testsupport::random_seq(rng, 1, 5);
        const SubtokenSeq presented = testsupport::random_seq(rng, 1, 5);
        const auto low = check_generate_then_compare(fixed_generator(generated),
                                                     rec, presented, 0.3);
        const auto high = check_generate_then_compare(fixed_generator(generated),
                                                      rec, presented, 0.7);
        if (low.label == ConsistencyLabel::inconsistent) {
            CHECK(high.label == ConsistencyLabel::inconsistent);
        }
    }
}

TEST_CASE("generator failures surface as GeneratorFailure") {
    const MethodRecord rec = record_with({"a"}, {"b"});
    const auto empty_gen = [](const MethodRecord&, int) {
        return std::vector<mnw::Candidate>{};
    };
    CHECK_THROWS_AS(check_generate_then_compare(empty_gen, rec, {"a"}, 0.5),
                    mnw::GeneratorFailure);
    const auto throwing_gen = [](const MethodRecord&, int) -> std::vector<mnw::Candidate> {
        throw std::runtime_error("boom");
    };
    CHECK_THROWS_AS(check_generate_then_compare(throwing_gen, rec, {"a"}, 0.5),
                    mnw::GeneratorFailure);
    CHECK_THROWS_AS(check_generate_then_compare(fixed_generator({"a"}), rec,
                                                {"a"}, 1.5),
                    mnw::Error);
}
