#include "doctest.h"

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "mnw/error.hpp"
#include "mnw/negsample.hpp"
#include "mnw/rng.hpp"
#include "mnw/tokenize.hpp"
#include "test_support.hpp"

using mnw::EditDistribution;
using mnw::EditOp;
using mnw::SubtokenSeq;
using mnw::TokenVocab;
using mnw::corrupt_name;
using mnw::estimate_edit_distribution;
using mnw::minimal_edit_script;

TEST_CASE("canonical scripts match the all-alignments oracle") {
    using Pair = std::pair<SubtokenSeq, SubtokenSeq>;
    const Pair fixtures[] = {
        {{"get", "name"}, {"get", "name"}},
        {{"get", "name"}, {"get", "id"}},
        {{"a", "b"}, {"a", "b", "c"}},
        {{"x"}, {"y"}},
        {{"a", "b", "c"}, {"c", "b", "a"}},
        {{"a"}, {"a", "a"}},
        {{"a", "a"}, {"a"}},
    };
    for (const auto& [before, after] : fixtures) {
        CHECK(minimal_edit_script(before, after) ==
              testsupport::oracle_canonical_script(before, after));
    }

    mnw::Rng rng(4001);
    for (int trial = 0; trial < 500; ++trial) {
        const SubtokenSeq before = testsupport::random_seq(rng, 0, 6);
        const SubtokenSeq after = testsupport::random_seq(rng, 0, 6);
        if (before.empty() && after.empty()) continue;
        CAPTURE(trial);
        CHECK(minimal_edit_script(before, after) ==
              testsupport::oracle_canonical_script(before, after));
    }
}

TEST_CASE("estimate_edit_distribution on the documented pairs") {
    const auto identity = estimate_edit_distribution(
        {{{"get", "name"}, {"get", "name"}}});
    CHECK(identity.p_keep == 1.0);
    CHECK(identity.p_add == 0.0);
    CHECK(identity.p_delete == 0.0);
    CHECK(identity.p_replace == 0.0);

    const auto half = estimate_edit_distribution(
        {{{"get", "name"}, {"get", "id"}}});
    CHECK(half.p_keep == doctest::Approx(0.5));
    CHECK(half.p_replace == doctest::Approx(0.5));

    // two alignments: keep,keep,add and replace -> counts 2/1/0/1 of 4.
    // (frozen from the oracle; hand-traced before the build)
    const auto mixed = estimate_edit_distribution(
        {{{"a", "b"}, {"a", "b", "c"}}, {{"x"}, {"y"}}});
    CHECK(mixed.p_keep == doctest::Approx(0.5));
    CHECK(mixed.p_add == doctest::Approx(0.25));
    CHECK(mixed.p_delete == doctest::Approx(0.0));
    CHECK(mixed.p_replace == doctest::Approx(0.25));

    CHECK_THROWS_AS(estimate_edit_distribution({}), mnw::EmptyPairs);
}

TEST_CASE("estimation is permutation-invariant and sums to one") {
    mnw::Rng rng(4002);
    std::vector<std::pair<SubtokenSeq, SubtokenSeq>> pairs;
    for (int i = 0; i < 40; ++i) {
        pairs.emplace_back(testsupport::random_seq(rng, 1, 5),
                           testsupport::random_seq(rng, 1, 5));
    }
    const auto base = estimate_edit_distribution(pairs);
    CHECK(base.p_keep + base.p_add + base.p_delete + base.p_replace ==
          doctest::Approx(1.0).epsilon(1e-12));

    auto shuffled = pairs;
    rng.shuffle(shuffled);
    const auto permuted = estimate_edit_distribution(shuffled);
    CHECK(base.p_keep == permuted.p_keep);
    CHECK(base.p_add == permuted.p_add);
    CHECK(base.p_delete == permuted.p_delete);
    CHECK(base.p_replace == permuted.p_replace);
}

TEST_CASE("rename pair files parse and validate") {
    namespace fs = std::filesystem;
    const fs::path path = fs::temp_directory_path() / "mnw_pairs.tsv";
    std::ofstream(path) << "getName\tgetName\nfetchRow\tfetchRecord\n";
    const auto pairs = mnw::read_rename_pairs(path);
    REQUIRE(pairs.size() == 2);
    CHECK(pairs[1].first == SubtokenSeq{"fetch", "row"});
    CHECK(pairs[1].second == SubtokenSeq{"fetch", "record"});

    std::ofstream(path) << "noTabHere\n";
    CHECK_THROWS_AS(mnw::read_rename_pairs(path), mnw::MalformedLine);
    fs::remove(path);
}

namespace {

TokenVocab small_vocab() {
    return TokenVocab::from_names({{"alpha", "beta"}, {"gamma", "beta"}});
}

}  // namespace

TEST_CASE("corrupt_name guards: non-empty, different, deterministic") {
    const SubtokenSeq name = {"get", "user", "name"};
    const TokenVocab vocab = small_vocab();

    EditDistribution pure_delete{0.0, 0.0, 1.0, 0.0};
    for (uint64_t seed = 0; seed < 50; ++seed) {
        const auto out = corrupt_name(name, pure_delete, vocab, seed);
        CHECK(!out.empty());
        CHECK(out != name);
    }

    EditDistribution pure_keep{1.0, 0.0, 0.0, 0.0};
    mnw::CorruptStats stats;
    const auto forced = corrupt_name(name, pure_keep, vocab, 11, &stats);
    CHECK(stats.forced_replace);
    CHECK(forced.size() == name.size());
    size_t differing = 0;
    for (size_t i = 0; i < name.size(); ++i) differing += forced[i] != name[i];
    CHECK(differing == 1);

    const auto dist = EditDistribution::fallback();
    const auto a = corrupt_name(name, dist, vocab, 1234);
    const auto b = corrupt_name(name, dist, vocab, 1234);
    CHECK(a == b);
}

TEST_CASE("corrupt_name rejects impossible setups") {
    EditDistribution pure_keep{1.0, 0.0, 0.0, 0.0};
    CHECK_THROWS_AS(corrupt_name({"only"}, pure_keep, TokenVocab(), 1),
                    mnw::DegenerateDistribution);
    // vocabulary that only contains the name's single token
    const TokenVocab self_only = TokenVocab::from_names({{"only"}});
    CHECK_THROWS_AS(corrupt_name({"only"}, pure_keep, self_only, 1),
                    mnw::DegenerateDistribution);
    EditDistribution bad{0.5, 0.5, 0.5, 0.5};
    CHECK_THROWS_AS(corrupt_name({"a"}, bad, small_vocab(), 1), mnw::Error);
}

TEST_CASE("replace never emits the token it replaces") {
    const TokenVocab vocab =
        TokenVocab::from_names({{"aa", "bb", "cc", "dd", "ee"}});
    EditDistribution pure_replace{0.0, 0.0, 0.0, 1.0};
    const SubtokenSeq name = {"aa", "bb", "cc"};
    for (uint64_t seed = 0; seed < 40; ++seed) {
        const auto out = corrupt_name(name, pure_replace, vocab, seed);
        REQUIRE(out.size() == name.size());
        for (size_t i = 0; i < out.size(); ++i) CHECK(out[i] != name[i]);
    }
}

TEST_CASE("corrupted names stay related when keeps dominate") {
    mnw::Rng rng(4003);
    const auto dist = EditDistribution::fallback();  // p_keep 0.7
    std::vector<SubtokenSeq> names;
    for (int i = 0; i < 400; ++i) names.push_back(testsupport::random_seq(rng, 3, 6));
    const TokenVocab vocab = TokenVocab::from_names(names);

    size_t related = 0;
    for (size_t i = 0; i < names.size(); ++i) {
        const auto out = corrupt_name(names[i], dist, vocab, 9000 + i);
        const size_t shared = testsupport::oracle_multiset_matches(out, names[i]);
        if (shared >= 1) ++related;
    }
    CHECK(static_cast<double>(related) / static_cast<double>(names.size()) >= 0.95);
}

TEST_CASE("build_mcc_dataset balances and labels examples") {
    mnw::Rng rng(4004);
    std::vector<mnw::MethodRecord> records;
    for (int i = 0; i < 10; ++i) {
        records.push_back(testsupport::random_record(rng, "p"));
    }
    const TokenVocab vocab = TokenVocab::from_records(records);
    const auto dist = EditDistribution::fallback();

    const auto balanced = mnw::build_mcc_dataset(records, dist, vocab, 1.0, 5);
    CHECK(balanced.size() == 20);
    size_t consistent = 0, inconsistent = 0;
    for (const auto& ex : balanced) {
        if (ex.label == mnw::ConsistencyLabel::consistent) {
            ++consistent;
            CHECK(ex.presented_name == ex.record.name);
            CHECK(ex.provenance == mnw::LabeledExample::Provenance::original);
        } else {
            ++inconsistent;
            CHECK(ex.presented_name != ex.record.name);
            CHECK(ex.provenance == mnw::LabeledExample::Provenance::sampled);
        }
    }
    CHECK(consistent == 10);
    CHECK(inconsistent == 10);

    const auto half = mnw::build_mcc_dataset(records, dist, vocab, 0.5, 5);
    CHECK(half.size() == 15);

    const auto again = mnw::build_mcc_dataset(records, dist, vocab, 1.0, 5);
    CHECK(balanced == again);
    const auto other_seed = mnw::build_mcc_dataset(records, dist, vocab, 1.0, 6);
    CHECK(balanced != other_seed);
}

TEST_CASE("labeled datasets round-trip through their file format") {
    mnw::Rng rng(4005);
    std::vector<mnw::MethodRecord> records;
    for (int i = 0; i < 6; ++i) {
        records.push_back(testsupport::random_record(rng, "p"));
    }
    const auto dataset = mnw::build_mcc_dataset(
        records, EditDistribution::fallback(),
        TokenVocab::from_records(records), 1.0, 3);

    namespace fs = std::filesystem;
    const fs::path path = fs::temp_directory_path() / "mnw_dataset.jsonl";
    mnw::write_dataset(dataset, path);
    const auto loaded = mnw::read_dataset(path);
    CHECK(loaded == dataset);
    fs::remove(path);
}
