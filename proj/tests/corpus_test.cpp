#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <set>

#include "mnw/corpus.hpp"
#include "mnw/error.hpp"
#include "mnw/mnr.hpp"
#include "mnw/rng.hpp"
#include "test_support.hpp"

using mnw::MethodRecord;
using mnw::RawMethod;
using mnw::SubtokenSeq;
using mnw::normalize;

namespace {

RawMethod raw_method() {
    RawMethod raw;
    raw.name = "loadUserData";
    raw.param_names = {"userId", "limit"};
    raw.param_types = {"long", "int"};
    raw.return_type = "UserData";
    raw.body_identifiers = {"repository", "findUser", "userId", "limit"};
    raw.class_name = "UserService";
    raw.sibling_names = {"saveUserData", "deleteUser", "touch"};
    raw.attribute_entries = {{"repository", "UserRepository"}, {"cacheSize", "int"}};
    raw.project_id = "demo";
    raw.path = "demo/src/UserService.java";
    raw.byte_span = {100, 420};
    return raw;
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("normalize splits every context and fixes the signature order") {
    const MethodRecord rec = normalize(raw_method());
    CHECK(rec.name == SubtokenSeq{"load", "user", "data"});
    // param names, then param types, then return type
    CHECK(rec.signature == SubtokenSeq{"user", "id", "limit", "long", "int",
                                       "user", "data"});
    CHECK(rec.class_name == SubtokenSeq{"user", "service"});
    REQUIRE(rec.siblings.size() == 3);
    CHECK(rec.siblings[0] == SubtokenSeq{"save", "user", "data"});
    REQUIRE(rec.attributes.size() == 2);
    CHECK(rec.attributes[0] == SubtokenSeq{"repository", "user", "repository"});
    CHECK(rec.attributes[1] == SubtokenSeq{"cache", "size", "int"});
    CHECK(rec.byte_span == std::make_pair<size_t, size_t>(100, 420));
}

TEST_CASE("normalize keeps the first ten siblings and attributes") {
    RawMethod raw = raw_method();
    raw.sibling_names.clear();
    for (int i = 0; i < 15; ++i) {
        raw.sibling_names.push_back("sibling" + std::to_string(i));
    }
    raw.attribute_entries.clear();
    for (int i = 0; i < 12; ++i) {
        raw.attribute_entries.emplace_back("field" + std::to_string(i), "int");
    }
    const MethodRecord rec = normalize(raw);
    REQUIRE(rec.siblings.size() == 10);
    CHECK(rec.siblings.front() == SubtokenSeq{"sibling", "0"});
    CHECK(rec.siblings.back() == SubtokenSeq{"sibling", "9"});
    CHECK(rec.attributes.size() == 10);

    RawMethod small = raw_method();
    CHECK(normalize(small).siblings.size() == 3);  // untouched below the cap
}

TEST_CASE("normalize trims an oversized body back under the 512-token budget") {
    RawMethod raw = raw_method();
    raw.body_identifiers.clear();
    for (int i = 0; i < 5000; ++i) raw.body_identifiers.push_back("tokenValue");
    const MethodRecord rec = normalize(raw);
    const auto prompt = serialize_contexts(rec);
    CHECK(prompt.token_count <= mnw::kTokenBudget);
    CHECK(prompt.token_count == mnw::kTokenBudget);  // trimmed token by token
    CHECK(!rec.body.empty());
    CHECK(!rec.siblings.empty());  // only the body was cut
    CHECK(rec.signature == normalize(raw_method()).signature);
}

TEST_CASE("normalize drops siblings and attributes only after the body") {
    RawMethod raw = raw_method();
    raw.body_identifiers.clear();
    raw.sibling_names.clear();
    // ten enormous siblings: body is empty, so siblings must be dropped
    for (int i = 0; i < 10; ++i) {
        std::string long_name;
        for (int j = 0; j < 70; ++j) long_name += "veryLongPart";
        raw.sibling_names.push_back(long_name);
    }
    const MethodRecord rec = normalize(raw);
    CHECK(serialize_contexts(rec).token_count <= mnw::kTokenBudget);
    CHECK(rec.siblings.size() < 10);
    CHECK(rec.signature == normalize(raw_method()).signature);  // kept whole
}

TEST_CASE("normalize rejects names that fold to nothing") {
    RawMethod raw = raw_method();
    raw.name = "____";
    CHECK_THROWS_AS(normalize(raw), mnw::NameUnsplittable);
}

TEST_CASE("corpus files round-trip losslessly") {
    mnw::Rng rng(3001);
    std::vector<MethodRecord> records;
    for (int i = 0; i < 50; ++i) {
        records.push_back(testsupport::random_record(rng, "proj" +
                                                     std::to_string(i % 5)));
    }
    const auto path = temp_file("mnw_corpus_roundtrip.jsonl");
    mnw::write_corpus(records, path);
    CHECK(mnw::read_corpus(path) == records);

    mnw::write_corpus({}, path);
    CHECK(mnw::read_corpus(path).empty());
    std::filesystem::remove(path);
}

TEST_CASE("corpus lines keep the documented key order") {
    const MethodRecord rec = normalize(raw_method());
    const std::string line = mnw::record_to_json_line(rec);
    const char* keys[] = {"\"name\"",   "\"signature\"",  "\"body\"",
                          "\"class_name\"", "\"siblings\"", "\"attributes\"",
                          "\"project\"",    "\"path\"",     "\"span\""};
    size_t last = 0;
    for (const char* key : keys) {
        const size_t at = line.find(key);
        REQUIRE(at != std::string::npos);
        CHECK(at >= last);
        last = at;
    }
}

TEST_CASE("a corrupted line reports its line number") {
    const auto path = temp_file("mnw_corpus_corrupt.jsonl");
    {
        mnw::Rng rng(3002);
        std::vector<MethodRecord> records;
        for (int i = 0; i < 3; ++i) {
            records.push_back(testsupport::random_record(rng, "p"));
        }
        mnw::write_corpus(records, path);
        std::ofstream out(path, std::ios::app);
        out << "{\"name\": [\"broken\"\n";
    }
    try {
        mnw::read_corpus(path);
        FAIL("expected MalformedLine");
    } catch (const mnw::MalformedLine& e) {
        CHECK(e.line == 4);
    }
    std::filesystem::remove(path);
    CHECK_THROWS_AS(mnw::read_corpus(temp_file("mnw_missing.jsonl")),
                    mnw::IoFailure);
}

TEST_CASE("split_by_project forces one project per part when counts match") {
    mnw::Rng rng(3003);
    std::vector<MethodRecord> records;
    for (int p = 0; p < 3; ++p) {
        for (int i = 0; i < 4; ++i) {
            records.push_back(testsupport::random_record(rng, "proj" +
                                                         std::to_string(p)));
        }
    }
    const auto split = mnw::split_by_project(records, {1.0 / 3, 1.0 / 3, 1.0 / 3}, 7);
    CHECK(split.train.size() == 4);
    CHECK(split.validation.size() == 4);
    CHECK(split.test.size() == 4);

    const auto again = mnw::split_by_project(records, {1.0 / 3, 1.0 / 3, 1.0 / 3}, 7);
    CHECK(split.train == again.train);
    CHECK(split.validation == again.validation);
    CHECK(split.test == again.test);
}

TEST_CASE("greedy assignment tracks 8/1/1 on ten equal projects") {
    mnw::Rng rng(3004);
    std::vector<MethodRecord> records;
    for (int p = 0; p < 10; ++p) {
        for (int i = 0; i < 6; ++i) {
            records.push_back(testsupport::random_record(rng, "proj" +
                                                         std::to_string(p)));
        }
    }
    const auto split = mnw::split_by_project(records, {0.8, 0.1, 0.1}, 99);
    CHECK(split.train.size() == 48);
    CHECK(split.validation.size() == 6);
    CHECK(split.test.size() == 6);
}

TEST_CASE("split_by_project validates its inputs") {
    mnw::Rng rng(3005);
    std::vector<MethodRecord> two;
    two.push_back(testsupport::random_record(rng, "a"));
    two.push_back(testsupport::random_record(rng, "b"));
    CHECK_THROWS_AS(mnw::split_by_project(two, {1.0 / 3, 1.0 / 3, 1.0 / 3}, 1),
                    mnw::TooFewProjects);

    std::vector<MethodRecord> three = two;
    three.push_back(testsupport::random_record(rng, "c"));
    CHECK_THROWS_AS(mnw::split_by_project(three, {0.5, 0.2, 0.2}, 1), mnw::Error);
}

TEST_CASE("project parts never share a project id") {
    mnw::Rng rng(3006);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<MethodRecord> records;
        const size_t projects = 3 + rng.bounded(8);
        for (size_t p = 0; p < projects; ++p) {
            const size_t count = 1 + rng.bounded(10);
            for (size_t i = 0; i < count; ++i) {
                records.push_back(testsupport::random_record(
                    rng, "proj" + std::to_string(p)));
            }
        }
        const auto split = mnw::split_by_project(records, {0.6, 0.2, 0.2},
                                                 rng.next_u64());
        std::set<std::string> train_ids, val_ids, test_ids;
        for (const auto& r : split.train) train_ids.insert(r.project_id);
        for (const auto& r : split.validation) val_ids.insert(r.project_id);
        for (const auto& r : split.test) test_ids.insert(r.project_id);
        for (const auto& id : train_ids) {
            CHECK(val_ids.count(id) == 0);
            CHECK(test_ids.count(id) == 0);
        }
        for (const auto& id : val_ids) CHECK(test_ids.count(id) == 0);
        CHECK(split.train.size() + split.validation.size() + split.test.size() ==
              records.size());
    }
}
