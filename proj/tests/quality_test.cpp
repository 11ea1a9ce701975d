#include "doctest.h"

#include "mnw/error.hpp"
#include "mnw/quality.hpp"

using mnw::MethodRecord;
using mnw::QualityScore;
using mnw::score_name;

namespace {

// indexes into QualityScore::passed
enum Standard {
    kLength = 0,
    kVerbStart = 1,
    kCasing = 2,
    kNoDupRun = 3,
    kDictionary = 4,
    kBooleanPrefix = 5,
    kNoFiller = 6,
    kNoClassEcho = 7,
    kDigitsTrail = 8,
    kNotReserved = 9,
};

}  // namespace

TEST_CASE("a textbook name passes all ten standards") {
    const QualityScore s = score_name("getSystemProperties");
    CHECK(s.total == 10);
    for (bool flag : s.passed) CHECK(flag);
}

TEST_CASE("single letters fail length, verb and dictionary checks") {
    const QualityScore s = score_name("x");
    CHECK_FALSE(s.passed[kLength]);
    CHECK_FALSE(s.passed[kVerbStart]);
    CHECK_FALSE(s.passed[kDictionary]);
    CHECK(s.total == 7);
    CHECK(s.total <= 7);

    // lengthening the name to a dictionary verb repairs all three
    const QualityScore repaired = score_name("execute");
    CHECK(repaired.total == 10);
    CHECK(repaired.total >= s.total);
}

TEST_CASE("mixed casing fails the consistency standard") {
    const QualityScore s = score_name("get_Name2value");
    CHECK_FALSE(s.passed[kCasing]);
    CHECK_FALSE(s.passed[kDigitsTrail]);  // "2" sits mid-name
    CHECK(s.total <= 9);

    CHECK(score_name("readFileHeader").passed[kCasing]);
    CHECK(score_name("read_file_header").passed[kCasing]);
    CHECK_FALSE(score_name("Read_file").passed[kCasing]);
}

TEST_CASE("duplicate runs, fillers and reserved words fail their standards") {
    CHECK_FALSE(score_name("getGetName").passed[kNoDupRun]);
    CHECK(score_name("getName").passed[kNoDupRun]);

    CHECK_FALSE(score_name("doStuff").passed[kNoFiller]);
    CHECK_FALSE(score_name("handleTmpFile").passed[kNoFiller]);
    CHECK_FALSE(score_name("do").passed[kNoFiller]);  // bare "do"
    CHECK(score_name("doSetup").passed[kNoFiller]);

    CHECK_FALSE(score_name("class").passed[kNotReserved]);
    CHECK_FALSE(score_name("return").passed[kNotReserved]);
    CHECK(score_name("classify").passed[kNotReserved]);
}

TEST_CASE("digit placement controls the trailing-digit standard") {
    CHECK(score_name("parseHttpResponse2").passed[kDigitsTrail]);
    CHECK_FALSE(score_name("get2Values").passed[kDigitsTrail]);
}

TEST_CASE("too many subtokens fail the length standard") {
    CHECK_FALSE(
        score_name("getVeryLongChainOfWordsThatKeepsGoingOn").passed[kLength]);
    CHECK(score_name("getName").passed[kLength]);
    CHECK(score_name("run").passed[kLength]);  // one token, three chars
    CHECK_FALSE(score_name("ab").passed[kLength]);
}

TEST_CASE("boolean-returning methods need a question prefix") {
    MethodRecord rec;
    rec.name = {"check"};
    rec.signature = {"value", "int", "boolean"};  // returns boolean
    rec.class_name = {"session"};

    CHECK(score_name("isExpired", &rec).passed[kBooleanPrefix]);
    CHECK(score_name("hasChildren", &rec).passed[kBooleanPrefix]);
    CHECK(score_name("canExecute", &rec).passed[kBooleanPrefix]);
    CHECK(score_name("shouldRetry", &rec).passed[kBooleanPrefix]);
    CHECK_FALSE(score_name("getExpired", &rec).passed[kBooleanPrefix]);

    rec.signature = {"value", "int", "void"};
    CHECK(score_name("getExpired", &rec).passed[kBooleanPrefix]);
    CHECK(score_name("getExpired").passed[kBooleanPrefix]);  // no context
}

TEST_CASE("echoing the class name fails with context present") {
    MethodRecord rec;
    rec.name = {"x"};
    rec.signature = {"void"};
    rec.class_name = {"session"};
    CHECK_FALSE(score_name("getSession", &rec).passed[kNoClassEcho]);
    CHECK(score_name("getToken", &rec).passed[kNoClassEcho]);
    CHECK(score_name("getSession").passed[kNoClassEcho]);  // no context

    rec.class_name = {"form", "data"};
    CHECK_FALSE(score_name("getFormdata", &rec).passed[kNoClassEcho]);
    CHECK(score_name("getFormData", &rec).passed[kNoClassEcho]);  // two tokens
}

TEST_CASE("score_name validates input") {
    CHECK_THROWS_AS(score_name(""), mnw::EmptyName);
    CHECK_THROWS_AS(score_name("___"), mnw::EmptyName);
}

TEST_CASE("score_corpus aggregates means, histogram and excellent share") {
    const auto summary =
        mnw::score_corpus({"getSystemProperties", "get_Name2value"});
    CHECK(summary.count == 2);
    CHECK(summary.histogram[10] == 1);
    CHECK(summary.excellent_share == doctest::Approx(0.5));
    size_t total = 0;
    for (size_t c : summary.histogram) total += c;
    CHECK(total == 2);
    CHECK(summary.mean == doctest::Approx((10.0 + 8.0) / 2.0));

    const auto perfect = mnw::score_corpus({"getName", "setValue"});
    CHECK(perfect.mean == doctest::Approx(10.0));
    CHECK(perfect.excellent_share == doctest::Approx(1.0));

    CHECK_THROWS_AS(mnw::score_corpus({}), mnw::EmptyInput);
}
