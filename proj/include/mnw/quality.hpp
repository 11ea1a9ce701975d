#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <unordered_set>
#include <vector>

#include "mnw/corpus.hpp"

namespace mnw {

// Word lists backing the checkable naming standards. The built-in lists are
// compiled in; each can be overridden by a plain-text word-per-line file.
struct QualityLexicons {
    std::unordered_set<std::string> verbs;
    std::unordered_set<std::string> dictionary;     // includes the verbs
    std::unordered_set<std::string> abbreviations;

    static const QualityLexicons& builtin();
    static QualityLexicons load(const std::filesystem::path& verbs_file,
                                const std::filesystem::path& dictionary_file,
                                const std::filesystem::path& abbreviations_file);
};

// Scores a method name 0-10 against ten checkable naming standards:
//  0 reasonable-length  2-7 subtokens, or >= 3 characters if a single token
//  1 verb-start         first subtoken is a known verb
//  2 consistent-casing  valid lowerCamelCase or pure lower snake_case
//  3 no-duplicate-run   no consecutive duplicate subtokens
//  4 dictionary-words   alphabetic subtokens are words or known abbreviations
//  5 boolean-prefix     boolean-returning methods start is/has/can/should
//  6 no-filler          not bare "do"; no stuff/thing/tmp/foo subtokens
//  7 no-class-echo      no subtoken repeats the full class name verbatim
//  8 digits-trail-only  numeric subtokens only in the final position
//  9 not-reserved       the identifier is not a Java reserved word
// Standards 5 and 7 auto-pass when no context is given.
struct QualityScore {
    int total = 0;
    std::array<bool, 10> passed{};

    static const std::array<std::string, 10>& standard_names();
};

QualityScore score_name(const std::string& name,
                        const MethodRecord* context = nullptr,
                        const QualityLexicons& lexicons = QualityLexicons::builtin());

struct QualitySummary {
    double mean = 0.0;
    std::array<size_t, 11> histogram{};  // histogram[t] = names scoring t
    double excellent_share = 0.0;        // share with total == 10
    size_t count = 0;
};

// Aggregate statistics over a list of names. Throws EmptyInput on an empty
// list; unsplittable names propagate their error.
QualitySummary score_corpus(const std::vector<std::string>& names,
                            const QualityLexicons& lexicons = QualityLexicons::builtin());

}  // namespace mnw
