#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "mnw/java_extract.hpp"
#include "mnw/tokenize.hpp"

namespace mnw {

struct PromptTemplate;  // mnr.hpp

// A fully normalized method: every identifier subtokenized, at most ten
// siblings and ten attributes, and a serialized form of at most 512 tokens.
struct MethodRecord {
    SubtokenSeq name;
    SubtokenSeq signature;     // param names, param types, return type
    SubtokenSeq body;
    SubtokenSeq class_name;
    std::vector<SubtokenSeq> siblings;    // <= 10
    std::vector<SubtokenSeq> attributes;  // <= 10, each = name + type tokens
    std::string project_id;
    std::string path;
    std::pair<size_t, size_t> byte_span{0, 0};

    bool operator==(const MethodRecord&) const = default;
};

inline constexpr size_t kMaxSiblings = 10;
inline constexpr size_t kMaxAttributes = 10;
inline constexpr size_t kTokenBudget = 512;

// Subtokenizes a RawMethod and enforces the caps and the 512-token serialized
// budget (body trimmed from the tail first, then siblings, attributes and
// class name; name and signature are preserved whenever possible).
// Throws NameUnsplittable when the method name folds to no subtokens.
MethodRecord normalize(const RawMethod& raw);
MethodRecord normalize(const RawMethod& raw, const PromptTemplate& tpl);

struct CorpusSplit {
    std::vector<MethodRecord> train;
    std::vector<MethodRecord> validation;
    std::vector<MethodRecord> test;
};

// Assigns whole projects to train/validation/test so the record counts
// approach the given ratios; projects are shuffled by the seeded RNG and
// placed greedily into the part with the largest remaining need. The three
// project_id sets are pairwise disjoint by construction.
// Requires ratios summing to 1 (±1e-9) and at least 3 distinct projects.
CorpusSplit split_by_project(const std::vector<MethodRecord>& records,
                             const std::array<double, 3>& ratios, uint64_t seed);

// Line-oriented corpus file: one record per line with fixed key order
// name, signature, body, class_name, siblings, attributes, project, path,
// span. Loss-free round trip.
void write_corpus(const std::vector<MethodRecord>& records,
                  const std::filesystem::path& path);
std::vector<MethodRecord> read_corpus(const std::filesystem::path& path);

// Single-record codecs shared by the dataset files and the wire protocol.
std::string record_to_json_line(const MethodRecord& record);
MethodRecord record_from_json_line(const std::string& line, size_t line_number);

}  // namespace mnw
