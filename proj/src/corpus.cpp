#include "mnw/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>

#include <nlohmann/json.hpp>

#include "mnw/error.hpp"
#include "mnw/mnr.hpp"
#include "mnw/rng.hpp"

namespace mnw {

namespace {

using ordered_json = nlohmann::ordered_json;

// Splits an identifier, dropping it entirely when it folds to nothing
// (e.g. "_" or a non-ASCII name); used for every context identifier.
void append_split(SubtokenSeq& out, const std::string& ident) {
    if (ident.empty()) return;
    try {
        SubtokenSeq toks = split_identifier(ident);
        out.insert(out.end(), std::make_move_iterator(toks.begin()),
                   std::make_move_iterator(toks.end()));
    } catch (const EmptyIdentifier&) {
    }
}

size_t serialized_tokens(const MethodRecord& rec, const PromptTemplate& tpl) {
    // Counts what serialize_contexts would emit, without building the string.
    size_t tail_words = 0;
    bool in_word = false;
    for (char c : tpl.tail) {
        if (c == ' ') in_word = false;
        else if (!in_word) { ++tail_words; in_word = true; }
    }
    size_t count = tail_words + 1;  // prompt tail + mask
    if (!rec.class_name.empty()) count += 1 + rec.class_name.size();
    if (!rec.attributes.empty()) {
        count += 1 + rec.attributes.size() - 1;  // indicator + separators
        for (const auto& a : rec.attributes) count += a.size();
    }
    if (!rec.siblings.empty()) {
        count += 1 + rec.siblings.size() - 1;
        for (const auto& s : rec.siblings) count += s.size();
    }
    if (!rec.signature.empty()) count += 1 + rec.signature.size();
    if (!rec.body.empty()) count += 1 + rec.body.size();
    return count;
}

ordered_json seq_to_json(const SubtokenSeq& seq) {
    return ordered_json(seq);
}

ordered_json seq_list_to_json(const std::vector<SubtokenSeq>& seqs) {
    ordered_json arr = ordered_json::array();
    for (const auto& s : seqs) arr.push_back(seq_to_json(s));
    return arr;
}

SubtokenSeq seq_from_json(const ordered_json& j) {
    if (!j.is_array()) throw Error("token sequence is not an array");
    SubtokenSeq seq;
    for (const auto& t : j) {
        if (!t.is_string()) throw Error("token is not a string");
        seq.push_back(t.get<std::string>());
    }
    return seq;
}

std::vector<SubtokenSeq> seq_list_from_json(const ordered_json& j) {
    if (!j.is_array()) throw Error("sequence list is not an array");
    std::vector<SubtokenSeq> out;
    for (const auto& s : j) out.push_back(seq_from_json(s));
    return out;
}

}  // namespace

MethodRecord normalize(const RawMethod& raw) {
    return normalize(raw, PromptTemplate::standard());
}

MethodRecord normalize(const RawMethod& raw, const PromptTemplate& tpl) {
    MethodRecord rec;
    try {
        rec.name = split_identifier(raw.name);
    } catch (const EmptyIdentifier&) {
        throw NameUnsplittable("method name \"" + raw.name +
                               "\" yields no subtokens (" + raw.path + ")");
    }

    for (const auto& p : raw.param_names) append_split(rec.signature, p);
    for (const auto& t : raw.param_types) append_split(rec.signature, t);
    append_split(rec.signature, raw.return_type);
    for (const auto& ident : raw.body_identifiers) append_split(rec.body, ident);
    append_split(rec.class_name, raw.class_name);

    for (const auto& s : raw.sibling_names) {
        if (rec.siblings.size() == kMaxSiblings) break;
        SubtokenSeq seq;
        append_split(seq, s);
        if (!seq.empty()) rec.siblings.push_back(std::move(seq));
    }
    for (const auto& [attr_name, attr_type] : raw.attribute_entries) {
        if (rec.attributes.size() == kMaxAttributes) break;
        SubtokenSeq seq;
        append_split(seq, attr_name);
        append_split(seq, attr_type);
        if (!seq.empty()) rec.attributes.push_back(std::move(seq));
    }

    rec.project_id = raw.project_id;
    rec.path = raw.path;
    rec.byte_span = raw.byte_span;

    // Fit the 512-token serialized budget: cut the body from the tail, then
    // drop trailing siblings, then trailing attributes, then class-name
    // tokens. The signature is only touched when nothing else is left.
    auto over = [&] {
        const size_t used = serialized_tokens(rec, tpl);
        return used > kTokenBudget ? used - kTokenBudget : 0;
    };
    size_t excess = over();
    if (excess > 0 && !rec.body.empty()) {
        const size_t body_with_indicator = rec.body.size() + 1;
        if (excess >= body_with_indicator) {
            rec.body.clear();
        } else {
            rec.body.resize(rec.body.size() - excess);
        }
        excess = over();
    }
    while (excess > 0 && !rec.siblings.empty()) {
        rec.siblings.pop_back();
        excess = over();
    }
    while (excess > 0 && !rec.attributes.empty()) {
        rec.attributes.pop_back();
        excess = over();
    }
    if (excess > 0 && !rec.class_name.empty()) {
        if (excess >= rec.class_name.size() + 1) {
            rec.class_name.clear();
        } else {
            rec.class_name.resize(rec.class_name.size() - excess);
        }
        excess = over();
    }
    if (excess > 0 && !rec.signature.empty()) {
        // Unsatisfiable otherwise: a signature alone larger than the budget.
        if (excess >= rec.signature.size() + 1) {
            rec.signature.clear();
        } else {
            rec.signature.resize(rec.signature.size() - excess);
        }
    }
    return rec;
}

CorpusSplit split_by_project(const std::vector<MethodRecord>& records,
                             const std::array<double, 3>& ratios, uint64_t seed) {
    const double sum = ratios[0] + ratios[1] + ratios[2];
    if (std::abs(sum - 1.0) > 1e-9) {
        throw Error("split ratios sum to " + std::to_string(sum) + ", expected 1");
    }

    // Project order: sorted ids first so shuffling is seed-deterministic
    // regardless of record order in the input.
    std::map<std::string, std::vector<size_t>> by_project;
    for (size_t i = 0; i < records.size(); ++i) {
        by_project[records[i].project_id].push_back(i);
    }
    if (by_project.size() < 3) {
        throw TooFewProjects("need at least 3 distinct projects, have " +
                             std::to_string(by_project.size()));
    }

    std::vector<std::string> projects;
    projects.reserve(by_project.size());
    for (const auto& [id, _] : by_project) projects.push_back(id);
    Rng rng(seed);
    rng.shuffle(projects);

    const double total = static_cast<double>(records.size());
    std::array<double, 3> assigned{0.0, 0.0, 0.0};
    std::array<std::vector<size_t>, 3> members;
    for (const auto& id : projects) {
        std::array<double, 3> need;
        for (size_t part = 0; part < 3; ++part) {
            need[part] = ratios[part] * total - assigned[part];
        }
        const size_t pick = static_cast<size_t>(
            std::max_element(need.begin(), need.end()) - need.begin());
        const auto& idxs = by_project[id];
        members[pick].insert(members[pick].end(), idxs.begin(), idxs.end());
        assigned[pick] += static_cast<double>(idxs.size());
    }

    CorpusSplit split;
    for (size_t part = 0; part < 3; ++part) {
        std::sort(members[part].begin(), members[part].end());
        auto& dst = part == 0 ? split.train
                  : part == 1 ? split.validation
                              : split.test;
        dst.reserve(members[part].size());
        for (size_t idx : members[part]) dst.push_back(records[idx]);
    }
    return split;
}

std::string record_to_json_line(const MethodRecord& record) {
    ordered_json j;
    j["name"] = seq_to_json(record.name);
    j["signature"] = seq_to_json(record.signature);
    j["body"] = seq_to_json(record.body);
    j["class_name"] = seq_to_json(record.class_name);
    j["siblings"] = seq_list_to_json(record.siblings);
    j["attributes"] = seq_list_to_json(record.attributes);
    j["project"] = record.project_id;
    j["path"] = record.path;
    j["span"] = ordered_json::array({record.byte_span.first, record.byte_span.second});
    return j.dump();
}

MethodRecord record_from_json_line(const std::string& line, size_t line_number) {
    ordered_json j;
    try {
        j = ordered_json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        throw MalformedLine("line " + std::to_string(line_number) +
                            ": invalid JSON: " + e.what(), line_number);
    }
    try {
        MethodRecord rec;
        rec.name = seq_from_json(j.at("name"));
        rec.signature = seq_from_json(j.at("signature"));
        rec.body = seq_from_json(j.at("body"));
        rec.class_name = seq_from_json(j.at("class_name"));
        rec.siblings = seq_list_from_json(j.at("siblings"));
        rec.attributes = seq_list_from_json(j.at("attributes"));
        rec.project_id = j.at("project").get<std::string>();
        rec.path = j.at("path").get<std::string>();
        const auto& span = j.at("span");
        if (!span.is_array() || span.size() != 2) throw Error("span is not a pair");
        rec.byte_span = {span[0].get<size_t>(), span[1].get<size_t>()};
        return rec;
    } catch (const MalformedLine&) {
        throw;
    } catch (const std::exception& e) {
        throw MalformedLine("line " + std::to_string(line_number) + ": " + e.what(),
                            line_number);
    }
}

void write_corpus(const std::vector<MethodRecord>& records,
                  const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoFailure("cannot open for writing: " + path.string());
    for (const auto& rec : records) {
        out << record_to_json_line(rec) << '\n';
    }
    if (!out) throw IoFailure("write failed: " + path.string());
}

std::vector<MethodRecord> read_corpus(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure("cannot open for reading: " + path.string());
    std::vector<MethodRecord> records;
    std::string line;
    size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.empty()) continue;
        records.push_back(record_from_json_line(line, line_number));
    }
    return records;
}

}  // namespace mnw
