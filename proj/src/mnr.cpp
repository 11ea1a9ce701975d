#include "mnw/mnr.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include <nlohmann/json.hpp>

#include "mnw/error.hpp"

namespace mnw {

void sort_candidates(std::vector<Candidate>& candidates) {
    std::sort(candidates.begin(), candidates.end(),
              [](const Candidate& a, const Candidate& b) {
                  if (a.score != b.score) return a.score > b.score;
                  return a.name < b.name;
              });
}

const PromptTemplate& PromptTemplate::standard() {
    static const PromptTemplate tpl;
    return tpl;
}

PromptTemplate PromptTemplate::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoFailure("cannot open template file: " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error("template file " + path.string() + ": " + e.what());
    }
    PromptTemplate tpl;
    auto get = [&](const char* key, std::string& field) {
        if (j.contains(key)) field = j.at(key).get<std::string>();
    };
    get("class_word", tpl.class_word);
    get("attributes_word", tpl.attributes_word);
    get("siblings_word", tpl.siblings_word);
    get("signature_word", tpl.signature_word);
    get("body_word", tpl.body_word);
    get("entry_separator", tpl.entry_separator);
    get("tail", tpl.tail);
    get("mask", tpl.mask);
    return tpl;
}

namespace {

void append_word(std::string& text, size_t& count, const std::string& word) {
    if (!text.empty()) text.push_back(' ');
    text += word;
    ++count;
}

void append_seq(std::string& text, size_t& count, const SubtokenSeq& seq) {
    for (const auto& tok : seq) append_word(text, count, tok);
}

void append_group(std::string& text, size_t& count, const std::string& indicator,
                  const std::vector<SubtokenSeq>& entries,
                  const std::string& separator) {
    if (entries.empty()) return;
    append_word(text, count, indicator);
    for (size_t i = 0; i < entries.size(); ++i) {
        if (i > 0) append_word(text, count, separator);
        append_seq(text, count, entries[i]);
    }
}

}  // namespace

PromptText serialize_contexts(const MethodRecord& record, const PromptTemplate& tpl) {
    PromptText prompt;
    if (!record.class_name.empty()) {
        append_word(prompt.text, prompt.token_count, tpl.class_word);
        append_seq(prompt.text, prompt.token_count, record.class_name);
    }
    append_group(prompt.text, prompt.token_count, tpl.attributes_word,
                 record.attributes, tpl.entry_separator);
    append_group(prompt.text, prompt.token_count, tpl.siblings_word,
                 record.siblings, tpl.entry_separator);
    if (!record.signature.empty()) {
        append_word(prompt.text, prompt.token_count, tpl.signature_word);
        append_seq(prompt.text, prompt.token_count, record.signature);
    }
    if (!record.body.empty()) {
        append_word(prompt.text, prompt.token_count, tpl.body_word);
        append_seq(prompt.text, prompt.token_count, record.body);
    }

    // prompt tail, word by word so token_count matches whitespace splitting
    size_t start = 0;
    while (start < tpl.tail.size()) {
        size_t end = tpl.tail.find(' ', start);
        if (end == std::string::npos) end = tpl.tail.size();
        if (end > start) {
            append_word(prompt.text, prompt.token_count,
                        tpl.tail.substr(start, end - start));
        }
        start = end + 1;
    }
    append_word(prompt.text, prompt.token_count, tpl.mask);

    if (prompt.token_count > kTokenBudget) {
        throw BudgetExceeded("serialized record uses " +
                             std::to_string(prompt.token_count) +
                             " tokens (limit " + std::to_string(kTokenBudget) +
                             "); normalize the record first");
    }
    return prompt;
}

namespace {

// Context bag for retrieval: subtokens plus indicator words, but neither the
// template tail, the mask, nor the entry separators.
std::unordered_map<std::string, size_t> context_bag(const MethodRecord& rec,
                                                    const PromptTemplate& tpl) {
    std::unordered_map<std::string, size_t> bag;
    if (!rec.class_name.empty()) {
        ++bag[tpl.class_word];
        for (const auto& t : rec.class_name) ++bag[t];
    }
    if (!rec.attributes.empty()) {
        ++bag[tpl.attributes_word];
        for (const auto& a : rec.attributes)
            for (const auto& t : a) ++bag[t];
    }
    if (!rec.siblings.empty()) {
        ++bag[tpl.siblings_word];
        for (const auto& s : rec.siblings)
            for (const auto& t : s) ++bag[t];
    }
    if (!rec.signature.empty()) {
        ++bag[tpl.signature_word];
        for (const auto& t : rec.signature) ++bag[t];
    }
    if (!rec.body.empty()) {
        ++bag[tpl.body_word];
        for (const auto& t : rec.body) ++bag[t];
    }
    return bag;
}

double vector_norm(const std::unordered_map<std::string, double>& v) {
    double sum = 0.0;
    for (const auto& [_, w] : v) sum += w * w;
    return std::sqrt(sum);
}

}  // namespace

double RetrievalIndex::idf(const std::string& token) const {
    auto it = idf_.find(token);
    return it == idf_.end() ? 0.0 : it->second;
}

std::unordered_map<std::string, double> RetrievalIndex::vectorize(
    const MethodRecord& record) const {
    std::unordered_map<std::string, double> vec;
    for (const auto& [token, count] : context_bag(record, tpl_)) {
        auto it = idf_.find(token);
        if (it == idf_.end() || it->second == 0.0) continue;
        vec[token] = static_cast<double>(count) * it->second;
    }
    return vec;
}

RetrievalIndex build_retrieval_index(const std::vector<MethodRecord>& records,
                                     const PromptTemplate& tpl) {
    if (records.empty()) throw EmptyCorpus("cannot index an empty corpus");

    RetrievalIndex index;
    index.tpl_ = tpl;

    std::vector<std::unordered_map<std::string, size_t>> bags;
    bags.reserve(records.size());
    std::unordered_map<std::string, size_t> doc_freq;
    for (const auto& rec : records) {
        bags.push_back(context_bag(rec, tpl));
        for (const auto& [token, _] : bags.back()) ++doc_freq[token];
    }

    const double n = static_cast<double>(records.size());
    for (const auto& [token, df] : doc_freq) {
        index.idf_[token] = std::log(n / static_cast<double>(df));
    }

    index.entries_.reserve(records.size());
    for (size_t i = 0; i < records.size(); ++i) {
        RetrievalIndex::Entry entry;
        entry.name = records[i].name;
        entry.path = records[i].path;
        entry.byte_span = records[i].byte_span;
        for (const auto& [token, count] : bags[i]) {
            const double idf = index.idf_[token];
            if (idf > 0.0) {
                entry.vector[token] = static_cast<double>(count) * idf;
            }
        }
        entry.norm = vector_norm(entry.vector);
        index.entries_.push_back(std::move(entry));
    }
    return index;
}

std::vector<Candidate> recommend_retrieval(const RetrievalIndex& index,
                                           const MethodRecord& record, int k) {
    if (index.size() == 0) throw EmptyIndex("retrieval index is empty");
    if (k < 1) throw Error("k must be >= 1");

    const auto query = index.vectorize(record);
    const double query_norm = vector_norm(query);

    std::vector<Candidate> candidates;
    candidates.reserve(index.size());
    for (const auto& entry : index.entries()) {
        if (entry.path == record.path && entry.byte_span == record.byte_span) {
            continue;  // never recommend the query to itself
        }
        double dot = 0.0;
        if (query_norm > 0.0 && entry.norm > 0.0) {
            for (const auto& [token, weight] : query) {
                auto it = entry.vector.find(token);
                if (it != entry.vector.end()) dot += weight * it->second;
            }
        }
        const double denom = query_norm * entry.norm;
        const double cosine = denom > 0.0 ? std::clamp(dot / denom, 0.0, 1.0) : 0.0;
        candidates.push_back({entry.name, cosine});
    }
    sort_candidates(candidates);
    if (candidates.size() > static_cast<size_t>(k)) {
        candidates.resize(static_cast<size_t>(k));
    }
    return candidates;
}

}  // namespace mnw
