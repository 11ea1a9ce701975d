#pragma once

#include <filesystem>
#include <string>
#include <unordered_map>
#include <vector>

#include "mnw/corpus.hpp"
#include "mnw/tokenize.hpp"

namespace mnw {

struct Candidate {
    SubtokenSeq name;
    double score = 0.0;  // higher is better
};

// Descending score, ties broken lexicographically by name.
void sort_candidates(std::vector<Candidate>& candidates);

// Indicator words and prompt wording for context serialization. The standard
// template is the canonical one; backends trained with other wording can be
// served by loading an override file (JSON object with any of the keys
// class_word, attributes_word, siblings_word, signature_word, body_word,
// entry_separator, tail, mask).
struct PromptTemplate {
    std::string class_word = "class:";
    std::string attributes_word = "attributes:";
    std::string siblings_word = "siblings:";
    std::string signature_word = "signature:";
    std::string body_word = "body:";
    std::string entry_separator = ";";
    std::string tail = "The method name is";
    std::string mask = "<MASK>";

    static const PromptTemplate& standard();
    static PromptTemplate load(const std::filesystem::path& path);
};

struct PromptText {
    std::string text;
    size_t token_count = 0;  // whitespace-delimited tokens, mask included
};

// Renders `class: ... attributes: a1 ; a2 siblings: s1 ; s2 signature: ...
// body: ... The method name is <MASK>`, omitting empty context groups
// together with their indicator word. Throws BudgetExceeded when the result
// breaks the 512-token budget (an unnormalized input).
PromptText serialize_contexts(const MethodRecord& record,
                              const PromptTemplate& tpl = PromptTemplate::standard());

// IDF-weighted bag-of-subtokens vectors over serialized contexts (template
// tail, mask and entry separators excluded). Immutable once built.
class RetrievalIndex {
  public:
    struct Entry {
        SubtokenSeq name;
        std::string path;
        std::pair<size_t, size_t> byte_span;
        std::unordered_map<std::string, double> vector;  // token -> tf*idf
        double norm = 0.0;
    };

    size_t size() const { return entries_.size(); }
    const std::vector<Entry>& entries() const { return entries_; }
    double idf(const std::string& token) const;

    // Weighted query vector for an arbitrary record, using the corpus IDFs.
    std::unordered_map<std::string, double> vectorize(const MethodRecord& record) const;

    friend RetrievalIndex build_retrieval_index(const std::vector<MethodRecord>&,
                                                const PromptTemplate&);

  private:
    std::vector<Entry> entries_;
    std::unordered_map<std::string, double> idf_;
    PromptTemplate tpl_;
};

// Throws EmptyCorpus on an empty record list.
RetrievalIndex build_retrieval_index(
    const std::vector<MethodRecord>& records,
    const PromptTemplate& tpl = PromptTemplate::standard());

// Top-k neighbors by cosine similarity of context vectors; candidate name is
// the neighbor's method name. The query record itself (same path and span)
// is never returned. Throws EmptyIndex if the index is empty.
std::vector<Candidate> recommend_retrieval(const RetrievalIndex& index,
                                           const MethodRecord& record, int k);

}  // namespace mnw
