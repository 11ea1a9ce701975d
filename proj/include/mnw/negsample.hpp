#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "mnw/corpus.hpp"
#include "mnw/labels.hpp"
#include "mnw/tokenize.hpp"

namespace mnw {

// Per-subtoken probabilities of the four corruption operations.
struct EditDistribution {
    double p_keep = 0.0;
    double p_add = 0.0;
    double p_delete = 0.0;
    double p_replace = 0.0;

    // Configuration default for runs without rename pairs. Not an estimate
    // from any dataset; quantitative work should re-estimate from real pairs.
    static EditDistribution fallback();

    void validate() const;  // probabilities in [0,1], summing to 1 (±1e-9)
};

enum class EditOp : uint8_t { keep = 0, replace = 1, del = 2, add = 3 };

// Canonical minimal edit script turning `before` into `after` at token level
// (unit costs). Among all minimal scripts, the lexicographically smallest
// under the order keep < replace < delete < add is returned.
std::vector<EditOp> minimal_edit_script(const SubtokenSeq& before,
                                        const SubtokenSeq& after);

// Tallies canonical-script operations over all rename pairs and normalizes.
// Throws EmptyPairs on an empty list.
EditDistribution estimate_edit_distribution(
    const std::vector<std::pair<SubtokenSeq, SubtokenSeq>>& pairs);

// Rename-pair file: UTF-8 lines "old_identifier<TAB>new_identifier";
// identifiers are subtokenized on load.
std::vector<std::pair<SubtokenSeq, SubtokenSeq>> read_rename_pairs(
    const std::filesystem::path& path);

// Frequency-weighted replacement vocabulary, typically built over the
// training-split method names.
class TokenVocab {
  public:
    TokenVocab() = default;
    static TokenVocab from_names(const std::vector<SubtokenSeq>& names);
    static TokenVocab from_records(const std::vector<MethodRecord>& records);

    void add(const std::string& token, uint64_t count = 1);
    bool empty() const { return tokens_.empty(); }
    size_t size() const { return tokens_.size(); }

    // Frequency-weighted draw; u is uniform in [0,1).
    const std::string& sample(double u) const;
    // Same, excluding one token. Returns nullptr when no other token exists.
    const std::string* sample_excluding(double u, const std::string& banned) const;

  private:
    std::vector<std::pair<std::string, uint64_t>> tokens_;  // sorted by token
    std::vector<uint64_t> cumulative_;
    uint64_t total_ = 0;
    bool finalized_ = false;
    void finalize();
    friend class TokenVocabBuilder;
};

struct CorruptStats {
    std::array<uint64_t, 4> op_draws{0, 0, 0, 0};  // indexed by EditOp
    uint64_t attempts = 0;
    bool forced_replace = false;
};

// Corrupts a consistent name into a related-but-different one: per token an
// operation is drawn from `dist` (add inserts a vocab-weighted token before
// it; replace draws from the vocab excluding the current token). The result
// is guaranteed non-empty and different from the input: up to 16 rejection
// resamples, then one uniformly chosen token is force-replaced.
// Deterministic for a fixed (name, dist, vocab, seed).
// Throws DegenerateDistribution when no different name can be produced.
SubtokenSeq corrupt_name(const SubtokenSeq& name, const EditDistribution& dist,
                         const TokenVocab& vocab, uint64_t seed,
                         CorruptStats* stats = nullptr);

struct LabeledExample {
    MethodRecord record;
    SubtokenSeq presented_name;
    ConsistencyLabel label = ConsistencyLabel::consistent;
    enum class Provenance { original, sampled } provenance = Provenance::original;

    bool operator==(const LabeledExample&) const = default;
};

// One consistent example per record plus round(negative_ratio * N) sampled
// inconsistent examples (each record corrupted at most ceil(ratio) times),
// shuffled by the seed. Per-example RNG streams are derived from
// (seed, negative index), so generation order never changes results.
std::vector<LabeledExample> build_mcc_dataset(
    const std::vector<MethodRecord>& records, const EditDistribution& dist,
    const TokenVocab& vocab, double negative_ratio, uint64_t seed);

// Labeled dataset file: corpus schema plus presented_name, label, provenance.
void write_dataset(const std::vector<LabeledExample>& examples,
                   const std::filesystem::path& path);
std::vector<LabeledExample> read_dataset(const std::filesystem::path& path);

}  // namespace mnw
