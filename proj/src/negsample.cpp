#include "mnw/negsample.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>

#include <nlohmann/json.hpp>

#include "mnw/error.hpp"
#include "mnw/rng.hpp"

namespace mnw {

EditDistribution EditDistribution::fallback() {
    return {0.70, 0.08, 0.10, 0.12};
}

void EditDistribution::validate() const {
    const double probs[4] = {p_keep, p_add, p_delete, p_replace};
    double sum = 0.0;
    for (double p : probs) {
        if (p < 0.0 || p > 1.0 || !std::isfinite(p)) {
            throw Error("edit probability out of [0,1]");
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        throw Error("edit probabilities sum to " + std::to_string(sum));
    }
}

std::vector<EditOp> minimal_edit_script(const SubtokenSeq& before,
                                        const SubtokenSeq& after) {
    const size_t m = before.size();
    const size_t n = after.size();

    // cost[i][j] = edit distance between before[i:] and after[j:]
    std::vector<std::vector<uint32_t>> cost(m + 1, std::vector<uint32_t>(n + 1, 0));
    for (size_t i = 0; i <= m; ++i) cost[i][n] = static_cast<uint32_t>(m - i);
    for (size_t j = 0; j <= n; ++j) cost[m][j] = static_cast<uint32_t>(n - j);
    for (size_t i = m; i-- > 0;) {
        for (size_t j = n; j-- > 0;) {
            const uint32_t sub =
                cost[i + 1][j + 1] + (before[i] == after[j] ? 0u : 1u);
            cost[i][j] = std::min({sub, cost[i + 1][j] + 1, cost[i][j + 1] + 1});
        }
    }

    // Forward walk taking the lowest-ranked op that still completes a
    // minimal script; this yields the lexicographically smallest script.
    std::vector<EditOp> script;
    size_t i = 0, j = 0;
    while (i < m || j < n) {
        if (i < m && j < n && before[i] == after[j] &&
            cost[i + 1][j + 1] == cost[i][j]) {
            script.push_back(EditOp::keep);
            ++i, ++j;
        } else if (i < m && j < n && before[i] != after[j] &&
                   cost[i + 1][j + 1] + 1 == cost[i][j]) {
            script.push_back(EditOp::replace);
            ++i, ++j;
        } else if (i < m && cost[i + 1][j] + 1 == cost[i][j]) {
            script.push_back(EditOp::del);
            ++i;
        } else {
            script.push_back(EditOp::add);
            ++j;
        }
    }
    return script;
}

EditDistribution estimate_edit_distribution(
    const std::vector<std::pair<SubtokenSeq, SubtokenSeq>>& pairs) {
    if (pairs.empty()) throw EmptyPairs("no rename pairs to estimate from");

    std::array<uint64_t, 4> counts{0, 0, 0, 0};
    for (const auto& [before, after] : pairs) {
        for (EditOp op : minimal_edit_script(before, after)) {
            ++counts[static_cast<size_t>(op)];
        }
    }
    const uint64_t total = counts[0] + counts[1] + counts[2] + counts[3];
    if (total == 0) {
        // only empty-to-empty pairs; nothing observable
        throw EmptyPairs("rename pairs contain no tokens");
    }
    const double t = static_cast<double>(total);
    EditDistribution dist;
    dist.p_keep = static_cast<double>(counts[static_cast<size_t>(EditOp::keep)]) / t;
    dist.p_replace =
        static_cast<double>(counts[static_cast<size_t>(EditOp::replace)]) / t;
    dist.p_delete = static_cast<double>(counts[static_cast<size_t>(EditOp::del)]) / t;
    dist.p_add = static_cast<double>(counts[static_cast<size_t>(EditOp::add)]) / t;
    return dist;
}

std::vector<std::pair<SubtokenSeq, SubtokenSeq>> read_rename_pairs(
    const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoFailure("cannot open rename pairs: " + path.string());
    std::vector<std::pair<SubtokenSeq, SubtokenSeq>> pairs;
    std::string line;
    size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const size_t tab = line.find('\t');
        if (tab == std::string::npos) {
            throw MalformedLine("rename pairs line " + std::to_string(line_number) +
                                ": no tab separator", line_number);
        }
        try {
            pairs.emplace_back(split_identifier(line.substr(0, tab)),
                               split_identifier(line.substr(tab + 1)));
        } catch (const EmptyIdentifier& e) {
            throw MalformedLine("rename pairs line " + std::to_string(line_number) +
                                ": " + e.what(), line_number);
        }
    }
    return pairs;
}

// ---------------------------------------------------------------------------
// TokenVocab
// ---------------------------------------------------------------------------

TokenVocab TokenVocab::from_names(const std::vector<SubtokenSeq>& names) {
    std::map<std::string, uint64_t> counts;
    for (const auto& name : names)
        for (const auto& tok : name) ++counts[tok];
    TokenVocab vocab;
    for (const auto& [tok, count] : counts) vocab.tokens_.emplace_back(tok, count);
    vocab.finalize();
    return vocab;
}

TokenVocab TokenVocab::from_records(const std::vector<MethodRecord>& records) {
    std::vector<SubtokenSeq> names;
    names.reserve(records.size());
    for (const auto& rec : records) names.push_back(rec.name);
    return from_names(names);
}

void TokenVocab::add(const std::string& token, uint64_t count) {
    auto it = std::lower_bound(
        tokens_.begin(), tokens_.end(), token,
        [](const auto& entry, const std::string& t) { return entry.first < t; });
    if (it != tokens_.end() && it->first == token) {
        it->second += count;
    } else {
        tokens_.insert(it, {token, count});
    }
    finalize();
}

void TokenVocab::finalize() {
    cumulative_.resize(tokens_.size());
    total_ = 0;
    for (size_t i = 0; i < tokens_.size(); ++i) {
        total_ += tokens_[i].second;
        cumulative_[i] = total_;
    }
    finalized_ = true;
}

const std::string& TokenVocab::sample(double u) const {
    if (tokens_.empty()) throw Error("sampling from an empty vocabulary");
    const uint64_t target =
        std::min<uint64_t>(static_cast<uint64_t>(u * static_cast<double>(total_)),
                           total_ - 1);
    const size_t idx = static_cast<size_t>(
        std::upper_bound(cumulative_.begin(), cumulative_.end(), target) -
        cumulative_.begin());
    return tokens_[std::min(idx, tokens_.size() - 1)].first;
}

const std::string* TokenVocab::sample_excluding(double u,
                                                const std::string& banned) const {
    if (tokens_.empty()) return nullptr;
    // Draw over the weight mass with the banned token carved out.
    auto it = std::lower_bound(
        tokens_.begin(), tokens_.end(), banned,
        [](const auto& entry, const std::string& t) { return entry.first < t; });
    uint64_t banned_weight = 0;
    size_t banned_idx = tokens_.size();
    if (it != tokens_.end() && it->first == banned) {
        banned_weight = it->second;
        banned_idx = static_cast<size_t>(it - tokens_.begin());
    }
    const uint64_t effective = total_ - banned_weight;
    if (effective == 0) return nullptr;

    uint64_t target = std::min<uint64_t>(
        static_cast<uint64_t>(u * static_cast<double>(effective)), effective - 1);
    // Shift the draw past the banned token's span.
    if (banned_idx < tokens_.size()) {
        const uint64_t before_banned = cumulative_[banned_idx] - banned_weight;
        if (target >= before_banned) target += banned_weight;
    }
    const size_t idx = static_cast<size_t>(
        std::upper_bound(cumulative_.begin(), cumulative_.end(), target) -
        cumulative_.begin());
    return &tokens_[std::min(idx, tokens_.size() - 1)].first;
}

// ---------------------------------------------------------------------------
// corrupt_name
// ---------------------------------------------------------------------------

namespace {

EditOp draw_op(const EditDistribution& dist, double u) {
    if (u < dist.p_keep) return EditOp::keep;
    u -= dist.p_keep;
    if (u < dist.p_add) return EditOp::add;
    u -= dist.p_add;
    if (u < dist.p_delete) return EditOp::del;
    return EditOp::replace;
}

}  // namespace

SubtokenSeq corrupt_name(const SubtokenSeq& name, const EditDistribution& dist,
                         const TokenVocab& vocab, uint64_t seed,
                         CorruptStats* stats) {
    if (name.empty()) throw EmptyName("corrupt_name: empty name");
    dist.validate();
    if (vocab.empty()) {
        throw DegenerateDistribution("corrupt_name: empty replacement vocabulary");
    }

    CorruptStats local;
    CorruptStats& st = stats ? *stats : local;
    Rng rng(seed);

    constexpr int kMaxAttempts = 17;  // 1 + up to 16 rejection resamples
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        ++st.attempts;
        SubtokenSeq out;
        out.reserve(name.size() + 2);
        for (const std::string& tok : name) {
            const EditOp op = draw_op(dist, rng.uniform());
            ++st.op_draws[static_cast<size_t>(op)];
            switch (op) {
                case EditOp::keep:
                    out.push_back(tok);
                    break;
                case EditOp::add:
                    out.push_back(vocab.sample(rng.uniform()));
                    out.push_back(tok);
                    break;
                case EditOp::del:
                    break;
                case EditOp::replace: {
                    const std::string* repl =
                        vocab.sample_excluding(rng.uniform(), tok);
                    // No distinct token available: keep, the guards below
                    // still ensure the final name differs.
                    out.push_back(repl ? *repl : tok);
                    break;
                }
            }
        }
        if (!out.empty() && out != name) return out;
    }

    // Forced correction: replace one uniformly chosen token.
    st.forced_replace = true;
    SubtokenSeq out = name;
    const size_t start = static_cast<size_t>(rng.bounded(out.size()));
    for (size_t probe = 0; probe < out.size(); ++probe) {
        const size_t pos = (start + probe) % out.size();
        const std::string* repl = vocab.sample_excluding(rng.uniform(), out[pos]);
        if (repl) {
            out[pos] = *repl;
            return out;
        }
    }
    throw DegenerateDistribution(
        "corrupt_name: vocabulary offers no token differing from the name");
}

// ---------------------------------------------------------------------------
// build_mcc_dataset
// ---------------------------------------------------------------------------

std::vector<LabeledExample> build_mcc_dataset(
    const std::vector<MethodRecord>& records, const EditDistribution& dist,
    const TokenVocab& vocab, double negative_ratio, uint64_t seed) {
    if (records.empty()) throw EmptyInput("build_mcc_dataset: no records");
    if (!(negative_ratio > 0.0)) {
        throw Error("negative_ratio must be positive");
    }

    const size_t n = records.size();
    const auto negatives_total = static_cast<size_t>(
        std::llround(negative_ratio * static_cast<double>(n)));

    std::vector<LabeledExample> examples;
    examples.reserve(n + negatives_total);
    for (const auto& rec : records) {
        LabeledExample ex;
        ex.record = rec;
        ex.presented_name = rec.name;
        ex.label = ConsistencyLabel::consistent;
        ex.provenance = LabeledExample::Provenance::original;
        examples.push_back(std::move(ex));
    }

    // Which records receive negatives: a seeded permutation, cycled when the
    // ratio exceeds 1. Each negative gets its own RNG stream keyed by its
    // global index, so parallel generation would reproduce byte-identically.
    std::vector<size_t> order(n);
    for (size_t i = 0; i < n; ++i) order[i] = i;
    Rng perm_rng(mix_seed(seed, 0x9e0));
    perm_rng.shuffle(order);

    for (size_t k = 0; k < negatives_total; ++k) {
        const MethodRecord& rec = records[order[k % n]];
        LabeledExample ex;
        ex.record = rec;
        ex.presented_name =
            corrupt_name(rec.name, dist, vocab, mix_seed(seed, k + 1));
        ex.label = ConsistencyLabel::inconsistent;
        ex.provenance = LabeledExample::Provenance::sampled;
        examples.push_back(std::move(ex));
    }

    Rng shuffle_rng(mix_seed(seed, 0x5f1));
    shuffle_rng.shuffle(examples);
    return examples;
}

// ---------------------------------------------------------------------------
// dataset files
// ---------------------------------------------------------------------------

void write_dataset(const std::vector<LabeledExample>& examples,
                   const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoFailure("cannot open for writing: " + path.string());
    for (const auto& ex : examples) {
        nlohmann::ordered_json j =
            nlohmann::ordered_json::parse(record_to_json_line(ex.record));
        j["presented_name"] = ex.presented_name;
        j["label"] = to_string(ex.label);
        j["provenance"] =
            ex.provenance == LabeledExample::Provenance::original ? "original"
                                                                  : "sampled";
        out << j.dump() << '\n';
    }
    if (!out) throw IoFailure("write failed: " + path.string());
}

std::vector<LabeledExample> read_dataset(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure("cannot open for reading: " + path.string());
    std::vector<LabeledExample> examples;
    std::string line;
    size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.empty()) continue;
        LabeledExample ex;
        ex.record = record_from_json_line(line, line_number);
        try {
            const auto j = nlohmann::json::parse(line);
            ex.presented_name = j.at("presented_name").get<SubtokenSeq>();
            ex.label = consistency_label_from_string(
                j.at("label").get<std::string>());
            const std::string prov = j.at("provenance").get<std::string>();
            if (prov == "original") {
                ex.provenance = LabeledExample::Provenance::original;
            } else if (prov == "sampled") {
                ex.provenance = LabeledExample::Provenance::sampled;
            } else {
                throw Error("unknown provenance: " + prov);
            }
        } catch (const MalformedLine&) {
            throw;
        } catch (const std::exception& e) {
            throw MalformedLine(
                "line " + std::to_string(line_number) + ": " + e.what(),
                line_number);
        }
        examples.push_back(std::move(ex));
    }
    return examples;
}

}  // namespace mnw
