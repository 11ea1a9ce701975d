#pragma once

// Shared helpers for the test suites: brute-force oracles that stay
// independent of the implementation paths they check, plus deterministic
// random input generators.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mnw/corpus.hpp"
#include "mnw/negsample.hpp"
#include "mnw/rng.hpp"
#include "mnw/tokenize.hpp"

namespace testsupport {

// O(n^2) multiset match counter with explicit consumption.
inline size_t oracle_multiset_matches(const mnw::SubtokenSeq& a,
                                      const mnw::SubtokenSeq& b) {
    std::vector<bool> used(b.size(), false);
    size_t matches = 0;
    for (const auto& tok : a) {
        for (size_t j = 0; j < b.size(); ++j) {
            if (!used[j] && b[j] == tok) {
                used[j] = true;
                ++matches;
                break;
            }
        }
    }
    return matches;
}

struct OraclePrf {
    double precision, recall, f1;
};

inline OraclePrf oracle_prf(const mnw::SubtokenSeq& pred,
                            const mnw::SubtokenSeq& gold) {
    const double matches = static_cast<double>(oracle_multiset_matches(pred, gold));
    const double p = pred.empty() ? 0.0 : matches / static_cast<double>(pred.size());
    const double r = matches / static_cast<double>(gold.size());
    const double f1 = p + r > 0 ? 2 * p * r / (p + r) : 0.0;
    return {p, r, f1};
}

// Enumerates every edit script (path through the alignment grid), keeps the
// minimal-cost ones and returns the lexicographically smallest under the op
// order keep < replace < delete < add.
inline std::vector<mnw::EditOp> oracle_canonical_script(
    const mnw::SubtokenSeq& before, const mnw::SubtokenSeq& after) {
    using mnw::EditOp;
    std::vector<std::vector<EditOp>> best;
    uint32_t best_cost = UINT32_MAX;
    std::vector<EditOp> current;

    const std::function<void(size_t, size_t, uint32_t)> rec =
        [&](size_t i, size_t j, uint32_t cost) {
            if (cost > best_cost) return;
            if (i == before.size() && j == after.size()) {
                if (cost < best_cost) {
                    best_cost = cost;
                    best.clear();
                }
                if (cost == best_cost) best.push_back(current);
                return;
            }
            if (i < before.size() && j < after.size()) {
                const bool same = before[i] == after[j];
                current.push_back(same ? EditOp::keep : EditOp::replace);
                rec(i + 1, j + 1, cost + (same ? 0 : 1));
                current.pop_back();
            }
            if (i < before.size()) {
                current.push_back(EditOp::del);
                rec(i + 1, j, cost + 1);
                current.pop_back();
            }
            if (j < after.size()) {
                current.push_back(EditOp::add);
                rec(i, j + 1, cost + 1);
                current.pop_back();
            }
        };
    rec(0, 0, 0);
    return *std::min_element(
        best.begin(), best.end(),
        [](const std::vector<EditOp>& a, const std::vector<EditOp>& b) {
            return std::lexicographical_compare(
                a.begin(), a.end(), b.begin(), b.end(),
                [](EditOp x, EditOp y) {
                    return static_cast<int>(x) < static_cast<int>(y);
                });
        });
}

// Literal 2^n sign-assignment enumeration of the two-sided exact p-value.
inline double oracle_wilcoxon_exact_p(std::vector<double> diffs) {
    diffs.erase(std::remove(diffs.begin(), diffs.end(), 0.0), diffs.end());
    const size_t n = diffs.size();
    if (n == 0) return 1.0;

    std::vector<size_t> order(n);
    for (size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return std::fabs(diffs[a]) < std::fabs(diffs[b]);
    });
    std::vector<double> ranks(n, 0.0);
    size_t i = 0;
    while (i < n) {
        size_t j = i;
        while (j + 1 < n &&
               std::fabs(diffs[order[j + 1]]) == std::fabs(diffs[order[i]])) {
            ++j;
        }
        const double rank = (static_cast<double>(i + j)) / 2.0 + 1.0;
        for (size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
        i = j + 1;
    }

    double w_plus = 0.0, w_minus = 0.0;
    for (size_t d = 0; d < n; ++d) (diffs[d] > 0 ? w_plus : w_minus) += ranks[d];
    const double w = std::min(w_plus, w_minus);

    uint64_t count = 0;
    const uint64_t assignments = 1ULL << n;
    for (uint64_t mask = 0; mask < assignments; ++mask) {
        double t = 0.0;
        for (size_t d = 0; d < n; ++d) {
            if (mask >> d & 1) t += ranks[d];
        }
        if (t <= w + 1e-9) ++count;
    }
    return std::min(1.0, 2.0 * static_cast<double>(count) /
                             static_cast<double>(assignments));
}

// --- random input generators -------------------------------------------

inline std::string random_token(mnw::Rng& rng, bool allow_digits = true) {
    static const char* const kWords[] = {
        "get", "set", "name", "value", "count", "index", "list", "map",
        "node", "item", "data", "file", "path", "user", "token", "parse",
        "read", "write", "load", "store", "max", "min", "next", "prev",
        "size", "key", "entry", "row", "col", "sum", "buf", "tmp",
    };
    if (allow_digits && rng.bounded(12) == 0) {
        return std::to_string(rng.bounded(100));
    }
    return kWords[rng.bounded(sizeof(kWords) / sizeof(kWords[0]))];
}

inline mnw::SubtokenSeq random_seq(mnw::Rng& rng, size_t min_len, size_t max_len,
                                   bool allow_digits = true) {
    const size_t len = min_len + rng.bounded(max_len - min_len + 1);
    mnw::SubtokenSeq seq;
    seq.reserve(len);
    for (size_t i = 0; i < len; ++i) seq.push_back(random_token(rng, allow_digits));
    return seq;
}

inline mnw::MethodRecord random_record(mnw::Rng& rng, const std::string& project) {
    mnw::MethodRecord rec;
    rec.name = random_seq(rng, 1, 5);
    rec.signature = random_seq(rng, 1, 8);
    rec.body = random_seq(rng, 0, 40);
    rec.class_name = random_seq(rng, 1, 3, false);
    const size_t sibs = rng.bounded(4);
    for (size_t i = 0; i < sibs; ++i) rec.siblings.push_back(random_seq(rng, 1, 4));
    const size_t attrs = rng.bounded(4);
    for (size_t i = 0; i < attrs; ++i) {
        rec.attributes.push_back(random_seq(rng, 2, 5));
    }
    rec.project_id = project;
    rec.path = project + "/src/File" + std::to_string(rng.bounded(1000)) + ".java";
    const size_t begin = rng.bounded(100000);
    rec.byte_span = {begin, begin + 1 + rng.bounded(4000)};
    return rec;
}

}  // namespace testsupport
