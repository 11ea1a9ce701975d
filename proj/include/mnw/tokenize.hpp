#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace mnw {

// Ordered lowercase subtoken sequence, the universal currency for names and
// contexts. Every token matches [a-z]+|[0-9]+.
using SubtokenSeq = std::vector<std::string>;

enum class JoinStyle { camel, snake };

// Splits an identifier at underscore/dollar boundaries, lower-to-upper camel
// boundaries, acronym-to-word boundaries (the trailing capital of an all-caps
// run starts the next token) and letter/digit boundaries. Output is
// lowercased; separators and non-ASCII bytes are dropped.
//
// Throws EmptyIdentifier if the input is empty or folds to nothing.
SubtokenSeq split_identifier(std::string_view ident);

// Renders a subtoken sequence back into an identifier. camel capitalizes
// tokens 2..n (digit tokens are appended unchanged); snake joins with '_'.
// Throws EmptySequence on an empty sequence.
std::string join_subtokens(const SubtokenSeq& seq, JoinStyle style);

}  // namespace mnw
