#include "mnw/tokenize.hpp"

#include <cctype>

#include "mnw/error.hpp"

namespace mnw {

namespace {

enum class CharClass { lower, upper, digit, separator };

CharClass classify(char c) {
    const unsigned char u = static_cast<unsigned char>(c);
    if (u >= 'a' && u <= 'z') return CharClass::lower;
    if (u >= 'A' && u <= 'Z') return CharClass::upper;
    if (u >= '0' && u <= '9') return CharClass::digit;
    // '_', '$', and any non-ASCII byte all act as separators.
    return CharClass::separator;
}

bool is_letter(CharClass c) {
    return c == CharClass::lower || c == CharClass::upper;
}

}  // namespace

SubtokenSeq split_identifier(std::string_view ident) {
    if (ident.empty()) {
        throw EmptyIdentifier("split_identifier: empty identifier");
    }

    SubtokenSeq tokens;
    std::string current;
    auto flush = [&] {
        if (!current.empty()) {
            tokens.push_back(current);
            current.clear();
        }
    };

    CharClass prev = CharClass::separator;
    for (size_t i = 0; i < ident.size(); ++i) {
        const CharClass cls = classify(ident[i]);
        if (cls == CharClass::separator) {
            flush();
            prev = CharClass::separator;
            continue;
        }

        bool boundary = false;
        if (prev == CharClass::lower && cls == CharClass::upper) {
            boundary = true;
        } else if (is_letter(prev) != is_letter(cls) && prev != CharClass::separator) {
            boundary = true;  // letter/digit edge in either direction
        } else if (prev == CharClass::upper && cls == CharClass::upper) {
            // Trailing capital of a caps run begins the next word:
            // "HTTPResponse" splits before the 'R'.
            const size_t next = i + 1;
            if (next < ident.size() && classify(ident[next]) == CharClass::lower) {
                boundary = true;
            }
        }
        if (boundary) flush();

        current.push_back(static_cast<char>(
            std::tolower(static_cast<unsigned char>(ident[i]))));
        prev = cls;
    }
    flush();

    if (tokens.empty()) {
        throw EmptyIdentifier("split_identifier: identifier folds to nothing: \"" +
                              std::string(ident) + "\"");
    }
    return tokens;
}

std::string join_subtokens(const SubtokenSeq& seq, JoinStyle style) {
    if (seq.empty()) {
        throw EmptySequence("join_subtokens: empty sequence");
    }

    std::string out;
    if (style == JoinStyle::snake) {
        for (size_t i = 0; i < seq.size(); ++i) {
            if (i > 0) out.push_back('_');
            out += seq[i];
        }
        return out;
    }

    for (size_t i = 0; i < seq.size(); ++i) {
        const std::string& tok = seq[i];
        if (i == 0 || !std::isalpha(static_cast<unsigned char>(tok.front()))) {
            out += tok;
        } else {
            out.push_back(static_cast<char>(
                std::toupper(static_cast<unsigned char>(tok.front()))));
            out.append(tok, 1, std::string::npos);
        }
    }
    return out;
}

}  // namespace mnw
