#include "mnw/quality.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include "mnw/error.hpp"
#include "mnw/tokenize.hpp"

namespace mnw {

namespace {

const std::unordered_set<std::string>& java_reserved_words() {
    static const std::unordered_set<std::string> words = {
        "abstract", "assert", "boolean", "break", "byte", "case", "catch",
        "char", "class", "const", "continue", "default", "do", "double",
        "else", "enum", "extends", "final", "finally", "float", "for",
        "goto", "if", "implements", "import", "instanceof", "int",
        "interface", "long", "native", "new", "package", "private",
        "protected", "public", "return", "short", "static", "strictfp",
        "super", "switch", "synchronized", "this", "throw", "throws",
        "transient", "try", "void", "volatile", "while", "true", "false",
        "null",
    };
    return words;
}

bool is_lower_camel(const std::string& s) {
    if (s.empty() || !std::islower(static_cast<unsigned char>(s.front()))) {
        return false;
    }
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c));
    });
}

bool is_lower_snake(const std::string& s) {
    if (s.empty() || !std::islower(static_cast<unsigned char>(s.front()))) {
        return false;
    }
    char prev = '\0';
    for (char c : s) {
        const unsigned char u = static_cast<unsigned char>(c);
        if (std::isupper(u)) return false;
        if (!std::isalnum(u) && c != '_') return false;
        if (c == '_' && prev == '_') return false;
        prev = c;
    }
    return s.back() != '_';
}

bool all_digits(const std::string& tok) {
    return std::all_of(tok.begin(), tok.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
    });
}

std::unordered_set<std::string> read_word_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoFailure("cannot open word list: " + path.string());
    std::unordered_set<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string word;
        for (char c : line) {
            if (!std::isspace(static_cast<unsigned char>(c))) {
                word.push_back(static_cast<char>(
                    std::tolower(static_cast<unsigned char>(c))));
            }
        }
        if (!word.empty() && word.front() != '#') words.insert(word);
    }
    return words;
}

}  // namespace

// Compiled-in word lists, defined in quality_lexicon.cpp.
extern const char* const kBuiltinVerbs[];
extern const size_t kBuiltinVerbCount;
extern const char* const kBuiltinDictionary[];
extern const size_t kBuiltinDictionaryCount;
extern const char* const kBuiltinAbbreviations[];
extern const size_t kBuiltinAbbreviationCount;

const QualityLexicons& QualityLexicons::builtin() {
    static const QualityLexicons lex = [] {
        QualityLexicons l;
        for (size_t i = 0; i < kBuiltinVerbCount; ++i) l.verbs.insert(kBuiltinVerbs[i]);
        for (size_t i = 0; i < kBuiltinDictionaryCount; ++i) {
            l.dictionary.insert(kBuiltinDictionary[i]);
        }
        l.dictionary.insert(l.verbs.begin(), l.verbs.end());
        for (size_t i = 0; i < kBuiltinAbbreviationCount; ++i) {
            l.abbreviations.insert(kBuiltinAbbreviations[i]);
        }
        return l;
    }();
    return lex;
}

QualityLexicons QualityLexicons::load(const std::filesystem::path& verbs_file,
                                      const std::filesystem::path& dictionary_file,
                                      const std::filesystem::path& abbreviations_file) {
    QualityLexicons lex;
    lex.verbs = read_word_file(verbs_file);
    lex.dictionary = read_word_file(dictionary_file);
    lex.dictionary.insert(lex.verbs.begin(), lex.verbs.end());
    lex.abbreviations = read_word_file(abbreviations_file);
    return lex;
}

const std::array<std::string, 10>& QualityScore::standard_names() {
    static const std::array<std::string, 10> names = {
        "reasonable-length", "verb-start",     "consistent-casing",
        "no-duplicate-run",  "dictionary-words", "boolean-prefix",
        "no-filler",         "no-class-echo",  "digits-trail-only",
        "not-reserved",
    };
    return names;
}

QualityScore score_name(const std::string& name, const MethodRecord* context,
                        const QualityLexicons& lexicons) {
    if (name.empty()) throw EmptyName("score_name: empty name");
    SubtokenSeq tokens;
    try {
        tokens = split_identifier(name);
    } catch (const EmptyIdentifier& e) {
        throw EmptyName(e.what());
    }

    QualityScore score;
    auto& p = score.passed;

    p[0] = (tokens.size() >= 2 && tokens.size() <= 7) ||
           (tokens.size() == 1 && tokens.front().size() >= 3);

    p[1] = lexicons.verbs.count(tokens.front()) > 0;

    p[2] = is_lower_camel(name) || is_lower_snake(name);

    p[3] = true;
    for (size_t i = 1; i < tokens.size(); ++i) {
        if (tokens[i] == tokens[i - 1]) p[3] = false;
    }

    p[4] = true;
    for (const auto& tok : tokens) {
        if (all_digits(tok)) continue;
        if (!lexicons.dictionary.count(tok) && !lexicons.abbreviations.count(tok)) {
            p[4] = false;
        }
    }

    p[5] = true;
    if (context != nullptr && !context->signature.empty() &&
        context->signature.back() == "boolean") {
        const std::string& first = tokens.front();
        p[5] = first == "is" || first == "has" || first == "can" || first == "should";
    }

    static const std::unordered_set<std::string> fillers = {"stuff", "thing",
                                                            "tmp", "foo"};
    p[6] = !(tokens.size() == 1 && tokens.front() == "do");
    for (const auto& tok : tokens) {
        if (fillers.count(tok)) p[6] = false;
    }

    p[7] = true;
    if (context != nullptr && !context->class_name.empty()) {
        std::string full_class;
        for (const auto& t : context->class_name) full_class += t;
        for (const auto& tok : tokens) {
            if (tok == full_class) p[7] = false;
        }
    }

    p[8] = true;
    for (size_t i = 0; i + 1 < tokens.size(); ++i) {
        if (all_digits(tokens[i])) p[8] = false;
    }

    p[9] = java_reserved_words().count(name) == 0;

    score.total = static_cast<int>(std::count(p.begin(), p.end(), true));
    return score;
}

QualitySummary score_corpus(const std::vector<std::string>& names,
                            const QualityLexicons& lexicons) {
    if (names.empty()) throw EmptyInput("score_corpus: no names");
    QualitySummary summary;
    summary.count = names.size();
    double sum = 0.0;
    for (const auto& name : names) {
        const QualityScore s = score_name(name, nullptr, lexicons);
        sum += s.total;
        ++summary.histogram[static_cast<size_t>(s.total)];
    }
    summary.mean = sum / static_cast<double>(names.size());
    summary.excellent_share = static_cast<double>(summary.histogram[10]) /
                              static_cast<double>(names.size());
    return summary;
}

}  // namespace mnw
