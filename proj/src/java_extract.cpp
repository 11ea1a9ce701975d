#include "mnw/java_extract.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <thread>
#include <unordered_set>

#include "mnw/error.hpp"

namespace mnw {

namespace {

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

enum class TokKind { identifier, keyword, number, string_lit, char_lit, punct };

struct Tok {
    TokKind kind;
    std::string_view text;
    size_t offset;
};

const std::unordered_set<std::string_view>& java_keywords() {
    // Reserved words plus the true/false/null literals and 'var'; none of
    // these ever count as identifiers.
    static const std::unordered_set<std::string_view> kw = {
        "abstract", "assert", "boolean", "break", "byte", "case", "catch",
        "char", "class", "const", "continue", "default", "do", "double",
        "else", "enum", "extends", "final", "finally", "float", "for",
        "goto", "if", "implements", "import", "instanceof", "int",
        "interface", "long", "native", "new", "package", "private",
        "protected", "public", "return", "short", "static", "strictfp",
        "super", "switch", "synchronized", "this", "throw", "throws",
        "transient", "try", "void", "volatile", "while",
        "true", "false", "null", "var",
    };
    return kw;
}

bool is_ident_start(unsigned char c) {
    return std::isalpha(c) || c == '_' || c == '$' || c >= 0x80;
}

bool is_ident_part(unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '$' || c >= 0x80;
}

std::vector<Tok> lex(std::string_view src) {
    std::vector<Tok> toks;
    size_t i = 0;
    const size_t n = src.size();

    while (i < n) {
        const unsigned char c = static_cast<unsigned char>(src[i]);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        if (c == '/' && i + 1 < n && src[i + 1] == '/') {
            while (i < n && src[i] != '\n') ++i;
            continue;
        }
        if (c == '/' && i + 1 < n && src[i + 1] == '*') {
            i += 2;
            while (i + 1 < n && !(src[i] == '*' && src[i + 1] == '/')) ++i;
            i = std::min(n, i + 2);
            continue;
        }
        if (c == '"') {
            const size_t start = i;
            if (i + 2 < n && src[i + 1] == '"' && src[i + 2] == '"') {
                // text block
                i += 3;
                while (i + 2 < n &&
                       !(src[i] == '"' && src[i + 1] == '"' && src[i + 2] == '"')) {
                    if (src[i] == '\\') ++i;
                    ++i;
                }
                i = std::min(n, i + 3);
            } else {
                ++i;
                while (i < n && src[i] != '"' && src[i] != '\n') {
                    if (src[i] == '\\') ++i;
                    ++i;
                }
                if (i < n && src[i] == '"') ++i;
            }
            toks.push_back({TokKind::string_lit, src.substr(start, i - start), start});
            continue;
        }
        if (c == '\'') {
            const size_t start = i;
            ++i;
            while (i < n && src[i] != '\'' && src[i] != '\n') {
                if (src[i] == '\\') ++i;
                ++i;
            }
            if (i < n && src[i] == '\'') ++i;
            toks.push_back({TokKind::char_lit, src.substr(start, i - start), start});
            continue;
        }
        if (std::isdigit(c) || (c == '.' && i + 1 < n &&
                                std::isdigit(static_cast<unsigned char>(src[i + 1])))) {
            const size_t start = i;
            while (i < n) {
                const unsigned char d = static_cast<unsigned char>(src[i]);
                if (std::isalnum(d) || d == '_' || d == '.') {
                    ++i;
                } else if ((d == '+' || d == '-') && i > start) {
                    const char prev = src[i - 1];
                    if (prev == 'e' || prev == 'E' || prev == 'p' || prev == 'P') {
                        ++i;  // exponent sign
                    } else {
                        break;
                    }
                } else {
                    break;
                }
            }
            toks.push_back({TokKind::number, src.substr(start, i - start), start});
            continue;
        }
        if (is_ident_start(c)) {
            const size_t start = i;
            while (i < n && is_ident_part(static_cast<unsigned char>(src[i]))) ++i;
            const std::string_view text = src.substr(start, i - start);
            const TokKind kind = java_keywords().count(text) ? TokKind::keyword
                                                             : TokKind::identifier;
            toks.push_back({kind, text, start});
            continue;
        }
        toks.push_back({TokKind::punct, src.substr(i, 1), i});
        ++i;
    }
    return toks;
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

bool is_modifier(std::string_view t) {
    static const std::unordered_set<std::string_view> mods = {
        "public", "private", "protected", "static", "final", "abstract",
        "default", "native", "synchronized", "strictfp", "transient",
        "volatile",
    };
    return mods.count(t) > 0;
}

bool is_type_token(const Tok& t) {
    if (t.kind == TokKind::identifier) return true;
    if (t.kind != TokKind::keyword) return false;
    static const std::unordered_set<std::string_view> prims = {
        "boolean", "byte", "char", "short", "int", "long", "float",
        "double", "void",
    };
    return prims.count(t.text) > 0;
}

struct ParsedMethod {
    std::string name;
    std::vector<std::string> param_names;
    std::vector<std::string> param_types;
    std::string return_type;
    std::vector<std::string> body_identifiers;
    std::pair<size_t, size_t> span{0, 0};
    bool has_body = false;
};

class FileParser {
  public:
    FileParser(const SourceFile& file, const DiagnosticSink& diag)
        : file_(file), diag_(diag), toks_(lex(file.content)) {}

    std::vector<RawMethod> run() {
        while (!eof()) {
            if (at_container_keyword()) {
                parse_container();
            } else if (peek().kind == TokKind::keyword &&
                       (peek().text == "package" || peek().text == "import")) {
                skip_past(';');
            } else {
                ++pos_;
            }
        }
        if (!found_container_) {
            skip(0, "no class declaration found");
        }
        std::sort(records_.begin(), records_.end(),
                  [](const RawMethod& a, const RawMethod& b) {
                      return a.byte_span < b.byte_span;
                  });
        return std::move(records_);
    }

  private:
    const SourceFile& file_;
    const DiagnosticSink& diag_;
    std::vector<Tok> toks_;
    size_t pos_ = 0;
    bool found_container_ = false;
    std::vector<RawMethod> records_;

    bool eof() const { return pos_ >= toks_.size(); }
    const Tok& peek(size_t ahead = 0) const {
        static const Tok sentinel{TokKind::punct, std::string_view(), 0};
        return pos_ + ahead < toks_.size() ? toks_[pos_ + ahead] : sentinel;
    }
    size_t here() const { return eof() ? file_.content.size() : peek().offset; }

    void skip(size_t offset, const std::string& reason) const {
        diag_("SKIP " + file_.path + ":" + std::to_string(offset) + " " + reason);
    }

    bool at_punct(char c) const {
        return !eof() && peek().kind == TokKind::punct && peek().text[0] == c;
    }

    void skip_past(char terminator) {
        while (!eof()) {
            const bool hit = at_punct(terminator);
            ++pos_;
            if (hit) return;
        }
    }

    // Consumes a balanced (open, close) group; assumes the opener is current.
    void skip_balanced(char open, char close) {
        int depth = 0;
        while (!eof()) {
            if (at_punct(open)) ++depth;
            else if (at_punct(close)) --depth;
            ++pos_;
            if (depth == 0) return;
        }
    }

    // '@' name ('.' name)* ['(' ... ')']; assumes '@' is current.
    void skip_annotation() {
        ++pos_;  // '@'
        if (!eof() && peek().kind == TokKind::identifier) ++pos_;
        while (at_punct('.') && peek(1).kind == TokKind::identifier) pos_ += 2;
        if (at_punct('(')) skip_balanced('(', ')');
    }

    // True if the current token begins a type container declaration.
    bool at_container_keyword() const {
        if (eof()) return false;
        const Tok& t = peek();
        if (t.kind == TokKind::keyword &&
            (t.text == "class" || t.text == "interface" || t.text == "enum")) {
            return true;
        }
        // contextual 'record Name(' / 'record Name<'
        if (t.kind == TokKind::identifier && t.text == "record" &&
            peek(1).kind == TokKind::identifier && peek(2).kind == TokKind::punct &&
            (peek(2).text[0] == '(' || peek(2).text[0] == '<')) {
            return true;
        }
        return false;
    }

    void parse_container() {
        const bool is_enum = peek().text == "enum";
        ++pos_;  // container keyword
        if (eof() || peek().kind != TokKind::identifier) {
            skip(here(), "container keyword without a name");
            return;
        }
        const std::string class_name(peek().text);
        ++pos_;
        found_container_ = true;

        // extends/implements/permits/type-params/record components hold no
        // braces, so the container body starts at the next '{'.
        while (!eof() && !at_punct('{')) {
            if (at_punct('(')) skip_balanced('(', ')');
            else ++pos_;
        }
        if (eof()) {
            skip(file_.content.size(), "container \"" + class_name + "\" has no body");
            return;
        }
        ++pos_;  // '{'

        if (is_enum) skip_enum_constants();
        parse_members(class_name);
    }

    // Enum constant list runs to the first top-level ';' (or the closing
    // '}' when the enum has no members). Constant argument lists and bodies
    // are skipped balanced.
    void skip_enum_constants() {
        while (!eof()) {
            if (at_punct('(')) { skip_balanced('(', ')'); continue; }
            if (at_punct('{')) { skip_balanced('{', '}'); continue; }
            if (at_punct(';')) { ++pos_; return; }
            if (at_punct('}')) return;  // leave for parse_members to consume
            ++pos_;
        }
    }

    void parse_members(const std::string& class_name) {
        std::vector<ParsedMethod> methods;
        std::vector<std::string> method_names;  // bodied and bodiless, no ctors
        std::vector<std::pair<std::string, std::string>> attributes;

        while (!eof()) {
            if (at_punct('}')) { ++pos_; break; }
            if (at_punct(';')) { ++pos_; continue; }
            if (at_punct('@')) {
                if (peek(1).kind == TokKind::keyword && peek(1).text == "interface") {
                    ++pos_;  // '@'; parse_container sees 'interface'
                    parse_container();
                } else {
                    skip_annotation();
                }
                continue;
            }
            if (at_container_keyword()) { parse_container(); continue; }
            if (at_punct('{')) { skip_balanced('{', '}'); continue; }

            parse_member(methods, method_names, attributes);
        }

        for (const ParsedMethod& m : methods) {
            RawMethod rec;
            rec.name = m.name;
            rec.param_names = m.param_names;
            rec.param_types = m.param_types;
            rec.return_type = m.return_type;
            rec.body_identifiers = m.body_identifiers;
            rec.class_name = class_name;
            rec.sibling_names = method_names;
            auto self = std::find(rec.sibling_names.begin(), rec.sibling_names.end(),
                                  m.name);
            if (self != rec.sibling_names.end()) rec.sibling_names.erase(self);
            rec.attribute_entries = attributes;
            rec.project_id = file_.project_id;
            rec.path = file_.path;
            rec.byte_span = m.span;
            records_.push_back(std::move(rec));
        }
    }

    // Collects header tokens (everything before '(', '=', ';', '{' or '}')
    // with inline annotations dropped and '<...>' nesting tracked. A nested
    // type declaration ("static class Inner ...") stops the scan with the
    // pseudo-terminator 'C', leaving the container keyword current.
    std::vector<Tok> scan_header(char& terminator) {
        std::vector<Tok> header;
        int angle = 0;
        terminator = '\0';
        while (!eof()) {
            const Tok& t = peek();
            if (angle == 0 && at_container_keyword()) {
                terminator = 'C';
                return header;
            }
            if (t.kind == TokKind::punct) {
                const char c = t.text[0];
                if (c == '@') { skip_annotation(); continue; }
                if (c == '<') ++angle;
                if (c == '>') angle = std::max(0, angle - 1);
                if (angle == 0 && (c == '(' || c == '=' || c == ';' || c == '{' || c == '}')) {
                    terminator = c;
                    return header;
                }
            }
            header.push_back(t);
            ++pos_;
        }
        return header;
    }

    // Last angle-depth-0 type token, used to flatten generics and qualified
    // names to their raw outer identifier.
    static std::string flatten_type(const std::vector<Tok>& toks, size_t end) {
        int angle = 0;
        std::string type;
        for (size_t i = 0; i < end; ++i) {
            const Tok& t = toks[i];
            if (t.kind == TokKind::punct) {
                if (t.text[0] == '<') ++angle;
                if (t.text[0] == '>') angle = std::max(0, angle - 1);
                continue;
            }
            if (angle == 0 && is_type_token(t) && !is_modifier(t.text)) {
                type.assign(t.text);
            }
        }
        return type;
    }

    void parse_member(std::vector<ParsedMethod>& methods,
                      std::vector<std::string>& method_names,
                      std::vector<std::pair<std::string, std::string>>& attributes) {
        const size_t decl_start = here();
        char terminator = '\0';
        const std::vector<Tok> header = scan_header(terminator);

        switch (terminator) {
            case '(':
                parse_method(header, decl_start, methods, method_names);
                return;
            case '=':
            case ';':
                parse_field(header, terminator, attributes);
                return;
            case 'C':
                parse_container();
                return;
            case '{':
                skip(decl_start, "unrecognized block member");
                skip_balanced('{', '}');
                return;
            default:
                if (!header.empty()) {
                    skip(decl_start, "malformed member");
                }
                return;
        }
    }

    void parse_method(const std::vector<Tok>& header, size_t decl_start,
                      std::vector<ParsedMethod>& methods,
                      std::vector<std::string>& method_names) {
        if (header.empty() || header.back().kind != TokKind::identifier) {
            skip(decl_start, "declaration header without a method name");
            recover_member();
            return;
        }

        ParsedMethod m;
        m.name.assign(header.back().text);
        m.return_type = flatten_type(header, header.size() - 1);
        const bool is_constructor = m.return_type.empty();

        parse_params(m);

        // throws clause / annotation-member 'default' run up to the body.
        while (!eof() && !at_punct('{') && !at_punct(';') && !at_punct('}')) {
            if (at_punct('(')) skip_balanced('(', ')');
            else if (at_punct('@')) skip_annotation();
            else ++pos_;
        }

        if (at_punct(';')) {
            ++pos_;  // bodiless: a sibling, not a record
            if (!is_constructor) method_names.push_back(m.name);
            return;
        }
        if (!at_punct('{')) {
            skip(decl_start, "method \"" + m.name + "\" has no body or terminator");
            return;
        }

        // Mine every identifier token in the body, in source order.
        int depth = 0;
        do {
            if (at_punct('{')) ++depth;
            else if (at_punct('}')) --depth;
            else if (peek().kind == TokKind::identifier && !is_constructor) {
                m.body_identifiers.emplace_back(peek().text);
            }
            ++pos_;
        } while (!eof() && depth > 0);

        if (is_constructor) return;

        m.has_body = true;
        m.span = {decl_start, eof() ? file_.content.size()
                                    : toks_[pos_ - 1].offset + 1};
        method_names.push_back(m.name);
        methods.push_back(std::move(m));
    }

    void parse_params(ParsedMethod& m) {
        if (!at_punct('(')) return;
        ++pos_;  // '('
        std::vector<Tok> group;
        int depth = 1;
        int angle = 0;
        auto flush = [&] {
            if (group.empty()) return;
            // name = trailing identifier; 'this' receiver params have none
            if (group.back().kind == TokKind::identifier) {
                const std::string type = flatten_type(group, group.size() - 1);
                if (!type.empty()) {
                    m.param_names.emplace_back(group.back().text);
                    m.param_types.push_back(type);
                }
            }
            group.clear();
        };
        while (!eof() && depth > 0) {
            const Tok& t = peek();
            if (t.kind == TokKind::punct) {
                const char c = t.text[0];
                if (c == '@') { skip_annotation(); continue; }
                if (c == '(') ++depth;
                else if (c == ')') {
                    if (--depth == 0) { flush(); ++pos_; return; }
                } else if (c == '<') ++angle;
                else if (c == '>') angle = std::max(0, angle - 1);
                else if (c == ',' && depth == 1 && angle == 0) {
                    flush();
                    ++pos_;
                    continue;
                }
            }
            group.push_back(t);
            ++pos_;
        }
    }

    void parse_field(const std::vector<Tok>& header, char terminator,
                     std::vector<std::pair<std::string, std::string>>& attributes) {
        // header: [modifiers] TYPE name (',' name)* — commas only show up in
        // the ';' form; the '=' form has exactly one name so far.
        std::vector<std::vector<Tok>> groups(1);
        int angle = 0;
        for (const Tok& t : header) {
            if (t.kind == TokKind::punct) {
                if (t.text[0] == '<') ++angle;
                if (t.text[0] == '>') angle = std::max(0, angle - 1);
                if (t.text[0] == ',' && angle == 0) {
                    groups.emplace_back();
                    continue;
                }
            }
            groups.back().push_back(t);
        }

        std::string type;
        if (!groups[0].empty() && groups[0].back().kind == TokKind::identifier) {
            type = flatten_type(groups[0], groups[0].size() - 1);
        }
        if (type.empty()) {
            ++pos_;  // consume the terminator of whatever this was
            return;
        }
        for (const auto& group : groups) {
            if (!group.empty() && group.back().kind == TokKind::identifier) {
                attributes.emplace_back(std::string(group.back().text), type);
            }
        }

        if (terminator == ';') {
            ++pos_;
            return;
        }

        // '=': skip the initializer; watch for further declarators at
        // bracket depth 0. Angle brackets are comparison operators here.
        ++pos_;  // '='
        int paren = 0, brace = 0, bracket = 0;
        while (!eof()) {
            const Tok& t = peek();
            if (t.kind == TokKind::punct) {
                const char c = t.text[0];
                if (c == '(') ++paren;
                else if (c == ')') --paren;
                else if (c == '{') ++brace;
                else if (c == '}') {
                    if (brace == 0 && paren == 0) return;  // container end; leave it
                    --brace;
                } else if (c == '[') ++bracket;
                else if (c == ']') --bracket;
                else if (c == ';' && paren == 0 && brace == 0 && bracket == 0) {
                    ++pos_;
                    return;
                } else if (c == ',' && paren == 0 && brace == 0 && bracket == 0) {
                    // Declarator only if shaped like `name =`, `name ,`,
                    // `name ;` or `name [`; otherwise it is expression
                    // punctuation (e.g. a type argument comma) — skip on.
                    if (peek(1).kind == TokKind::identifier &&
                        peek(2).kind == TokKind::punct &&
                        (peek(2).text[0] == '=' || peek(2).text[0] == ',' ||
                         peek(2).text[0] == ';' || peek(2).text[0] == '[')) {
                        attributes.emplace_back(std::string(peek(1).text), type);
                        pos_ += 2;
                        continue;
                    }
                }
            }
            ++pos_;
        }
    }

    // Panic-mode recovery: move past the next ';' or stop before '}'.
    void recover_member() {
        int paren = 0, brace = 0;
        while (!eof()) {
            if (at_punct('(')) ++paren;
            else if (at_punct(')')) --paren;
            else if (at_punct('{')) ++brace;
            else if (at_punct('}')) {
                if (brace == 0) return;
                --brace;
            } else if (at_punct(';') && paren == 0 && brace == 0) {
                ++pos_;
                return;
            }
            ++pos_;
        }
    }
};

std::string read_file_bytes(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw IoFailure("cannot open " + p.string());
    std::string data((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    return data;
}

}  // namespace

DiagnosticSink stderr_diagnostics() {
    return [](const std::string& line) { std::cerr << line << '\n'; };
}

bool sanitize_utf8(std::string& content) {
    bool changed = false;
    size_t i = 0;
    while (i < content.size()) {
        const unsigned char c = static_cast<unsigned char>(content[i]);
        size_t len = 0;
        if (c < 0x80) len = 1;
        else if ((c & 0xE0) == 0xC0 && c >= 0xC2) len = 2;
        else if ((c & 0xF0) == 0xE0) len = 3;
        else if ((c & 0xF8) == 0xF0 && c <= 0xF4) len = 4;

        bool ok = len > 0 && i + len <= content.size();
        for (size_t k = 1; ok && k < len; ++k) {
            ok = (static_cast<unsigned char>(content[i + k]) & 0xC0) == 0x80;
        }
        if (ok) {
            i += len;
        } else {
            content[i] = '?';
            changed = true;
            ++i;
        }
    }
    return changed;
}

std::vector<RawMethod> parse_file(const SourceFile& file, const DiagnosticSink& diag) {
    return FileParser(file, diag).run();
}

std::vector<RawMethod> scan_project(const std::filesystem::path& root,
                                    const DiagnosticSink& diag, unsigned jobs) {
    std::error_code ec;
    if (!std::filesystem::exists(root, ec) || ec) {
        throw RootMissing("project root does not exist: " + root.string());
    }
    if (!std::filesystem::is_directory(root, ec) || ec) {
        throw RootMissing("project root is not a directory: " + root.string());
    }

    std::filesystem::path normalized = root.lexically_normal();
    std::string project_id = normalized.filename().string();
    if (project_id.empty() || project_id == ".") {
        project_id = std::filesystem::absolute(normalized).parent_path()
                         .filename().string();
    }
    if (project_id.empty()) project_id = normalized.string();

    std::vector<std::filesystem::path> files;
    for (auto it = std::filesystem::recursive_directory_iterator(
             root, std::filesystem::directory_options::skip_permission_denied);
         it != std::filesystem::recursive_directory_iterator(); ++it) {
        if (it->is_regular_file() && it->path().extension() == ".java") {
            files.push_back(it->path());
        }
    }
    std::sort(files.begin(), files.end(),
              [](const auto& a, const auto& b) {
                  return a.generic_string() < b.generic_string();
              });

    std::vector<std::vector<RawMethod>> per_file(files.size());
    std::vector<std::vector<std::string>> per_file_diags(files.size());

    unsigned workers = jobs != 0 ? jobs : std::thread::hardware_concurrency();
    if (files.size() < workers) workers = static_cast<unsigned>(files.size());
    workers = std::max(1u, workers);

    std::atomic<size_t> next{0};
    auto work = [&] {
        for (size_t i = next.fetch_add(1); i < files.size(); i = next.fetch_add(1)) {
            SourceFile sf;
            sf.project_id = project_id;
            sf.path = files[i].generic_string();
            try {
                sf.content = read_file_bytes(files[i]);
            } catch (const IoFailure& e) {
                per_file_diags[i].push_back("SKIP " + sf.path + ":0 " +
                                            std::string(e.what()));
                continue;
            }
            sf.had_invalid_utf8 = sanitize_utf8(sf.content);
            if (sf.had_invalid_utf8) {
                per_file_diags[i].push_back("SKIP " + sf.path +
                                            ":0 invalid UTF-8 bytes replaced");
            }
            DiagnosticSink buffer = [&per_file_diags, i](const std::string& line) {
                per_file_diags[i].push_back(line);
            };
            per_file[i] = parse_file(sf, buffer);
        }
    };

    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    std::vector<RawMethod> all;
    for (size_t i = 0; i < files.size(); ++i) {
        for (const auto& line : per_file_diags[i]) diag(line);
        all.insert(all.end(), std::make_move_iterator(per_file[i].begin()),
                   std::make_move_iterator(per_file[i].end()));
    }
    return all;
}

}  // namespace mnw
