#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace mnw {

struct SourceFile {
    std::string project_id;
    std::string path;
    std::string content;             // UTF-8; invalid bytes replaced with '?'
    bool had_invalid_utf8 = false;
};

// One method declaration with its local-implementation and enclosing-class
// contexts, straight off the source text (identifiers not yet subtokenized).
struct RawMethod {
    std::string name;
    std::vector<std::string> param_names;
    std::vector<std::string> param_types;
    std::string return_type;
    std::vector<std::string> body_identifiers;  // source order, duplicates kept
    std::string class_name;                     // innermost enclosing class
    std::vector<std::string> sibling_names;     // own name removed once
    std::vector<std::pair<std::string, std::string>> attribute_entries;  // (name, type)
    std::string project_id;
    std::string path;
    std::pair<size_t, size_t> byte_span{0, 0};  // [begin, end) in the file
};

// Receives one diagnostic line per skipped construct, formatted
// "SKIP <path>:<byte-offset> <reason>". The default sink writes to stderr.
using DiagnosticSink = std::function<void(const std::string&)>;

DiagnosticSink stderr_diagnostics();

// Replaces invalid UTF-8 bytes with '?'. Returns true if anything changed.
bool sanitize_utf8(std::string& content);

// Extracts every parseable method declaration (innermost class as enclosing
// context, constructors excluded, bodiless methods skipped). A file with no
// recoverable class declaration yields an empty list plus a diagnostic;
// a malformed member skips only that member.
std::vector<RawMethod> parse_file(const SourceFile& file,
                                  const DiagnosticSink& diag = stderr_diagnostics());

// parse_file over every .java file under root, in lexicographic path order.
// project_id is root's terminal path segment. jobs = 0 picks a worker count
// from the hardware; results are merged in path order regardless.
// Throws RootMissing if root does not exist.
std::vector<RawMethod> scan_project(const std::filesystem::path& root,
                                    const DiagnosticSink& diag = stderr_diagnostics(),
                                    unsigned jobs = 0);

}  // namespace mnw
