#pragma once

#include <stdexcept>
#include <string>

namespace mnw {

// Base class for all workbench errors. Catch this to handle anything the
// library can throw; catch the concrete type when the failure mode matters.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// tokenize
struct EmptyIdentifier : Error { using Error::Error; };
struct EmptySequence : Error { using Error::Error; };

// java_extract
struct RootMissing : Error { using Error::Error; };

// corpus
struct NameUnsplittable : Error { using Error::Error; };
struct TooFewProjects : Error { using Error::Error; };
struct IoFailure : Error { using Error::Error; };
struct MalformedLine : Error {
    MalformedLine(const std::string& what, size_t line_number)
        : Error(what), line(line_number) {}
    size_t line;
};

// negsample
struct EmptyPairs : Error { using Error::Error; };
struct DegenerateDistribution : Error { using Error::Error; };

// mcc
struct SingleClassData : Error { using Error::Error; };
struct ModelUnfitted : Error { using Error::Error; };
struct EmptyName : Error { using Error::Error; };
struct GeneratorFailure : Error { using Error::Error; };

// mnr / backend
struct BudgetExceeded : Error { using Error::Error; };
struct EmptyCorpus : Error { using Error::Error; };
struct EmptyIndex : Error { using Error::Error; };
struct BackendTimeout : Error { using Error::Error; };
struct ProtocolViolation : Error { using Error::Error; };
struct BackendError : Error { using Error::Error; };

// eval
struct EmptyGold : Error { using Error::Error; };
struct EmptyInput : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };

}  // namespace mnw
