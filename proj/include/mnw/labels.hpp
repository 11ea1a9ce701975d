#pragma once

#include <string>

#include "mnw/error.hpp"

namespace mnw {

enum class ConsistencyLabel { consistent, inconsistent };

inline const char* to_string(ConsistencyLabel label) {
    return label == ConsistencyLabel::consistent ? "consistent" : "inconsistent";
}

inline ConsistencyLabel consistency_label_from_string(const std::string& s) {
    if (s == "consistent") return ConsistencyLabel::consistent;
    if (s == "inconsistent") return ConsistencyLabel::inconsistent;
    throw Error("unknown consistency label: \"" + s + "\"");
}

}  // namespace mnw
