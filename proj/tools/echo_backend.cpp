// Reference backend for the line-delimited protocol: answers every recommend
// request with the record's own name and classifies by name equality. Useful
// for wiring tests and as a template for real generator backends.
//
// Usage: mnw-echo-backend [--log FILE]

#include <fstream>
#include <iostream>
#include <string>

#include <nlohmann/json.hpp>

int main(int argc, char** argv) {
    std::ofstream log;
    for (int i = 1; i < argc; ++i) {
        if (std::string(argv[i]) == "--log" && i + 1 < argc) {
            log.open(argv[++i], std::ios::app);
        }
    }

    std::string line;
    while (std::getline(std::cin, line)) {
        if (line.empty()) continue;
        if (log.is_open()) {
            log << line << "\n";
            log.flush();
        }

        nlohmann::json reply;
        try {
            const auto request = nlohmann::json::parse(line);
            const std::string kind = request.at("kind").get<std::string>();
            const auto name = request.at("record").at("name");
            if (kind == "recommend") {
                reply["ok"] = true;
                reply["candidates"] =
                    nlohmann::json::array({{{"name", name}, {"score", 1.0}}});
            } else if (kind == "classify") {
                const auto presented = request.at("presented_name");
                const bool same = presented == name;
                reply["ok"] = true;
                reply["label"] = same ? "consistent" : "inconsistent";
                reply["score"] = same ? 0.0 : 1.0;
            } else {
                reply["ok"] = false;
                reply["error"] = "unknown kind: " + kind;
            }
        } catch (const std::exception& e) {
            reply = {{"ok", false}, {"error", e.what()}};
        }
        std::cout << reply.dump() << std::endl;
    }
    return 0;
}
