#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "mnw/corpus.hpp"
#include "mnw/mcc.hpp"
#include "mnw/mnr.hpp"

namespace mnw {

// Client for external name generators/classifiers speaking the line-delimited
// protocol over the backend process's standard input and output:
//
//   request  {"kind":"recommend","k":10,"record":{...},"prompt":"..."}
//            {"kind":"classify","record":{...},"presented_name":[...],"prompt":"..."}
//   response {"ok":true,"candidates":[{"name":["get","name"],"score":0.91},...]}
//            {"ok":true,"label":"inconsistent","score":0.87}
//            {"ok":false,"error":"..."}
//
// The child is spawned lazily from a shell command line and kept alive
// across requests; at most one request is in flight per process.
class BackendClient {
  public:
    BackendClient(std::string command, std::chrono::milliseconds timeout);
    ~BackendClient();
    BackendClient(const BackendClient&) = delete;
    BackendClient& operator=(const BackendClient&) = delete;

    std::vector<Candidate> recommend(
        const MethodRecord& record, int k,
        const PromptTemplate& tpl = PromptTemplate::standard());

    MccVerdict classify(const MethodRecord& record,
                        const SubtokenSeq& presented_name,
                        const PromptTemplate& tpl = PromptTemplate::standard());

    const std::string& command() const { return command_; }

  private:
    std::string command_;
    std::chrono::milliseconds timeout_;
    int child_pid_ = -1;
    int to_child_ = -1;
    int from_child_ = -1;
    std::string read_buffer_;

    void ensure_running();
    void shutdown() noexcept;
    void send_line(const std::string& line);
    std::string receive_line();
    std::string roundtrip(const std::string& request);
};

// One-shot convenience: spawn, send a single recommend request, tear down.
std::vector<Candidate> recommend_backend(const std::string& command,
                                         const MethodRecord& record, int k,
                                         std::chrono::milliseconds timeout);

// Name generator backed by a client (top-k recommend per call).
NameGenerator backend_generator(BackendClient& client);

}  // namespace mnw
