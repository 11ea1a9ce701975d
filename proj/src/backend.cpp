#include "mnw/backend.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>

#include <nlohmann/json.hpp>

#include "mnw/error.hpp"

namespace mnw {

namespace {

// Writes with SIGPIPE blocked so a dead backend surfaces as EPIPE instead of
// killing the process; any pending SIGPIPE is consumed before unblocking.
ssize_t write_nosigpipe(int fd, const char* data, size_t len) {
    sigset_t pipe_only, saved;
    sigemptyset(&pipe_only);
    sigaddset(&pipe_only, SIGPIPE);
    pthread_sigmask(SIG_BLOCK, &pipe_only, &saved);

    ssize_t written = 0;
    while (static_cast<size_t>(written) < len) {
        const ssize_t n = ::write(fd, data + written, len - written);
        if (n < 0) {
            if (errno == EINTR) continue;
            written = -1;
            break;
        }
        written += n;
    }

    if (written < 0 && errno == EPIPE) {
        struct timespec zero = {0, 0};
        siginfo_t info;
        while (sigtimedwait(&pipe_only, &info, &zero) >= 0) {
        }
    }
    pthread_sigmask(SIG_SETMASK, &saved, nullptr);
    return written;
}

nlohmann::json parse_reply(const std::string& line) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        throw ProtocolViolation(std::string("backend reply is not JSON: ") +
                                e.what());
    }
    if (!j.is_object() || !j.contains("ok") || !j.at("ok").is_boolean()) {
        throw ProtocolViolation("backend reply lacks a boolean \"ok\" field");
    }
    if (!j.at("ok").get<bool>()) {
        std::string message = "backend reported an error";
        if (j.contains("error") && j.at("error").is_string()) {
            message = j.at("error").get<std::string>();
        }
        throw BackendError(message);
    }
    return j;
}

std::vector<Candidate> parse_candidates(const nlohmann::json& j) {
    if (!j.contains("candidates") || !j.at("candidates").is_array()) {
        throw ProtocolViolation("recommend reply lacks a \"candidates\" array");
    }
    std::vector<Candidate> out;
    for (const auto& c : j.at("candidates")) {
        if (!c.is_object() || !c.contains("name") || !c.at("name").is_array() ||
            !c.contains("score") || !c.at("score").is_number()) {
            throw ProtocolViolation("malformed candidate in recommend reply");
        }
        Candidate cand;
        for (const auto& t : c.at("name")) {
            if (!t.is_string()) {
                throw ProtocolViolation("candidate name token is not a string");
            }
            cand.name.push_back(t.get<std::string>());
        }
        cand.score = c.at("score").get<double>();
        out.push_back(std::move(cand));
    }
    sort_candidates(out);  // the client re-sorts; backends need not
    return out;
}

}  // namespace

BackendClient::BackendClient(std::string command, std::chrono::milliseconds timeout)
    : command_(std::move(command)), timeout_(timeout) {}

BackendClient::~BackendClient() { shutdown(); }

void BackendClient::ensure_running() {
    if (child_pid_ > 0) {
        int status = 0;
        if (::waitpid(child_pid_, &status, WNOHANG) == 0) return;  // alive
        shutdown();
    }

    int to_child[2], from_child[2];
    if (::pipe(to_child) != 0) {
        throw BackendError(std::string("pipe: ") + std::strerror(errno));
    }
    if (::pipe(from_child) != 0) {
        ::close(to_child[0]);
        ::close(to_child[1]);
        throw BackendError(std::string("pipe: ") + std::strerror(errno));
    }

    const pid_t pid = ::fork();
    if (pid < 0) {
        for (int fd : {to_child[0], to_child[1], from_child[0], from_child[1]}) {
            ::close(fd);
        }
        throw BackendError(std::string("fork: ") + std::strerror(errno));
    }
    if (pid == 0) {
        ::dup2(to_child[0], STDIN_FILENO);
        ::dup2(from_child[1], STDOUT_FILENO);
        for (int fd : {to_child[0], to_child[1], from_child[0], from_child[1]}) {
            ::close(fd);
        }
        ::execl("/bin/sh", "sh", "-c", command_.c_str(), nullptr);
        _exit(127);
    }

    ::close(to_child[0]);
    ::close(from_child[1]);
    child_pid_ = pid;
    to_child_ = to_child[1];
    from_child_ = from_child[0];
    read_buffer_.clear();
}

void BackendClient::shutdown() noexcept {
    if (to_child_ >= 0) ::close(to_child_);
    if (from_child_ >= 0) ::close(from_child_);
    to_child_ = from_child_ = -1;
    if (child_pid_ > 0) {
        int status = 0;
        if (::waitpid(child_pid_, &status, WNOHANG) == 0) {
            ::kill(child_pid_, SIGKILL);
            ::waitpid(child_pid_, &status, 0);
        }
        child_pid_ = -1;
    }
    read_buffer_.clear();
}

void BackendClient::send_line(const std::string& line) {
    std::string payload = line;
    payload.push_back('\n');
    if (write_nosigpipe(to_child_, payload.data(), payload.size()) < 0) {
        const std::string reason = std::strerror(errno);
        shutdown();
        throw BackendError("cannot write to backend (" + reason + ")");
    }
}

std::string BackendClient::receive_line() {
    const auto deadline = std::chrono::steady_clock::now() + timeout_;
    while (true) {
        const size_t newline = read_buffer_.find('\n');
        if (newline != std::string::npos) {
            std::string line = read_buffer_.substr(0, newline);
            read_buffer_.erase(0, newline + 1);
            if (!line.empty() && line.back() == '\r') line.pop_back();
            return line;
        }

        const auto now = std::chrono::steady_clock::now();
        if (now >= deadline) {
            shutdown();
            throw BackendTimeout("backend produced no reply within " +
                                 std::to_string(timeout_.count()) + " ms");
        }
        const auto remaining =
            std::chrono::duration_cast<std::chrono::milliseconds>(deadline - now);

        struct pollfd pfd = {from_child_, POLLIN, 0};
        const int ready = ::poll(&pfd, 1, static_cast<int>(remaining.count()) + 1);
        if (ready < 0) {
            if (errno == EINTR) continue;
            shutdown();
            throw BackendError(std::string("poll: ") + std::strerror(errno));
        }
        if (ready == 0) continue;  // deadline check on next loop

        char chunk[4096];
        const ssize_t n = ::read(from_child_, chunk, sizeof(chunk));
        if (n < 0) {
            if (errno == EINTR) continue;
            shutdown();
            throw BackendError(std::string("read: ") + std::strerror(errno));
        }
        if (n == 0) {
            shutdown();
            throw ProtocolViolation("backend closed its output mid-request");
        }
        read_buffer_.append(chunk, static_cast<size_t>(n));
    }
}

std::string BackendClient::roundtrip(const std::string& request) {
    ensure_running();
    send_line(request);
    return receive_line();
}

std::vector<Candidate> BackendClient::recommend(const MethodRecord& record, int k,
                                                const PromptTemplate& tpl) {
    nlohmann::ordered_json request;
    request["kind"] = "recommend";
    request["k"] = k;
    request["record"] = nlohmann::ordered_json::parse(record_to_json_line(record));
    request["prompt"] = serialize_contexts(record, tpl).text;

    const auto reply = parse_reply(roundtrip(request.dump()));
    return parse_candidates(reply);
}

MccVerdict BackendClient::classify(const MethodRecord& record,
                                   const SubtokenSeq& presented_name,
                                   const PromptTemplate& tpl) {
    nlohmann::ordered_json request;
    request["kind"] = "classify";
    request["record"] = nlohmann::ordered_json::parse(record_to_json_line(record));
    request["presented_name"] = presented_name;
    request["prompt"] = serialize_contexts(record, tpl).text;

    const auto reply = parse_reply(roundtrip(request.dump()));
    if (!reply.contains("label") || !reply.at("label").is_string() ||
        !reply.contains("score") || !reply.at("score").is_number()) {
        throw ProtocolViolation("classify reply lacks label/score");
    }
    MccVerdict verdict;
    verdict.strategy = MccStrategy::classification;
    try {
        verdict.label =
            consistency_label_from_string(reply.at("label").get<std::string>());
    } catch (const Error& e) {
        throw ProtocolViolation(e.what());
    }
    verdict.score = reply.at("score").get<double>();
    return verdict;
}

std::vector<Candidate> recommend_backend(const std::string& command,
                                         const MethodRecord& record, int k,
                                         std::chrono::milliseconds timeout) {
    BackendClient client(command, timeout);
    return client.recommend(record, k);
}

NameGenerator backend_generator(BackendClient& client) {
    return [&client](const MethodRecord& record, int k) {
        return client.recommend(record, k);
    };
}

}  // namespace mnw
