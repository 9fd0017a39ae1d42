#pragma once

// External machines over a line protocol: one request line in, one answer
// line out. The child is started with /bin/sh -c and killed on destruction.

#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <memory>
#include <string>

#include "tukey/adversary.hpp"
#include "tukey/errors.hpp"
#include "tukey/values.hpp"

namespace tukey::process {

class LineProcess {
 public:
  LineProcess(std::string command, int timeout_ms = 5000) : command_(std::move(command)), timeout_ms_(timeout_ms) {
    int in[2], out[2];
    if (pipe(in) != 0 || pipe(out) != 0) throw MachineFault("pipe failed for '" + command_ + "'");
    pid_ = fork();
    if (pid_ < 0) throw MachineFault("fork failed for '" + command_ + "'");
    if (pid_ == 0) {
      dup2(in[0], STDIN_FILENO);
      dup2(out[1], STDOUT_FILENO);
      close(in[0]);
      close(in[1]);
      close(out[0]);
      close(out[1]);
      execl("/bin/sh", "sh", "-c", command_.c_str(), static_cast<char*>(nullptr));
      _exit(127);
    }
    close(in[0]);
    close(out[1]);
    to_child_ = in[1];
    from_child_ = out[0];
    signal(SIGPIPE, SIG_IGN);
  }

  LineProcess(const LineProcess&) = delete;
  LineProcess& operator=(const LineProcess&) = delete;

  ~LineProcess() {
    close(to_child_);
    close(from_child_);
    kill(pid_, SIGKILL);
    waitpid(pid_, nullptr, 0);
  }

  std::string request(const std::string& line) {
    const std::string msg = line + "\n";
    for (std::size_t done = 0; done < msg.size();) {
      const ssize_t n = write(to_child_, msg.data() + done, msg.size() - done);
      if (n <= 0) throw MachineFault("'" + command_ + "' closed its input");
      done += static_cast<std::size_t>(n);
    }
    const auto deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(timeout_ms_);
    for (;;) {
      if (auto pos = buffer_.find('\n'); pos != std::string::npos) {
        std::string out = buffer_.substr(0, pos);
        buffer_.erase(0, pos + 1);
        if (!out.empty() && out.back() == '\r') out.pop_back();
        return out;
      }
      const auto left =
          std::chrono::duration_cast<std::chrono::milliseconds>(deadline - std::chrono::steady_clock::now()).count();
      if (left <= 0) throw BudgetExhausted("'" + command_ + "' did not answer '" + line + "' in time");
      pollfd p{from_child_, POLLIN, 0};
      const int ready = poll(&p, 1, static_cast<int>(left));
      if (ready < 0 && errno == EINTR) continue;
      if (ready <= 0) continue;
      char chunk[4096];
      const ssize_t n = read(from_child_, chunk, sizeof chunk);
      if (n <= 0) throw MachineFault("'" + command_ + "' exited before answering '" + line + "'");
      buffer_.append(chunk, static_cast<std::size_t>(n));
    }
  }

 private:
  std::string command_;
  int timeout_ms_;
  pid_t pid_ = -1;
  int to_child_ = -1, from_child_ = -1;
  std::string buffer_;
};

/// "QUERY <prefix-bits> <m>" -> "0" | "1" | "U".
class ProcessMachine : public adversary::ContinuousMachine {
 public:
  explicit ProcessMachine(std::string command, int timeout_ms = 5000) : name_(command), proc_(command, timeout_ms) {}

  adversary::Answer query(const Bits& prefix, Nat m) override {
    const std::string line = "QUERY " + adversary::bits_str(prefix) + " " + std::to_string(m);
    const std::string a = proc_.request(line);
    if (a == "0") return adversary::Answer::zero;
    if (a == "1") return adversary::Answer::one;
    if (a == "U") return adversary::Answer::undecided;
    throw MachineFault("'" + name_ + "' answered '" + a + "' to '" + line + "'");
  }
  std::string name() const override { return name_; }

 private:
  std::string name_;
  LineProcess proc_;
};

/// A candidate map as a process: a value literal in, a value literal out.
class ProcessMap {
 public:
  ProcessMap(std::string command, Kind to, int timeout_ms = 5000)
      : to_(std::move(to)), proc_(std::make_shared<LineProcess>(std::move(command), timeout_ms)) {}

  Value operator()(const Value& v) const { return parse_value(to_, proc_->request(to_literal(v))); }

 private:
  Kind to_;
  std::shared_ptr<LineProcess> proc_;
};

}  // namespace tukey::process
