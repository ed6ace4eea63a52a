#ifndef RESIDUUM_REPORT_HPP
#define RESIDUUM_REPORT_HPP

#include <string>
#include <vector>

namespace residuum {

/// Exit codes shared by the CLI and the C API.
enum ExitCode : int {
  kExitPass = 0,
  kExitVerifyFail = 1,
  kExitInputError = 2,
  kExitTruncation = 3,
};

/// Deterministic command report. Entries are emitted in insertion order and
/// every value is an exact string, so two runs on the same input render
/// byte-identical text and JSON.
class Report {
public:
  enum class Status { info, pass, fail, skip };

  struct Entry {
    std::string key;
    std::string value;
    Status status;
  };
  struct Warning {
    std::string id; // stable, greppable identifier, e.g. W-EVEN-K-RESIDUE
    std::string message;
  };

  Report(std::string command, std::string inputs_digest);

  void info(const std::string& key, const std::string& value);
  void check(const std::string& key, bool ok, const std::string& value = "");
  void skip(const std::string& key, const std::string& why);
  void warn(const std::string& id, const std::string& message);

  bool all_passed() const { return failures_ == 0; }
  int exit_code() const { return failures_ == 0 ? kExitPass : kExitVerifyFail; }
  const std::vector<Entry>& entries() const { return entries_; }
  const std::vector<Warning>& warnings() const { return warnings_; }
  const std::string& command() const { return command_; }

  std::string text() const;
  std::string json() const;

private:
  std::string command_;
  std::string digest_;
  std::vector<Entry> entries_;
  std::vector<Warning> warnings_;
  int failures_ = 0;
};

/// FNV-1a, rendered as 16 hex digits; digests report inputs.
std::string fnv1a_digest(const std::string& bytes);

} // namespace residuum

#endif
