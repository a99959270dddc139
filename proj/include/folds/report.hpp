#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace folds {

struct Issue {
  std::string code;
  std::string message;
};

/// Outcome of a structural validation pass. Empty issue list means ok.
struct ValidationReport {
  std::vector<Issue> issues;

  bool ok() const { return issues.empty(); }
  void add(std::string code, std::string message) {
    issues.push_back({std::move(code), std::move(message)});
  }
  void merge(const ValidationReport& other) {
    issues.insert(issues.end(), other.issues.begin(), other.issues.end());
  }
  std::string summary() const {
    if (ok()) return "ok";
    std::string s;
    for (const auto& i : issues) {
      if (!s.empty()) s += "\n";
      s += i.code + ": " + i.message;
    }
    return s;
  }
};

/// Hard failure: bad syntax, unknown names, contract violations.
struct FoldsError : std::runtime_error {
  std::string code;
  FoldsError(std::string c, const std::string& msg)
      : std::runtime_error(c + ": " + msg), code(std::move(c)) {}
};

/// Comments run from a '#' at the start of a line or after whitespace to the
/// end of the line. A '#' inside a token (element names like K#0) is literal.
inline std::string strip_comment(const std::string& line) {
  for (size_t i = 0; i < line.size(); ++i)
    if (line[i] == '#' && (i == 0 || line[i - 1] == ' ' || line[i - 1] == '\t'))
      return line.substr(0, i);
  return line;
}

}  // namespace folds
