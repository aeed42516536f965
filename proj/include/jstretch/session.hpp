#ifndef JSTRETCH_SESSION_HPP
#define JSTRETCH_SESSION_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jstretch/analysis.hpp"
#include "jstretch/errors.hpp"

namespace jst::cli {

/// Session input error; line and column are 1-based.
class SessionError : public Error {
 public:
  SessionError(const std::string& kind, int line, int column, const std::string& reason)
      : Error(kind + " at line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + reason),
        line_(line),
        column_(column),
        reason_(reason) {}
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& reason() const { return reason_; }

 private:
  int line_, column_;
  std::string reason_;
};

class SyntaxError : public SessionError {
 public:
  SyntaxError(int line, int column, const std::string& reason) : SessionError("syntax error", line, column, reason) {}
};

class UnknownVariable : public SessionError {
 public:
  UnknownVariable(int line, int column, const std::string& reason)
      : SessionError("unknown variable", line, column, reason) {}
};

class NonPrimeChar : public SessionError {
 public:
  NonPrimeChar(int line, int column, std::uint64_t p)
      : SessionError("non-prime characteristic", line, column, std::to_string(p) + " is not prime") {}
};

struct Caps {
  /// Largest S-pair degree in Groebner computations.
  int gb_degree = 40;
  /// Largest truncation exponent N for inhomogeneous lengths.
  int truncation = 60;
  /// Largest r or s tried by the reduction-number and nilpotency searches.
  int search = 20;
  friend bool operator==(const Caps&, const Caps&) = default;
};

struct SessionConfig {
  std::uint32_t p = 32003;
  std::uint64_t seed = 1;
  int trials = 5;
  Caps caps;
  Hypotheses hyps;
  bool json = false;
};

/// Rejects a non-prime p and non-positive caps or trials with PreconditionFailed.
void validate(const SessionConfig& config);

struct AnalyzeCommand {
  std::string ideal;
  std::uint64_t seed = 1;
  int trials = 5;
  int cap = 20;
  int line = 0;
};

struct Session {
  std::map<std::string, AmbientPtr> rings;
  /// Insertion order of ideal names.
  std::vector<std::string> ideal_order;
  std::map<std::string, Ideal> ideals;
  std::map<std::string, std::string> ideal_ring;
  std::map<std::string, Hypotheses> asserted;
  std::vector<AnalyzeCommand> commands;

  const Ideal& ideal(const std::string& name) const;
  /// The ideal named by the last analyze command, else the last declared ideal.
  const std::string& default_ideal() const;
  Hypotheses hypotheses(const std::string& name) const;
};

/// Line-oriented format:
///   ring R vars x,y,z [char 32003] [order grevlex|lex]
///   relations R (f1, f2, ...)
///   ideal I in R (g1, g2, ...)
///   assert I G_d AN_minus depth_RI=1
///   analyze I [seed=42] [trials=5] [cap=20]
/// '#' starts a comment. Config values fill in whatever a line leaves out.
Session parse_session(const std::string& text, const SessionConfig& config = {});

}  // namespace jst::cli

#endif
