// SPDX-License-Identifier: Apache-2.0

#ifndef PLINT_ERROR_HPP
#define PLINT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace plint {

/// Root of every error the library raises on bad input or misuse.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// code model
class ModelError : public Error {
 public:
  using Error::Error;
};
class DanglingReference : public ModelError {
 public:
  using ModelError::ModelError;
};
class DuplicateId : public ModelError {
 public:
  using ModelError::ModelError;
};
class CyclicContainment : public ModelError {
 public:
  using ModelError::ModelError;
};
class UnknownEntity : public ModelError {
 public:
  using ModelError::ModelError;
};

/// Lexing or parsing failure. Always carries the file and 1-based line.
class SourceError : public Error {
 public:
  SourceError(std::string kind, std::string file, int line, const std::string& what)
      : Error(file + ":" + std::to_string(line) + ": " + kind + ": " + what),
        file_(std::move(file)),
        line_(line) {}

  const std::string& file() const noexcept { return file_; }
  int line() const noexcept { return line_; }

 private:
  std::string file_;
  int line_;
};

class LexError : public SourceError {
 public:
  LexError(std::string file, int line, const std::string& what)
      : SourceError("lex error", std::move(file), line, what) {}
};

class ParseError : public SourceError {
 public:
  ParseError(std::string file, int line, const std::string& what)
      : SourceError("parse error", std::move(file), line, what) {}
};

/// Unreadable or missing input path.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Facts document does not match the code-model/1 schema. path() is a JSON
/// pointer to the offending key.
class SchemaError : public Error {
 public:
  SchemaError(std::string path, const std::string& what)
      : Error(path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

// metrics
class MetricError : public Error {
 public:
  using Error::Error;
};
class NoBody : public MetricError {
 public:
  using MetricError::MetricError;
};
class NotAClass : public MetricError {
 public:
  using MetricError::MetricError;
};
class NotAType : public MetricError {
 public:
  using MetricError::MetricError;
};
class TokensUnavailable : public MetricError {
 public:
  using MetricError::MetricError;
};

// configuration
class ConfigError : public Error {
 public:
  using Error::Error;
};
class UnknownRuleId : public ConfigError {
 public:
  using ConfigError::ConfigError;
};
class InvalidParam : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

// scoring
class ScoreError : public Error {
 public:
  using Error::Error;
};
class NonPositiveLimit : public ScoreError {
 public:
  using ScoreError::ScoreError;
};
class NoEnabledRules : public ScoreError {
 public:
  using ScoreError::ScoreError;
};
class NothingScored : public ScoreError {
 public:
  using ScoreError::ScoreError;
};

}  // namespace plint

#endif  // PLINT_ERROR_HPP
