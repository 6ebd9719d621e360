#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace subspace_sets {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Data that violates a precondition (non-finite entries, zero vectors, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t expected, std::size_t actual)
      : Error("dimension mismatch: expected " + std::to_string(expected) +
              ", got " + std::to_string(actual)),
        expected_(expected),
        actual_(actual) {}

  std::size_t expected() const { return expected_; }
  std::size_t actual() const { return actual_; }

 private:
  std::size_t expected_;
  std::size_t actual_;
};

class NumericalFailure : public Error {
 public:
  using Error::Error;
};

/// Malformed input file. line() is 1-based; 0 means the file as a whole.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class OutOfVocabulary : public Error {
 public:
  explicit OutOfVocabulary(std::string word)
      : Error("out of vocabulary: " + word), word_(std::move(word)) {}

  const std::string& word() const { return word_; }

 private:
  std::string word_;
};

class EmptySpan : public Error {
 public:
  using Error::Error;
};

class EmptyTestSet : public Error {
 public:
  using Error::Error;
};

class InsufficientPairs : public Error {
 public:
  using Error::Error;
};

/// Statistic undefined for the input (e.g. a constant sequence).
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

class MissingSentence : public Error {
 public:
  explicit MissingSentence(std::string id)
      : Error("missing sentence: " + id), id_(std::move(id)) {}

  const std::string& id() const { return id_; }

 private:
  std::string id_;
};

/// Option values that are individually valid but cannot be combined.
class InvalidCombination : public Error {
 public:
  using Error::Error;
};

}  // namespace subspace_sets
