#pragma once

#include <stdexcept>
#include <string>

namespace entmt {

// Configuration problems (bad flags, missing resources). CLI exit status 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Problems with input data. CLI exit status 3.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CorpusShapeError : public DataError {
 public:
  using DataError::DataError;
};

// Raised when a reference segment has zero tokens.
class DegenerateReferenceError : public DataError {
 public:
  using DataError::DataError;
};

class JudgmentFormatError : public DataError {
 public:
  using DataError::DataError;
};

class CoverageError : public DataError {
 public:
  using DataError::DataError;
};

// The brute-force aligner refuses inputs it cannot enumerate in reasonable time.
class OracleLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace entmt
