#ifndef GENOTAG_ERRORS_H_
#define GENOTAG_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace genotag {

// Base for every error the library reports about malformed data or
// violated contracts. I/O failures are reported as IoError so that the
// command line can map them to a distinct exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class MalformedTag : public Error {
 public:
  using Error::Error;
};

class EmptyGenotype : public Error {
 public:
  using Error::Error;
};

// Error tied to a line of an input file. line() is 1-based; 0 means the
// error is not attached to a particular line.
class ParseError : public Error {
 public:
  ParseError(const std::string &what, std::size_t line)
      : Error(line == 0 ? what
                        : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class TagsetMapParseError : public ParseError {
 public:
  using ParseError::ParseError;
};

class LexiconParseError : public ParseError {
 public:
  using ParseError::ParseError;
};

class RuleParseError : public ParseError {
 public:
  using ParseError::ParseError;
};

class ModelFormatError : public ParseError {
 public:
  using ParseError::ParseError;
};

class TrainingDataError : public ParseError {
 public:
  using ParseError::ParseError;
};

class InvalidCounts : public Error {
 public:
  using Error::Error;
};

class ScheduleError : public Error {
 public:
  using Error::Error;
};

class MissingResource : public Error {
 public:
  using Error::Error;
};

class AlignmentError : public Error {
 public:
  using Error::Error;
};

}  // namespace genotag

#endif  // GENOTAG_ERRORS_H_
