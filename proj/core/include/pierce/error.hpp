#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pierce {

enum class ErrorCode {
  EmptyInput,
  UnsupportedR,
  BadArity,
  TooLarge,
  KkmConditionViolated,
  GeneratorExhausted,
  SolverFailed,
  InvalidArgument,
  // instance parsing
  MalformedJson,
  MissingField,
  WrongType,
  UnknownShapeKind,
  EmptyShape,
  NonFinite,
  BadRadius,
  TooManyFamilies,
  NoFamilies,
  UnsupportedVersion,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Instance parse failure. `path` is a JSON-pointer-like field path
/// ("families[0].shapes[3].radius"); `line` is 1-based, or 0 when the
/// failure is structural rather than lexical.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::string path, int line, const std::string& what)
      : Error(code, what), path_(std::move(path)), line_(line) {}

  const std::string& path() const noexcept { return path_; }
  int line() const noexcept { return line_; }

 private:
  std::string path_;
  int line_;
};

}  // namespace pierce
