#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jaccoord {

/// Base of every domain error. kind() is the stable tag used in JSON output.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& detail)
      : std::runtime_error(detail), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error("SyntaxError",
              what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class ConstantInput : public Error {
 public:
  explicit ConstantInput(const std::string& where)
      : Error("ConstantInput", where + ": input polynomial is constant") {}
};

class ZeroPolynomial : public Error {
 public:
  explicit ZeroPolynomial(const std::string& where)
      : Error("ZeroPolynomial", where + ": input polynomial is zero") {}
};

class NotSquarefree : public Error {
 public:
  explicit NotSquarefree(const std::string& where)
      : Error("NotSquarefree", where + ": input polynomial is not squarefree") {}
};

class InternalVerificationFailure : public Error {
 public:
  explicit InternalVerificationFailure(const std::string& detail)
      : Error("InternalVerificationFailure", detail) {}
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& detail) : Error("UsageError", detail) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& detail) : Error("IoError", detail) {}
};

class CaseFormatError : public Error {
 public:
  explicit CaseFormatError(const std::string& detail)
      : Error("CaseFormatError", detail) {}
};

}  // namespace jaccoord
