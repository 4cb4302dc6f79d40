#pragma once

#include <stdexcept>
#include <string>

namespace etm {

enum class Err {
  NotPrime,
  NotPrimePower,
  NotPrimitive,
  ZeroElement,
  DivisionByZero,
  BadGeneratingSet,
  BadCongruence,
  BadJ,
  InvalidRotation,
  NotOrientableRepresentation,
  InvalidFlagMap,
  NotFree,
  GenusUndefined,
  TooLarge,
  Unsupported,
  ParseError,
};

const char* err_name(Err e);

/// Typed error carrying one of the Err codes. The CLI maps any Error to
/// exit code 2 and prints "<name>: <message>".
class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& msg)
      : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

}  // namespace etm
