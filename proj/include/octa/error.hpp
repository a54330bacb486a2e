// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace octa {

enum class ErrorKind {
  // bad input
  NotPrime,
  ReducibleModulus,
  WrongDegree,
  BadCongruence,
  NotDivisor,
  ZeroVector,
  MissingFourthRoot,
  DivisionByZero,
  BadInput,
  ResourceLimit,
  // internal consistency
  DegenerateBlock,
  CountMismatch,
  LabelClash,
  NotCoherent,
  NotEquitable,
  NonIntegerResult,
  RefinementViolation,
  ContractViolation,
};

std::string_view to_string(ErrorKind kind);

/// True for errors caused by caller input; false for internal-consistency failures.
bool is_input_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string module, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + " [" + module + "]: " + what),
        kind_(kind),
        module_(std::move(module)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& module() const noexcept { return module_; }

 private:
  ErrorKind kind_;
  std::string module_;
};

}  // namespace octa
