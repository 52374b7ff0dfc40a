#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "symplie/rational.hpp"

namespace symplie {

enum class ErrorKind {
  NonSquare,
  DimensionMismatch,
  IndexOutOfRange,
  AntisymmetryConflict,
  JacobiViolation,
  NotAntisymmetric,
  NotClosed,
  Degenerate,
  NotAnIdeal,
  InternalInvariantViolation,
  NotNilpotent,
  NotCentral,
  TrivialCenter,
  OrbitNotOpen,
  SingularT,
  NoCyclicVector,
  ParseError,
};

inline std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::AntisymmetryConflict: return "AntisymmetryConflict";
    case ErrorKind::JacobiViolation: return "JacobiViolation";
    case ErrorKind::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::InternalInvariantViolation: return "InternalInvariantViolation";
    case ErrorKind::NotNilpotent: return "NotNilpotent";
    case ErrorKind::NotCentral: return "NotCentral";
    case ErrorKind::TrivialCenter: return "TrivialCenter";
    case ErrorKind::OrbitNotOpen: return "OrbitNotOpen";
    case ErrorKind::SingularT: return "SingularT";
    case ErrorKind::NoCyclicVector: return "NoCyclicVector";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Data that lets a caller replay a failed check: basis indices (a pair or
/// triple) and/or a coordinate vector.
struct Witness {
  std::vector<std::size_t> indices;
  std::vector<Rational> vector;

  [[nodiscard]] bool empty() const { return indices.empty() && vector.empty(); }
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, Witness witness = {})
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), witness_(std::move(witness)) {}

  [[nodiscard]] ErrorKind kind() const { return kind_; }
  [[nodiscard]] const Witness& witness() const { return witness_; }

 private:
  ErrorKind kind_;
  Witness witness_;
};

}  // namespace symplie
