#pragma once

#include <stdexcept>
#include <string>

namespace topo {

enum class ErrorKind {
  InputError,
  EmptyInput,
  FaceNotInComplex,
  VertexClash,
  NotPseudomanifold,
  NotSubcomplex,
  DegenerateInput,
  NonUniqueMinimum,
  StarMinimalityViolation,
  PointOutsideComplex,
  DegenerateFacet,
  RetryBudgetExceeded,
  NonGenericDirection,
  NonGenericHyperplane,
  AntipodalAmbiguity,
  CyclicRelation,
  OracleInconsistency,
  JoinMissing,
  NotFree,
  UnsupportedCell,
  RealizationSearchFailed,
  GenericityFailure,
  RecursionBudgetExceeded,
  BudgetExceeded,
  CarrierMissing,
  NotConvex,
  Precondition,
  CertificateRejected,
  UnknownSpec,
  BadParameters,
};

const char* kind_name(ErrorKind k);

class TopoError : public std::runtime_error {
 public:
  TopoError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace topo
