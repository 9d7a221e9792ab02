#pragma once

#include <stdexcept>
#include <string>

namespace verikit {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidPermutation : Error {
  using Error::Error;
};
struct NotTransitive : Error {
  using Error::Error;
};
struct NotNormal : Error {
  using Error::Error;
};
struct MembershipFailure : Error {
  using Error::Error;
};
struct ResourceBudgetExceeded : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct HypothesisViolated : Error {
  using Error::Error;
};
struct InvalidFrame : Error {
  using Error::Error;
};
struct NotInKernel : Error {
  using Error::Error;
};
struct IndexOutOfRange : Error {
  using Error::Error;
};
struct OddIndexSum : Error {
  using Error::Error;
};
struct DegreeOverflow : Error {
  using Error::Error;
};
struct ContextDegreeExceeded : Error {
  using Error::Error;
};
struct NotBranchPoint : Error {
  using Error::Error;
};
struct DataFileMissing : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

}  // namespace verikit
