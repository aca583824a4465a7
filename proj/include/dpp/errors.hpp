#pragma once

#include <stdexcept>
#include <string>

namespace dpp {

/// Base class for all domain errors thrown by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid argument or domain/scheme mismatch at construction time.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// det K(v,v) fell below tolerance: the observation v has numerically zero
/// correlation density and the Palm kernel is undefined.
class NearSingularPalm : public Error {
public:
  using Error::Error;
};

/// det(1 - M_theta K_v) fell below tolerance: the conditioning event is
/// degenerate and the resolvent cannot be formed.
class SingularResolvent : public Error {
public:
  using Error::Error;
};

/// P(xi_1(Lambda) = m) is numerically zero.
class ZeroProbabilityStratum : public Error {
public:
  using Error::Error;
};

/// Exact conditioning on an observation of probability zero.
class ZeroProbabilityObservation : public Error {
public:
  using Error::Error;
};

/// Inclusion-exclusion produced subset probabilities more negative than the
/// roundoff tolerance: the kernel does not induce a DPP.
class NotAValidDPP : public Error {
public:
  using Error::Error;
};

/// Spectral sampler input has eigenvalues outside [-tol, 1+tol].
class EigenvalueOutOfRange : public Error {
public:
  using Error::Error;
};

}  // namespace dpp
