#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace trident {

/// Raised by exact univariate division when the divisor does not divide the
/// dividend over the integers. `remainder_degree()` is the degree of the
/// rational remainder, or -1 when the remainder vanishes but the quotient
/// has non-integral coefficients.
class NotDivisible : public std::domain_error {
 public:
  explicit NotDivisible(int remainder_degree)
      : std::domain_error("polynomial is not divisible (remainder degree " +
                          std::to_string(remainder_degree) + ")"),
        remainder_degree_(remainder_degree) {}

  int remainder_degree() const noexcept { return remainder_degree_; }

 private:
  int remainder_degree_;
};

class DivisionByZeroPolynomial : public std::invalid_argument {
 public:
  DivisionByZeroPolynomial()
      : std::invalid_argument("division by the zero polynomial") {}
};

/// An enumeration or expansion was asked to exceed its configured bound.
class CapExceeded : public std::length_error {
 public:
  CapExceeded(const std::string& what, unsigned long long requested,
              unsigned long long cap)
      : std::length_error(what + ": " + std::to_string(requested) +
                          " exceeds cap " + std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}

  unsigned long long requested() const noexcept { return requested_; }
  unsigned long long cap() const noexcept { return cap_; }

 private:
  unsigned long long requested_;
  unsigned long long cap_;
};

/// The simultaneous root iteration did not settle. `trace()` holds the
/// largest correction of each iteration.
class NoConvergence : public std::runtime_error {
 public:
  NoConvergence(int iterations, std::vector<double> trace)
      : std::runtime_error("root iteration did not converge after " +
                           std::to_string(iterations) + " iterations"),
        trace_(std::move(trace)) {}

  const std::vector<double>& trace() const noexcept { return trace_; }

 private:
  std::vector<double> trace_;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace trident
