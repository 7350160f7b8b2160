#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace hopf {

using cplx = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

/// Thrown when a numerical procedure fails (overflow, non-convergence, ...).
/// Carries the module/operation context so the CLI can report it.
class numeric_error : public std::runtime_error {
 public:
  numeric_error(std::string where, std::string what)
      : std::runtime_error(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

}  // namespace hopf
