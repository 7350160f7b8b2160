#pragma once

#include <span>
#include <vector>

#include "hopf/types.hpp"

namespace hopf {

/// Parameters of the standard Hopf manifold H = (C^k \ {0}) / (z ~ lambda z).
/// A gluing factor with |lambda| < 1 is replaced by 1/lambda at construction;
/// |lambda| = 1 is rejected.
struct HopfParams {
  int k;
  cplx lambda;

  HopfParams(int k_, cplx lambda_);

  double abs_lambda() const { return std::abs(lambda); }
  double log_abs_lambda() const { return std::log(std::abs(lambda)); }
};

/// A point of H, stored as the canonical lift with 1 <= |lift| < |lambda|.
struct HopfPoint {
  Vec lift;

  int k() const { return static_cast<int>(lift.size()); }
  double norm() const { return lift.norm(); }
};

struct NormalizeResult {
  HopfPoint point;
  long exponent;  // lift = lambda^exponent * z
};

/// Canonical representative of the class of z: the unique lambda^m * z with
/// norm in [1, |lambda|). Throws std::domain_error on z = 0.
NormalizeResult normalize_ex(const Vec& z, const HopfParams& params);
HopfPoint normalize(const Vec& z, const HopfParams& params);

/// A (1,1)-form at a point, represented by the Hermitian matrix M in the
/// convention  form = (i/2pi) * sum_{j,l} M_jl dz_j ^ dzbar_l.
/// Arithmetic results are re-symmetrized as (M + M^dagger)/2.
class HermitianForm {
 public:
  explicit HermitianForm(Mat m, bool symmetrize = true);

  const Mat& matrix() const { return m_; }
  int k() const { return static_cast<int>(m_.rows()); }

  HermitianForm operator+(const HermitianForm& o) const { return HermitianForm(m_ + o.m_); }
  HermitianForm operator-(const HermitianForm& o) const { return HermitianForm(m_ - o.m_); }
  HermitianForm scaled(double c) const { return HermitianForm(c * m_); }

  /// Max |M - M^dagger| entry relative to scale, before symmetrization.
  static double hermiticity_defect(const Mat& m);

 private:
  Mat m_;
};

/// omega: the Hermitian metric |z|^-2 * Identity (descends to H).
HermitianForm metric_omega(const HopfPoint& x);

/// omega': the rank-one fiber form |z|^-4 * (z z^dagger); trace = |z|^-2.
HermitianForm omega_prime(const HopfPoint& x);

/// Pullback of the Fubini-Study form: |z|^-2 I - |z|^-4 z z^dagger.
/// Kernel is spanned by the lift; metric_omega = fs_pullback + omega_prime.
HermitianForm fs_pullback(const HopfPoint& x);

/// Mixed discriminant of k Hermitian k x k matrices, normalized so that
/// MD(A,...,A) = k! det(A); the top wedge of the corresponding (1,1)-forms
/// has density MD * pi^-k against Lebesgue measure on C^k.
/// Throws std::domain_error on a wrong count or shape.
double mixed_discriminant(std::span<const HermitianForm> forms);
double mixed_discriminant(const std::vector<HermitianForm>& forms);

/// Distance on H between canonical representatives: min over m in {-1,0,1}
/// of |x - lambda^m y|. Zero iff same class (for annulus representatives).
double dist_h(const HopfPoint& x, const HopfPoint& y, const HopfParams& params);

/// Chordal distance between directions [z], [w] in P^{k-1}: sqrt(1 - |<z,w>|^2/(|z||w|)^2).
double chordal_distance(const Vec& z, const Vec& w);

}  // namespace hopf
