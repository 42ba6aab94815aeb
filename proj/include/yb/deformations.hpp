#pragma once

// Entropic deformation families c_Q (I + f(lambda)), the r-matrix test and
// normalization of deformations of c_Q over Q[h]/(h^N).

#include <array>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "yb/cohomology.hpp"
#include "yb/rack.hpp"
#include "yb/trunc_poly.hpp"
#include "yb/yang_baxter.hpp"

namespace yb {

class YbeViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A cochain matrix with coefficients in Q[h]/(h^N).
PolyMatrix poly_cochain(const EntropicBasis& basis, std::span<const TruncPoly> params);

class DeformationFamily {
 public:
  /// Uses the degree-2 entropic basis of r; one parameter per orbit, all of
  /// the same truncation order.
  DeformationFamily(Rack rack, std::vector<TruncPoly> params);
  DeformationFamily(Rack rack, EntropicBasis basis, std::vector<TruncPoly> params);
  /// Rational parameters, truncation order 1.
  static DeformationFamily rational(Rack rack, std::span<const Rational> params);

  const Rack& rack() const { return rack_; }
  const EntropicBasis& basis() const { return basis_; }
  const std::vector<TruncPoly>& params() const { return params_; }
  std::size_t order() const { return params_.empty() ? 1 : params_.front().order(); }

  /// f(lambda) = sum_k lambda_k indicator_k
  PolyMatrix perturbation() const;

 private:
  Rack rack_;
  EntropicBasis basis_;
  std::vector<TruncPoly> params_;
};

/// c_Q (I + f(lambda)) as a plain matrix, invertible or not.
PolyMatrix assemble_matrix(const DeformationFamily& fam);
/// Same, as an operator; throws NotInvertible when I + f is singular.
YBOperator assemble(const DeformationFamily& fam);
/// Braid relation for assemble_matrix(fam); defined for every lambda.
YbeVerdict ybe_deformed(const DeformationFamily& fam);

/// The D4 reflection quandle {(13), (24), (12)(34), (14)(23)} in S4.
Rack d4_reflection_quandle();

/// printed_lambda_orbit()[k] is the orbit index carrying the parameter
/// printed as lambda_(k+1) in the displayed 16-parameter matrix.
const std::array<std::size_t, 16>& printed_lambda_orbit();

/// Family parameters from printed lambda_1..lambda_16 values.
std::vector<TruncPoly> params_from_printed(std::span<const TruncPoly> printed);

/// The displayed trace polynomial for tr[c(lambda)^2], evaluated at printed
/// lambda_1..lambda_16.
TruncPoly printed_trace_polynomial(std::span<const TruncPoly> printed);

struct TraceComparison {
  TruncPoly computed;
  TruncPoly formula;
  bool equal = false;
};

/// Compares tr[c(lambda)^2] with the displayed polynomial.
/// Throws std::invalid_argument unless fam's rack is the D4 reflection quandle.
TraceComparison trace_square_formula(const DeformationFamily& fam);

struct RMatrixVerdicts {
  YbeVerdict ybe_cq_f;
  YbeVerdict ybe_tau_f;
};

/// Verdicts for c_Q f and tau f. f must be entropic in every h-degree
/// (std::invalid_argument otherwise) and invertible (NotInvertible).
RMatrixVerdicts rmatrix_equivalence(const Rack& r, const PolyMatrix& f);

/// Matrix on V with constant term the identity.
struct Equivalence {
  std::size_t rack_size = 0;
  PolyMatrix matrix;
};

/// (a (x) a)^-1 c (a (x) a)
PolyMatrix conjugate(const PolyMatrix& c, const PolyMatrix& a);

/// True iff every h-coefficient of c_Q^-1 c - I is an entropic cochain.
bool is_entropic_deformation(const Rack& r, const PolyMatrix& c);

struct Normalization {
  Equivalence alpha;
  YBOperator output;
};

/// Finds alpha = I mod h with (alpha (x) alpha)^-1 c (alpha (x) alpha)
/// entropic. Throws std::invalid_argument if the constant term is not
/// c_Q, YbeViolation if c fails the braid relation, and std::logic_error
/// if some degree cannot be split into entropic part plus coboundary.
Normalization normalize_to_entropic(const Rack& r, const YBOperator& c);

}  // namespace yb
