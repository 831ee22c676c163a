#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lowrank/algebra.hpp"

namespace lowrank {

/// An R-linear map A -> A stored by the images of the basis elements.
struct Involution {
  AlgebraPtr algebra;
  std::vector<AlgebraElement> images;

  AlgebraElement apply(const AlgebraElement& x) const;
};

struct InvolutionCheck {
  bool ok = true;
  /// "identity", "order" or "anti-multiplicative"; empty when ok.
  std::string violated;
  /// Basis indices exhibiting the failure. Single-index axioms repeat the index.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/// Checks 1bar = 1, ebar bar = e, and (e_i e_j)bar = ebar_j ebar_i on the basis.
InvolutionCheck verify_involution(const Involution& inv);

/// e_i ebar_i and (e_i + e_j)(ebar_i + ebar_j) are scalars for all basis indices.
/// False when inv is not an involution.
bool verify_standard(const Involution& inv);

/// Scalar coefficient of x + xbar; throws DomainError if the sum is not a scalar.
RingElement trace(const Involution& inv, const AlgebraElement& x);
/// Scalar coefficient of x xbar; throws DomainError if the product is not a scalar.
RingElement norm(const Involution& inv, const AlgebraElement& x);

struct QuadraticCertificate {
  RingElement t;
  RingElement n;
};

/// (trace(x), norm(x)) after checking x^2 - t x + n = 0 exactly.
QuadraticCertificate quadratic_certificate(const Involution& inv, const AlgebraElement& x);

/// x -> t(x) - x for the linear functional with t(e_0) = 2 and t(e_i) = t_values[i-1].
Involution involution_from_trace(const AlgebraPtr& a, const std::vector<RingElement>& t_values);

/// Solves for the trace functional from the requirement e_i^2 in R + R e_i and
/// verifies the result. Any standard involution is determined by this trace,
/// so a failed check means none exists.
std::optional<Involution> find_standard_involution(const AlgebraPtr& a);

/// Every standard involution, found by trying each trace tuple in F_p^(k-1).
/// Prime fields and rank <= 4 only.
std::vector<Involution> standard_involutions_bruteforce(const AlgebraPtr& a);

/// Quaternion algebra (a, b): basis 1, i, j, ij with i^2 = a, j^2 = b, ji = -ij.
/// Requires a, b units and 2 != 0.
AlgebraPtr quaternion_algebra(const RingElement& a, const RingElement& b);
Involution quaternion_conjugation(const RingElement& a, const RingElement& b);

/// [[a, b], [c, d]] -> [[d, -b], [-c, a]] on matrix_algebra(spec, 2).
Involution m2_adjoint(const RingSpec& spec);

/// (x, y) -> (y, x) on F x F built by direct_product.
Involution pair_swap(const RingSpec& spec);

}  // namespace lowrank
