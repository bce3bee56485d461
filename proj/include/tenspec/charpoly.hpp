#pragma once

// Exact characteristic polynomials, pfaffians and hyperpfaffians via Berezin
// integration.  These are the small-n oracles everything else is checked
// against; no floating point enters here.

#include "tenspec/grassmann.hpp"
#include "tenspec/lambda_poly.hpp"
#include "tenspec/tensor.hpp"

#include <optional>
#include <vector>

namespace tenspec {

using ExactMatrix = std::vector<std::vector<CRat>>;

/// The interaction part of the action: full ordered-tuple sums
///   sum_{a_1..a_p} sum_b g^{(b)} T_{a_1..a_p} psi^{(b_1)}_{a_1}...psi^{(b_p)}_{a_p}
/// plus, when gtilde is given, the same with conj(T) and gtilde.
ScalarElem build_action_general(const AntisymTensor& T, const CouplingSet& g,
                                const CouplingSet* gtilde = nullptr);

/// Partition function of  lambda sum_a psibar_a psi_a + S_int  as a polynomial
/// in lambda.  Degree n, monic with leading coefficient exactly 1.
LambdaPoly char_poly_from_interaction(const ScalarElem& s_int);

/// Tensor characteristic polynomial.  p even: real or complex T with couplings
/// g.  p odd: complex T only (the T-bar terms use conj(T) and gtilde).
LambdaPoly char_poly_exact(const AntisymTensor& T, const CouplingSet& g,
                           const CouplingSet* gtilde = nullptr);

/// det(lambda 1 - M) for a complex square matrix, computed by Berezin
/// integration of exp(sum psibar (lambda delta - M) psi).
LambdaPoly char_poly_matrix(const ExactMatrix& M);

/// Determinant by cofactor expansion; exact.  Used as the independent oracle
/// for pfaffian and characteristic-polynomial identities.
CRat determinant_cofactor(const ExactMatrix& M);

/// Pfaffian of an even-dimensional antisymmetric matrix:
/// integral of exp(-1/2 sum psi_a M_ab psi_b) under the D(psi) measure.
CRat pfaffian(const ExactMatrix& M);

/// Hyperpfaffian of a totally antisymmetric order-p tensor (p even, p | n):
/// integral of exp(sum_{a_1<...<a_p} T psi_{a_1}...psi_{a_p}).
CRat hyperpfaffian(const AntisymTensor& T);

/// Witness that uniform couplings g^{(b)} = 1 for all patterns annihilate the
/// lambda = 0 partition function.
bool all_g_unit_vanishes(const AntisymTensor& T);

}  // namespace tenspec
