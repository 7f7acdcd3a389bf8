#pragma once

#include "qyang/element.hpp"
#include "qyang/report.hpp"

namespace qyang {

/// The degree-n family element of U(q_K) with (possibly signed) indices
/// i, j. Computed by the left-splitting recursion with memoization in the
/// algebra context.
Element f_element(const AlgebraPtr& alg, int i, int j, int n);

/// Trace of the degree-n family over all signed diagonal indices; central
/// for every n and zero for even n.
Element c_element(const AlgebraPtr& alg, int n);

/// Checks the four-term bracket formula for [F_ij, F^(n)_kl] over all index
/// tuples of q_K and n <= nmax.
Report verify_fnr(const AlgebraPtr& alg, int nmax, const FnrSigns& signs = {}, int jobs = 1);

/// Checks the closed supercommutator formula for [F^(m)_ij, F^(n)_kl] with
/// the two sums over r = 1..m-1.
Report verify_prop31(const AlgebraPtr& alg, int mmax, int nmax, int jobs = 1);

/// Checks the truncated form of the defining relation (sums over
/// r = 1..min(m,n)-1) on the concrete family elements, and its free-level
/// equivalence to the untruncated form under the first-index sign law.
Report verify_defrel(const AlgebraPtr& alg, int mmax, int nmax, const DefrelSigns& signs = {},
                     int jobs = 1);

/// True iff c_element(n) supercommutes with every basis generator.
bool verify_central(const AlgebraPtr& alg, int n);

/// Report flavor of verify_central over a set of degrees; even degrees are
/// additionally checked to give the zero element.
Report verify_central_report(const AlgebraPtr& alg, const std::vector<int>& degrees);

}  // namespace qyang
