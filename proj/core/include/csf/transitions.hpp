#pragma once

#include "csf/sympoly.hpp"

namespace csf {

// M-expansion of the elementary symmetric function e_lambda.
// Leading term: coefficient of m_{lambda'} is exactly 1.
SymPoly e_to_m(const Partition& lambda);

// M-expansion of the power-sum p_lambda.
SymPoly p_to_m(const Partition& lambda);

// M-expansion of the Schur function s_lambda: sum over mu of K_{lambda,mu}
// m_mu, where K counts semistandard tableaux of shape lambda and content mu.
SymPoly kostka_row(const Partition& lambda);

// Single Kostka number K_{lambda,mu} (semistandard tableau count).
Coeff kostka_number(const Partition& lambda, const Partition& mu);

// Rewrites a monomial-basis polynomial in the elementary basis by peeling
// from the dominance-greatest remaining term.  Throws if a remainder
// survives (impossible for symmetric inputs).
SymPoly expand_in_e(const SymPoly& m_poly);

// Same peeling against Schur functions.
SymPoly expand_in_s(const SymPoly& m_poly);

// E-expansion of s_lambda via the dual Jacobi-Trudi determinant
// det(e_{lambda'_i - i + j}), expanded as a signed permutation sum.
SymPoly jacobi_trudi_schur(const Partition& lambda);

// Rewrites any supported basis into the monomial basis.
SymPoly to_monomial_basis(const SymPoly& f);

// Drops both transition caches (used by benchmarks for cold-start timing).
void clear_transition_caches();

}  // namespace csf
