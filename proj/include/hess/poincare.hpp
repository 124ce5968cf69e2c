#pragma once

// Poincaré polynomial of Hess(S,h) in q (q^i counts H^{2i}), three ways.

#include <optional>

#include "hess/hessenberg.hpp"
#include "hess/qpoly.hpp"

namespace hess {

// h(1)_q (n-1)_q! + (n-1) q^{h(1)-1} (n-h(1))_q (n-2)_q!; FormMismatch
QPolynomial closed_form(const HessenbergFunction& h);
// sum over shapes of (sum_T q^{inv(T)}) * #SYT(shape); any h
QPolynomial via_ptableaux(const HessenbergFunction& h);
// degree_gf(B1) + degree_gf(B3); FormMismatch
QPolynomial via_basis_degrees(const HessenbergFunction& h);
// graded ranks of the GKM model modulo (t); GuardrailExceeded above max_n
QPolynomial via_gkm(const HessenbergFunction& h, int max_n = 4);

struct PoincareReport {
  HessenbergFunction h;
  std::optional<QPolynomial> closed_form, via_basis, via_gkm;
  QPolynomial via_tableaux;
  bool agree = false;  // every computed polynomial is identical
};

// closed form and basis degrees only for the one-row form; the GKM route
// only when n <= gkm_max_n
PoincareReport reconcile(const HessenbergFunction& h, int gkm_max_n = 4);

}  // namespace hess
