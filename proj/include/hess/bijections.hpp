#pragma once

// Insertion bijections between monomial bases and P_h-tableaux:
//   N_h -> PT(h, (1^n))                       (any h)
//   B1  -> PT(h, (1^n))                       (h = (h(1), n, ..., n))
//   B3  -> SYT(mu) x PT(h, mu), mu = (2,1^{n-2})
// Each phi can record its intermediate tableaux.

#include <vector>

#include "hess/cohomology.hpp"
#include "hess/hessenberg.hpp"
#include "hess/tableaux.hpp"

namespace hess {

struct TabPair {
  Tableau s;  // standard
  Tableau t;  // P_h-tableau
  bool operator==(const TabPair&) const = default;
};

// tableaux after each insertion (and after the final slide, for B1)
using Trace = std::vector<Tableau>;

// NotInBasis unless m lies in N_h
Tableau phi_nilpotent(const HessenbergFunction& h, const XYMonomial& m, Trace* trace = nullptr);
// i_k = number of P_h-inversions with k as the smaller entry; NotPTableau
XYMonomial psi_nilpotent(const HessenbergFunction& h, const Tableau& t);

// FormMismatch; NotInBasis unless m lies in B1
Tableau phi_b1(const HessenbergFunction& h, const XYMonomial& m, Trace* trace = nullptr);
// FormMismatch; NotPTableau
XYMonomial psi_b1(const HessenbergFunction& h, const Tableau& t);
// the tableau T-hat whose antichain inversions psi_b1 reads
Tableau psi_b1_intermediate(const HessenbergFunction& h, const Tableau& t);

// e = x^l (y_k - y_1) with 2 <= k <= n; FormMismatch; NotInBasis
TabPair phi_b3(const HessenbergFunction& h, const XYElement& e, Trace* trace = nullptr);
// FormMismatch; InvalidPair unless s is standard and t a P_h-tableau, both
// of shape (2,1^{n-2})
XYElement psi_b3(const HessenbergFunction& h, const TabPair& p);

}  // namespace hess
