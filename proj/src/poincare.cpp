#include "hess/poincare.hpp"

#include <future>

#include "hess/cohomology.hpp"
#include "hess/error.hpp"
#include "hess/gkm.hpp"
#include "hess/tableaux.hpp"

namespace hess {

namespace {

int one_row_parameter(const HessenbergFunction& h) {
  auto tag = classify_form(h);
  if (!tag.one_row) fail(ErrorCode::FormMismatch, "closed form needs h = (h(1), n, ..., n); got " + h.to_string());
  return *tag.one_row;
}

}  // namespace

QPolynomial closed_form(const HessenbergFunction& h) {
  const int n = h.n(), h1 = one_row_parameter(h);
  QPolynomial out = QPolynomial::q_integer(h1) * QPolynomial::q_factorial(n - 1);
  if (n >= 2)
    out += QPolynomial(n - 1) * QPolynomial::monomial(h1 - 1) * QPolynomial::q_integer(n - h1) *
           QPolynomial::q_factorial(n - 2);
  return out;
}

QPolynomial via_ptableaux(const HessenbergFunction& h) {
  const PosetPh p = poset_of(h);
  QPolynomial out;
  for (const auto& shape : partitions_of(h.n())) {
    QPolynomial gf;
    for (const auto& t : enumerate_p_tableaux(p, shape)) gf.add_term(inversions(p, t).count(), 1);
    out += gf * QPolynomial::monomial(0, count_syt(shape));
  }
  return out;
}

QPolynomial via_basis_degrees(const HessenbergFunction& h) {
  return degree_gf(basis_B1(h)) + degree_gf(basis_B3(h));
}

QPolynomial via_gkm(const HessenbergFunction& h, int max_n) {
  if (h.n() > max_n)
    fail(ErrorCode::GuardrailExceeded,
         "GKM ranks are limited to n <= " + std::to_string(max_n) + "; got n = " + std::to_string(h.n()));
  GkmRankModel model(h, GkmRankModel::default_route(h));
  return model.poincare();
}

PoincareReport reconcile(const HessenbergFunction& h, int gkm_max_n) {
  PoincareReport r;
  r.h = h;
  auto gkm = h.n() <= gkm_max_n ? std::async(std::launch::async, [&] { return via_gkm(h, gkm_max_n); })
                                : std::future<QPolynomial>();
  r.via_tableaux = via_ptableaux(h);
  if (classify_form(h).one_row) {
    r.closed_form = closed_form(h);
    r.via_basis = via_basis_degrees(h);
  }
  if (gkm.valid()) r.via_gkm = gkm.get();
  r.agree = true;
  for (const auto* q : {&r.closed_form, &r.via_basis, &r.via_gkm})
    if (q->has_value() && **q != r.via_tableaux) r.agree = false;
  return r;
}

}  // namespace hess
