#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <unordered_map>

#include "hess/error.hpp"
#include "hess/gkm.hpp"

namespace hess {

namespace {

// monomials of a fixed total degree in t_1..t_n
struct DegreeIndex {
  std::vector<Monomial> monos;
  std::unordered_map<std::uint64_t, int> index;

  DegreeIndex(int n, int d) {
    std::function<void(int, int, Monomial)> rec = [&](int var, int left, Monomial m) {
      if (var == n) {
        Monomial full = m * Monomial::var(n, left);
        index.emplace(full.bits(), static_cast<int>(monos.size()));
        monos.push_back(full);
        return;
      }
      for (int e = left; e >= 0; --e) rec(var + 1, left - e, m * Monomial::var(var, e));
    };
    if (n >= 1) rec(1, d, Monomial{});
  }
  int size() const { return static_cast<int>(monos.size()); }
  int at(Monomial m) const { return index.at(m.bits()); }
};

template <class Row>
void sort_row(Row& r) {
  std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
}

}  // namespace

struct GkmRankModel::Impl {
  HessenbergFunction h;
  RankRoute route;
  int n;
  std::size_t N;
  std::optional<GkmGraph> graph;
  std::vector<GkmClass> y;  // y_1..y_n (index 0 unused) for the generator route
  int ydeg = 0;
  std::map<int, std::unique_ptr<DegreeIndex>> idx;
  std::map<int, ExactEchelon> V, W;
  std::map<int, std::vector<GkmClass>> gens;  // new generators of degree d
  std::map<int, int> fixed;

  Impl(const HessenbergFunction& hh, RankRoute r) : h(hh), route(r), n(hh.n()), N(factorial(hh.n())) {
    auto tag = classify_form(h);
    if (route == RankRoute::generators) {
      if (tag.is_general())
        fail(ErrorCode::FormMismatch, "generators are only known for the two special forms; h = " + h.to_string());
      y.resize(n + 1);
      for (int k = 1; k <= n; ++k) y[k] = tag.one_row ? class_y_one_row(h, k) : class_y_transpose(h, k);
      ydeg = tag.one_row ? *tag.one_row - 1 : *tag.transpose - 1;
    } else {
      graph = build_gkm_graph(h);
    }
  }

  const DegreeIndex& index(int d) {
    auto& p = idx[d];
    if (!p) p = std::make_unique<DegreeIndex>(n, d);
    return *p;
  }

  int columns(int d) { return static_cast<int>(N) * index(d).size(); }

  SparseRow64 row_of(const GkmClass& c, int d) {
    const DegreeIndex& di = index(d);
    const int M = di.size();
    SparseRow64 r;
    for (std::size_t v = 0; v < N; ++v)
      for (const auto& [m, coef] : c.at_index(v).terms()) {
        if (m.degree() != d) fail(ErrorCode::Internal, "class is not homogeneous of the expected degree");
        r.emplace_back(static_cast<int>(v) * M + di.at(m), coef);
      }
    sort_row(r);
    return r;
  }

  GkmClass class_of(const SparseRowZ& r, int d) {
    const DegreeIndex& di = index(d);
    const int M = di.size();
    std::vector<Poly> vals(N);
    for (const auto& [col, v] : r) {
      if (!v.fits_slong_p()) fail(ErrorCode::Overflow, "kernel vector entry exceeds int64");
      vals[col / M].add_term(di.monos[col % M], v.get_si());
    }
    return GkmClass(n, std::move(vals));
  }

  // row of t_i * (row of degree d-1)
  SparseRowZ times_t(const SparseRowZ& r, int i, int d) {
    const DegreeIndex& lo = index(d - 1);
    const DegreeIndex& hi = index(d);
    const int Ml = lo.size(), Mh = hi.size();
    SparseRowZ out;
    out.reserve(r.size());
    Monomial ti = Monomial::var(i);
    for (const auto& [col, v] : r) out.emplace_back((col / Ml) * Mh + hi.at(lo.monos[col % Ml] * ti), v);
    sort_row(out);
    return out;
  }

  std::vector<GkmClass> generator_classes(int d) {
    std::vector<GkmClass> out;
    const auto& perms = permutations_of(n);
    auto monomial_class = [&](Monomial b) {
      // x^b at w is prod t_{w(i)}^{b_i}
      std::vector<Poly> vals;
      vals.reserve(N);
      for (const auto& w : perms) vals.push_back(Poly::term(b.renamed(w.one_line()), 1));
      return GkmClass(n, std::move(vals));
    };
    for (Monomial b : index(d).monos) out.push_back(monomial_class(b));
    if (d >= ydeg)
      for (Monomial b : index(d - ydeg).monos) {
        GkmClass xb = monomial_class(b);
        for (int k = 1; k <= n; ++k) out.push_back(xb * y[k]);
      }
    return out;
  }

  std::vector<GkmClass> kernel_classes(int d) {
    const DegreeIndex& di = index(d);
    const int M = di.size();
    std::vector<SparseRow64> rows;
    for (const auto& e : graph->edges()) {
      const Permutation& w = graph->vertex(e.w);
      const int a = w(e.i), b = w(e.j);
      std::map<std::uint64_t, SparseRow64> by_image;
      for (int mi = 0; mi < M; ++mi) {
        Monomial m = di.monos[mi];
        Monomial img = m.with_exponent(a, 0) * Monomial::var(b, m.exponent(a));
        auto& row = by_image[img.bits()];
        row.emplace_back(static_cast<int>(e.w) * M + mi, 1);
        row.emplace_back(static_cast<int>(e.w2) * M + mi, -1);
      }
      for (auto& [img, row] : by_image) {
        sort_row(row);
        rows.push_back(std::move(row));
      }
    }
    std::vector<GkmClass> out;
    for (const auto& v : nullspace(columns(d), rows)) out.push_back(class_of(v, d));
    return out;
  }

  void compute(int d) {
    if (V.count(d)) return;
    if (d > 0) compute(d - 1);
    ExactEchelon w(columns(d));
    if (d > 0)
      for (const auto& r : V.at(d - 1).basis())
        for (int i = 1; i <= n; ++i) w.insert(times_t(r, i, d));
    ExactEchelon v = w;
    auto g = route == RankRoute::generators ? generator_classes(d) : kernel_classes(d);
    for (const auto& c : g) v.insert(row_of(c, d));
    W.emplace(d, std::move(w));
    V.emplace(d, std::move(v));
    gens[d] = std::move(g);
  }
};

GkmRankModel::GkmRankModel(const HessenbergFunction& h, RankRoute route) : impl_(std::make_unique<Impl>(h, route)) {}
GkmRankModel::~GkmRankModel() = default;
GkmRankModel::GkmRankModel(GkmRankModel&&) noexcept = default;
GkmRankModel& GkmRankModel::operator=(GkmRankModel&&) noexcept = default;

RankRoute GkmRankModel::default_route(const HessenbergFunction& h) {
  return classify_form(h).is_general() ? RankRoute::kernel : RankRoute::generators;
}

const HessenbergFunction& GkmRankModel::h() const { return impl_->h; }
RankRoute GkmRankModel::route() const { return impl_->route; }

int GkmRankModel::top_degree() const {
  int s = 0;
  for (int b : box_counts(impl_->h)) s += b;
  return s;
}

int GkmRankModel::equivariant_rank(int q_degree) {
  if (q_degree < 0) return 0;
  impl_->compute(q_degree);
  return impl_->V.at(q_degree).rank();
}

int GkmRankModel::quotient_rank(int q_degree) {
  if (q_degree < 0) return 0;
  impl_->compute(q_degree);
  return impl_->V.at(q_degree).rank() - impl_->W.at(q_degree).rank();
}

int GkmRankModel::fixed_rank(int q_degree) {
  if (q_degree < 0) return 0;
  if (auto it = impl_->fixed.find(q_degree); it != impl_->fixed.end()) return it->second;
  impl_->compute(q_degree);
  const auto& perms = permutations_of(impl_->n);
  ExactEchelon e = impl_->W.at(q_degree);
  const int base = e.rank();
  for (const auto& g : impl_->gens.at(q_degree)) {
    GkmClass avg = GkmClass::zero(impl_->n);
    for (const auto& v : perms) avg += dot_action(v, g);
    if (!avg.is_zero()) e.insert(impl_->row_of(avg, q_degree));
  }
  int r = e.rank() - base;
  impl_->fixed[q_degree] = r;
  return r;
}

bool GkmRankModel::in_torus_ideal(const GkmClass& c) {
  if (c.n() != impl_->n) fail(ErrorCode::SizeMismatch, "class size differs from the model");
  auto d = c.homogeneous_degree();
  if (!d) fail(ErrorCode::Internal, "class is not homogeneous");
  if (*d < 0) return true;
  impl_->compute(*d);
  return impl_->W.at(*d).in_span(impl_->row_of(c, *d));
}

QPolynomial GkmRankModel::poincare() {
  QPolynomial p;
  for (int d = 0; d <= top_degree(); ++d) p.add_term(d, quotient_rank(d));
  return p;
}

namespace {

std::mutex g_models_mutex;
std::map<std::pair<HessenbergFunction, int>, std::shared_ptr<GkmRankModel>> g_models;
std::mutex g_model_use_mutex;

int q_degree_of(int degree_2d) {
  if (degree_2d % 2 != 0) fail(ErrorCode::OddDegree, "cohomology vanishes in odd degree " + std::to_string(degree_2d));
  if (degree_2d < 0) fail(ErrorCode::OutOfRange, "negative degree");
  return degree_2d / 2;
}

std::shared_ptr<GkmRankModel> model_for(const HessenbergFunction& h, RankRoute route) {
  std::lock_guard lock(g_models_mutex);
  auto key = std::make_pair(h, static_cast<int>(route));
  auto& m = g_models[key];
  if (!m) m = std::make_shared<GkmRankModel>(h, route);
  return m;
}

}  // namespace

int graded_quotient_rank(const HessenbergFunction& h, int degree_2d) {
  const int d = q_degree_of(degree_2d);
  if (classify_form(h).is_general())
    fail(ErrorCode::FormMismatch, "h = " + h.to_string() + " has neither special form");
  auto m = model_for(h, RankRoute::generators);
  std::lock_guard lock(g_model_use_mutex);
  return m->quotient_rank(d);
}

int sn_fixed_rank(const HessenbergFunction& h, int degree_2d) {
  const int d = q_degree_of(degree_2d);
  auto m = model_for(h, GkmRankModel::default_route(h));
  std::lock_guard lock(g_model_use_mutex);
  return m->fixed_rank(d);
}

}  // namespace hess
