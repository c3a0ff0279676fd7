#include <map>
#include <random>

#include "doctest.h"
#include "eqtor/fock01.hpp"
#include "helpers.hpp"

using namespace eqtor;
using testing_support::rel;

namespace {

std::map<std::vector<int>, const Term*> by_label(const DeltaVector& v) {
  std::map<std::vector<int>, const Term*> m;
  for (const Term& t : v) m[t.payload.label] = &t;
  return m;
}

// Compare coefficients and supports term by term; returns worst residual.
double compare(const DeltaVector& a, const DeltaVector& b) {
  const auto ma = by_label(a), mb = by_label(b);
  if (ma.size() != mb.size()) return 1e300;
  double worst = 0;
  for (const auto& [lab, t] : ma) {
    auto it = mb.find(lab);
    if (it == mb.end() || it->second->supports != t->supports) return 1e300;
    worst = std::max(worst, std::abs(t->coeff - it->second->coeff) / (1 + std::abs(t->coeff)));
  }
  return worst;
}

}  // namespace

TEST_CASE("Fock examples") {
  const Params P;
  const FockRep F(3, 0, P);
  const Basis vac = F.basis(ColoredPartition({}, 3, 0));
  auto t = apply_xplus(F, 0, vac);
  REQUIRE(t.size() == 1);
  CHECK(t[0].supports == std::vector<Mono>{Mono{}});
  CHECK(rel(t[0].coeff, c_plus(P)) < 1e-15);
  CHECK(t[0].payload.label == std::vector<int>{1});
  CHECK(apply_xplus(F, 1, vac).empty());
  CHECK(apply_xplus(F, 2, vac).empty());
  for (int j = 0; j < 3; ++j) CHECK(apply_xminus(F, j, vac).empty());

  const Basis one = F.basis(ColoredPartition({1}, 3, 0));
  auto m = apply_xminus(F, 0, one);
  REQUIRE(m.size() == 1);
  CHECK(m[0].supports[0] == Mono{});
  CHECK(m[0].supports[0] == kQ1.inv() * row_mono(F.partition(one), 1));
  CHECK(rel(m[0].coeff, c_minus(P)) < 1e-15);
  CHECK(m[0].payload.label.empty());

  const ColoredPartition l21({2, 1}, 3, 0);
  const auto bl = boxes_by_color(l21, 2);
  auto x = apply_xplus(F, 2, F.basis(l21));
  REQUIRE(x.size() == bl.addable.size());
  for (std::size_t s = 0; s < x.size(); ++s) {
    CHECK(x[s].payload.label == l21.added(bl.addable[s]).parts);
    CHECK(x[s].supports[0] == kQ2 * box_mono(bl.addable[s]));
    CHECK(rel(x[s].coeff, c_plus(P) * coeff_plus(l21, bl.addable[s], P)) < 1e-15);
  }
}

TEST_CASE("Fock phi eigenvalues") {
  const Params P;
  const FockRep F(3, 0, P);
  const Basis vac = F.basis(ColoredPartition({}, 3, 0));
  const cplx z = std::polar(0.7, 1.9);
  const cplx expect =
      theta(P.q * P.q * P.u / z, P.p, P.trunc_M) / (P.q * theta(P.u / z, P.p, P.trunc_M));
  CHECK(rel(phi_action(F, 0, vac).eval(z, P), expect) < 1e-13);
  CHECK(rel(phi_action(F, 0, vac).spec(P).eval(z, P.p, P.trunc_M), expect) < 1e-13);
  CHECK(phi_action(F, 1, vac).eval(z, P) == cplx(1.0));
  CHECK(phi_action(F, 2, vac).factors.empty());

  for (int N : {3, 4, 5})
    for (int k = 0; k < N; ++k) {
      const FockRep G(N, k, P);
      for (const auto& lam : partitions_up_to(8, N, k)) {
        int e = 0;
        for (int j = 0; j < N; ++j) e += phi_action(G, j, G.basis(lam)).kplus_exponent();
        CHECK(e == -1);
      }
    }
}

TEST_CASE("grading shifts") {
  const Params P;
  const FockRep F(4, 1, P);
  const auto lam = ColoredPartition({3, 1}, 4, 1);
  const Basis v = F.basis(lam);
  for (int j = 0; j < 4; ++j) {
    for (const Term& t : apply_xplus(F, j, v)) {
      DynWeight d = DynWeight::zero(4);
      d.alpha[j] = 1;
      d.rq[j] = -1;
      CHECK(t.payload.wt == d);
    }
    for (const Term& t : apply_xminus(F, j, v)) {
      DynWeight d = DynWeight::zero(4);
      d.alpha[j] = -1;
      CHECK(t.payload.wt == d);
    }
    DynWeight d = DynWeight::zero(4);
    d.rq[j] = -1;
    CHECK(phi_action(F, j, v).weight_shift == d);
  }
}

TEST_CASE("vector representation") {
  const Params P;
  const int N = 3, k = 1;
  const VectorRep V(N, k, Mono{}, P);
  for (int j = -5; j <= 5; ++j)
    for (int i = 0; i < N; ++i) {
      const Basis b = V.basis(j);
      auto xp = V.apply_x(+1, i, b);
      const bool on = ((i + j + 1 - k) % N + N) % N == 0;
      CHECK(xp.size() == (on ? 1u : 0u));
      if (on) {
        CHECK(xp[0].supports[0] == mono_pow(kQ1, j + 1));
        CHECK(xp[0].payload.label[0] == j + 1);
        CHECK(rel(xp[0].coeff, c_plus(P)) < 1e-15);
        auto d0 = V.degree(j), d1 = V.degree(j + 1);
        for (int s = 0; s < N; ++s) CHECK(d1[s] - d0[s] == (s == i));
      }
      auto xm = V.apply_x(-1, i, b);
      const bool onm = ((i + j - k) % N + N) % N == 0;
      CHECK(xm.size() == (onm ? 1u : 0u));
      if (onm) {
        CHECK(xm[0].supports[0] == mono_pow(kQ1, j));
        CHECK(xm[0].payload.label[0] == j - 1);
      }
      const cplx z = std::polar(1.4, -0.6);
      const cplx ph = V.phi(i, b).eval(z, P);
      if (onm) {
        const cplx e = P.q * theta(P.mono(mono_pow(kQ1, j + 1) * kQ3) * P.u / z, P.p, P.trunc_M) /
                       theta(P.mono(mono_pow(kQ1, j)) * P.u / z, P.p, P.trunc_M);
        CHECK(rel(ph, e) < 1e-13);
      } else if (on) {
        CHECK(V.phi(i, b).kplus_exponent() == -1);
      } else {
        CHECK(ph == cplx(1.0));
      }
    }
  CHECK(V.degree(0) == std::vector<int>{0, 1, 0});
  CHECK(V.degree(2) == std::vector<int>{1, 1, 1});
  CHECK(V.degree(-1) == std::vector<int>{0, 0, 0});
}

TEST_CASE("tensor reconstruction") {
  const Params P;
  const FockRep F(3, 0, P);
  const ColoredPartition vac({}, 3, 0);
  auto t = tensor_apply(3, Gen::XPlus, 0, vac, P);
  CHECK(compare(t.terms, apply_xplus(F, 0, F.basis(vac))) < 1e-10);
  CHECK_THROWS_AS(tensor_apply(2, Gen::XPlus, 0, ColoredPartition({1, 1}, 3, 0), P), ParamError);
  CHECK_THROWS_AS(tensor_apply(0, Gen::XPlus, 0, vac, P), ParamError);

  std::mt19937_64 rng(99);
  for (int N : {3, 4})
    for (int k = 0; k < N; ++k) {
      const FockRep G(N, k, P);
      for (const auto& lam : partitions_up_to(6, N, k)) {
        CAPTURE(lam.str());
        const int m = lam.length() + 2;
        for (int j = 0; j < N; ++j) {
          const auto tp = tensor_apply(m, Gen::XPlus, j, lam, P);
          const auto tm = tensor_apply(m, Gen::XMinus, j, lam, P);
          CHECK(compare(tp.terms, apply_xplus(G, j, G.basis(lam))) < 1e-8);
          CHECK(compare(tm.terms, apply_xminus(G, j, G.basis(lam))) < 1e-8);
          CHECK(tp.dropped_max < 1e-12);
          CHECK(tm.dropped_max < 1e-12);
          const auto tq = tensor_apply(m, Gen::Phi, j, lam, P);
          const auto tq1 = tensor_apply(m + 1, Gen::Phi, j, lam, P);
          const cplx z = P.u * testing_support::random_polar(rng, 0.5, 2.0);
          CHECK(rel(tq.phi.eval(z, P), phi_action(G, j, G.basis(lam)).eval(z, P)) < 1e-8);
          CHECK(rel(tq1.phi.eval(z, P), tq.phi.eval(z, P)) < 1e-10);
          const auto tp1 = tensor_apply(m + 1, Gen::XPlus, j, lam, P);
          CHECK(compare(tp1.terms, tp.terms) < 1e-10);
        }
      }
    }
}

TEST_CASE("rescaled module") {
  const Params P;
  const FockRep F(3, 0, P);
  auto R = F.rescaled(2);
  CHECK(rel(R->params().u, P.u * P.q * P.q) < 1e-15);
  CHECK(R->name() == "fock");
  CHECK(F.label_str(F.basis(ColoredPartition({2, 1}, 3, 0))) == "(2,1)");
}
