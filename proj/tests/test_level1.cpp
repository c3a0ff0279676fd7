#include <random>

#include "doctest.h"
#include "eqtor/level1.hpp"
#include "helpers.hpp"

using namespace eqtor;

namespace {
Params level1() { return Params().with_level(1); }
}  // namespace

TEST_CASE("admissible fundamentals") {
  CHECK(allowed_fundamentals(cartan_data("A2")) == std::vector<int>{0, 1, 2});
  CHECK(allowed_fundamentals(cartan_data("D4")) == std::vector<int>{0, 1, 3, 4});
  CHECK(allowed_fundamentals(cartan_data("E6")).size() == 3);
  CHECK(allowed_fundamentals(cartan_data("E8")) == std::vector<int>{0});
  CHECK_THROWS_AS(LatticeModule(cartan_data("D4"), 2), ParamError);
}

TEST_CASE("Z+ on the highest vector") {
  for (const char* tag : {"A2", "A3", "D4"}) {
    const CartanData cd = cartan_data(tag);
    for (int a : allowed_fundamentals(cd)) {
      const LatticeModule L(cd, a);
      const LatticeVector v = L.highest();
      for (int j = 1; j < cd.n_nodes; ++j) CHECK(L.z_apply(+1, j, v).z_exponent == (a == j ? 2 : 1));
      CHECK(L.z_apply(+1, 0, v).z_exponent == (a == 0 ? 2 : 1));
      CHECK(L.kplus_product_exponent(v) == 1);
    }
  }
  // Coefficient ratio eps(alpha_j, alpha_i) / eps(alpha_i, alpha_j) on Z+_j Z+_i.
  const LatticeModule L(cartan_data("A2"), 0);
  const auto zi = L.z_apply(+1, 0, L.highest());
  const auto zji = L.z_apply(+1, 1, zi.result);
  const auto zj = L.z_apply(+1, 1, L.highest());
  const auto zij = L.z_apply(+1, 0, zj.result);
  CHECK(zji.result.same_basis(zij.result));
  const CocycleValue r1 = zji.result.coefficient, r2 = zij.result.coefficient;
  const CocycleValue e01 = L.cocycle().simple(0, 1), e10 = L.cocycle().simple(1, 0);
  CHECK(r1.sign * r2.sign == e10.sign * e01.sign);
  CHECK(r1.kexp - r2.kexp == e10.kexp - e01.kexp);
}

TEST_CASE("Z-algebra relations") {
  const Params P = level1();
  for (const char* tag : {"A2", "A3", "D4"}) {
    const CartanData cd = cartan_data(tag);
    for (int a : {0, cd.n_nodes - 1}) {
      const LatticeModule L(cd, a);
      for (int rel = 1; rel <= 5; ++rel) {
        const auto rep = check_zalgebra(L, rel, P, 4, 6, 8, 2);
        INFO(tag << " a=" << a << " " << rep.relation_id << " " << rep.worst_case << " " << rep.max_residual);
        CHECK(rep.samples > 0);
        CHECK(rep.skipped_fraction() < 0.2);
        CHECK(rep.pass);
      }
    }
  }
}

TEST_CASE("literal zalg3 prefactor fails") {
  const LatticeModule L(cartan_data("A2"), 0);
  const auto rep = check_zalgebra(L, 3, level1(), 4, 4, 8, 2, ZVariant::Literal);
  CHECK_FALSE(rep.pass);
  CHECK(rep.max_residual > 1e-3);
}

TEST_CASE("Serre polynomial") {
  const Params P = level1();
  const auto good = check_serre_polynomial(P, 40);
  CHECK(good.pass);
  CHECK(good.max_residual < 1e-10);
  const auto bad = check_serre_polynomial(P, 40, ZVariant::Literal);
  CHECK_FALSE(bad.pass);
  // Closed form of the literal version: k w (z1^2 - z2^2)(q-1)^2(q+1)/q^3.
  const cplx z1(0.3, 1.1), z2(-0.7, 0.2), w(1.2, -0.4), q = P.q, kp = P.kappa;
  const cplx lit = serre_polynomial(z1, z2, w, q, kp, 1, ZVariant::Literal);
  const cplx closed = kp * w * (z1 * z1 - z2 * z2) * (q - 1.0) * (q - 1.0) * (q + 1.0) / (q * q * q);
  CHECK(testing_support::rel(lit, closed) < 1e-12);
}

TEST_CASE("alpha and alpha' with the full currents") {
  const Params P = level1();
  const Heisenberg H(cartan_data("A2"), P);
  const LatticeModule L(H.cartan(), 1);
  for (ModeFamily f : {ModeFamily::Alpha, ModeFamily::AlphaPrime})
    for (int sign : {+1, -1}) {
      const auto rep = check_alpha_current(H, L, f, sign, 2, 3, 2);
      INFO(rep.relation_id << " " << rep.worst_case << " " << rep.max_residual);
      CHECK(rep.samples > 0);
      CHECK(rep.pass);
    }
}

TEST_CASE("x+ x+ on F (x) W") {
  const Params P = level1();
  const Heisenberg H(cartan_data("A2"), P);
  const LatticeModule L(H.cartan(), 0);
  const auto rep = check_current_xpxp(H, L, 1, 2, 8, 2);
  INFO(rep.worst_case << " " << rep.max_residual);
  CHECK(rep.samples > 0);
  CHECK(rep.pass);
}

TEST_CASE("highest weight vector") {
  const Params P = level1();
  for (const char* tag : {"A2", "D4"}) {
    const Heisenberg H(cartan_data(tag), P);
    for (int a : allowed_fundamentals(H.cartan())) {
      const LatticeModule L(H.cartan(), a);
      const auto rep = check_highest_weight(H, L, 4);
      INFO(tag << " a=" << a << " " << rep.worst_case);
      CHECK(rep.pass);
    }
  }
  // The first creation mode does not vanish.
  const Heisenberg H(cartan_data("A2"), P);
  const LatticeModule L(H.cartan(), 1);
  const auto x = current_apply(H, L, +1, 1, vacuum_state(), L.highest(), 2, 4);
  CHECK(x.terms.count(2));
}
