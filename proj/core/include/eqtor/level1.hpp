#pragma once

#include <map>
#include <string>
#include <vector>

#include "eqtor/boson.hpp"
#include "eqtor/cartan.hpp"
#include "eqtor/params.hpp"
#include "eqtor/report.hpp"

namespace eqtor {

// c e^{beta} e^{bar Lambda_a} e^{Q_mu + rq}, with c = sign kappa^kexp.
struct LatticeVector {
  std::vector<int> beta;
  int a = 0;
  DynWeight rq_weight;  // alpha = beta, rq = accumulated R_Q shift
  CocycleValue coefficient;

  // Same basis vector, ignoring the coefficient.
  bool same_basis(const LatticeVector& o) const {
    return beta == o.beta && a == o.a && rq_weight == o.rq_weight;
  }
  std::string str() const;
};

// Admissible a for W(Lambda_a, mu): the colabel-one nodes.
std::vector<int> allowed_fundamentals(const CartanData& cd);

struct ZAction {
  int z_exponent = 0;
  LatticeVector result;
  CocycleValue coeff;  // already folded into result.coefficient
};

// The twisted group algebra module W(Lambda_a, mu) at level one.
class LatticeModule {
 public:
  // Throws ParamError when a is not admissible for the type.
  LatticeModule(CartanData cd, int a);

  const CartanData& cartan() const { return cd_; }
  int a() const { return a_; }
  const Cocycle& cocycle() const { return eps_; }

  LatticeVector highest() const { return at(std::vector<int>(cd_.n_nodes, 0)); }
  LatticeVector at(std::vector<int> beta) const;

  // <beta + Lambda_a, h_i> with Lambda_a = Lambda_0 + bar Lambda_a.
  int h_eigen(const LatticeVector& v, int i) const;
  // Exponent of prod_j (K+_j)^{a_j}; equals -l.
  int kplus_product_exponent(const LatticeVector& v) const;

  // Z^+_j: e^{alpha_j} z^{h_j+1} e^{-Q_j}; Z^-_j: e^{-alpha_j} z^{-h_j+1}.
  ZAction z_apply(int sign, int j, const LatticeVector& v) const;
  // K^{sign}_j = q^{sign h_j} e^{-Q_j}; returns the q exponent.
  int k_apply(int sign, int j, LatticeVector& v) const;

 private:
  CartanData cd_;
  int a_;
  Cocycle eps_;
};

// Seeded lattice sample: the highest vector first, then beta with entries in
// [-2, 2].
std::vector<LatticeVector> lattice_samples(const LatticeModule& L, int count, std::uint64_t seed);

enum class ZVariant {
  Corrected,
  // Literal reading: kappa^{+m} in the denominator of the first zalg3 factor, and
  // q^{-1} in the Serre polynomial's antisymmetriser.
  Literal,
};

// Z-algebra relation zalg<rel> (1..5) at k = 1. zalg2 and zalg3 compare
// Laurent coefficients with w-exponent within `window` of the centre; zalg4
// and zalg5 are evaluated at `points` seeded points per sample. zalg1 acts
// on F (x) W with boson degree <= D.
RelationReport check_zalgebra(const LatticeModule& L, int rel, const Params& params, int window = 6,
                              int lattice_count = 12, int points = 20, int D = 2,
                              ZVariant variant = ZVariant::Corrected);

// sum_sigma sgn(sigma) (z_s1 - q^{-2} z_s2) sum_r (-1)^r [2 r]
//   prod_{s<=r} (w - q^{-1} kappa^m z_ss) prod_{s>r} (q^{-1} w - kappa^m z_ss),
// the polynomial behind the level-one Serre relations; vanishes identically.
// Literal uses q^{-1} in the first factor, which does not vanish.
cplx serre_polynomial(cplx z1, cplx z2, cplx w, cplx q, cplx kappa, int m_ij, ZVariant variant = ZVariant::Corrected);
RelationReport check_serre_polynomial(const Params& params, int points = 50, ZVariant variant = ZVariant::Corrected);

// x^{sign}_i(z) on f (x) v: exponent -> boson state, with the lattice image.
struct CurrentAction {
  std::map<int, BosonState> terms;
  LatticeVector lattice;
  bool truncated = false;
};
CurrentAction current_apply(const Heisenberg& H, const LatticeModule& L, int sign, int i, const BosonState& f,
                            const LatticeVector& v, int D, int window);

// [X_{i,m}, x^{sign}_j(z)] = coef z^m x^{sign}_j(z) for X in {alpha, alpha'},
// 1 <= |m| <= 4, matrix elements between degree <= D vectors.
RelationReport check_alpha_current(const Heisenberg& H, const LatticeModule& L, ModeFamily fam, int sign, int D,
                                   int window, int lattice_count = 3);

// The x+ x+ relation with theta prefactors on F (x) W. The bilateral theta
// series is cut at |n| <= n_theta.
RelationReport check_current_xpxp(const Heisenberg& H, const LatticeModule& L, int D, int window,
                                  int n_theta = 8, int lattice_count = 3);

// x+_{i,n} (n >= 0), x-_{i,n} (n > 0) and alpha_{i,n} (n > 0) kill
// 1 (x) e^{bar Lambda_a}. Residual is the largest surviving coefficient.
RelationReport check_highest_weight(const Heisenberg& H, const LatticeModule& L, int window);

}  // namespace eqtor
