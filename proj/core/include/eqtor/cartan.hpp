#pragma once

#include <compare>
#include <string>
#include <vector>

#include "eqtor/params.hpp"

namespace eqtor {

using IntMatrix = std::vector<std::vector<int>>;

enum class Family { A, D, E };

struct CartanData {
  std::string tag;  // "A2", "D4", "E6", ...
  Family family = Family::A;
  int rank = 0;     // N in A(N-1), D_N, E_N
  int n_nodes = 0;  // |I|
  IntMatrix A, B, M;
  std::vector<int> d;
  std::vector<int> colabels;

  int size() const { return n_nodes; }
  int a(int i, int j) const { return A[i][j]; }
  int b(int i, int j) const { return B[i][j]; }
  int m(int i, int j) const { return M[i][j]; }
  // Nodes a with colabel 1, the admissible fundamental weights for level one.
  std::vector<int> minuscule_nodes() const;
};

// Accepts A<n> (n >= 2, so gl_{n+1}), D<n> (n >= 4), E6, E7, E8.
CartanData cartan_data(const std::string& tag);
// The gl_N toroidal data, N >= 3 nodes.
CartanData cartan_data_gl(int N);

// Weights over alpha_i, bar Lambda_i (i >= 1), Lambda_0, delta.
struct Weight {
  std::vector<int> alpha;
  std::vector<int> lambar;  // entry 0 unused: bar Lambda_0 = 0
  int lambda0 = 0;
  int delta = 0;
};

// Coweights over h_i (i in I, h_0 = c - sum_{i>0} a_i h_i), c, d.
struct Coweight {
  std::vector<int> h;
  int c = 0;
  int d = 0;
};

Weight weight_alpha(const CartanData& cd, int j);
Weight weight_lambar(const CartanData& cd, int a);
Coweight coweight_h(const CartanData& cd, int i);

int pair(const CartanData& cd, const Weight& x, const Coweight& y);
// <beta + bar Lambda_a, h_i> for beta in the root lattice.
int pair_h(const CartanData& cd, const std::vector<int>& beta, int a, int i);

// Grading data carried by basis vectors: alpha is the P+h weight over simple
// roots, rq the R_Q weight over Q_i.
struct DynWeight {
  std::vector<int> alpha;
  std::vector<int> rq;

  static DynWeight zero(int n) { return {std::vector<int>(n, 0), std::vector<int>(n, 0)}; }
  DynWeight& operator+=(const DynWeight& o);
  friend DynWeight operator+(DynWeight a, const DynWeight& b) { return a += b; }
  friend auto operator<=>(const DynWeight&, const DynWeight&) = default;
  friend bool operator==(const DynWeight&, const DynWeight&) = default;
};

// Eigen-exponent of the test function q^{<mu, P>} on a weight: <rq, mu> with
// <Q_i, P_j> = a_ij.
int p_exponent(const CartanData& cd, const DynWeight& w, const std::vector<int>& mu);
// Eigen-exponent of q^{<nu, P+h>}: <alpha, nu> with <alpha_i, h_j> = a_ji.
int ph_exponent(const CartanData& cd, const DynWeight& w, const std::vector<int>& nu);

struct CocycleValue {
  int sign = 1;
  int kexp = 0;
  cplx value(cplx kappa) const { return double(sign) * ipow(kappa, kexp); }
  CocycleValue operator*(const CocycleValue& o) const { return {sign * o.sign, kexp + o.kexp}; }
  friend bool operator==(const CocycleValue&, const CocycleValue&) = default;
};

// Bimultiplicative 2-cocycle on the root lattice with eps(alpha_i, alpha_j) = 1
// for i <= j and (-1)^{a_ij} kappa^{-m_ij} for i > j.
class Cocycle {
 public:
  explicit Cocycle(const CartanData& cd) : cd_(cd) {}
  CocycleValue value(const std::vector<int>& b1, const std::vector<int>& b2) const;
  CocycleValue simple(int i, int j) const;

 private:
  CartanData cd_;
};

Cocycle cocycle_build(const CartanData& cd);

}  // namespace eqtor
