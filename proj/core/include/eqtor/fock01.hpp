#pragma once

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "eqtor/cartan.hpp"
#include "eqtor/ellcore.hpp"
#include "eqtor/partitions.hpp"

namespace eqtor {

// Basis vector of a level-0 module: partition parts (Fock) or {j} (vector
// representation), plus its accumulated grading.
struct Basis {
  std::vector<int> label;
  DynWeight wt;
  friend auto operator<=>(const Basis&, const Basis&) = default;
  friend bool operator==(const Basis&, const Basis&) = default;
};

using Term = DeltaTerm<Basis>;
using DeltaVector = std::vector<Term>;

// Common meromorphic eigenvalue of phi^+ and phi^-, as a list of exact factors.
struct PhiAction {
  std::vector<PhiFactor> factors;
  DynWeight weight_shift;

  ThetaRatioSpec spec(const Params& params) const;
  cplx eval(cplx z, const Params& params) const { return phi_eval(factors, z, params); }
  // Constant prefactor, the K^+ eigenvalue.
  cplx kplus(const Params& params) const;
  int kplus_exponent() const;
};

cplx c_plus(const Params& params);
cplx c_minus(const Params& params);

// A representation handle consumed by the relation harness. Supports are
// recorded as monomials relative to u.
class Rep {
 public:
  virtual ~Rep() = default;
  virtual const CartanData& cartan() const = 0;
  virtual const Params& params() const = 0;
  virtual DeltaVector apply_x(int sign, int j, const Basis& v) const = 0;
  virtual PhiAction phi(int j, const Basis& v) const = 0;
  virtual std::string label_str(const Basis& v) const = 0;
  virtual std::string name() const = 0;
  // Same module at spectral parameter q^shift u.
  virtual std::unique_ptr<Rep> rescaled(int qshift) const = 0;
};

class FockRep final : public Rep {
 public:
  FockRep(int N, int k, Params params);
  const CartanData& cartan() const override { return cd_; }
  const Params& params() const override { return P_; }
  DeltaVector apply_x(int sign, int j, const Basis& v) const override;
  PhiAction phi(int j, const Basis& v) const override;
  std::string label_str(const Basis& v) const override;
  std::string name() const override { return "fock"; }
  std::unique_ptr<Rep> rescaled(int qshift) const override;

  int N() const { return N_; }
  int k() const { return k_; }
  Basis basis(const ColoredPartition& lam) const;
  ColoredPartition partition(const Basis& v) const { return ColoredPartition(v.label, N_, k_); }

 private:
  int N_, k_;
  Params P_;
  CartanData cd_;
};

DeltaVector apply_xplus(const FockRep& rep, int j, const Basis& v);
DeltaVector apply_xminus(const FockRep& rep, int j, const Basis& v);
PhiAction phi_action(const FockRep& rep, int j, const Basis& v);

// V^{(k)}(u base) with basis [u base]_j.
class VectorRep final : public Rep {
 public:
  VectorRep(int N, int k, Mono base, Params params);
  const CartanData& cartan() const override { return cd_; }
  const Params& params() const override { return P_; }
  DeltaVector apply_x(int sign, int i, const Basis& v) const override;
  PhiAction phi(int i, const Basis& v) const override;
  std::string label_str(const Basis& v) const override;
  std::string name() const override { return "vector"; }
  std::unique_ptr<Rep> rescaled(int qshift) const override;

  Basis basis(int j) const;
  // Z^N degree of [u]_j.
  std::vector<int> degree(int j) const;

 private:
  int N_, k_;
  Mono base_;
  Params P_;
  CartanData cd_;
};

enum class Gen { XPlus, XMinus, Phi };

struct TensorAction {
  DeltaVector terms;  // x^+ and x^- results, labels are Fock partitions
  PhiAction phi;      // for Gen::Phi
  // Largest |coeff| of a term whose label is not a partition; such terms
  // must vanish through theta zeros at the support.
  double dropped_max = 0.0;
};

// Generator acting on |lambda> realised inside the first m factors of
// V(u) (x) V(u q2^-1) (x) ... through the opposite Drinfeld coproduct.
TensorAction tensor_apply(int m, Gen gen, int color, const ColoredPartition& lam, const Params& params);

}  // namespace eqtor
