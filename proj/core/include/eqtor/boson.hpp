#pragma once

#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "eqtor/cartan.hpp"
#include "eqtor/params.hpp"

namespace eqtor {

// prod alpha_{i,-m} as sorted (color, mode) pairs, mode >= 1.
using BosonMonomial = std::vector<std::pair<int, int>>;
using BosonState = std::map<BosonMonomial, cplx>;

int degree(const BosonMonomial& m);
BosonState vacuum_state();
BosonState make_state(BosonMonomial m, cplx c = 1.0);
// All monomials in n_colors colors with degree <= max_degree, by degree.
std::vector<BosonMonomial> boson_basis(int n_colors, int max_degree);
void axpy(BosonState& acc, cplx a, const BosonState& x);
std::string monomial_str(const BosonMonomial& m);

enum class ModeFamily { Alpha, AlphaPrime };

// How alpha_{i,n} (n > 0) acts on the polynomial model. Bracket keeps the
// kappa^{-n m_ij} twist of the abstract Heisenberg bracket; Literal drops it.
enum class AnnihilationRule { Bracket, Literal };

// Exponents of the formal variables, one slot per variable.
using ExpKey = std::vector<int>;
using BosonSeries = std::map<ExpKey, BosonState>;

// exp(eps * sum_{m>0} c_m X_{color, +-m} var^{-+m}) with c_m = (q-q^-1)/(q^{km}-q^{-km}).
// annihilating selects X_{color,m} var^{-m}; otherwise X_{color,-m} var^{m}.
struct VertexFactor {
  ModeFamily fam = ModeFamily::Alpha;
  int color = 0;
  bool annihilating = true;
  int eps = 1;
  int var = 0;
};

// E^{sign}(fam_i, var).
VertexFactor E_factor(int sign, ModeFamily fam, int i, int var);
VertexFactor inverse(VertexFactor f);
// Boson part of x^{sign}_j(var): E^-(.)^{-1} E^+(.)^{-1}, written left to right.
std::vector<VertexFactor> x_boson(int sign, int j, int var);

class Heisenberg {
 public:
  // Requires a nonzero level in params.
  Heisenberg(CartanData cd, Params params, AnnihilationRule rule = AnnihilationRule::Bracket);

  const CartanData& cartan() const { return cd_; }
  const Params& params() const { return P_; }
  AnnihilationRule rule() const { return rule_; }
  int level() const { return P_.level_k; }

  // alpha'_{i,l} = scale(AlphaPrime, l) alpha_{i,l}.
  cplx scale(ModeFamily f, int l) const;
  // [X_{i,m}, Y_{j,n}] from the abstract bracket, with X, Y in {alpha, alpha'}.
  cplx mode_commutator(ModeFamily f1, int i, int m, ModeFamily f2, int j, int n) const;
  // Coefficient of d/d alpha_{j,-n} in the action of alpha_{i,n}, n > 0.
  cplx module_coefficient(int i, int j, int n) const;
  cplx ecoef(int m) const;

  BosonState apply_annihilation(int i, int n, const BosonState& s) const;
  // X_{i,l} for l != 0: l < 0 multiplies, l > 0 differentiates.
  BosonState apply_mode(ModeFamily f, int i, int l, const BosonState& s) const;

  // Applies a word of factors written left to right (rightmost acts first).
  // Creation factors keep only terms whose exponent of their variable stays
  // <= cap; a variable may not be annihilated after it has been created, which
  // makes every coefficient with all exponents <= cap exact. With
  // deg_cap >= 0 only output states of degree <= deg_cap are kept, and with a
  // floor only exponents >= floor. truncated is set when something was dropped
  // by the cap.
  static constexpr int kNoFloor = std::numeric_limits<int>::min();
  BosonSeries apply_word(const std::vector<VertexFactor>& word, const BosonSeries& in, int cap, int deg_cap = -1,
                         bool* truncated = nullptr, int floor = kNoFloor) const;
  BosonSeries apply_factor(const VertexFactor& f, const BosonSeries& in, int cap, int deg_cap,
                           bool* truncated) const;

 private:
  CartanData cd_;
  Params P_;
  AnnihilationRule rule_;
};

// One-variable convenience: E^{sign}(fam_i, z) on a state, outputs of degree
// <= D and z-exponent in [-W, W].
struct EExpansion {
  std::map<int, BosonState> terms;
  bool truncated = false;
};
EExpansion apply_E(const Heisenberg& H, int sign, ModeFamily fam, int i, const BosonState& s, int D, int W);

BosonSeries seed_series(const BosonState& s, int nvars);

// (a x; s)_inf / (b x; s)_inf.
struct PochFactor {
  cplx a;
  cplx b;
  cplx s;
};
std::vector<cplx> kernel_series(const std::vector<PochFactor>& k, int order);

// The sixteen exchange relations of the E-factors among themselves, with the
// Heisenberg modes, and with the boson parts of x^{+-}.
inline constexpr int kExchangeCount = 16;
std::string exchange_id(int r);

struct ExchangeReport {
  std::string id;
  long samples = 0;  // coefficients compared
  double max_residual = 0.0;
  std::string worst_case;
  bool truncated_window = false;
};

// Compares both orderings between all basis states of degree <= D for every
// color pair, exponents within [-W, W].
ExchangeReport check_exchange(const Heisenberg& H, int r, int D, int W);

}  // namespace eqtor
