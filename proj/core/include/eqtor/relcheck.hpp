#pragma once

#include <string>
#include <vector>

#include "eqtor/boson.hpp"
#include "eqtor/fock01.hpp"
#include "eqtor/level1.hpp"
#include "eqtor/report.hpp"

namespace eqtor {

// Relations on level-0 modules (Fock and vector). All checks loop over every
// color pair and every state in `states`; supports are compared as exact
// monomials.

// xpxp (sign +) or xmxm (sign -) in theta form.
RelationReport check_quadratic(const Rep& rep, int sign, const std::vector<Basis>& states);
RelationReport check_quadratic(const Rep& rep, int sign, int i, int j, const std::vector<Basis>& states);

enum class CcNorm {
  Exact,    // C+ C- = q/(q - q^-1) theta(q^-2) / (p;p)^2, what c_plus * c_minus gives
  Cubic,  // the same with (p;p)^3, kept to show that it fails
};
// [x+_i(z), x-_j(w)] against delta(z/w) (phi+ - phi-)/(q - q^-1).
RelationReport check_xpxm(const Rep& rep, const std::vector<Basis>& states, CcNorm norm = CcNorm::Exact);

// phi_i(z) x^{sign}_j(w) phi_i(z)^{-1} against the theta multiplier at each
// support, z sampled `zsamples` times per term. At level 0 phi+ and phi- have
// the same eigenvalue, so one check covers both.
RelationReport check_phi_x(const Rep& rep, int sign, const std::vector<Basis>& states, int zsamples = 10);

// Level 0: the phi-phi multipliers are identically 1 (p* = p).
RelationReport check_phi_phi(const Rep& rep, bool plus_minus, int samples = 20);
// Level 1: the multiplier from the Heisenberg bracket against the theta form.
RelationReport check_phi_phi(const Heisenberg& H, bool plus_minus, int samples = 20);

// Serre relations with a = 2, adjacent colors, Pochhammer prefactors. sign -
// is checked directly on x- with the inverted prefactors.
RelationReport check_serre(const Rep& rep, int sign, const std::vector<Basis>& states);

// grading_gf: the P and P+h shifts of x+-, plus the q^d rule
// q^d x(z) q^-d = x(q^-1 z) realised as the module at q u.
RelationReport check_grading(const Rep& rep, const std::vector<Basis>& states);
// grading_gK: K+-_j shifts the P exponent by -<Q_j, .>.
RelationReport check_grading_K(const Rep& rep, const std::vector<Basis>& states);
// Same shifts on the level-one lattice module: Z+- for grading_gf, K+- with
// k_generators.
RelationReport check_grading(const LatticeModule& L, bool k_generators, int lattice_count = 12);

// prod_j K+_j acts by q^{expected} on every state (exact integer check).
RelationReport check_kappa0(const Rep& rep, const std::vector<Basis>& states, int expected = -1);

std::vector<Basis> fock_states(const FockRep& rep, int max_size);
std::vector<Basis> vector_states(const VectorRep& rep, int range);

// Relation ids for each suite, in run order.
std::vector<std::string> fock_relation_ids();
std::vector<std::string> vector_relation_ids();
std::vector<std::string> level1_relation_ids();
std::vector<std::string> heisenberg_relation_ids();

// Runs the named relations; unknown names throw ParamError, an empty list
// gives an empty result.
std::vector<RelationReport> run_suite(const Rep& rep, const std::vector<Basis>& states,
                                      const std::vector<std::string>& relations);

struct Level1Config {
  std::string type_tag = "A2";
  int a = 0;
  int degree = 2;          // zalg1
  int current_degree = 2;  // full-current checks on F (x) W
  int window = 6;
  int lattice_count = 12;
  int points = 20;
};
std::vector<RelationReport> run_level1_suite(const Level1Config& cfg, const Params& params,
                                             const std::vector<std::string>& relations);

// The sixteen exchange relations as reports.
std::vector<RelationReport> run_heisenberg_suite(const std::string& type_tag, const Params& params, int degree,
                                                 int window, const std::vector<std::string>& relations);

// Every report passes and none skips more than a fifth of its samples.
inline constexpr double kMaxSkippedFraction = 0.2;
bool suite_passes(const std::vector<RelationReport>& reports);

}  // namespace eqtor
