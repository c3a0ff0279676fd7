#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace eqtor::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

// Parsed command line, also loadable from a JSON config file whose keys are
// the long flag names. Flags given on the command line win over the file.
struct RunConfig {
  std::string command;  // verify | act | expand | report
  std::string target;   // suite for verify, function for expand

  // Modules.
  std::string type_tag = "A2";
  int N = 3;
  int k = 0;
  int a = 0;
  int level = -1;  // -1: 0 for Fock/vector, 1 for heisenberg/level1
  int degree = 2;
  int current_degree = 2;
  int window = 6;
  int max_size = 6;
  int range = 6;
  int lattice_count = 12;
  std::vector<std::string> relations;  // empty: the whole suite

  // act
  std::string rep = "fock";
  std::string gen = "x+";
  int color = 0;
  std::string partition;
  int index = 0;

  // expand
  std::string z, s, num, den, xi = "0.1";
  int b = 1;
  int n = 2;
  int order = 6;
  int samples = 10;
  int instances = 50;
  bool check = false;

  // report
  std::vector<std::string> inputs;

  // Params overrides as "re,im" (or a bare real); empty keeps the default.
  std::string q, kappa, p, u;
  int trunc_M = 40;
  double tol = 1e-8;
  double pole_guard = 1e-4;
  std::uint64_t seed = 20240611;

  std::string format = "text";
  std::string output;
  std::string config;
};

// Runs one command line (args exclude the program name). Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eqtor::cli
