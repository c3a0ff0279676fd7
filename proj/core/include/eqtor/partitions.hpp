#pragma once

#include <compare>
#include <string>
#include <vector>

#include "eqtor/params.hpp"

namespace eqtor {

// Box (x, y): row x, column y, both 1-based.
struct Box {
  int x = 1;
  int y = 1;
  friend auto operator<=>(const Box&, const Box&) = default;
};

struct ColoredPartition {
  std::vector<int> parts;  // weakly decreasing, no trailing zeros
  int N = 3;
  int k = 0;

  ColoredPartition() = default;
  ColoredPartition(std::vector<int> p, int N_, int k_);

  int length() const { return static_cast<int>(parts.size()); }
  int size() const;
  int row(int a) const { return a >= 1 && a <= length() ? parts[a - 1] : 0; }
  bool contains(Box b) const { return b.x >= 1 && b.y >= 1 && b.y <= row(b.x); }
  // Integer content x - y + k; the color is this value mod N.
  int content(Box b) const { return b.x - b.y + k; }
  int color(Box b) const;
  ColoredPartition added(Box b) const;
  ColoredPartition removed(Box b) const;
  std::string str() const;
  friend bool operator==(const ColoredPartition& a, const ColoredPartition& b) {
    return a.parts == b.parts && a.N == b.N && a.k == b.k;
  }
};

// Parses "3,1,1"; the empty string is the empty partition.
ColoredPartition parse_partition(const std::string& s, int N, int k);
bool is_partition(const std::vector<int>& parts);

struct BoxLists {
  std::vector<Box> addable;
  std::vector<Box> removable;
};

// Addable and removable boxes of color j, ascending in content.
BoxLists boxes_by_color(const ColoredPartition& lam, int j);
std::vector<Box> all_addable(const ColoredPartition& lam);
std::vector<Box> all_removable(const ColoredPartition& lam);

// u_X / u = q1^y q3^x.
Mono box_mono(Box b);
// u_a / u = q1^{lambda_a} q3^{a-1}.
Mono row_mono(const ColoredPartition& lam, int a);
cplx support_value(const ColoredPartition& lam, Box b, const Params& params);
cplx support_value(const ColoredPartition& lam, int a, const Params& params);

enum class Form { Box, Row };

// A^+_{lambda,X} for X addable of color c(X). extra_rows extends the row-form
// truncation (ignored for the box form).
cplx coeff_plus(const ColoredPartition& lam, Box X, const Params& params, Form form = Form::Box);
cplx coeff_minus(const ColoredPartition& lam, Box X, const Params& params, Form form = Form::Box, int extra_rows = 0);

// Theta-ratio factors of the phi_j eigenvalue: each entry is
// scalar * theta(numer u/z) / theta(denom u/z) with numer, denom exact monomials.
struct PhiFactor {
  Mono numer;
  Mono denom;
  int qpow;  // scalar q^qpow
};
std::vector<PhiFactor> phi_factors(const ColoredPartition& lam, int j, Form form, int extra_rows = 0);
cplx phi_eval(const std::vector<PhiFactor>& f, cplx z, const Params& params);

std::vector<int> dim_vector(const ColoredPartition& lam);

// All partitions with at most n boxes, by size then lexicographically descending.
std::vector<ColoredPartition> partitions_up_to(int n, int N, int k);

}  // namespace eqtor
