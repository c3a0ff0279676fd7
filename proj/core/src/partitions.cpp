#include "eqtor/partitions.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "eqtor/ellcore.hpp"

namespace eqtor {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

cplx th(const Params& P, Mono m) { return theta(P.mono(m), P.p, P.trunc_M); }

// Row conditions for color j at row s: cond1 lambda_s + j = s + k, cond2 lambda_s + j + 1 = s + k.
bool cond1(const ColoredPartition& l, int j, int s) { return mod(l.row(s) + j - s - l.k, l.N) == 0; }
bool cond2(const ColoredPartition& l, int j, int s) { return mod(l.row(s) + j + 1 - s - l.k, l.N) == 0; }

}  // namespace

ColoredPartition::ColoredPartition(std::vector<int> p, int N_, int k_) : parts(std::move(p)), N(N_), k(k_) {
  if (N < 1) throw ParamError("partition rank must be positive");
  if (k < 0 || k >= N) throw ParamError("root color out of range");
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  if (!is_partition(parts)) throw ParamError("parts must be weakly decreasing and nonnegative");
}

int ColoredPartition::size() const {
  int s = 0;
  for (int v : parts) s += v;
  return s;
}

int ColoredPartition::color(Box b) const { return mod(content(b), N); }

ColoredPartition ColoredPartition::added(Box b) const {
  std::vector<int> p = parts;
  if (b.x > (int)p.size()) p.resize(b.x, 0);
  p[b.x - 1] += 1;
  return ColoredPartition(p, N, k);
}

ColoredPartition ColoredPartition::removed(Box b) const {
  std::vector<int> p = parts;
  p[b.x - 1] -= 1;
  return ColoredPartition(p, N, k);
}

std::string ColoredPartition::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
  return os.str();
}

bool is_partition(const std::vector<int>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) return false;
    if (i > 0 && parts[i] > parts[i - 1]) return false;
  }
  return true;
}

ColoredPartition parse_partition(const std::string& s, int N, int k) {
  std::vector<int> parts;
  std::string tok;
  std::istringstream is(s);
  while (std::getline(is, tok, ',')) {
    std::size_t a = tok.find_first_not_of(' '), b = tok.find_last_not_of(' ');
    if (a == std::string::npos) throw ParamError("malformed partition: " + s);
    tok = tok.substr(a, b - a + 1);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw ParamError("malformed partition: " + s);
    }
    if (used != tok.size()) throw ParamError("malformed partition: " + s);
    parts.push_back(v);
  }
  return ColoredPartition(parts, N, k);
}

std::vector<Box> all_addable(const ColoredPartition& lam) {
  std::vector<Box> r;
  for (int x = 1; x <= lam.length() + 1; ++x) {
    const int y = lam.row(x) + 1;
    if (x == 1 || lam.row(x - 1) >= y) r.push_back({x, y});
  }
  return r;
}

std::vector<Box> all_removable(const ColoredPartition& lam) {
  std::vector<Box> r;
  for (int x = 1; x <= lam.length(); ++x) {
    const int y = lam.row(x);
    if (lam.row(x + 1) < y) r.push_back({x, y});
  }
  return r;
}

BoxLists boxes_by_color(const ColoredPartition& lam, int j) {
  BoxLists out;
  for (Box b : all_addable(lam))
    if (lam.color(b) == j) out.addable.push_back(b);
  for (Box b : all_removable(lam))
    if (lam.color(b) == j) out.removable.push_back(b);
  auto less = [&](Box a, Box b) {
    const int ca = lam.content(a), cb = lam.content(b);
    return ca != cb ? ca < cb : a < b;
  };
  std::sort(out.addable.begin(), out.addable.end(), less);
  std::sort(out.removable.begin(), out.removable.end(), less);
  return out;
}

Mono box_mono(Box b) { return mono_pow(kQ1, b.y) * mono_pow(kQ3, b.x); }

Mono row_mono(const ColoredPartition& lam, int a) { return mono_pow(kQ1, lam.row(a)) * mono_pow(kQ3, a - 1); }

cplx support_value(const ColoredPartition&, Box b, const Params& params) { return params.support(box_mono(b)); }

cplx support_value(const ColoredPartition& lam, int a, const Params& params) {
  return params.support(row_mono(lam, a));
}

cplx coeff_plus(const ColoredPartition& lam, Box X, const Params& P, Form form) {
  const int j = lam.color(X);
  const auto bl = boxes_by_color(lam, j);
  if (std::find(bl.addable.begin(), bl.addable.end(), X) == bl.addable.end())
    throw ParamError("coeff_plus: box is not addable");
  const cplx q = P.q;
  cplx r = 1.0;
  if (form == Form::Box) {
    const Mono uX = box_mono(X);
    for (Box R : bl.removable)
      if (lam.content(R) < lam.content(X)) {
        const Mono x = uX / box_mono(R);
        r *= th(P, kQ2 * x) / (q * th(P, x));
      }
    for (Box A : bl.addable)
      if (lam.content(A) < lam.content(X)) {
        const Mono x = uX / box_mono(A);
        r *= q * th(P, kQ2.inv() * x) / th(P, x);
      }
    return r;
  }
  const int i = X.x;
  const Mono ui = row_mono(lam, i);
  for (int s = 1; s < i; ++s) {
    const Mono x = ui / row_mono(lam, s);
    if (cond1(lam, j, s)) r *= th(P, kQ3.inv() * x) / (q * th(P, kQ1 * x));
    if (cond2(lam, j, s)) r *= q * th(P, kQ1 * kQ3 * x) / th(P, x);
  }
  return r;
}

cplx coeff_minus(const ColoredPartition& lam, Box X, const Params& P, Form form, int extra_rows) {
  const int j = lam.color(X);
  const auto bl = boxes_by_color(lam, j);
  if (std::find(bl.removable.begin(), bl.removable.end(), X) == bl.removable.end())
    throw ParamError("coeff_minus: box is not removable");
  const cplx q = P.q;
  cplx r = 1.0;
  if (form == Form::Box) {
    const Mono uX = box_mono(X);
    for (Box R : bl.removable)
      if (lam.content(R) > lam.content(X)) {
        const Mono x = box_mono(R) / uX;
        r *= q * th(P, kQ2.inv() * x) / th(P, x);
      }
    for (Box A : bl.addable)
      if (lam.content(A) > lam.content(X)) {
        const Mono x = box_mono(A) / uX;
        r *= th(P, kQ2 * x) / (q * th(P, x));
      }
    return r;
  }
  // Empty rows s, s+1 contribute cond1(s) * cond2(s+1) = 1, so the product
  // stabilises once it runs to row L >= l(lambda)+1 for cond2 and L-1 for cond1.
  const int i = X.x;
  const int L = lam.length() + 1 + extra_rows;
  const Mono ui = row_mono(lam, i);
  for (int s = i + 1; s <= L; ++s) {
    const Mono x = row_mono(lam, s) / ui;
    if (s < L && cond1(lam, j, s)) r *= q * th(P, kQ1 * kQ3 * x) / th(P, x);
    if (cond2(lam, j, s)) r *= th(P, kQ3.inv() * x) / (q * th(P, kQ1 * x));
  }
  return r;
}

std::vector<PhiFactor> phi_factors(const ColoredPartition& lam, int j, Form form, int extra_rows) {
  std::vector<PhiFactor> f;
  if (form == Form::Box) {
    const auto bl = boxes_by_color(lam, j);
    for (Box R : bl.removable) f.push_back({box_mono(R), kQ2 * box_mono(R), 1});
    for (Box A : bl.addable) f.push_back({mono_pow(kQ2, 2) * box_mono(A), kQ2 * box_mono(A), -1});
    return f;
  }
  const int L = lam.length() + 1 + extra_rows;
  for (int s = 1; s <= L; ++s) {
    const Mono us = row_mono(lam, s);
    if (s < L && cond1(lam, j, s)) f.push_back({kQ3 * us, kQ1.inv() * us, 1});
    if (cond2(lam, j, s)) f.push_back({kQ1.inv() * kQ3.inv() * us, us, -1});
  }
  return f;
}

cplx phi_eval(const std::vector<PhiFactor>& f, cplx z, const Params& P) {
  cplx r = 1.0;
  for (const PhiFactor& x : f)
    r *= ipow(P.q, x.qpow) * theta(P.support(x.numer) / z, P.p, P.trunc_M) /
         theta(P.support(x.denom) / z, P.p, P.trunc_M);
  return r;
}

std::vector<int> dim_vector(const ColoredPartition& lam) {
  std::vector<int> d(lam.N, 0);
  for (int x = 1; x <= lam.length(); ++x)
    for (int y = 1; y <= lam.row(x); ++y) d[lam.color({x, y})]++;
  return d;
}

std::vector<ColoredPartition> partitions_up_to(int n, int N, int k) {
  std::vector<ColoredPartition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int maxpart) {
    if (remaining == 0) {
      out.emplace_back(cur, N, k);
      return;
    }
    for (int v = std::min(remaining, maxpart); v >= 1; --v) {
      cur.push_back(v);
      rec(remaining - v, v);
      cur.pop_back();
    }
  };
  for (int s = 0; s <= n; ++s) rec(s, s);
  return out;
}

}  // namespace eqtor
