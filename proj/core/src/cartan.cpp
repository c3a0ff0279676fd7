#include "eqtor/cartan.hpp"

#include <cctype>
#include <utility>

namespace eqtor {

namespace {

CartanData from_edges(std::string tag, Family fam, int rank, int n, const std::vector<std::pair<int, int>>& edges,
                      std::vector<int> colabels) {
  CartanData cd;
  cd.tag = std::move(tag);
  cd.family = fam;
  cd.rank = rank;
  cd.n_nodes = n;
  cd.A.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) cd.A[i][i] = 2;
  for (auto [i, j] : edges) {
    cd.A[i][j] = -1;
    cd.A[j][i] = -1;
  }
  cd.B = cd.A;
  cd.d.assign(n, 1);
  cd.M.assign(n, std::vector<int>(n, 0));
  cd.colabels = std::move(colabels);
  return cd;
}

}  // namespace

std::vector<int> CartanData::minuscule_nodes() const {
  std::vector<int> r;
  for (int i = 0; i < n_nodes; ++i)
    if (colabels[i] == 1) r.push_back(i);
  return r;
}

CartanData cartan_data_gl(int N) {
  if (N < 3) throw ParamError("gl_N toroidal data needs N >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < N; ++i) edges.emplace_back(i, (i + 1) % N);
  CartanData cd = from_edges("A" + std::to_string(N - 1), Family::A, N, N, edges, std::vector<int>(N, 1));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) cd.M[i][j] = (i == (j + 1) % N ? 1 : 0) - ((i + 1) % N == j ? 1 : 0);
  return cd;
}

CartanData cartan_data(const std::string& tag) {
  if (tag.size() < 2 || !std::isdigit(static_cast<unsigned char>(tag[1])))
    throw ParamError("unsupported Cartan type: " + tag);
  for (std::size_t i = 1; i < tag.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(tag[i]))) throw ParamError("unsupported Cartan type: " + tag);
  const int n = std::stoi(tag.substr(1));
  switch (tag[0]) {
    case 'A':
      if (n < 2) throw ParamError("A1 and A0 affine types are not supported");
      return cartan_data_gl(n + 1);
    case 'D': {
      if (n < 4) throw ParamError("D_N needs N >= 4");
      std::vector<std::pair<int, int>> e{{0, 2}, {1, 2}};
      for (int i = 2; i + 1 <= n - 1; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(n - 2, n);
      std::vector<int> col(n + 1, 2);
      col[0] = col[1] = col[n - 1] = col[n] = 1;
      return from_edges(tag, Family::D, n, n + 1, e, col);
    }
    case 'E':
      if (n == 6)
        return from_edges(tag, Family::E, 6, 7, {{0, 3}, {3, 6}, {1, 4}, {4, 6}, {2, 5}, {5, 6}},
                          {1, 1, 1, 2, 2, 2, 3});
      if (n == 7)
        return from_edges(tag, Family::E, 7, 8, {{0, 2}, {2, 4}, {4, 6}, {1, 3}, {3, 5}, {5, 6}, {6, 7}},
                          {1, 1, 2, 2, 3, 3, 4, 2});
      if (n == 8)
        return from_edges(tag, Family::E, 8, 9,
                          {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {5, 8}},
                          {1, 2, 3, 4, 5, 6, 4, 2, 3});
      throw ParamError("unsupported Cartan type: " + tag);
    default:
      throw ParamError("unsupported Cartan type: " + tag);
  }
}

Weight weight_alpha(const CartanData& cd, int j) {
  Weight w{std::vector<int>(cd.n_nodes, 0), std::vector<int>(cd.n_nodes, 0), 0, 0};
  w.alpha[j] = 1;
  return w;
}

Weight weight_lambar(const CartanData& cd, int a) {
  Weight w{std::vector<int>(cd.n_nodes, 0), std::vector<int>(cd.n_nodes, 0), 0, 0};
  if (a != 0) w.lambar[a] = 1;
  return w;
}

Coweight coweight_h(const CartanData& cd, int i) {
  Coweight c{std::vector<int>(cd.n_nodes, 0), 0, 0};
  c.h[i] = 1;
  return c;
}

int pair(const CartanData& cd, const Weight& x, const Coweight& y) {
  const int n = cd.n_nodes;
  auto at = [](const std::vector<int>& v, int i) { return i < (int)v.size() ? v[i] : 0; };
  int r = 0;
  // h_0 = c - sum_{i>0} a_i h_i, so <bar Lambda_a, h_0> = -a_a and <Lambda_0, h_0> = 1.
  for (int i = 0; i < n; ++i) {
    const int hi = at(y.h, i);
    if (hi == 0) continue;
    for (int j = 0; j < n; ++j) r += hi * at(x.alpha, j) * cd.A[i][j];
    for (int a = 1; a < n; ++a) r += hi * at(x.lambar, a) * (i == 0 ? -cd.colabels[a] : (i == a ? 1 : 0));
    if (i == 0) r += hi * x.lambda0;
  }
  r += y.c * x.lambda0;
  r += y.d * (x.delta + at(x.alpha, 0));
  return r;
}

int pair_h(const CartanData& cd, const std::vector<int>& beta, int a, int i) {
  Weight w = weight_lambar(cd, a);
  w.alpha = beta;
  return pair(cd, w, coweight_h(cd, i));
}

DynWeight& DynWeight::operator+=(const DynWeight& o) {
  if (alpha.size() < o.alpha.size()) alpha.resize(o.alpha.size(), 0);
  if (rq.size() < o.rq.size()) rq.resize(o.rq.size(), 0);
  for (std::size_t i = 0; i < o.alpha.size(); ++i) alpha[i] += o.alpha[i];
  for (std::size_t i = 0; i < o.rq.size(); ++i) rq[i] += o.rq[i];
  return *this;
}

int p_exponent(const CartanData& cd, const DynWeight& w, const std::vector<int>& mu) {
  int r = 0;
  for (std::size_t i = 0; i < w.rq.size(); ++i)
    for (std::size_t j = 0; j < mu.size(); ++j) r += w.rq[i] * mu[j] * cd.A[i][j];
  return r;
}

int ph_exponent(const CartanData& cd, const DynWeight& w, const std::vector<int>& nu) {
  int r = 0;
  for (std::size_t i = 0; i < w.alpha.size(); ++i)
    for (std::size_t j = 0; j < nu.size(); ++j) r += w.alpha[i] * nu[j] * cd.A[j][i];
  return r;
}

CocycleValue Cocycle::simple(int i, int j) const {
  if (i <= j) return {};
  return {(cd_.A[i][j] % 2 == 0) ? 1 : -1, -cd_.M[i][j]};
}

CocycleValue Cocycle::value(const std::vector<int>& b1, const std::vector<int>& b2) const {
  long long parity = 0, kexp = 0;
  for (std::size_t i = 0; i < b1.size(); ++i) {
    if (b1[i] == 0) continue;
    for (std::size_t j = 0; j < i && j < b2.size(); ++j) {
      const long long e = (long long)b1[i] * b2[j];
      parity += e * cd_.A[i][j];
      kexp -= e * cd_.M[i][j];
    }
  }
  return {(parity % 2 == 0) ? 1 : -1, static_cast<int>(kexp)};
}

Cocycle cocycle_build(const CartanData& cd) { return Cocycle(cd); }

}  // namespace eqtor
