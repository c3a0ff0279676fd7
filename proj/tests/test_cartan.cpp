#include <random>

#include "doctest.h"
#include "eqtor/cartan.hpp"

using namespace eqtor;

namespace {

int matrix_rank(const IntMatrix& A) {
  std::vector<std::vector<double>> m;
  for (auto& r : A) m.emplace_back(r.begin(), r.end());
  const int n = (int)m.size(), c = (int)m[0].size();
  int rank = 0;
  for (int col = 0; col < c && rank < n; ++col) {
    int piv = -1;
    for (int r = rank; r < n; ++r)
      if (std::abs(m[r][col]) > 1e-9 && (piv < 0 || std::abs(m[r][col]) > std::abs(m[piv][col]))) piv = r;
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    for (int r = 0; r < n; ++r)
      if (r != rank) {
        const double f = m[r][col] / m[rank][col];
        for (int k = 0; k < c; ++k) m[r][k] -= f * m[rank][k];
      }
    ++rank;
  }
  return rank;
}

const std::vector<std::string> kTags{"A2", "A3", "A4", "A7", "D4", "D5", "D6", "E6", "E7", "E8"};

}  // namespace

TEST_CASE("A2 data") {
  const auto cd = cartan_data("A2");
  CHECK(cd.n_nodes == 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int dist = (j - i + 3) % 3;
      CHECK(cd.a(i, j) == (i == j ? 2 : -1));
      (void)dist;
    }
  CHECK(cd.m(0, 1) == -1);
  CHECK(cd.m(1, 0) == 1);
  const auto cd4 = cartan_data("A3");
  CHECK(cd4.a(0, 2) == 0);
  CHECK(cd4.a(0, 3) == -1);
}

TEST_CASE("D4 deformation matrix vanishes") {
  const auto cd = cartan_data("D4");
  CHECK(cd.n_nodes == 5);
  for (auto& row : cd.M)
    for (int v : row) CHECK(v == 0);
  CHECK(cd.a(2, 0) == -1);
  CHECK(cd.a(2, 4) == -1);
  CHECK(cd.a(0, 1) == 0);
}

TEST_CASE("affine invariants for every supported type") {
  for (const auto& tag : kTags) {
    CAPTURE(tag);
    const auto cd = cartan_data(tag);
    const int n = cd.n_nodes;
    for (int i = 0; i < n; ++i) {
      int s = 0;
      for (int j = 0; j < n; ++j) s += cd.a(i, j) * cd.colabels[j];
      CHECK(s == 0);
      CHECK(cd.d[i] == 1);
      for (int j = 0; j < n; ++j) {
        CHECK(cd.b(i, j) == cd.b(j, i));
        CHECK(cd.b(i, j) == cd.a(i, j));
        CHECK(cd.m(i, j) == -cd.m(j, i));
      }
    }
    CHECK(cd.colabels[0] == 1);
    CHECK(matrix_rank(cd.A) == n - 1);
  }
}

TEST_CASE("A-type deformation rows sum to zero") {
  for (int N = 3; N <= 7; ++N) {
    const auto cd = cartan_data_gl(N);
    for (int i = 0; i < N; ++i) {
      int s = 0;
      for (int j = 0; j < N; ++j) s += cd.m(i, j);
      CHECK(s == 0);
    }
  }
}

TEST_CASE("unsupported types") {
  for (const char* t : {"A1", "A0", "B3", "D3", "E5", "E9", "X", "", "A", "A2x"})
    CHECK_THROWS_AS(cartan_data(t), ParamError);
  CHECK_THROWS_AS(cartan_data_gl(2), ParamError);
}

TEST_CASE("minuscule nodes") {
  CHECK(cartan_data("D5").minuscule_nodes() == std::vector<int>{0, 1, 4, 5});
  CHECK(cartan_data("E6").minuscule_nodes() == std::vector<int>{0, 1, 2});
  CHECK(cartan_data("E7").minuscule_nodes() == std::vector<int>{0, 1});
  CHECK(cartan_data("E8").minuscule_nodes() == std::vector<int>{0});
  CHECK(cartan_data("A3").minuscule_nodes().size() == 4);
}

TEST_CASE("pairings") {
  const auto cd = cartan_data("A2");
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(pair(cd, weight_alpha(cd, j), coweight_h(cd, i)) == cd.a(i, j));
  Weight delta{{0, 0, 0}, {0, 0, 0}, 0, 1};
  for (int i = 0; i < 3; ++i) CHECK(pair(cd, delta, coweight_h(cd, i)) == 0);
  CHECK(pair(cd, delta, Coweight{{0, 0, 0}, 0, 1}) == 1);
  Weight l0{{0, 0, 0}, {0, 0, 0}, 1, 0};
  CHECK(pair(cd, l0, Coweight{{0, 0, 0}, 1, 0}) == 1);
  CHECK(pair(cd, l0, coweight_h(cd, 0)) == 1);
  for (const auto& tag : kTags) {
    const auto c = cartan_data(tag);
    for (int a = 1; a < c.n_nodes; ++a) {
      for (int j = 1; j < c.n_nodes; ++j) CHECK(pair(c, weight_lambar(c, a), coweight_h(c, j)) == (a == j));
      // h_0 is not a dual-basis element: h_0 = c - sum a_i h_i.
      CHECK(pair(c, weight_lambar(c, a), coweight_h(c, 0)) == -c.colabels[a]);
      Coweight cc{c.colabels, 0, 0};
      CHECK(pair(c, weight_lambar(c, a), cc) == pair(c, weight_lambar(c, a), Coweight{{}, 1, 0}));
    }
    for (int j = 0; j < c.n_nodes; ++j) {
      Coweight cc{c.colabels, 0, 0};
      CHECK(pair(c, weight_alpha(c, j), cc) == 0);
    }
    CHECK(pair(c, weight_lambar(c, 0), coweight_h(c, 0)) == 0);
  }
}

TEST_CASE("cocycle") {
  for (const auto& tag : kTags) {
    CAPTURE(tag);
    const auto cd = cartan_data(tag);
    const Cocycle eps = cocycle_build(cd);
    const int n = cd.n_nodes;
    auto e = [&](int i) {
      std::vector<int> v(n, 0);
      v[i] = 1;
      return v;
    };
    for (int i = 0; i < n; ++i) {
      CHECK(eps.value(e(i), e(i)) == CocycleValue{});
      for (int j = 0; j < n; ++j) {
        const CocycleValue a = eps.value(e(i), e(j)), b = eps.value(e(j), e(i));
        CHECK(a.sign * b.sign == (cd.a(i, j) % 2 == 0 ? 1 : -1));
        CHECK(a.kexp - b.kexp == -cd.m(i, j));
      }
    }
    std::mt19937_64 rng(77);
    for (int t = 0; t < 200; ++t) {
      std::vector<int> x(n), y(n);
      for (auto& v : x) v = int(rng() % 5) - 2;
      for (auto& v : y) v = int(rng() % 5) - 2;
      const CocycleValue a = eps.value(x, y), b = eps.value(y, x);
      long long par = 0, ke = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          par += (long long)x[i] * y[j] * cd.a(i, j);
          ke -= (long long)x[i] * y[j] * cd.m(i, j);
        }
      CHECK(a.sign * b.sign == (par % 2 == 0 ? 1 : -1));
      CHECK(a.kexp - b.kexp == ke);
    }
  }
  const auto cd = cartan_data("A2");
  const Cocycle eps(cd);
  const cplx kappa = std::polar(1.1, 0.4);
  const cplx ratio = eps.value({0, 1, 0}, {1, 0, 0}).value(kappa) / eps.value({1, 0, 0}, {0, 1, 0}).value(kappa);
  CHECK(std::abs(ratio - (-1.0 / kappa)) < 1e-14);
  std::mt19937_64 rng(78);
  for (int t = 0; t < 50; ++t) {
    std::vector<int> x(3), y(3), z(3);
    for (auto& v : x) v = int(rng() % 7) - 3;
    for (auto& v : y) v = int(rng() % 7) - 3;
    for (auto& v : z) v = int(rng() % 7) - 3;
    std::vector<int> xy(3);
    for (int i = 0; i < 3; ++i) xy[i] = x[i] + y[i];
    CHECK(eps.value(xy, z) == eps.value(x, z) * eps.value(y, z));
    CHECK(eps.value(z, xy) == eps.value(z, x) * eps.value(z, y));
  }
}

TEST_CASE("dynamical weights") {
  const auto cd = cartan_data("A3");
  DynWeight a = DynWeight::zero(4), b = DynWeight::zero(4);
  a.alpha[1] = 1;
  a.rq[1] = -1;
  b.alpha[2] = -1;
  const DynWeight c = a + b;
  CHECK(c.alpha == std::vector<int>{0, 1, -1, 0});
  CHECK(c.rq == std::vector<int>{0, -1, 0, 0});
  const std::vector<int> mu{1, 0, 2, 0};
  CHECK(p_exponent(cd, c, mu) == p_exponent(cd, a, mu) + p_exponent(cd, b, mu));
  CHECK(p_exponent(cd, a, mu) == -(cd.a(1, 0) * 1 + cd.a(1, 2) * 2));
  CHECK(ph_exponent(cd, a, mu) == cd.a(0, 1) + 2 * cd.a(2, 1));
}
