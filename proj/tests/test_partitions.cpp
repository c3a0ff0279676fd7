#include <random>

#include "doctest.h"
#include "eqtor/ellcore.hpp"
#include "eqtor/partitions.hpp"
#include "helpers.hpp"

using namespace eqtor;
using testing_support::rel;

TEST_CASE("partition basics") {
  const ColoredPartition lam({3, 1, 1}, 3, 0);
  CHECK(lam.size() == 5);
  CHECK(lam.length() == 3);
  CHECK(lam.row(4) == 0);
  CHECK(lam.contains({1, 3}));
  CHECK_FALSE(lam.contains({2, 2}));
  CHECK(lam.color({1, 2}) == 2);
  CHECK(lam.str() == "3,1,1");
  CHECK(ColoredPartition({2, 0, 0}, 3, 0).parts == std::vector<int>{2});
  CHECK_THROWS_AS(ColoredPartition({1, 2}, 3, 0), ParamError);
  CHECK_THROWS_AS(ColoredPartition({1}, 3, 3), ParamError);
  CHECK_THROWS_AS(ColoredPartition({1}, 0, 0), ParamError);
}

TEST_CASE("parsing") {
  CHECK(parse_partition("", 3, 0).parts.empty());
  CHECK(parse_partition("3,1,1", 3, 0).parts == std::vector<int>{3, 1, 1});
  CHECK(parse_partition(" 2, 2 ", 3, 1).parts == std::vector<int>{2, 2});
  for (const char* bad : {"3,a", "1,2", "3,,1", "-1", "2.5", ",", "3x"})
    CHECK_THROWS_AS(parse_partition(bad, 3, 0), ParamError);
}

TEST_CASE("addable and removable boxes") {
  const ColoredPartition empty({}, 3, 0);
  auto bl = boxes_by_color(empty, 0);
  REQUIRE(bl.addable.size() == 1);
  CHECK(bl.addable[0] == Box{1, 1});
  CHECK(bl.removable.empty());
  CHECK(boxes_by_color(empty, 1).addable.empty());

  const ColoredPartition one({1}, 3, 0);
  CHECK(boxes_by_color(one, 1).addable == std::vector<Box>{{2, 1}});
  CHECK(boxes_by_color(one, 2).addable == std::vector<Box>{{1, 2}});
  CHECK(boxes_by_color(one, 0).removable == std::vector<Box>{{1, 1}});

  const ColoredPartition sq({3, 3}, 3, 0);
  CHECK(all_removable(sq) == std::vector<Box>{{2, 3}});
  CHECK(all_addable(sq) == std::vector<Box>{{1, 4}, {3, 1}});

  for (int N : {3, 4, 5})
    for (int k = 0; k < N; ++k)
      for (const auto& lam : partitions_up_to(8, N, k)) {
        CHECK(all_addable(lam).size() == all_removable(lam).size() + 1);
        for (Box X : all_addable(lam)) {
          const auto mu = lam.added(X);
          const auto r = all_removable(mu);
          CHECK(std::find(r.begin(), r.end(), X) != r.end());
          CHECK(mu.removed(X) == lam);
        }
        for (int j = 0; j < N; ++j) {
          // Ascending content along the rim is ascending row.
          const auto b = boxes_by_color(lam, j);
          for (std::size_t t = 1; t < b.addable.size(); ++t) CHECK(b.addable[t - 1].x < b.addable[t].x);
          for (std::size_t t = 1; t < b.removable.size(); ++t) CHECK(b.removable[t - 1].x < b.removable[t].x);
        }
      }
}

TEST_CASE("supports") {
  // q2 u_(1,1) = u exactly.
  CHECK(kQ2 * box_mono({1, 1}) == Mono{});
  for (const auto& lam : partitions_up_to(6, 4, 1)) {
    for (Box X : all_addable(lam)) CHECK(kQ2 * box_mono(X) == row_mono(lam, X.x));
    for (Box X : all_removable(lam)) CHECK(kQ2 * box_mono(X) == kQ1.inv() * row_mono(lam, X.x));
  }
  const Params P;
  CHECK(rel(support_value(ColoredPartition({}, 3, 0), 1, P), P.u) < 1e-15);
  const ColoredPartition lam({2}, 3, 0);
  CHECK(rel(support_value(lam, Box{1, 2}, P), P.u * std::pow(P.kappa / P.q, 2) / (P.kappa * P.q)) < 1e-13);
}

TEST_CASE("coefficient examples") {
  const Params P;
  const ColoredPartition empty({}, 3, 0);
  CHECK(coeff_plus(empty, {1, 1}, P) == cplx(1.0));
  CHECK(coeff_plus(empty, {1, 1}, P, Form::Row) == cplx(1.0));
  CHECK_THROWS_AS(coeff_plus(empty, {2, 1}, P), ParamError);
  CHECK_THROWS_AS(coeff_minus(empty, {1, 1}, P), ParamError);

  // lambda = (1,1), N = 3: color-2 addables (1,2) and (3,1); A^+ at (3,1) has
  // one factor from (1,2).
  const ColoredPartition l11({1, 1}, 3, 0);
  const cplx q = P.q;
  auto th = [&](cplx x) { return theta(x, P.p, P.trunc_M); };
  const cplx x = P.mono(box_mono({3, 1}) / box_mono({1, 2}));
  const cplx expect = q * th(x / (q * q)) / th(x);
  CHECK(rel(coeff_plus(l11, {3, 1}, P), expect) < 1e-13);
  CHECK(coeff_plus(l11, {1, 2}, P) == cplx(1.0));
  CHECK(coeff_minus(l11, {2, 1}, P) == cplx(1.0));
  CHECK_THROWS_AS(coeff_minus(l11, {1, 2}, P), ParamError);
  CHECK(coeff_minus(ColoredPartition({1}, 3, 0), {1, 1}, P) == cplx(1.0));
}

TEST_CASE("box form and row form agree") {
  const Params P;
  std::mt19937_64 rng(4242);
  for (int N : {3, 4, 5})
    for (int k = 0; k < N; ++k)
      for (const auto& lam : partitions_up_to(6, N, k)) {
        CAPTURE(lam.str());
        for (Box X : all_addable(lam))
          CHECK(rel(coeff_plus(lam, X, P, Form::Row), coeff_plus(lam, X, P, Form::Box)) < 1e-10);
        for (Box X : all_removable(lam))
          CHECK(rel(coeff_minus(lam, X, P, Form::Row), coeff_minus(lam, X, P, Form::Box)) < 1e-10);
        for (int j = 0; j < N; ++j) {
          const auto fb = phi_factors(lam, j, Form::Box);
          const auto fr = phi_factors(lam, j, Form::Row);
          for (int t = 0; t < 3; ++t) {
            const cplx z = P.u * testing_support::random_polar(rng, 0.5, 2.0);
            CHECK(rel(phi_eval(fr, z, P), phi_eval(fb, z, P)) < 1e-10);
          }
        }
      }
}

TEST_CASE("row-form truncation is stable") {
  const Params P;
  for (int N : {3, 4})
    for (const auto& lam : partitions_up_to(5, N, 0)) {
      for (Box X : all_removable(lam))
        CHECK(rel(coeff_minus(lam, X, P, Form::Row, N), coeff_minus(lam, X, P, Form::Row, 0)) < 1e-12);
      for (int j = 0; j < N; ++j) {
        const cplx z = P.u * std::polar(1.3, 0.7);
        CHECK(rel(phi_eval(phi_factors(lam, j, Form::Row, N), z, P),
                  phi_eval(phi_factors(lam, j, Form::Row, 0), z, P)) < 1e-12);
      }
    }
}

TEST_CASE("dimension vectors") {
  CHECK(dim_vector(ColoredPartition({}, 3, 0)) == std::vector<int>{0, 0, 0});
  CHECK(dim_vector(ColoredPartition({1}, 3, 0)) == std::vector<int>{1, 0, 0});
  CHECK(dim_vector(ColoredPartition({2, 1}, 3, 0)) == std::vector<int>{1, 1, 1});
  CHECK(dim_vector(ColoredPartition({2, 2}, 2, 0)) == std::vector<int>{2, 2});
  CHECK(dim_vector(ColoredPartition({1}, 3, 2)) == std::vector<int>{0, 0, 1});
  for (const auto& lam : partitions_up_to(7, 4, 3)) {
    int s = 0;
    for (int v : dim_vector(lam)) s += v;
    CHECK(s == lam.size());
  }
}

TEST_CASE("partition enumeration") {
  CHECK(partitions_up_to(0, 3, 0).size() == 1);
  // p(0..6) = 1 1 2 3 5 7 11
  CHECK(partitions_up_to(6, 3, 0).size() == 30);
  CHECK(partitions_up_to(2, 3, 0)[2].parts == std::vector<int>{2});
}
