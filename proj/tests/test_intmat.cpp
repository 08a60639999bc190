#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "albertine/intmat.hpp"

using namespace alb;

static IntMatrix from_rows(std::vector<std::vector<long long>> rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
  return m;
}

static void check_hnf_shape(const IntMatrix& m) {
  HnfResult r = hnf(m);
  // u is unimodular and u*m reproduces h over zero padding
  Int ud = det(r.u);
  CHECK((ud == 1 || ud == -1));
  IntMatrix um = r.u * m;
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) {
      Int want = i < r.h.rows ? r.h.at(i, j) : Int(0);
      CHECK(um.at(i, j) == want);
    }
  long long prev = -1;
  for (std::size_t i = 0; i < r.h.rows; ++i) {
    std::size_t jp = 0;
    while (jp < r.h.cols && r.h.at(i, jp) == 0) ++jp;
    REQUIRE(jp < r.h.cols);
    CHECK((long long)jp > prev);
    prev = (long long)jp;
    CHECK(r.h.at(i, jp) > 0);
    for (std::size_t k = 0; k < i; ++k) {
      CHECK(r.h.at(k, jp) >= 0);
      CHECK(r.h.at(k, jp) < r.h.at(i, jp));
    }
  }
}

TEST_CASE("hnf hand oracle") {
  IntMatrix m = from_rows({{2, 0}, {0, 2}, {1, 1}});
  HnfResult r = hnf(m);
  REQUIRE(r.h.rows == 2);
  CHECK(r.h.at(0, 0) == 1);
  CHECK(r.h.at(0, 1) == 1);
  CHECK(r.h.at(1, 0) == 0);
  CHECK(r.h.at(1, 1) == 2);
  check_hnf_shape(m);
}

TEST_CASE("hnf random property sweep") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
    IntMatrix m(rows, cols);
    for (auto& v : m.a) v = d(rng);
    check_hnf_shape(m);
  }
}

TEST_CASE("determinant") {
  CHECK(det(from_rows({{3}})) == 3);
  CHECK(det(from_rows({{1, 2}, {3, 4}})) == -2);
  CHECK(det(from_rows({{0, 1}, {1, 0}})) == -1);
  CHECK(det(from_rows({{2, 0, 1}, {0, 3, 0}, {1, 0, 2}})) == 9);
  CHECK(det(IntMatrix::identity(6)) == 1);
  // det is multiplicative
  IntMatrix a = from_rows({{1, 2, 0}, {0, 1, 5}, {3, 0, 1}});
  IntMatrix b = from_rows({{2, 1, 1}, {0, 1, 0}, {4, 0, 3}});
  CHECK(det(a * b) == det(a) * det(b));
}

TEST_CASE("signature of symmetric matrices") {
  using T = std::tuple<std::size_t, std::size_t, std::size_t>;
  CHECK(ldl_signature(from_rows({{1, 0}, {0, -1}})) == T{1, 1, 0});
  CHECK(ldl_signature(from_rows({{0, 1}, {1, 0}})) == T{1, 1, 0});
  CHECK(ldl_signature(from_rows({{0, 0}, {0, 0}})) == T{0, 0, 2});
  CHECK(ldl_signature(from_rows({{2, 1}, {1, 2}})) == T{2, 0, 0});
  CHECK(ldl_signature(from_rows({{1, 2}, {2, 4}})) == T{1, 0, 1});
  // congruence invariance: S^T G S has the same inertia for unimodular S
  IntMatrix g = from_rows({{2, 1, 0}, {1, -3, 1}, {0, 1, 0}});
  IntMatrix s = from_rows({{1, 4, -2}, {0, 1, 7}, {0, 0, 1}});
  CHECK(ldl_signature(s.transpose() * g * s) == ldl_signature(g));
}

TEST_CASE("solving against an hnf basis") {
  IntMatrix m = from_rows({{2, 0}, {0, 2}, {1, 1}});
  IntMatrix h = hnf(m).h;
  bool ok = false;
  std::vector<Int> x = solve_hnf(h, {Int(3), Int(5)}, &ok);
  REQUIRE(ok);
  std::vector<Int> back(2);
  for (std::size_t i = 0; i < h.rows; ++i)
    for (std::size_t j = 0; j < 2; ++j) back[j] += x[i] * h.at(i, j);
  CHECK(back[0] == 3);
  CHECK(back[1] == 5);
  solve_hnf(h, {Int(1), Int(0)}, &ok);
  CHECK(!ok);
}

TEST_CASE("text codec roundtrip") {
  IntMatrix m = from_rows({{1, -2, 3}, {0, 44, -5}});
  IntMatrix back = intmat_from_text(intmat_to_text(m));
  CHECK(back == m);
}
