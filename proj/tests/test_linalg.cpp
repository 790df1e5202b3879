#include "hopfclass/linalg.hpp"

#include <doctest.h>

#include <random>

using namespace hopfclass;

namespace {

Mat random_mat(const CycloField& k, std::size_t r, std::size_t c, std::mt19937_64& rng, int zero_bias = 0) {
  std::uniform_int_distribution<int> num(-3 - zero_bias, 3 + zero_bias);
  Mat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      std::vector<Rational> v;
      for (int e = 0; e < k.degree(); ++e) {
        const int x = num(rng);
        v.emplace_back(std::abs(x) > 3 ? 0 : x);
      }
      m(i, j) = CycloNum(k, v);
    }
  return m;
}

}  // namespace

TEST_CASE("kernel basics") {
  const auto& k = CycloField::get(3);
  CHECK(kernel_basis(Mat(3, 3), &k).dim() == 3);
  CHECK(kernel_basis(Mat::identity(k, 3)).dim() == 0);
  Mat m(2, 2);
  m(0, 0) = k.one();
  m(0, 1) = k.q();
  m(1, 0) = k.q_pow(2);
  m(1, 1) = k.one();
  const Subspace ker = kernel_basis(m);
  REQUIRE(ker.dim() == 1);
  CHECK(is_zero(m.apply(ker.basis()[0])));
  CHECK_THROWS_AS(kernel_basis(Mat(2, 2)), std::invalid_argument);
}

TEST_CASE("rank-nullity and solve") {
  const auto& k = CycloField::get(4);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 20; ++t) {
    const Mat a = random_mat(k, 4, 6, rng, t % 4);
    const Subspace ker = kernel_basis(a, &k);
    CHECK(rank(a) + ker.dim() == 6);
    for (const auto& v : ker.basis()) CHECK(is_zero(a.apply(v)));
    Vec x(6);
    for (std::size_t i = 0; i < 6; ++i) x[i] = k.integer(static_cast<long>(i) - 2);
    const Vec b = a.apply(x);
    auto sol = solve(a, b);
    REQUIRE(sol);
    CHECK(a.apply(sol->particular) == b);
  }
}

TEST_CASE("kronecker") {
  const auto& k = CycloField::get(5);
  CHECK(kronecker(Mat::identity(k, 2), Mat::identity(k, 3)) == Mat::identity(k, 6));
  std::mt19937_64 rng(3);
  const Mat a = random_mat(k, 3, 3, rng), b = random_mat(k, 3, 3, rng), c = random_mat(k, 2, 2, rng);
  CHECK(kronecker(a, Mat(3, 3)).is_zero());
  CHECK(kronecker(a, b).trace() == a.trace() * b.trace());
  CHECK(kronecker(kronecker(a, b), c) == kronecker(a, kronecker(b, c)));
}

TEST_CASE("bilinear radical") {
  const auto& k = CycloField::get(3);
  CHECK(bilinear_radical(Mat::identity(k, 3)).dim() == 0);
  CHECK(bilinear_radical(Mat(3, 3), &k).dim() == 3);
  CHECK_THROWS_AS(bilinear_radical(Mat(2, 3), &k), std::invalid_argument);
  // Trace form of Q(zeta_3) as a 2-dimensional Q-algebra on the basis 1, z.
  Mat lz(2, 2);  // z*1 = z, z*z = -1 - z
  lz(1, 0) = k.one();
  lz(0, 1) = k.integer(-1);
  lz(1, 1) = k.integer(-1);
  const Mat l[2] = {Mat::identity(k, 2), lz};
  Mat gram(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) gram(i, j) = (l[i] * l[j]).trace();
  CHECK(bilinear_radical(gram).dim() == 0);
}

TEST_CASE("restriction and quotient operators") {
  const auto& k = CycloField::get(3);
  // Upper triangular T leaves span(e0) invariant.
  Mat t(3, 3);
  t(0, 0) = k.q();
  t(0, 1) = k.one();
  t(1, 1) = k.integer(2);
  t(1, 2) = k.q();
  t(2, 2) = k.one();
  Vec e0(3);
  e0[0] = k.one();
  const Subspace w = Subspace::span(3, {e0});
  const Mat r = restrict_operator(t, w);
  CHECK(r.rows() == 1);
  CHECK(r(0, 0) == k.q());
  const Mat qo = quotient_operator(t, w);
  CHECK(qo.rows() == 2);
  CHECK(qo(0, 0) == k.integer(2));
  Vec e2(3);
  e2[2] = k.one();
  CHECK_THROWS_AS(restrict_operator(t, Subspace::span(3, {e2})), std::logic_error);
}

TEST_CASE("subspace operations") {
  const auto& k = CycloField::get(4);
  std::mt19937_64 rng(9);
  const Mat a = random_mat(k, 5, 3, rng), b = random_mat(k, 5, 3, rng);
  const Subspace sa = image(a), sb = image(b);
  const Subspace s = sa.sum(sb), i = sa.intersect(sb);
  CHECK(s.dim() + i.dim() == sa.dim() + sb.dim());
  CHECK(s.contains(sa));
  CHECK(sa.contains(i));
  CHECK(Subspace::span(5, sa.basis()) == sa);
  const auto inv = inverse(a * a.transpose() + Mat::identity(k, 5));
  REQUIRE(inv);
  CHECK(*inv * (a * a.transpose() + Mat::identity(k, 5)) == Mat::identity(k, 5));
}
