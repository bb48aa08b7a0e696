#include <nilorb/classical.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace nilorb;

namespace {

Mat random_mat(const Field& f, int r, int c, std::mt19937& rng)
{
  std::uniform_int_distribution<unsigned> d(0, f.order() - 1);
  Mat m(f, r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j)
      m(i, j) = static_cast<Scalar>(d(rng));
  return m;
}

Mat random_radical(const LieAlgebra& g, std::mt19937& rng)
{
  const auto rad = g.trace_radical_basis();
  Mat r(g.field(), g.N(), g.N());
  std::uniform_int_distribution<unsigned> d(0, g.field().order() - 1);
  for (const auto& b : rad)
    r = r + scale(b, static_cast<Scalar>(d(rng)));
  return r;
}

// Random group element as a product of transvections / reflections.
Mat random_group_element(const SpaceData& sp, std::mt19937& rng)
{
  const Field& f = *sp.field;
  const int N = sp.dim;
  const Mat pol = is_orthogonal(sp.kind) ? polar(sp.B) : sp.S;
  Mat g = Mat::identity(f, N);
  std::uniform_int_distribution<unsigned> d(0, f.order() - 1);
  for (int step = 0; step < 12; ++step) {
    Vec v(static_cast<std::size_t>(N));
    for (auto& x : v)
      x = static_cast<Scalar>(d(rng));
    Scalar c = 1;
    if (is_orthogonal(sp.kind)) {
      const Scalar a = quad_eval(sp.B, v);
      if (!a)
        continue;
      c = f.inv(a);
    }
    // x ↦ x + c β(x,v) v, i.e. I + c v (Sᵗv)ᵗ
    const Vec sv = mat_vec(transpose(pol), v);
    Mat t = Mat::identity(f, N);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j)
        t(i, j) ^= f.mul(c, f.mul(v[static_cast<std::size_t>(i)], sv[static_cast<std::size_t>(j)]));
    g = t * g;
  }
  return g;
}

}  // namespace

TEST(Classical, LieDimensions)
{
  const Field& f2 = Field::standard(1);
  EXPECT_EQ(lie_algebra(GroupKind::Sp, 1, f2).dim(), 3);
  EXPECT_EQ(lie_algebra(GroupKind::Sp, 2, f2).dim(), 10);
  EXPECT_EQ(lie_algebra(GroupKind::OEven, 2, f2).dim(), 6);
  EXPECT_EQ(lie_algebra(GroupKind::OOdd, 1, f2).dim(), 3);
  EXPECT_EQ(lie_algebra(GroupKind::OOdd, 2, f2).dim(), 10);
  EXPECT_EQ(lie_algebra(GroupKind::Sp, 2, Field::standard(2)).dim(), 10);
}

TEST(Classical, BasisElementsLieInAlgebra)
{
  for (auto kind : {GroupKind::Sp, GroupKind::OOdd, GroupKind::OEven})
    for (int n = 1; n <= 3; ++n) {
      const LieAlgebra& g = lie_algebra(kind, n, Field::standard(2));
      const SpaceData& sp = g.space();
      for (int k = 0; k < g.dim(); ++k) {
        const Mat& x = g.basis()[static_cast<std::size_t>(k)];
        const Mat m = transpose(x) * sp.S;
        EXPECT_TRUE(is_symmetric(m + transpose(m)) && (m + transpose(m)).is_zero());
        if (is_orthogonal(kind)) {
          EXPECT_TRUE(is_alternating(m));
        }
        if (kind == GroupKind::OOdd) {
          EXPECT_EQ(trace(x), 0);
        }
        EXPECT_EQ(g.coords_of_element(x), unit_vec(g.dim(), k));
      }
    }
}

TEST(Classical, BorelDimensions)
{
  const Field& f2 = Field::standard(1);
  for (int n = 1; n <= 3; ++n) {
    EXPECT_EQ(static_cast<int>(lie_algebra(GroupKind::Sp, n, f2).borel_basis().size()), n * n + n);
    EXPECT_EQ(static_cast<int>(lie_algebra(GroupKind::OEven, n, f2).borel_basis().size()), n * n);
  }
  EXPECT_EQ(lie_algebra(GroupKind::OOdd, 2, f2).borel_basis().size(), 6u);
}

TEST(Classical, DualCoordinatesRoundTrip)
{
  std::mt19937 rng(2);
  for (auto kind : {GroupKind::Sp, GroupKind::OOdd, GroupKind::OEven}) {
    const LieAlgebra& g = lie_algebra(kind, 2, Field::standard(2));
    for (int t = 0; t < 20; ++t) {
      const Mat X = random_mat(g.field(), g.N(), g.N(), rng);
      const DualFunctional xi = DualFunctional::from_matrix(g, X);
      EXPECT_TRUE(dual_equal(g, X, xi.X()));
      const Mat x = g.element_from_coords(DualFunctional::from_matrix(g, random_mat(g.field(), g.N(), g.N(), rng)).coords());
      EXPECT_EQ(xi.evaluate(x), trace(X * x));
    }
  }
}

TEST(Classical, CoadjointAction)
{
  std::mt19937 rng(4);
  for (auto kind : {GroupKind::Sp, GroupKind::OOdd, GroupKind::OEven}) {
    const LieAlgebra& g = lie_algebra(kind, 2, Field::standard(1));
    const DualFunctional xi = DualFunctional::from_matrix(g, random_mat(g.field(), g.N(), g.N(), rng));
    EXPECT_EQ(coadjoint(Mat::identity(g.field(), g.N()), xi), xi);
    for (int t = 0; t < 10; ++t) {
      const Mat h = random_group_element(g.space(), rng);
      ASSERT_TRUE(preserves_forms(g.space(), h));
      EXPECT_EQ(coadjoint(*inverse(h), coadjoint(h, xi)), xi);
      // Equal representatives stay equal.
      const Mat X2 = xi.X() + random_radical(g, rng);
      const Mat hinv = *inverse(h);
      EXPECT_TRUE(dual_equal(g, h * xi.X() * hinv, h * X2 * hinv));
    }
    Mat bad = Mat::identity(g.field(), g.N());
    bad(0, 1) = 1;
    EXPECT_THROW(coadjoint(bad, xi), std::invalid_argument);
  }
}

TEST(Classical, SymplecticWellDefined)
{
  std::mt19937 rng(6);
  const Field& f = Field::standard(1);
  for (int n = 1; n <= 2; ++n) {
    const LieAlgebra& g = lie_algebra(GroupKind::Sp, n, f);
    const SpaceData& sp = g.space();
    for (int t = 0; t < 100; ++t) {
      const Mat X = random_mat(f, g.N(), g.N(), rng);
      const Mat X2 = X + random_radical(g, rng);
      EXPECT_EQ(t_xi_from_rep(sp, X), t_xi_from_rep(sp, X2));
      EXPECT_EQ(alpha_xi_form_from_rep(sp, X), alpha_xi_form_from_rep(sp, X2));
      const Mat T = t_xi_from_rep(sp, X);
      EXPECT_TRUE(is_alternating(sp.S * T));  // β(Tv, v) = 0
    }
  }
  const LieAlgebra& g = lie_algebra(GroupKind::Sp, 1, f);
  EXPECT_TRUE(t_xi_symplectic(DualFunctional::zero(g)).is_zero());
  EXPECT_THROW(x_xi_odd(DualFunctional::zero(g)), std::invalid_argument);
}

TEST(Classical, SymplecticWitness)
{
  std::mt19937 rng(8);
  const Field& f = Field::standard(2);
  const LieAlgebra& g = lie_algebra(GroupKind::Sp, 2, f);
  for (int t = 0; t < 50; ++t) {
    const DualFunctional xi = DualFunctional::from_matrix(g, random_mat(f, 4, 4, rng));
    const Mat X = symplectic_witness(g.space(), t_xi_symplectic(xi), alpha_xi_form(xi));
    EXPECT_EQ(DualFunctional::from_matrix(g, X), xi);
  }
}

TEST(Classical, OddWellDefined)
{
  std::mt19937 rng(10);
  const Field& f = Field::standard(1);
  for (int n = 1; n <= 2; ++n) {
    const LieAlgebra& g = lie_algebra(GroupKind::OOdd, n, f);
    const SpaceData& sp = g.space();
    for (int t = 0; t < 100; ++t) {
      const Mat X = random_mat(f, g.N(), g.N(), rng);
      const Mat X2 = X + random_radical(g, rng);
      EXPECT_EQ(x_xi_from_rep(sp, X), x_xi_from_rep(sp, X2));
      EXPECT_TRUE(is_alternating(x_xi_from_rep(sp, X)));
      const DualFunctional xi = DualFunctional::from_matrix(g, X);
      EXPECT_EQ(odd_functional_from_x_xi(g, x_xi_odd(xi)), xi);
    }
  }
}

TEST(Classical, ThetaEven)
{
  std::mt19937 rng(12);
  const Field& f = Field::standard(1);
  const LieAlgebra& g = lie_algebra(GroupKind::OEven, 2, f);
  EXPECT_TRUE(theta_even(DualFunctional::zero(g)).is_zero());
  // Exhaustive inverse over o(4, F2).
  for (unsigned bits = 0; bits < (1u << g.dim()); ++bits) {
    Vec c(static_cast<std::size_t>(g.dim()));
    for (int k = 0; k < g.dim(); ++k)
      c[static_cast<std::size_t>(k)] = (bits >> k) & 1u;
    const Mat T = g.element_from_coords(c);
    EXPECT_EQ(theta_even(theta_even_inverse(g, T)), T);
  }
  for (int t = 0; t < 100; ++t) {
    const DualFunctional xi = DualFunctional::from_matrix(g, random_mat(f, 4, 4, rng));
    const Mat h = random_group_element(g.space(), rng);
    EXPECT_EQ(theta_even(coadjoint(h, xi)), h * theta_even(xi) * *inverse(h));
  }
  Mat e11(f, 4, 4);
  e11(0, 0) = 1;
  EXPECT_THROW(theta_even_inverse(g, e11), std::invalid_argument);
}

TEST(Classical, WedgeForm)
{
  std::mt19937 rng(14);
  const Field& f = Field::standard(1);
  const LieAlgebra& g = lie_algebra(GroupKind::OEven, 2, f);
  EXPECT_EQ(rank(wedge_map_matrix(g)), 6);
  const Mat form = wedge_invariant_form(2, f);
  EXPECT_EQ(rank(form), 6);
  std::uniform_int_distribution<unsigned> bit(0, 1);
  for (int t = 0; t < 100; ++t) {
    Vec a(6), b(6);
    for (auto& v : a)
      v = static_cast<Scalar>(bit(rng));
    for (auto& v : b)
      v = static_cast<Scalar>(bit(rng));
    const Mat x = g.element_from_coords(a), y = g.element_from_coords(b);
    const Mat h = random_group_element(g.space(), rng);
    const Mat hi = *inverse(h);
    const Vec a2 = g.coords_of_element(h * x * hi), b2 = g.coords_of_element(h * y * hi);
    EXPECT_EQ(bilinear(form, a2, b2), bilinear(form, a, b));
  }
}

TEST(Classical, NPrime)
{
  const Field& f = Field::standard(1);
  const LieAlgebra& g = lie_algebra(GroupKind::Sp, 1, f);
  EXPECT_TRUE(in_n_prime(DualFunctional::zero(g)));
  Mat X = Mat::identity(f, 2);
  X(1, 1) = 0;  // X = E_11: ξ(x) = x_11 is nonzero on the diagonal torus
  EXPECT_FALSE(in_n_prime(DualFunctional::from_matrix(g, X)));
}
