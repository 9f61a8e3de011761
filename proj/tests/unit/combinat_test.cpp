#include <gtest/gtest.h>

#include "dlcf/combinat/green.hpp"

namespace dlcf {
namespace {

TEST(Partitions, CountsAndOrder) {
  EXPECT_EQ(partitions(0).size(), 1u);
  EXPECT_TRUE(partitions(0)[0].empty());
  EXPECT_EQ(partitions(4).size(), 5u);
  EXPECT_EQ(partitions(6).size(), 11u);
  EXPECT_EQ(partitions(20).size(), 627u);
  const auto p4 = partitions(4);
  EXPECT_EQ(p4[0], Partition({4}));
  EXPECT_EQ(p4[1], Partition({3, 1}));
  EXPECT_EQ(p4[2], Partition({2, 2}));
  EXPECT_EQ(p4[3], Partition({2, 1, 1}));
  EXPECT_EQ(p4[4], Partition({1, 1, 1, 1}));
  EXPECT_THROW(partitions(21), SizeError);
}

TEST(Partitions, Statistics) {
  const Partition p{3, 1, 1};
  EXPECT_EQ(p.conjugate(), Partition({3, 1, 1}));
  EXPECT_EQ(Partition({2, 2}).conjugate(), Partition({2, 2}));
  EXPECT_EQ(Partition({4}).conjugate(), Partition::column(4));
  EXPECT_EQ(p.n_stat(), 3);
  EXPECT_EQ(Partition({2, 1, 1}).z(), Integer(4));
  EXPECT_EQ(Partition::parse("(2,1,1)"), Partition({2, 1, 1}));
  EXPECT_EQ(Partition::parse("3 1"), Partition({3, 1}));
  EXPECT_EQ(Partition::parse("()"), Partition());
  EXPECT_THROW(Partition::parse("(1,2)"), UsageError);
  EXPECT_THROW(Partition::parse("(2,x)"), UsageError);
  EXPECT_THROW(Partition::parse("(2,1"), UsageError);
}

TEST(SymChar, Examples) {
  for (const auto& rho : partitions(5)) EXPECT_EQ(sym_char(Partition{5}, rho), 1);
  EXPECT_EQ(sym_char(Partition::column(4), Partition({2, 2})), 1);
  EXPECT_EQ(sym_char(Partition({2, 1}), Partition({3})), -1);
  EXPECT_EQ(sym_char(Partition({2, 1}), Partition::column(3)), 2);
  EXPECT_THROW(sym_char(Partition({2}), Partition({3})), DimensionError);
}

TEST(SymChar, ColumnOrthogonality) {
  for (int n = 1; n <= 6; ++n) {
    const auto ps = partitions(n);
    for (const auto& rho : ps)
      for (const auto& sigma : ps) {
        long long s = 0;
        for (const auto& l : ps) s += sym_char(l, rho) * sym_char(l, sigma);
        EXPECT_EQ(Integer(static_cast<long>(s)), rho == sigma ? rho.z() : Integer(0)) << rho.to_string() << sigma.to_string();
      }
  }
}

TEST(KostkaFoulkes, Examples) {
  EXPECT_EQ(kostka_foulkes(Partition{2}, Partition{2}), IntPolynomial({1}));
  EXPECT_EQ(kostka_foulkes(Partition{2}, Partition({1, 1})), IntPolynomial({0, 1}));
  EXPECT_EQ(kostka_foulkes(Partition({2, 1}), Partition::column(3)), IntPolynomial({0, 1, 1}));
  EXPECT_EQ(kostka_foulkes(Partition{3}, Partition::column(3)), IntPolynomial({0, 0, 0, 1}));
  // content that is not standard exercises subword extraction
  EXPECT_EQ(kostka_foulkes(Partition({2, 2}), Partition({2, 1, 1})), IntPolynomial({0, 1}));
  EXPECT_EQ(kostka_foulkes(Partition({3, 1}), Partition({2, 1, 1})), IntPolynomial({0, 1, 1}));
  EXPECT_EQ(kostka_foulkes(Partition{4}, Partition({2, 1, 1})), IntPolynomial({0, 0, 0, 1}));
  EXPECT_TRUE(kostka_foulkes(Partition({1, 1}), Partition{2}).is_zero());
  EXPECT_EQ(charge({2, 1, 1, 2}), 1);
}

// Oracle: count fillings of the Young diagram directly.
long long brute_tableau_count(const Partition& mu, const Partition& lambda) {
  const int n = mu.weight();
  const int k = static_cast<int>(lambda.length());
  std::vector<std::pair<int, int>> cells;
  for (std::size_t r = 0; r < mu.length(); ++r)
    for (int c = 0; c < mu[r]; ++c) cells.emplace_back(static_cast<int>(r), c);
  std::vector<int> fill(static_cast<std::size_t>(n), 1);
  long long count = 0;
  while (true) {
    std::vector<int> content(static_cast<std::size_t>(k), 0);
    for (int v : fill) ++content[static_cast<std::size_t>(v - 1)];
    bool ok = content == lambda.parts();
    for (std::size_t i = 0; ok && i < cells.size(); ++i)
      for (std::size_t j = 0; ok && j < cells.size(); ++j) {
        if (cells[j].first == cells[i].first && cells[j].second == cells[i].second + 1 && fill[j] < fill[i]) ok = false;
        if (cells[j].second == cells[i].second && cells[j].first == cells[i].first + 1 && fill[j] <= fill[i]) ok = false;
      }
    if (ok) ++count;
    std::size_t pos = 0;
    while (pos < fill.size() && fill[pos] == k) fill[pos++] = 1;
    if (pos == fill.size()) break;
    ++fill[pos];
  }
  return count;
}

TEST(KostkaFoulkes, ValueAtOneCountsTableaux) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& mu : partitions(n))
      for (const auto& lambda : partitions(n)) {
        const auto k = kostka_foulkes(mu, lambda);
        EXPECT_EQ(k.eval_at_one(), brute_tableau_count(mu, lambda)) << mu.to_string() << lambda.to_string();
        for (auto c : k.coeffs()) EXPECT_GE(c, 0);
      }
}

TEST(KostkaFoulkes, StandardContentExtremes) {
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(kostka_foulkes(Partition::column(n), Partition::column(n)), IntPolynomial({1}));
    EXPECT_EQ(kostka_foulkes(Partition{n}, Partition::column(n)),
              IntPolynomial::monomial(1, static_cast<std::size_t>(n * (n - 1) / 2)));
  }
}

TEST(GreenPolynomial, Examples) {
  EXPECT_EQ(green_polynomial(Partition{2}, Partition{2}), IntPolynomial({1}));
  EXPECT_EQ(green_polynomial(Partition({1, 1}), Partition({1, 1})), IntPolynomial({1, 1}));
  EXPECT_EQ(green_polynomial(Partition({1, 1}), Partition{2}), IntPolynomial({1, -1}));
  EXPECT_EQ(green_polynomial(Partition({2, 1}), Partition::column(3)), IntPolynomial({1, 2}));
  EXPECT_THROW(green_polynomial(Partition{2}, Partition{3}), DimensionError);
}

TEST(GreenPolynomial, RegularUnipotentIsOne) {
  for (int m = 1; m <= 4; ++m)
    for (const auto& rho : partitions(m)) EXPECT_EQ(green_polynomial(Partition{m}, rho), IntPolynomial({1}));
}

Integer unipotent_centralizer(const Partition& l, const Integer& q) {
  Integer r = 1;
  for (int i = 0; i < l.conj_square_sum(); ++i) r *= q;
  for (auto [part, mult] : l.multiplicities()) {
    Integer qi = 1;
    for (int i = 1; i <= mult; ++i) {
      qi *= q;
      r = r * (qi - 1) / qi;
    }
  }
  return r;
}

TEST(GreenPolynomial, DegreeFormula) {
  // Q^{(1^n)}_rho(q) = (-1)^{n - l(rho)} prod (q^i - 1) / prod (q^{rho_j} - 1)
  for (int n = 1; n <= 4; ++n)
    for (long qv : {2L, 3L, 4L, 5L, 7L})
      for (const auto& rho : partitions(n)) {
        const Integer q = qv;
        Integer num = 1, den = 1;
        Integer qi = 1;
        for (int i = 1; i <= n; ++i) {
          qi *= q;
          num *= qi - 1;
        }
        for (int part : rho.parts()) {
          Integer t = 1;
          for (int i = 0; i < part; ++i) t *= q;
          den *= t - 1;
        }
        Integer want = num / den;
        if ((n - static_cast<int>(rho.length())) % 2) want = -want;
        EXPECT_EQ(green_polynomial(Partition::column(n), rho).eval(q), want);
      }
}

TEST(GreenPolynomial, GreenOrthogonality) {
  // sum_lambda Q^lambda_rho Q^lambda_sigma / |Z(u_lambda)| = delta z_rho / |T_rho|
  for (int n = 1; n <= 4; ++n)
    for (long qv : {2L, 3L, 5L}) {
      const Integer q = qv;
      const auto ps = partitions(n);
      for (const auto& rho : ps)
        for (const auto& sigma : ps) {
          Rational s = 0;
          for (const auto& l : ps) {
            Rational term(green_polynomial(l, rho).eval(q) * green_polynomial(l, sigma).eval(q),
                          unipotent_centralizer(l, q));
            term.canonicalize();
            s += term;
          }
          Rational want = 0;
          if (rho == sigma) {
            Integer t = 1;
            for (int part : rho.parts()) {
              Integer x = 1;
              for (int i = 0; i < part; ++i) x *= q;
              t *= x - 1;
            }
            want = Rational(rho.z(), t);
            want.canonicalize();
          }
          EXPECT_EQ(s, want) << "q=" << qv << " " << rho.to_string() << sigma.to_string();
        }
    }
}

TEST(GreenCache, InsertVerifiesAndCounts) {
  GreenCache c;
  EXPECT_FALSE(c.insert(Partition{2}, Partition{2}, IntPolynomial({5}), true));
  EXPECT_TRUE(c.insert(Partition{2}, Partition{2}, IntPolynomial({1}), true));
  EXPECT_EQ(c.get(Partition{2}, Partition{2}), IntPolynomial({1}));
  EXPECT_EQ(c.hits(), 1u);
  c.get(Partition{3}, Partition{3});
  EXPECT_EQ(c.misses(), 1u);
  EXPECT_EQ(c.snapshot().size(), 2u);
}

TEST(IntPolynomial, Formatting) {
  EXPECT_EQ(IntPolynomial({1, -1}).to_string(), "-q + 1");
  EXPECT_EQ(IntPolynomial({0, 2, 1}).to_string(), "q^2 + 2*q");
  EXPECT_EQ(IntPolynomial().to_string(), "0");
}

}  // namespace
}  // namespace dlcf
