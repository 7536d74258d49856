#include <gtest/gtest.h>

#include "springer/partitions.hpp"

using springer::Partition;
using springer::RemovalOrder;

TEST(Partition, RejectsBadParts) {
  EXPECT_THROW(Partition({1, 2}), springer::DomainError);
  EXPECT_THROW(Partition({2, 0}), springer::DomainError);
  EXPECT_THROW(Partition::parse("3,x"), springer::DomainError);
}

TEST(Partition, ParseAndPrint) {
  EXPECT_EQ(Partition::parse("3,1"), Partition({3, 1}));
  EXPECT_EQ(Partition::parse("3 1 1"), Partition({3, 1, 1}));
  EXPECT_EQ(Partition::parse("-"), Partition());
  EXPECT_EQ(Partition({3, 1}).to_string(), "3,1");
  EXPECT_EQ(Partition().to_string(), "-");
  EXPECT_EQ(Partition({2, 2, 1}).size(), 5);
}

TEST(Conjugate, Examples) {
  EXPECT_EQ(conjugate(Partition{2}), Partition({1, 1}));
  EXPECT_EQ(conjugate(Partition()), Partition());
  EXPECT_EQ(conjugate(Partition({3, 1})), Partition({2, 1, 1}));
}

TEST(Conjugate, InvolutionUpTo12) {
  for (int n = 0; n <= 12; ++n)
    for (const auto& p : springer::partitions_of(n)) EXPECT_EQ(conjugate(conjugate(p)), p);
}

TEST(Dominance, Examples) {
  EXPECT_TRUE(dominates(Partition({3, 1}), Partition({2, 2})));
  EXPECT_FALSE(dominates(Partition({2, 2}), Partition({3, 1})));
  // partial sums 3,4,5,6 against 2,4,6: 5 < 6 at k = 3, so incomparable
  EXPECT_FALSE(dominates(Partition({3, 1, 1, 1}), Partition({2, 2, 2})));
  EXPECT_FALSE(dominates(Partition({2, 2, 2}), Partition({3, 1, 1, 1})));
  EXPECT_TRUE(dominates(Partition({3, 2, 1}), Partition({2, 2, 2})));
  EXPECT_THROW(dominates(Partition({2}), Partition({2, 1})), springer::DomainError);
}

TEST(Dominance, PartialOrderAndConjugationUpTo8) {
  for (int n = 0; n <= 8; ++n) {
    const auto ps = springer::partitions_of(n);
    for (const auto& p : ps) {
      EXPECT_TRUE(dominates(p, p));
      for (const auto& q : ps) {
        if (dominates(p, q) && dominates(q, p)) {
          EXPECT_EQ(p, q);
        }
        EXPECT_EQ(dominates(p, q), dominates(conjugate(q), conjugate(p)));
        for (const auto& r : ps)
          if (dominates(p, q) && dominates(q, r)) {
            EXPECT_TRUE(dominates(p, r));
          }
      }
    }
  }
}

TEST(Regularity, Examples) {
  EXPECT_FALSE(is_l_regular(Partition({2, 2, 2}), 3));
  EXPECT_TRUE(is_l_regular(Partition({3, 2, 1}), 2));
  EXPECT_FALSE(is_l_regular(Partition({1, 1}), 2));
  EXPECT_THROW(is_l_regular(Partition({1}), 1), springer::DomainError);
}

TEST(Enumeration, Examples) {
  EXPECT_EQ(springer::partitions_of(0), std::vector<Partition>{Partition()});
  EXPECT_EQ(springer::partitions_of(3),
            (std::vector<Partition>{Partition{3}, Partition({2, 1}), Partition({1, 1, 1})}));
  EXPECT_EQ(springer::partitions_of(5).size(), 7u);
  const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
  for (int n = 0; n <= 12; ++n) EXPECT_EQ(springer::partitions_of(n).size(), counts[n]);
}

TEST(Enumeration, ReverseLexicographic) {
  for (int n = 1; n <= 9; ++n) {
    const auto ps = springer::partitions_of(n);
    for (std::size_t i = 0; i + 1 < ps.size(); ++i) EXPECT_TRUE(springer::precedes(ps[i], ps[i + 1]));
    EXPECT_EQ(ps.front(), Partition{n});
    EXPECT_EQ(ps.back(), conjugate(Partition{n}));
  }
}

TEST(HookLength, SmallShapes) {
  EXPECT_EQ(springer::standard_tableaux_count(Partition({2, 1})), 2);
  EXPECT_EQ(springer::standard_tableaux_count(Partition({3, 2})), 5);
  EXPECT_EQ(springer::standard_tableaux_count(Partition({4, 2, 1, 1})), 90);
  // sum of squares is n!
  long long total = 0;
  for (const auto& p : springer::partitions_of(7)) {
    const long long f = springer::standard_tableaux_count(p);
    total += f * f;
  }
  EXPECT_EQ(total, 5040);
}

TEST(RowColumnRemoval, Examples) {
  auto r = remove_common_rows_cols(Partition({3, 1}), Partition({2, 2}));
  EXPECT_EQ(r.rows, 0);
  EXPECT_EQ(r.columns, 1);
  EXPECT_EQ(r.lam_hat, Partition{2});
  EXPECT_EQ(r.mu_hat, Partition({1, 1}));

  r = remove_common_rows_cols(Partition({2, 2}), Partition({2, 2}));
  EXPECT_EQ(r.rows, 2);
  EXPECT_EQ(r.lam_hat, Partition());
  EXPECT_EQ(r.mu_hat, Partition());

  // the first two columns agree (lengths 2, 2), so both go
  r = remove_common_rows_cols(Partition({4, 2}), Partition({3, 3}));
  EXPECT_EQ(r.rows, 0);
  EXPECT_EQ(r.columns, 2);
  EXPECT_EQ(r.lam_hat, Partition{2});
  EXPECT_EQ(r.mu_hat, Partition({1, 1}));

  EXPECT_THROW(remove_common_rows_cols(Partition({2, 2}), Partition({3, 1})),
               springer::DomainError);
}

TEST(RowColumnRemoval, InvariantsAndOrderIndependenceUpTo8) {
  for (int n = 0; n <= 8; ++n) {
    const auto ps = springer::partitions_of(n);
    for (const auto& lam : ps)
      for (const auto& mu : ps) {
        if (!dominates(lam, mu)) continue;
        const auto a = remove_common_rows_cols(lam, mu);
        const auto b = remove_common_rows_cols(lam, mu, RemovalOrder::columns_first);
        EXPECT_EQ(a.lam_hat.size(), a.mu_hat.size());
        EXPECT_TRUE(dominates(a.lam_hat, a.mu_hat));
        EXPECT_EQ(a.lam_hat, b.lam_hat) << lam << " / " << mu;
        EXPECT_EQ(a.mu_hat, b.mu_hat) << lam << " / " << mu;
      }
  }
}
