#include <gtest/gtest.h>

#include <map>
#include <set>

#include "specht/oracle.hpp"
#include "specht/partition.hpp"
#include "support.hpp"

using namespace specht;
using specht::testing::all_partitions_upto;
using specht::testing::rng;

namespace {

// remove rim 2-hooks in a random order until none is left
Partition strip_dominoes(Partition p) {
    while (true) {
        std::vector<std::vector<int>> moves;
        auto parts = p.parts();
        int len = p.length();
        for (int i = 0; i < len; ++i) {
            // horizontal domino at the end of row i
            if (p[i] - 2 >= p[i + 1]) {
                auto q = parts;
                q[static_cast<std::size_t>(i)] -= 2;
                moves.push_back(q);
            }
            // vertical domino in rows i, i+1
            if (i + 1 < len && p[i] == p[i + 1] && p[i + 1] - 1 >= p[i + 2]) {
                auto q = parts;
                q[static_cast<std::size_t>(i)] -= 1;
                q[static_cast<std::size_t>(i) + 1] -= 1;
                moves.push_back(q);
            }
        }
        if (moves.empty())
            return p;
        std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
        p = Partition(moves[pick(rng())]);
    }
}

// move every node as high as possible in its ladder {(i,j): i+j const}
Partition ladder_regularise(const Partition& p) {
    std::map<int, int> count;  // ladder index -> number of nodes
    for (int i = 0; i < p.length(); ++i)
        for (int j = 0; j < p[i]; ++j)
            ++count[i + j];
    std::vector<int> rows;
    for (auto [l, c] : count) {
        for (int r = 0; r < c; ++r) {
            if (rows.size() <= static_cast<std::size_t>(r))
                rows.resize(static_cast<std::size_t>(r) + 1, 0);
            ++rows[static_cast<std::size_t>(r)];
        }
    }
    return Partition(rows);
}

std::vector<std::vector<std::uint64_t>> pascal(int n) {
    std::vector<std::vector<std::uint64_t>> c(static_cast<std::size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) {
        c[static_cast<std::size_t>(m)].assign(static_cast<std::size_t>(m) + 1, 1);
        for (int k = 1; k < m; ++k)
            c[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)] =
                c[static_cast<std::size_t>(m) - 1][static_cast<std::size_t>(k) - 1] +
                c[static_cast<std::size_t>(m) - 1][static_cast<std::size_t>(k)];
    }
    return c;
}

// every nonzero vector of the module spins to the whole space
bool irreducible_by_spin(const oracle::ModuleRep& rep) {
    std::size_t dim = rep.dim;
    if (dim == 0)
        return false;
    std::uint64_t total = std::uint64_t{1} << dim;
    // a proper submodule contains some nonzero vector whose spin is proper
    for (std::uint64_t x = 1; x < total; ++x) {
        Echelon e(dim);
        std::vector<std::vector<word_t>> queue{{x}};
        auto first = queue[0];
        e.insert(first);
        for (std::size_t q = 0; q < queue.size() && e.rank() < dim; ++q)
            for (const auto& g : rep.gens) {
                auto y = g.apply(queue[q]);
                auto z = y;
                if (e.insert(z))
                    queue.push_back(y);
            }
        if (e.rank() < dim)
            return false;
    }
    return true;
}

}  // namespace

TEST(Partition, ConjugateExamples) {
    EXPECT_EQ(conjugate(Partition{4, 3, 1, 1}), (Partition{4, 2, 2, 1}));
    EXPECT_EQ(conjugate(Partition{5}), (Partition{1, 1, 1, 1, 1}));
    EXPECT_EQ(conjugate(Partition{8, 7, 2}), (Partition{3, 3, 2, 2, 2, 2, 2, 1}));
    EXPECT_EQ(conjugate(Partition{}), Partition{});
}

TEST(Partition, ConjugateInvolutive) {
    for (int n = 1; n <= 30; ++n)
        for (int k = 0; k < 40; ++k) {
            auto p = specht::testing::random_partition(n);
            ASSERT_EQ(conjugate(conjugate(p)), p) << to_string(p);
            ASSERT_EQ(conjugate(p).size(), n);
        }
}

TEST(Partition, ConstructorRejectsBadParts) {
    EXPECT_THROW(Partition({2, 3}), std::invalid_argument);
    EXPECT_THROW(Partition({3, -1}), std::invalid_argument);
    EXPECT_EQ(Partition({3, 1, 0, 0}), (Partition{3, 1}));
}

TEST(Partition, DominanceExamples) {
    EXPECT_TRUE(dominates(Partition{6, 3}, Partition{4, 3, 1, 1}));
    EXPECT_FALSE(dominates(Partition{3, 3}, Partition{4, 1, 1}));
    for (auto& p : partitions_of(7))
        EXPECT_TRUE(dominates(p, p));
}

TEST(Partition, DominanceReversedByConjugation) {
    auto ps = partitions_of(9);
    for (auto& p : ps)
        for (auto& q : ps)
            ASSERT_EQ(dominates(p, q), dominates(conjugate(q), conjugate(p)));
}

TEST(Partition, RegulariseExamples) {
    EXPECT_EQ(regularise(Partition{8, 3, 1, 1, 1, 1, 1, 1}), (Partition{8, 7, 2}));
    EXPECT_EQ(regularise(Partition{4, 3, 1, 1}), (Partition{4, 3, 2}));
    for (auto& p : all_partitions_upto(10)) {
        if (is_two_regular(p)) {
            ASSERT_EQ(regularise(p), p);
        }
    }
}

TEST(Partition, RegulariseMatchesLadderOracle) {
    for (auto& p : all_partitions_upto(16))
        ASSERT_EQ(regularise(p), ladder_regularise(p)) << to_string(p);
    for (int n = 17; n <= 30; ++n)
        for (int k = 0; k < 30; ++k) {
            auto p = specht::testing::random_partition(n);
            auto r = regularise(p);
            ASSERT_EQ(r, ladder_regularise(p)) << to_string(p);
            ASSERT_TRUE(is_two_regular(r));
            ASSERT_EQ(r.size(), n);
            ASSERT_TRUE(dominates(r, p));
        }
}

TEST(Partition, RegulariseClosedForm) {
    EXPECT_EQ(regularise_closed_form(4, 2), (Partition{4, 3, 2}));
    EXPECT_EQ(regularise_closed_form(4, 6), (Partition{8, 3, 2}));
    for (int a = 4; a <= 40; a += 2)
        for (int b = 2; b <= 40; b += 2)
            ASSERT_EQ(regularise_closed_form(a, b), regularise(hook_partition(a, b))) << a << "," << b;
    EXPECT_THROW(regularise_closed_form(5, 2), std::invalid_argument);
    EXPECT_THROW(regularise_closed_form(4, 0), std::invalid_argument);
}

TEST(Partition, TwoCoreExamples) {
    EXPECT_EQ(two_core(Partition{2, 2}), Partition{});
    EXPECT_EQ(two_core(Partition{1}), (Partition{1}));
    EXPECT_EQ(two_core(Partition{4, 3, 1, 1}), two_core(Partition{6, 3}));
}

TEST(Partition, TwoCoreMatchesRimStripping) {
    for (auto& p : all_partitions_upto(12))
        ASSERT_EQ(two_core(p), strip_dominoes(p)) << to_string(p);
    for (int n = 13; n <= 20; ++n)
        for (int k = 0; k < 40; ++k) {
            auto p = specht::testing::random_partition(n);
            auto core = two_core(p);
            for (int trial = 0; trial < 3; ++trial)
                ASSERT_EQ(core, strip_dominoes(p)) << to_string(p);
        }
}

TEST(Partition, SameBlock) {
    EXPECT_TRUE(same_block(Partition{4, 3, 1, 1}, Partition{6, 3}));
    EXPECT_TRUE(same_block(Partition{4, 3, 1, 1}, Partition{4, 3, 2}));
    EXPECT_TRUE(same_block(Partition{2}, Partition{1, 1}));
    EXPECT_FALSE(same_block(Partition{3}, Partition{2, 1}));
    EXPECT_THROW(same_block(Partition{3}, Partition{2}), std::invalid_argument);
}

TEST(Partition, LValue) {
    EXPECT_EQ(l_value(0), 1);
    EXPECT_EQ(l_value(1), 1);
    EXPECT_EQ(l_value(3), 2);
    EXPECT_EQ(l_value(4), 3);
    EXPECT_THROW(l_value(-1), std::invalid_argument);
    for (long long k = 0; k < 5000; ++k) {
        int l = l_value(k);
        ASSERT_GT(1LL << l, k);
        ASSERT_TRUE(l == 1 || (1LL << (l - 1)) <= k);
    }
}

TEST(Partition, IrreducibleExamples) {
    EXPECT_TRUE(is_irreducible_specht(Partition{6, 3}));
    EXPECT_TRUE(is_irreducible_specht(Partition{2, 2}));
    EXPECT_FALSE(is_irreducible_specht(Partition{4, 3, 2}));
    EXPECT_FALSE(is_irreducible_specht(Partition{4, 3, 1, 1}));
    // (u,v,2) is irreducible iff v = 1 mod 4 and u-v = -1 mod 2^l(v-2)
    for (int v = 3; v <= 21; v += 2)
        for (int u = v + 1; u <= 40; ++u) {
            bool want = v % 4 == 1 && (u - v + 1) % (1 << l_value(v - 2)) == 0;
            ASSERT_EQ(is_irreducible_specht(Partition{u, v, 2}), want) << u << "," << v;
        }
}

TEST(Partition, IrreducibleSymmetricUnderConjugation) {
    for (auto& p : all_partitions_upto(18))
        ASSERT_EQ(is_irreducible_specht(p), is_irreducible_specht(conjugate(p))) << to_string(p);
}

TEST(Partition, IrreducibleMatchesExhaustiveSpin) {
    for (auto& p : all_partitions_upto(6)) {
        oracle::SpechtModel m(p);
        EXPECT_EQ(is_irreducible_specht(p), irreducible_by_spin(m.rep())) << to_string(p);
    }
}

TEST(Partition, BinomOddMatchesPascal) {
    EXPECT_TRUE(binom_odd(3, 1));
    EXPECT_FALSE(binom_odd(4, 2));
    EXPECT_TRUE(binom_odd(7, 3));
    EXPECT_FALSE(binom_odd(-1, -1));
    EXPECT_FALSE(binom_odd(3, 5));
    auto c = pascal(64);
    for (int m = 0; m <= 64; ++m)
        for (int k = 0; k <= m; ++k)
            ASSERT_EQ(binom_odd(m, k), c[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)] % 2 == 1)
                << m << "," << k;
}

TEST(Partition, TwoQuotientSeparatedExamples) {
    EXPECT_TRUE(is_two_quotient_separated(Partition{4, 3, 1, 1}));
    EXPECT_FALSE(is_two_quotient_separated(Partition{5, 3, 1, 1}));
    EXPECT_TRUE(is_two_quotient_separated(Partition{}));
    for (int a = 4; a <= 20; ++a)
        for (int b = 1; b <= 12; ++b)
            EXPECT_EQ(is_two_quotient_separated(hook_partition(a, b)), a % 2 == 0 && b % 2 == 0) << a << "," << b;
}

TEST(Partition, TwoQuotientSeparatedMatchesGeneratedFamily) {
    // build every member of the parametrised family up to size 14 and compare
    const int max_n = 14;
    std::set<Partition> family;
    for (int c = 0; c <= max_n; ++c)
        for (int d = 0; d <= c + 1; ++d) {
            // x_c >= ... >= x_d >= 0 on rows k = c..d, then y_d..y_1
            std::vector<int> rows;
            auto tail = [&](auto&& self, int k, std::vector<int>& head) -> void {
                if (k == 0) {
                    int sz = 0;
                    for (int r : head)
                        sz += r;
                    if (sz <= max_n)
                        family.insert(Partition(head));
                    return;
                }
                int base = k == d ? 0 : 1;
                for (int y = 0;; ++y) {
                    int cnt = 2 * y + base;
                    int sz = 0;
                    for (int r : head)
                        sz += r;
                    if (sz + cnt * k > max_n)
                        break;
                    head.insert(head.end(), static_cast<std::size_t>(cnt), k);
                    self(self, k - 1, head);
                    head.resize(head.size() - static_cast<std::size_t>(cnt));
                }
            };
            auto heads = [&](auto&& self, int k, int prev_x) -> void {
                if (k < d) {
                    tail(tail, d, rows);
                    return;
                }
                int sz = 0;
                for (int r : rows)
                    sz += r;
                for (int x = 0; x <= prev_x && sz + k + 2 * x <= max_n; ++x) {
                    rows.push_back(k + 2 * x);
                    self(self, k - 1, x);
                    rows.pop_back();
                }
            };
            heads(heads, c, max_n);
        }
    for (auto& p : all_partitions_upto(max_n, 0))
        ASSERT_EQ(is_two_quotient_separated(p), family.count(p) == 1) << to_string(p);
}

TEST(Partition, TextRoundTrip) {
    EXPECT_EQ(to_string(Partition{4, 3, 1, 1}), "4,3,1^2");
    EXPECT_EQ(parse_partition("4,3,1^2"), (Partition{4, 3, 1, 1}));
    EXPECT_EQ(parse_partition("(6,3)"), (Partition{6, 3}));
    EXPECT_EQ(parse_partition(""), Partition{});
    EXPECT_EQ(paren(Partition{6, 3}), "(6,3)");
    EXPECT_THROW(parse_partition("3,x"), std::invalid_argument);
    EXPECT_THROW(parse_partition("1,3"), std::invalid_argument);
    EXPECT_THROW(parse_partition("3,0"), std::invalid_argument);
    for (auto& p : all_partitions_upto(14, 0))
        ASSERT_EQ(parse_partition(to_string(p)), p);
}

TEST(Partition, HookLengthDimension) {
    EXPECT_EQ(hook_length_dim(Partition{3, 2, 1}), 16U);
    EXPECT_EQ(hook_length_dim(Partition{6, 3}), 48U);
    EXPECT_EQ(hook_length_dim(Partition{4, 3, 1, 1}), 216U);
    // sum of squares of dims is n!
    for (int n = 1; n <= 12; ++n) {
        std::uint64_t sum = 0, fact = 1;
        for (int k = 2; k <= n; ++k)
            fact *= static_cast<std::uint64_t>(k);
        for (auto& p : partitions_of(n))
            sum += hook_length_dim(p) * hook_length_dim(p);
        ASSERT_EQ(sum, fact);
    }
}
