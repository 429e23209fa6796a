#include <gtest/gtest.h>

#include <sstream>

#include "specht/hom_engine.hpp"
#include "specht/oracle.hpp"
#include "support.hpp"

using namespace specht;
using namespace specht::oracle;
using specht::testing::uniform;

namespace {

// row i of m is the image of basis vector i; check image(s x) = s image(x)
bool tabloid_map_intertwines(const TabloidSpace& src, const TabloidSpace& dst, const GF2Matrix& m) {
    for (std::size_t k = 0; k < src.gens.size(); ++k)
        for (std::size_t i = 0; i < src.size(); ++i) {
            std::size_t si = src.gens[k][i];
            for (std::size_t c = 0; c < dst.size(); ++c)
                if (m.get(si, dst.gens[k][c]) != m.get(i, c))
                    return false;
        }
    return true;
}

bool coxeter_relations_hold(const ModuleRep& rep) {
    auto id = GF2Matrix::identity(rep.dim);
    std::vector<GF2Matrix> g;
    for (const auto& s : rep.gens)
        g.push_back(s.dense());
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (!(multiply(g[i], g[i]) == id))
            return false;
        if (i + 1 < g.size()) {
            auto a = multiply(multiply(g[i], g[i + 1]), g[i]);
            auto b = multiply(multiply(g[i + 1], g[i]), g[i + 1]);
            if (!(a == b))
                return false;
        }
        for (std::size_t j = i + 2; j < g.size(); ++j)
            if (!(multiply(g[i], g[j]) == multiply(g[j], g[i])))
                return false;
    }
    return true;
}

Tableau random_row_standard(const Partition& mu, const Composition& lam) {
    std::vector<int> vals;
    for (int v = 1; v <= lam.length(); ++v)
        vals.insert(vals.end(), static_cast<std::size_t>(lam[v - 1]), v);
    std::shuffle(vals.begin(), vals.end(), specht::testing::rng());
    std::vector<std::vector<int>> rows;
    std::size_t pos = 0;
    for (int j = 0; j < mu.length(); ++j) {
        rows.emplace_back(vals.begin() + static_cast<std::ptrdiff_t>(pos),
                          vals.begin() + static_cast<std::ptrdiff_t>(pos) + mu[j]);
        pos += static_cast<std::size_t>(mu[j]);
    }
    return Tableau(rows);
}

}  // namespace

TEST(Oracle, PermModuleSizes) {
    EXPECT_EQ(perm_module(Composition{4, 3, 1, 1}).size(), 2520U);
    auto triv = perm_module(Composition{5});
    EXPECT_EQ(triv.size(), 1U);
    for (const auto& g : triv.gens)
        EXPECT_EQ(g[0], 0U);
    // (1^n): tabloids are orderings and s_k swaps the rows of k and k+1
    auto reg = perm_module(Composition{1, 1, 1, 1});
    EXPECT_EQ(reg.size(), 24U);
    for (std::size_t k = 0; k < reg.gens.size(); ++k)
        for (std::size_t i = 0; i < reg.size(); ++i) {
            auto x = reg.basis[i], y = reg.basis[reg.gens[k][i]];
            int s = static_cast<int>(k) + 1;
            EXPECT_EQ(row_in(x, s), row_in(y, s + 1));
            EXPECT_EQ(row_in(x, s + 1), row_in(y, s));
        }
    for (int n = 1; n <= 8; ++n)
        for (const auto& p : partitions_of(n))
            EXPECT_EQ(perm_module(Composition(p)).size(), multinomial_size(Composition(p), 1U << 30));
}

TEST(Oracle, Guards) {
    EXPECT_THROW(SpechtModel(Partition{14, 1}), GuardError);
    EXPECT_THROW(perm_module(Composition{5, 5, 5}), GuardError);
    EXPECT_THROW(perm_module(Composition{1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}, 1000), GuardError);
    EXPECT_THROW(kit_check(Partition{7, 6}, 100), GuardError);
}

TEST(Oracle, SpechtDimensionsMatchHookFormula) {
    EXPECT_EQ(specht_subspace(Partition{6, 3}).dim, 48U);
    EXPECT_EQ(specht_subspace(Partition{4, 3, 1, 1}).dim, 216U);
    EXPECT_EQ(specht_subspace(Partition{7}).dim, 1U);
    // polytabloid span rank, up to size 7
    for (int n = 1; n <= 7; ++n)
        for (const auto& p : partitions_of(n))
            ASSERT_EQ(specht_subspace(p).dim, hook_length_dim(p)) << to_string(p);
    // standard polytabloid model beyond that
    for (int n = 8; n <= 11; ++n)
        for (const auto& p : partitions_of(n))
            if (hook_length_dim(p) <= 1500) {
                ASSERT_EQ(SpechtModel(p).dim(), hook_length_dim(p)) << to_string(p);
            }
}

TEST(Oracle, SpechtSubspaceIsGeneratorStable) {
    for (int n = 2; n <= 7; ++n)
        for (const auto& p : partitions_of(n)) {
            auto s = specht_subspace(p);
            for (const auto& g : s.ambient.gens) {
                GF2Matrix moved(s.basis_matrix.rows(), s.ambient.size());
                for (std::size_t r = 0; r < s.basis_matrix.rows(); ++r)
                    for (std::size_t c = 0; c < s.ambient.size(); ++c)
                        if (s.basis_matrix.get(r, c))
                            moved.flip(r, g[c]);
                ASSERT_EQ(vstack(s.basis_matrix, moved).rank(), s.dim);
            }
        }
}

TEST(Oracle, ModelSatisfiesCoxeterRelations) {
    for (int n = 2; n <= 8; ++n)
        for (const auto& p : partitions_of(n))
            if (hook_length_dim(p) <= 200) {
                ASSERT_TRUE(coxeter_relations_hold(SpechtModel(p).rep())) << to_string(p);
            }
    ASSERT_TRUE(coxeter_relations_hold(SpechtModel(Partition{6, 3}).rep()));
}

TEST(Oracle, ModelCoordinatesRoundTrip) {
    for (const auto& p : {Partition{3, 2, 1}, Partition{4, 3, 1, 1}, Partition{5, 2}}) {
        SpechtModel m(p);
        for (std::size_t i = 0; i < m.dim(); ++i) {
            auto e = polytabloid(m.tableau(i));
            auto coords = m.coordinates(e);
            for (std::size_t j = 0; j < m.dim(); ++j)
                ASSERT_EQ(static_cast<bool>((coords[j / 64] >> (j % 64)) & 1U), i == j);
            ASSERT_EQ(m.tabloid_vector(coords), e);
            ASSERT_TRUE(m.contains(e));
        }
    }
}

TEST(Oracle, ThetaMatricesIntertwine) {
    for (int n = 1; n <= 6; ++n)
        for (const auto& mu : partitions_of(n))
            for (const auto& lam : partitions_of(n)) {
                auto set = enumerate_row_standard(mu, Composition(lam));
                if (set.size() > 40)
                    continue;
                auto src = perm_module(Composition(mu)), dst = perm_module(Composition(lam));
                for (const auto& T : set.members)
                    ASSERT_TRUE(tabloid_map_intertwines(src, dst, theta_matrix(T, src, dst))) << to_string(T);
            }
    // randomized spot checks at larger sizes
    for (int trial = 0; trial < 12; ++trial) {
        int n = uniform(8, 10);
        Partition mu, lam;
        do {
            mu = specht::testing::random_partition(n);
            lam = specht::testing::random_partition(n);
        } while (multinomial_size(Composition(mu), 1U << 30) > 5000 || multinomial_size(Composition(lam), 1U << 30) > 5000);
        auto src = perm_module(Composition(mu)), dst = perm_module(Composition(lam));
        auto T = random_row_standard(mu, Composition(lam));
        ASSERT_TRUE(tabloid_map_intertwines(src, dst, theta_matrix(T, src, dst))) << to_string(T);
    }
}

TEST(Oracle, PsiMatricesIntertwine) {
    for (int n = 2; n <= 7; ++n)
        for (const auto& lam : partitions_of(n))
            for (int d = 1; d < lam.length(); ++d)
                for (int t = 1; t <= lam[d]; ++t) {
                    auto src = perm_module(Composition(lam));
                    auto dst = perm_module(psi_target(d, t, Composition(lam)));
                    ASSERT_TRUE(tabloid_map_intertwines(src, dst, psi_matrix(d, t, src, dst)));
                }
    auto src = perm_module(Composition{2, 1});
    EXPECT_THROW(psi_matrix(1, 1, src, perm_module(Composition{2, 1})), std::invalid_argument);
    EXPECT_THROW(psi_target(1, 2, Composition{2, 1}), std::invalid_argument);
}

TEST(Oracle, IdentityPatternThetaIsIdentity) {
    for (const auto& p : {Partition{3, 2, 1}, Partition{4, 2}, Partition{2, 2, 1, 1}}) {
        std::vector<std::vector<int>> rows;
        for (int j = 0; j < p.length(); ++j)
            rows.emplace_back(static_cast<std::size_t>(p[j]), j + 1);
        auto m = perm_module(Composition(p));
        EXPECT_EQ(theta_matrix(Tableau(rows), m, m), GF2Matrix::identity(m.size()));
    }
}

TEST(Oracle, ComposeRuleAtMatrixLevel) {
    // Θ_T Θ_S as a product of tabloid matrices equals the expansion of compose
    for (int trial = 0; trial < 60; ++trial) {
        int n = uniform(2, 6);
        auto lam = specht::testing::random_partition(n), mu = specht::testing::random_partition(n),
             nu = specht::testing::random_partition(n);
        auto S = random_row_standard(lam, Composition(mu));
        auto T = random_row_standard(mu, Composition(nu));
        auto a = perm_module(Composition(lam)), b = perm_module(Composition(mu)), c = perm_module(Composition(nu));
        auto prod = multiply(theta_matrix(S, a, b), theta_matrix(T, b, c));
        GF2Matrix expansion(a.size(), c.size());
        auto comp = compose(GF2Combo::single(T, Composition(nu)), GF2Combo::single(S, Composition(mu)));
        for (const auto& U : comp.support())
            expansion = add(expansion, theta_matrix(U, a, c));
        ASSERT_EQ(prod, expansion) << to_string(S) << " then " << to_string(T);
    }
}

TEST(Oracle, KernelIntersectionTheorem) {
    for (int n = 1; n <= 7; ++n)
        for (const auto& p : partitions_of(n)) {
            auto r = kit_check(p);
            ASSERT_TRUE(r.equal) << to_string(p);
            ASSERT_EQ(r.specht_dim, hook_length_dim(p));
        }
    // one-row shapes have no ψ maps and S^(n) = M^(n)
    auto r = kit_check(Partition{5});
    EXPECT_EQ(r.ambient, 1U);
    EXPECT_EQ(r.kernel_dim, 1U);
}

TEST(Oracle, HomExamples) {
    EXPECT_EQ(hom_dim_bruteforce(Partition{6, 3}, Partition{4, 3, 1, 1}).dim, 1U);
    EXPECT_EQ(hom_dim_bruteforce(Partition{6, 3}, Partition{4, 2, 2, 1}).dim, 1U);
    auto dual = hom_dim_dual(Partition{4, 3, 1, 1}, conjugate(Partition{6, 3}));
    EXPECT_EQ(dual.dim, 1U);
    EXPECT_EQ(dual.dim, hom_dim_bruteforce(Partition{4, 3, 1, 1}, conjugate(Partition{6, 3})).dim);
    for (int n = 2; n <= 9; ++n)
        for (const auto& p : partitions_of(n))
            if (is_irreducible_specht(p) && hook_length_dim(p) <= 2000) {
                ASSERT_EQ(hom_dim_bruteforce(p, p).dim, 1U) << to_string(p);
            }
}

TEST(Oracle, HomGeneratorImagesGiveIntertwiners) {
    for (int n = 2; n <= 6; ++n)
        for (const auto& mu : partitions_of(n)) {
            SpechtModel src(mu);
            for (const auto& lam : partitions_of(n)) {
                SpechtModel dst(lam);
                auto imgs = hom_generator_images(mu, dst.rep());
                for (std::size_t r = 0; r < imgs.rows(); ++r) {
                    auto m = map_matrix(src, dst.rep(), row_vector(imgs, r));
                    ASSERT_TRUE(intertwines(src.rep(), dst.rep(), m)) << to_string(mu) << " -> " << to_string(lam);
                }
            }
        }
}

TEST(Oracle, PresentationAgreesWithSpinning) {
    for (int n = 2; n <= 6; ++n)
        for (const auto& mu : partitions_of(n)) {
            SpechtModel src(mu);
            std::vector<word_t> gen(words_for(src.dim()), 0);
            auto g = src.column_reading_index();
            gen[g / 64] |= word_t{1} << (g % 64);
            for (const auto& lam : partitions_of(n)) {
                SpechtModel dst(lam);
                ASSERT_EQ(hom_dim_by_spin(src.rep(), gen, dst.rep()), hom_dim_bruteforce(mu, dst).dim)
                    << to_string(mu) << " -> " << to_string(lam);
            }
        }
}

TEST(Oracle, HomDuality) {
    // dim Hom(S^mu, S^lambda) = dim Hom(S^lambda', S^mu')
    for (int n = 2; n <= 8; ++n)
        for (const auto& mu : partitions_of(n))
            for (const auto& lam : partitions_of(n))
                ASSERT_EQ(hom_dim_bruteforce(mu, lam).dim, hom_dim_bruteforce(conjugate(lam), conjugate(mu)).dim)
                    << to_string(mu) << " -> " << to_string(lam);
    // spot checks at sizes 9 to 11
    std::vector<std::pair<Partition, Partition>> spots{{{6, 3}, {4, 3, 1, 1}},
                                                       {{4, 3, 1, 1}, {2, 2, 2, 1, 1, 1}},
                                                       {{8, 3}, {6, 3, 1, 1}},
                                                       {{6, 3, 2}, {4, 3, 1, 1, 1, 1}}};
    for (const auto& [mu, lam] : spots)
        EXPECT_EQ(hom_dim_bruteforce(mu, lam).dim, hom_dim_bruteforce(conjugate(lam), conjugate(mu)).dim);
}

TEST(Oracle, FlagshipDecomposition) {
    auto c = verify_summand(Partition{4, 3, 1, 1}, Partition{6, 3});
    EXPECT_TRUE(c.is_summand);
    EXPECT_EQ(c.product, GF2Matrix::identity(48));
    EXPECT_EQ(c.hom_up, 1U);
    EXPECT_EQ(c.hom_down, 1U);
    EXPECT_FALSE(verify_summand(Partition{4, 3, 1, 1}, Partition{9}).is_summand);
    EXPECT_TRUE(verify_summand(Partition{6, 3}, Partition{6, 3}).is_summand);
    EXPECT_THROW(verify_summand(Partition{4, 3, 1, 1}, Partition{4, 3, 2}), std::invalid_argument);
}

TEST(Oracle, EndomorphismDimensions) {
    EXPECT_EQ(endo_dim(Partition{6}), 1U);
    EXPECT_EQ(endo_dim(Partition{4, 3, 1, 1}), 2U);
    EXPECT_EQ(endo_dim(Partition{6, 3}), 1U);
    EXPECT_EQ(endo_dim(Partition{2, 2}), 1U);
}

TEST(Oracle, SparseDumpOfThetaMatrix) {
    auto a = perm_module(Composition{3, 2}), b = perm_module(Composition{2, 2, 1});
    auto m = theta_matrix(parse_tableau("112|23"), a, b);
    std::stringstream ss;
    write_sparse(ss, m);
    EXPECT_EQ(read_sparse(ss), m);
}
