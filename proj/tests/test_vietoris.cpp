#include <gtest/gtest.h>

#include "qcat/poset.hpp"
#include "qcat/vietoris.hpp"

using namespace qcat;

namespace {

// a < c, b < c
FinPoset vee() { return FinPoset::from_matrix({{true, false, true}, {false, true, true}, {false, false, true}}); }

Subset set_of(std::size_t n, std::initializer_list<std::size_t> xs) { return Subset::of(n, xs); }

} // namespace

TEST(Poset, LabeledCounts) {
    const std::vector<std::size_t> expected{1, 1, 3, 19, 219, 4231};
    for (std::size_t n = 0; n < expected.size(); ++n) EXPECT_EQ(enumerate_posets(n).size(), expected[n]) << n;
}

TEST(Poset, RejectsNonPosets) {
    try {
        FinPoset::from_matrix({{true, true}, {true, true}});
        FAIL();
    } catch (const InputError& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotAPoset);
    }
    EXPECT_THROW(FinPoset::from_matrix({{false}}), InputError);
    EXPECT_THROW(FinPoset::from_matrix({{true, true}}), InputError);
}

TEST(Poset, Closures) {
    const FinPoset c = FinPoset::chain(2);
    EXPECT_EQ(up_closure(c, set_of(2, {0})), Subset::full(2));
    EXPECT_EQ(up_closure(c, Subset(2)), Subset(2));
    EXPECT_EQ(down_closure(vee(), set_of(3, {2})), Subset::full(3));
}

TEST(Poset, UpperSets) {
    const auto c = upper_sets(FinPoset::chain(2));
    ASSERT_EQ(c.size(), 3u);
    EXPECT_NE(std::find(c.begin(), c.end(), set_of(2, {1})), c.end());
    EXPECT_EQ(upper_sets(FinPoset::antichain(2)).size(), 4u);
    const auto v = upper_sets(vee());
    EXPECT_EQ(v.size(), 5u);
    for (const auto& s : {Subset(3), set_of(3, {2}), set_of(3, {0, 2}), set_of(3, {1, 2}), Subset::full(3)})
        EXPECT_NE(std::find(v.begin(), v.end(), s), v.end());
}

TEST(Poset, Irreducible) {
    const FinPoset a = FinPoset::antichain(2);
    EXPECT_TRUE(is_irreducible(a, Subset(2)));
    EXPECT_FALSE(is_irreducible(a, Subset::full(2)));
    for (std::size_t k = 0; k <= 4; ++k)
        for (const auto& p : enumerate_posets(k)) {
            for (std::size_t x = 0; x < p.size(); ++x) EXPECT_TRUE(is_irreducible(p, p.up(x)));
            for (const auto& u : upper_sets(p)) EXPECT_EQ(is_irreducible(p, u), is_irreducible_by_decomposition(p, u));
        }
}

TEST(Vietoris, SmallSpaces) {
    const VietorisSpace one = vietoris(FinPoset::chain(1));
    ASSERT_EQ(one.size(), 2u);
    const std::size_t full = one.index_of(Subset::full(1));
    const std::size_t empty = one.index_of(Subset(1));
    EXPECT_TRUE(one.order.leq(full, empty));
    EXPECT_FALSE(one.order.leq(empty, full));

    const VietorisSpace two = vietoris(FinPoset::antichain(2));
    ASSERT_EQ(two.size(), 4u);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            EXPECT_EQ(two.order.leq(i, j), two.elements[j].subset_of(two.elements[i]));
}

TEST(Vietoris, UnitAndMult) {
    const FinPoset c = FinPoset::chain(2);
    const VietorisSpace vp = vietoris(c);
    const auto e = unit_map(c, vp);
    EXPECT_EQ(vp.elements[e[0]], Subset::full(2));
    EXPECT_EQ(vp.elements[e[1]], set_of(2, {1}));
    const Subset fam = set_of(vp.size(), {vp.index_of(Subset(2)), vp.index_of(set_of(2, {1}))});
    EXPECT_EQ(mult_at(vp, fam), set_of(2, {1}));
}

TEST(Vietoris, CollapseMap) {
    const FinPoset a = FinPoset::antichain(2);
    const FinPoset one = FinPoset::chain(1);
    const auto va = vietoris(a), v1 = vietoris(one);
    const auto vf = vietoris_map(a, one, {0, 0}, va, v1);
    EXPECT_EQ(v1.elements[vf[va.index_of(set_of(2, {1}))]], Subset::full(1));
    EXPECT_EQ(v1.elements[vf[va.index_of(Subset(2))]], Subset(1));
    EXPECT_THROW(vietoris_map(FinPoset::chain(2), FinPoset::chain(2), {1, 0}, vietoris(FinPoset::chain(2)),
                              vietoris(FinPoset::chain(2))),
                 InputError);
}

TEST(MonadLaws, AllPosetsUpToThree) {
    std::size_t count = 0;
    for (std::size_t k = 1; k <= 3; ++k)
        for (const auto& p : enumerate_posets(k)) {
            EXPECT_TRUE(verify_monad_laws(p).ok());
            ++count;
        }
    EXPECT_EQ(count, 1u + 3u + 19u);
}

TEST(MonadLaws, CorruptedMultFails) {
    auto drop_last = [](const VietorisSpace& v, const Subset& f) {
        Subset s(v.elements.front().universe());
        auto e = f.elements();
        for (std::size_t i = 0; i + 1 < e.size(); ++i) s |= v.elements[e[i]];
        return s;
    };
    EXPECT_FALSE(verify_monad_laws(FinPoset::chain(2), drop_last).ok());
}

TEST(Functor, Laws) {
    const FinPoset c = FinPoset::chain(2), a = FinPoset::antichain(2), one = FinPoset::chain(1);
    EXPECT_TRUE(verify_functoriality(a, c, one, {0, 1}, {0, 0}).ok());
    EXPECT_TRUE(verify_functoriality(c, c, c, {0, 0}, {1, 1}).ok());
}

TEST(Kleisli, Composition) {
    const FinPoset c = FinPoset::chain(2), v = vee();
    for (const auto& phi : all_kleisli_morphisms(c, v)) {
        EXPECT_EQ(kleisli_compose(phi, kleisli_identity(c)), phi);
        EXPECT_EQ(kleisli_compose(kleisli_identity(v), phi), phi);
    }
    // graph(g) ∘ graph(f) = graph(g∘f)
    const PosetMap f{0, 2}, g{0, 0, 0};
    EXPECT_EQ(kleisli_compose(graph_of(FinPoset::chain(1), g), graph_of(v, f)), graph_of(FinPoset::chain(1), {0, 0}));
    const auto all = all_kleisli_morphisms(c, c);
    for (const auto& p : all)
        for (const auto& q : all) {
            bool total_p = true, total_q = true, total = true;
            const auto r = kleisli_compose(q, p);
            for (const auto& row : p.rows) total_p = total_p && !row.none();
            for (const auto& row : q.rows) total_q = total_q && !row.none();
            for (const auto& row : r.rows) total = total && !row.none();
            if (total_p && total_q) {
                EXPECT_TRUE(total);
            }
        }
}

TEST(Kleisli, Counts) {
    // 0/1 distributors (a<b) ⇸ (a<b): pairs of nested upper sets, row(b) ⊆ row(a).
    EXPECT_EQ(all_kleisli_morphisms(FinPoset::chain(2), FinPoset::chain(2)).size(), 6u);
    EXPECT_EQ(all_kleisli_morphisms(FinPoset::chain(1), vee()).size(), 5u);
}
