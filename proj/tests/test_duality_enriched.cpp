#include <gtest/gtest.h>

#include "qcat/duality_enriched.hpp"

using namespace qcat;

namespace {

const Quantale luk;

Value v(std::int64_t p, std::int64_t q) { return Value::of(p, q); }

VCategory half_category() { return {luk, {{Value::one(), v(1, 2)}, {Value::zero(), Value::one()}}, {"p", "q"}}; }

} // namespace

TEST(EnrichedCx, Examples) {
    EXPECT_EQ(enumerate_cx(unit_category(luk), 2).size(), 3u);
    Report closure;
    const auto cx = enumerate_cx(half_category(), 2, &closure);
    EXPECT_TRUE(closure.ok());
    EXPECT_EQ(cx.size(), 8u);
    EXPECT_FALSE(cx.find({0, 2}).has_value());
    for (std::size_t k = 0; k <= 3; ++k)
        for (const auto& p : enumerate_posets(k)) {
            const auto a = enumerate_cx(from_poset(p, luk), 2);
            const auto b = function_space(p, luk, 2);
            EXPECT_EQ(a.labels(), b.labels());
        }
}

TEST(Cogenerated, Examples) {
    for (const auto& p : enumerate_posets(3)) EXPECT_TRUE(is_cogenerated(enumerate_cx(from_poset(p, luk), 2)));
    const auto cx = enumerate_cx(half_category(), 2);
    EXPECT_TRUE(is_cogenerated(cx));
    Subset constants(cx.size());
    constants.set(cx.constant(0));
    constants.set(cx.constant(2));
    EXPECT_FALSE(is_cogenerated(cx, constants));
}

TEST(EnrichedC, Examples) {
    const auto one = enumerate_cx(unit_category(luk), 2);
    EXPECT_EQ(enriched_c(one, {1}), (Functional{0, 0, 1}));
    EXPECT_EQ(enriched_c(one, {0}), (Functional{0, 0, 0}));
    const auto back = retract_phi(one, enriched_c(one, {1}));
    EXPECT_EQ(back.full, (Weight{1}));
    EXPECT_EQ(back.simplified, (Weight{1}));
    EXPECT_EQ(retract_phi(one, Functional(3, 0)).full, (Weight{0}));

    const FinPoset c = FinPoset::chain(2);
    const VCategory x = from_poset(c, luk);
    const auto cx = enumerate_cx(x, 2);
    const auto id = enriched_c_map(cx, cx, identity_distributor(x));
    for (std::size_t i = 0; i < cx.size(); ++i) EXPECT_EQ(id[i], static_cast<int>(i));
    for (const auto& a : upper_sets(c)) {
        Weight w(2, 0);
        for (auto e : a.elements()) w[e] = 2;
        EXPECT_EQ(retract_phi(cx, enriched_c(cx, w)).full, w);
    }
}

TEST(Adjunction, HalfCategoryAndPosets) {
    const auto cx = enumerate_cx(half_category(), 2);
    const Report r = adjunction_audit(cx);
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.findings, 0u);
    EXPECT_TRUE(lemma1_audit(cx).ok());
    EXPECT_TRUE(pointsep_extension_audit(cx).ok());
    for (std::size_t k = 1; k <= 2; ++k)
        for (const auto& p : enumerate_posets(k)) {
            const auto s = enumerate_cx(from_poset(p, luk), 2);
            EXPECT_TRUE(adjunction_audit(s).ok());
            EXPECT_TRUE(lemma1_audit(s).ok());
        }
}

TEST(Twovalued, Examples) {
    const FinPoset c = FinPoset::chain(2);
    const auto cx = enumerate_cx(from_poset(c, luk), 2);
    EXPECT_TRUE(check_condition(cx, enriched_c(cx, {0, 2}), Condition::TenLax));
    EXPECT_TRUE(check_condition(cx, enriched_c(cx, {0, 0}), Condition::TenLax));
    std::string witness;
    EXPECT_FALSE(detail::check_condition(cx, enriched_c(cx, {1, 1}), Condition::TenLax, &witness));
    EXPECT_FALSE(witness.empty());
    for (const auto& w : grid_weights(cx.base(), 2)) EXPECT_TRUE(twovalued_audit(cx, w).ok());
    EXPECT_THROW(twovalued_audit(enumerate_cx(half_category(), 2), {0, 0}), InputError);
}

TEST(TensorMaximality, Examples) {
    const auto cx = enumerate_cx(from_poset(FinPoset::chain(2), luk), 2);
    for (auto t : {std::vector<Level>{2, 1}, std::vector<Level>{2, 2}, std::vector<Level>{0, 0}}) {
        std::size_t survivors = 0;
        EXPECT_TRUE(tensor_maximality_audit(cx, *cx.find(t), &survivors).ok());
        EXPECT_GT(survivors, 0u);
    }
}

TEST(Enumerate, SeparatedCounts) {
    EXPECT_EQ(enumerate_vcategories(luk, 1, 2, true).size(), 1u);
    for (const auto& x : enumerate_vcategories(luk, 2, 2, true)) {
        EXPECT_TRUE(is_valid(x));
        EXPECT_TRUE(is_separated(x));
    }
}
