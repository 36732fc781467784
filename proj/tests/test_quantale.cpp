#include <gtest/gtest.h>

#include "qcat/quantale.hpp"

using namespace qcat;

namespace {

Value v(std::int64_t p, std::int64_t q) { return Value::of(p, q); }

// Łukasiewicz everywhere except that 1 no longer acts as the identity on 1/2.
struct BrokenUnit {
    Quantale inner;
    Value tensor(const Value& a, const Value& b) const {
        if ((a.is_one() && b == Value::of(1, 2)) || (b.is_one() && a == Value::of(1, 2))) return Value::zero();
        return inner.tensor(a, b);
    }
    Value hom(const Value& a, const Value& b) const { return inner.hom(a, b); }
};

} // namespace

TEST(Value, ParsesAndReduces) {
    EXPECT_EQ(Value::parse("2/4"), v(1, 2));
    EXPECT_EQ(Value::parse(" 1 "), Value::one());
    EXPECT_EQ(v(3, 6).str(), "1/2");
    EXPECT_EQ(v(0, 5).str(), "0");
}

TEST(Value, RejectsBadText) {
    try {
        Value::parse("3/0");
        FAIL();
    } catch (const InputError& e) {
        EXPECT_EQ(e.code(), ErrorCode::MalformedRational);
    }
    try {
        Value::parse("5/4");
        FAIL();
    } catch (const InputError& e) {
        EXPECT_EQ(e.code(), ErrorCode::OutOfRange);
    }
    EXPECT_THROW(Value::parse("a/b"), InputError);
}

TEST(Value, GridLevels) {
    EXPECT_TRUE(v(1, 2).on_grid(4));
    EXPECT_FALSE(v(1, 3).on_grid(4));
    EXPECT_EQ(v(3, 4).grid_level(8), 6);
}

TEST(Tensor, Examples) {
    const Quantale luk;
    EXPECT_EQ(luk.tensor(v(7, 10), v(6, 10)), v(3, 10));
    for (auto q : {Quantale(TNormSpec::minimum()), Quantale(TNormSpec::product()), luk})
        EXPECT_EQ(q.tensor(Value::one(), v(2, 7)), v(2, 7));
    const Quantale ord(TNormSpec::ordinal_sum({TNormSpec::segment(v(1, 4), v(3, 4), TNormSpec::lukasiewicz())}));
    EXPECT_EQ(ord.tensor(v(1, 2), v(5, 8)), v(3, 8));
    // Outside every segment the ordinal sum is the minimum.
    EXPECT_EQ(ord.tensor(v(1, 8), v(7, 8)), v(1, 8));
}

TEST(Hom, Examples) {
    const Quantale prod(TNormSpec::product());
    EXPECT_EQ(prod.hom(v(1, 2), v(1, 4)), v(1, 2));
    EXPECT_EQ(prod.hom(Value::zero(), Value::zero()), Value::one());
    EXPECT_EQ(Quantale().hom(v(1, 2), v(1, 4)), v(3, 4));
    EXPECT_EQ(Quantale(TNormSpec::minimum()).hom(v(1, 2), v(1, 4)), v(1, 4));
}

TEST(TruncatedMinus, Examples) {
    EXPECT_EQ(truncated_minus(v(8, 10), v(5, 10)), v(3, 10));
    EXPECT_EQ(truncated_minus(v(3, 10), v(5, 10)), Value::zero());
    EXPECT_EQ(truncated_minus(v(2, 3), Value::zero()), v(2, 3));
}

TEST(Nilpotency, Examples) {
    auto n = nilpotency(Quantale(), v(1, 2));
    ASSERT_TRUE(n.nilpotent);
    EXPECT_EQ(*n.witness, 2);
    EXPECT_EQ(*nilpotency(Quantale(), v(2, 3)).witness, 3);
    const Quantale min(TNormSpec::minimum());
    for (const auto& u : grid_chain(6).elements) EXPECT_TRUE(is_idempotent(min, u));
    EXPECT_FALSE(is_nilpotent(Quantale(TNormSpec::product()), v(1, 2)));
    EXPECT_FALSE(has_nilpotents(Quantale(TNormSpec::product())));
    const Quantale ord(TNormSpec::ordinal_sum({TNormSpec::segment(Value::zero(), v(1, 2), TNormSpec::lukasiewicz())}));
    EXPECT_TRUE(has_nilpotents(ord));
    EXPECT_EQ(*nilpotency(ord, v(1, 4)).witness, 2);
}

TEST(GridClosed, Examples) {
    EXPECT_TRUE(grid_closed(Quantale(), 4));
    EXPECT_TRUE(grid_closed(Quantale(TNormSpec::minimum()), 4));
    EXPECT_FALSE(grid_closed(Quantale(TNormSpec::product()), 2));
    EXPECT_TRUE(grid_closed(Quantale(TNormSpec::product()), 1));
    try {
        require_grid_closed(Quantale(TNormSpec::product()), 2);
        FAIL();
    } catch (const InputError& e) {
        EXPECT_EQ(e.code(), ErrorCode::GridNotClosed);
    }
}

TEST(TNormSpec, ParseRoundTrip) {
    EXPECT_EQ(TNormSpec::parse("luk").name(), "lukasiewicz");
    const auto o = TNormSpec::parse("ordinal:0,1/2,lukasiewicz;1/2,1,product");
    EXPECT_EQ(o.name(), "ordinal:0,1/2,lukasiewicz;1/2,1,product");
    EXPECT_EQ(TNormSpec::parse(o.name()).name(), o.name());
    EXPECT_THROW(TNormSpec::parse("drastic"), InputError);
    EXPECT_THROW(TNormSpec::parse("ordinal:0,1/2,min;1/4,1,min"), InputError);
    EXPECT_THROW(TNormSpec::parse("ordinal:1/2,1/2,min"), InputError);
}

TEST(QuantaleAxioms, ExhaustiveOnQ12) {
    const auto g = grid_chain(12);
    for (auto q : {Quantale(), Quantale(TNormSpec::minimum())}) {
        const Report r = verify_quantale_axioms(q, g.elements);
        EXPECT_TRUE(r.ok()) << q.name();
        EXPECT_GT(r.checks, 13u * 13u * 13u);
    }
}

TEST(QuantaleAxioms, SampledProductAndOrdinalSum) {
    const Quantale ord(TNormSpec::parse("ordinal:0,1/2,lukasiewicz;1/2,1,product"));
    for (auto q : {Quantale(TNormSpec::product()), ord}) {
        const Report r = verify_quantale_axioms_sampled(q, 7, 2000);
        EXPECT_TRUE(r.ok()) << q.name();
    }
}

TEST(QuantaleAxioms, CorruptedUnitIsCaught) {
    const BrokenUnit q;
    const auto g = grid_chain(2);
    const Report r = verify_quantale_axioms(q, g.elements);
    ASSERT_FALSE(r.ok());
    EXPECT_EQ(r.witnesses.front().check, "unit");
    EXPECT_EQ(r.witnesses.front().detail, "(1, 1/2)");
}

TEST(NoZeroDivisors, LukasiewiczQ6HasNilpotencyWitnesses) {
    const auto g = grid_chain(6);
    const Report r = no_zero_divisor_audit(Quantale(), all_pairs(g.elements));
    EXPECT_TRUE(r.ok());
    ASSERT_NE(r.stat("max_nilpotency_index"), nullptr);
    EXPECT_EQ(*r.stat("max_nilpotency_index"), "6");
}

TEST(NoZeroDivisors, MinimumAndProduct) {
    const auto g = grid_chain(6);
    EXPECT_TRUE(no_zero_divisor_audit(Quantale(TNormSpec::minimum()), all_pairs(g.elements)).ok());
    const Report p = no_zero_divisor_audit(Quantale(TNormSpec::product()), sample_pairs(3, 10000));
    EXPECT_TRUE(p.ok());
    EXPECT_EQ(p.checks, std::stoul(*p.stat("zero_products")));
}

TEST(Sampling, IsSeeded) {
    EXPECT_EQ(sample_values(11, 50), sample_values(11, 50));
    EXPECT_NE(sample_values(11, 50), sample_values(12, 50));
}
