#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "qcat/qcat.hpp"

using namespace qcat;

namespace {

ErrorCode code_of(const std::string& doc) {
    try {
        parse_instance(doc);
    } catch (const InputError& e) {
        return e.code();
    }
    ADD_FAILURE() << "accepted: " << doc;
    return ErrorCode::MalformedDocument;
}

std::string message_of(const std::string& doc) {
    try {
        parse_instance(doc);
    } catch (const InputError& e) {
        return e.what();
    }
    return {};
}

std::string slurp(const std::string& name) {
    std::ifstream in(std::string(QCAT_DATA_DIR) + "/" + name);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

SuiteConfig config(const std::string& suite) {
    SuiteConfig c;
    c.suite = suite;
    return c;
}

} // namespace

TEST(ParseInstance, MinimalPoset) {
    const auto doc = parse_instance(R"({"kind": "poset", "leq": [[1,1],[0,1]]})");
    EXPECT_EQ(doc.kind, InstanceKind::Poset);
    ASSERT_TRUE(doc.poset.has_value());
    EXPECT_EQ(*doc.poset, FinPoset::chain(2));
    EXPECT_EQ(doc.tensor.name(), "lukasiewicz");
    EXPECT_FALSE(doc.grid.has_value());
}

TEST(ParseInstance, DistinctErrorCodes) {
    EXPECT_EQ(code_of(R"({"kind": "vcategory", "matrix": [["1","5/4"],["0","1"]]})"), ErrorCode::OutOfRange);
    EXPECT_EQ(code_of(R"({"kind": "vcategory", "matrix": [["1","3/0"],["0","1"]]})"), ErrorCode::MalformedRational);
    EXPECT_EQ(code_of(R"({"kind": "poset", "leq": [[1,1],[1,1]]})"), ErrorCode::NotAPoset);
    EXPECT_EQ(code_of(R"({"kind": "poset", "tensor": "product", "grid": 2, "leq": [[1]]})"), ErrorCode::GridNotClosed);
    EXPECT_EQ(code_of(R"({"kind": "poset", "tensor": "drastic", "leq": [[1]]})"), ErrorCode::MalformedTNorm);
    EXPECT_EQ(code_of(R"({"kind": "vcategory", "matrix": [["1/2"]]})"), ErrorCode::NotAVCategory);
    EXPECT_EQ(code_of(R"({"kind": "vcategory", "matrix": [["1","0"]]})"), ErrorCode::ShapeMismatch);
    EXPECT_EQ(code_of(R"({"kind": "distributor", "source": [[1]], "target": [[1,1],[0,1]], "matrix": [[1,0]]})"),
              ErrorCode::NotMonotone);
    EXPECT_EQ(code_of(R"({"kind": "poset", "leq": )"), ErrorCode::MalformedDocument);
    EXPECT_EQ(code_of(R"({"kind": "lattice"})"), ErrorCode::MalformedDocument);
    EXPECT_EQ(code_of(R"({"kind": "poset"})"), ErrorCode::MalformedDocument);
}

TEST(ParseInstance, ErrorsCarryLocations) {
    const std::string m = message_of(R"({"kind": "vcategory", "matrix": [["1","5/4"],["0","1"]]})");
    EXPECT_NE(m.find("$.matrix[0][1]"), std::string::npos) << m;
    EXPECT_EQ(m.rfind("out-of-range: ", 0), 0u) << m;
}

TEST(ParseInstance, OrdinalTensor) {
    const auto doc = parse_instance(R"({"kind": "poset", "leq": [[1]],
        "tensor": {"ordinal": [{"a": "0", "b": "1/2", "inner": "lukasiewicz"}]}})");
    EXPECT_EQ(doc.tensor.name(), "ordinal:0,1/2,lukasiewicz");
}

TEST(ParseInstance, ShippedInstances) {
    for (const char* name : {"flagship_2chain.json", "point_min.json", "half_distance.json", "point_to_chain.json",
                             "chain_generators.json", "ordinal_sum.json"})
        EXPECT_NO_THROW(parse_instance(slurp(name))) << name;
    const auto half = parse_instance(slurp("half_distance.json"));
    ASSERT_TRUE(half.category.has_value());
    EXPECT_EQ(half.category->label(1), "q");
    EXPECT_EQ((*half.category)(0, 1), Value::of(1, 2));
}

TEST(RunSuite, MonadLawsCountsLabeledPosets) {
    SuiteConfig c = config("monad-laws");
    c.max_size = 4;
    const auto r = run_suite(c);
    EXPECT_EQ(exit_code(r), 0);
    EXPECT_EQ(r.instances, 1u + 3u + 19u + 219u);
    EXPECT_LE(std::stoul(*r.report.stat("VVX_max")), 1u << 16);
}

TEST(RunSuite, FlagshipInstance) {
    SuiteConfig c = config("representability");
    c.instance = parse_instance(slurp("flagship_2chain.json"));
    c.instance_name = "flagship";
    const auto r = run_suite(c);
    EXPECT_EQ(exit_code(r), 0);
    EXPECT_EQ(*r.report.stat("functionals_scanned"), "729");
    EXPECT_EQ(*r.report.stat("representable"), "3");
    EXPECT_EQ(*r.report.stat("passing[1]"), "Zero={1} (0,0,1/2,0,1/2,1)");
}

TEST(RunSuite, Errors) {
    try {
        run_suite(config("foo"));
        FAIL();
    } catch (const InputError& e) {
        EXPECT_EQ(e.code(), ErrorCode::UnknownSuite);
    }
    SuiteConfig big = config("monad-laws");
    big.max_size = 5;
    EXPECT_THROW(run_suite(big), InputError);
    SuiteConfig grid = config("quantale-axioms");
    grid.grid = 13;
    EXPECT_THROW(run_suite(grid), InputError);
    EXPECT_THROW(run_suite(config("min-counterexample")), InputError);
    SuiteConfig prod = config("representability");
    prod.tnorm = TNormSpec::product();
    try {
        run_suite(prod);
        FAIL();
    } catch (const InputError& e) {
        EXPECT_EQ(e.code(), ErrorCode::GridNotClosed);
    }
}

TEST(RunSuite, EverySuiteRunsOnDefaults) {
    for (const auto& name : suite_names()) {
        SuiteConfig c = config(name);
        if (name == "min-counterexample") c.tnorm = TNormSpec::minimum();
        c.max_size = 2;
        const auto r = run_suite(c);
        EXPECT_EQ(exit_code(r), 0) << name;
        EXPECT_GT(r.report.checks, 0u) << name;
    }
}

TEST(EmitReport, HeaderOnlyWhenEmpty) {
    SuiteResult empty{config("lemma1"), Report("lemma1"), 0, 0};
    const std::string t = emit_report(empty, ReportFormat::Table, false);
    EXPECT_NE(t.find("status      pass"), std::string::npos);
    EXPECT_EQ(t.find('['), std::string::npos);
}

TEST(EmitReport, TableAndJsonAgree) {
    SuiteConfig c = config("tensor-maximality");
    const auto r = run_suite(c);
    Report with = r.report;
    with.fail("synthetic", "row one");
    with.finding("synthetic", "row two");
    SuiteResult res{c, with, r.instances, 0};
    const auto j = nlohmann::json::parse(emit_report(res, ReportFormat::Json, false));
    const std::string t = emit_report(res, ReportFormat::Table, false);
    EXPECT_EQ(j["status"], "fail");
    EXPECT_EQ(j["checks"].get<std::size_t>(), with.checks);
    EXPECT_NE(t.find("checks      " + std::to_string(with.checks)), std::string::npos);
    ASSERT_EQ(j["witnesses"].size(), 2u);
    for (const auto& w : j["witnesses"]) {
        const std::string line = w["kind"].get<std::string>() + "  " + w["check"].get<std::string>() + "  " +
                                 w["detail"].get<std::string>();
        EXPECT_NE(t.find(line), std::string::npos) << line;
    }
    for (const auto& [k, v] : with.stats) EXPECT_EQ(j["stats"][k], v);
    EXPECT_FALSE(j.contains("timing"));
    EXPECT_EQ(exit_code(res), 1);
}

TEST(EmitReport, Deterministic) {
    for (const char* name : {"functoriality", "representability", "enriched-roundtrip"}) {
        SuiteConfig c = config(name);
        c.max_size = 2;
        c.seed = 9;
        const auto a = emit_report(run_suite(c), ReportFormat::Json, false);
        const auto b = emit_report(run_suite(c), ReportFormat::Json, false);
        EXPECT_EQ(a, b) << name;
    }
}
