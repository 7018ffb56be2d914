#include <gtest/gtest.h>

#include <set>

#include "congru/registry.hpp"
#include "eval.hpp"

using namespace congru;

namespace {

Verdict at(const std::string& id, u64 p, std::optional<i64> param = std::nullopt) { return check({id, p, param}); }

}  // namespace

TEST(Registry, CatalogIdsAreUnique) {
    std::set<std::string> ids;
    for (const auto& s : catalog()) EXPECT_TRUE(ids.insert(s.info.id).second) << s.info.id;
    EXPECT_GT(ids.size(), 100u);
}

TEST(Registry, SelectorRules) {
    auto v = select_ids({"4.1"});
    EXPECT_EQ(v, (std::vector<std::string>{"4.1", "4.1z"}));
    EXPECT_EQ(select_ids({"2.6"}), (std::vector<std::string>{"2.6i", "2.6ii"}));
    EXPECT_EQ(select_ids({"all"}).size(), catalog().size());
    EXPECT_THROW(select_ids({"9.9"}), std::invalid_argument);
    for (const auto& id : select_ids({"RV*"})) EXPECT_EQ(id.substr(0, 2), "RV");
}

TEST(Registry, PowerResidueSpotValue) {
    const Verdict v = at("2.1", 13);
    EXPECT_EQ(v.status, Status::Holds);
    EXPECT_EQ(*v.lhs, 3u);
    EXPECT_EQ(*v.rhs, 3u);
    EXPECT_EQ(v.modulus.m, 13u);
}

TEST(Registry, SumSpotValues) {
    const Verdict z = at("4.14", 5);
    EXPECT_EQ(z.status, Status::Holds);
    EXPECT_EQ(*z.lhs, 17u);
    EXPECT_EQ(z.branch, "p≡5 mod 12");
    const Verdict w = at("4.22b", 7);
    EXPECT_EQ(*w.lhs, 14u);
    EXPECT_EQ(w.modulus.m, 49u);
    const Verdict r = at("RV1", 13);
    EXPECT_EQ(*r.lhs, 10u);
    EXPECT_EQ(r.modulus.m, 169u);
    EXPECT_EQ(*at("4.24a", 11).lhs, 33u);
}

TEST(Registry, ArgumentErrors) {
    EXPECT_THROW(at("nope", 13), std::invalid_argument);
    EXPECT_THROW(at("3.1i", 13), std::invalid_argument);
    EXPECT_THROW(at("2.1", 13, 5), std::invalid_argument);
    EXPECT_THROW(at("4.20", 13, 8), std::invalid_argument);
    EXPECT_EQ(at("3.1i", 13, 4).status, Status::NotApplicable);
}

TEST(Registry, NotApplicableOutsideHypothesis) {
    EXPECT_EQ(at("2.1", 11).status, Status::NotApplicable);
    EXPECT_EQ(at("T2.1", 13).status, Status::NotApplicable);
    EXPECT_EQ(at("4.16", 5).status, Status::NotApplicable);
}

TEST(Registry, DegenerateRepresentationIsAnomaly) {
    const Verdict v = at("2.6i", 17);
    EXPECT_EQ(v.status, Status::Anomaly);
}

TEST(Registry, KnownCounterexamples) {
    EXPECT_EQ(at("4.31", 31).status, Status::Fails);
    EXPECT_EQ(at("4.33", 11).status, Status::Fails);
    EXPECT_EQ(at("4.38", 41).status, Status::Fails);
    EXPECT_EQ(at("4.39i", 37).status, Status::Fails);
    EXPECT_EQ(at("4.43", 7).status, Status::Fails);
}

TEST(Registry, ModExpOverride) {
    const Verdict v = check({"4.14", 13, std::nullopt}, 1);
    EXPECT_EQ(v.modulus.m, 13u);
    const Verdict w = check({"2.1", 13, std::nullopt}, 2);
    EXPECT_EQ(w.modulus.m, 169u);
}

// Property: the proven statements hold wherever they apply.
TEST(Registry, ProvenStatementsHold) {
    SweepConfig cfg;
    cfg.ids.clear();
    for (const auto& s : catalog())
        if (s.info.proven) cfg.ids.push_back(s.info.id);
    cfg.pmax = 1500;
    cfg.m_max = 20;
    const auto res = sweep(cfg);
    EXPECT_GT(res.summary.holds, 1000u);
    EXPECT_EQ(res.summary.fails, 0u);
    EXPECT_EQ(res.summary.anomalies, 0u);
}

// Property: at most one branch applies, so branch selection never reports an overlap.
TEST(Registry, BranchesAreExclusive) {
    SweepConfig cfg;
    cfg.pmax = 800;
    cfg.b_max = 30;
    cfg.k_max = 15;
    cfg.q_max = 40;
    const auto res = sweep(cfg);
    for (const auto& r : res.records) {
        EXPECT_EQ(r.verdict.diagnostics.find("several branch conditions match"), std::string::npos) << r.id << " p=" << r.p;
        EXPECT_EQ(r.verdict.diagnostics.find("no branch condition matches"), std::string::npos) << r.id << " p=" << r.p;
    }
}

// Property: replacing d by -d leaves the p = 13 mod 24 power-residue verdict unchanged.
TEST(Registry, PowerResidueInvariantUnderSignOfD) {
    const Statement* st = find_statement("2.1");
    ASSERT_NE(st, nullptr);
    for (u64 p : primes_in(13, 5000)) {
        if (p % 24 != 13) continue;
        const PrimeContext ctx = PrimeContext::build(p, 1);
        Eval e1(*st, p, std::nullopt, ctx, std::nullopt);
        Eval e2(*st, p, std::nullopt, ctx, std::nullopt);
        Verdict a, b;
        try {
            a = conj_2_1_with_d_sign(e1, 1);
        } catch (const EvalStop& s) {
            a = s.v;
        }
        try {
            b = conj_2_1_with_d_sign(e2, -1);
        } catch (const EvalStop& s) {
            b = s.v;
        }
        EXPECT_EQ(a.status, Status::Holds) << p;
        EXPECT_EQ(a.status, b.status) << p;
    }
}

TEST(Registry, PrimesInRange) {
    EXPECT_EQ(primes_in(3, 30), (std::vector<u64>{3, 5, 7, 11, 13, 17, 19, 23, 29}));
    EXPECT_EQ(primes_in(1, 3).size(), 0u);
    EXPECT_EQ(primes_in(3, 100000).size(), 9591u);
    const auto big = primes_in(999900, 1000000);
    for (u64 p : big) EXPECT_TRUE(is_prime(p));
}

TEST(Registry, ParamGrids) {
    SweepConfig cfg;
    auto g31 = param_grid(*find_statement("3.1i"), cfg);
    EXPECT_EQ(g31.front(), 1);
    EXPECT_EQ(g31.back(), 59);
    for (i64 b : g31) EXPECT_EQ(b % 2, 1);
    cfg.b_max = 19;
    EXPECT_EQ(param_grid(*find_statement("3.1i"), cfg).size(), 10u);
    EXPECT_EQ(param_grid(*find_statement("4.20"), cfg), (std::vector<i64>{7, 11, 19, 31, 59}));
}

// Property: the merged report does not depend on the worker count.
TEST(Registry, SweepIsDeterministicAcrossJobs) {
    SweepConfig a;
    a.pmax = 300;
    a.include_na = true;
    SweepConfig b = a;
    b.jobs = 4;
    const auto ra = sweep(a), rb = sweep(b);
    ASSERT_EQ(ra.records.size(), rb.records.size());
    for (size_t i = 0; i < ra.records.size(); ++i) {
        EXPECT_EQ(ra.records[i].id, rb.records[i].id);
        EXPECT_EQ(ra.records[i].p, rb.records[i].p);
        EXPECT_EQ(ra.records[i].params, rb.records[i].params);
        EXPECT_EQ(ra.records[i].verdict.lhs, rb.records[i].verdict.lhs);
        EXPECT_EQ(ra.records[i].verdict.status, rb.records[i].verdict.status);
    }
    EXPECT_EQ(ra.summary.holds, rb.summary.holds);
}
