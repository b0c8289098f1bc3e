#include <doctest.h>

#include "hopfgk/builtins.hpp"
#include "hopfgk/error.hpp"
#include "hopfgk/structure.hpp"

using namespace hopfgk;

namespace {

Presentation example() { return parseOrThrow(*findBuiltin("wzz-3-5a")); }
Presentation builtin(const char* name) { return parseOrThrow(*findBuiltin(name)); }

}  // namespace

TEST_CASE("adjoint actions of primitives are commutators") {
    const Presentation p = example();
    const HopfAlgebra h(p);
    const auto x3 = p.element("x3");
    for (const auto& a : {p.element("x1"), p.element("z"), p.element("z") * p.element("x2"), p.one()}) {
        const auto c = h.commutator(x3, a);
        CHECK(adjointLeft(h, x3, a) == c);
        CHECK(adjointRight(h, x3, a) == -c);
    }
}

TEST_CASE("adjoint action of z on x1 matches the hand expansion") {
    const Presentation p = example();
    const auto x1 = p.element("x1"), x2 = p.element("x2"), z = p.element("z");
    // z x1 S(1) + x1 S(z) + x1 x1 S(x2) − x2 x1 S(x1) with S(z) = x2 − z
    const auto left = adjointLeft(p, z, x1);
    CHECK(left == x2 - z - x1 * x2);
    CHECK(left.coefficient(Word{3}) == -1);
    // S(z) x1 + x1 z + S(x1) x1 x2 − S(x2) x1 x1
    CHECK(adjointRight(p, z, x1) == z - x1 * x2);
    CHECK(adjointLeft(p, p.one(), x1) == x1);
    CHECK(adjointLeft(p, p.one(), z * x1) == x1 * z - z);
}

TEST_CASE("normality of subalgebras of the example") {
    const Presentation p = example();
    const HopfAlgebra h(p);

    const NormalityReport uh = checkNormal(h, p.primitiveSubalgebra());
    CHECK_FALSE(uh.isNormal);
    REQUIRE_FALSE(uh.witnesses.empty());
    const auto& first = uh.witnesses.front();
    CHECK(first.actor == p.element("z"));
    CHECK(first.target == p.element("x1"));
    CHECK(first.side == Side::Left);
    for (const auto& w : uh.witnesses) CHECK(w.actor == p.element("z"));

    CHECK(checkNormal(h, p.subalgebra({"x1", "x2", "z"})).isNormal);
    CHECK(checkNormal(h, p.wholeAlgebra()).isNormal);
    CHECK(checkNormal(h, p.subalgebra({"x1", "x2", "z"}), {true, 3}).isNormal);
    CHECK_FALSE(checkNormal(h, p.primitiveSubalgebra(), {true, 3}).isNormal);
    CHECK_THROWS_AS(checkNormal(h, p.subalgebra({"x3", "z"})), InvalidSubalgebra);
}

TEST_CASE("bracket criterion") {
    CHECK_FALSE(bracketCriterion(example()));
    CHECK(bracketCriterion(builtin("central-acc")));
    CHECK(bracketCriterion(builtin("heisenberg-acc")));
    CHECK(bracketCriterion(builtin("env-abelian-3")));  // vacuous

    // A degree-2 generator with zero tail is primitive, so the degree-1
    // generators no longer span P(H).
    const Presentation q = parseOrThrow({R"(hopf "flat"
gen x deg 1
gen z deg 2
rel [x,z] = 0
delta z = 0
)", "flat"});
    CHECK_THROWS_AS(bracketCriterion(q), CriterionInapplicable);
}

TEST_CASE("almost centralizing extensions") {
    const Presentation p = example();
    const HopfAlgebra h(p);

    const ACEReport overA = checkAlmostCentralizing(h, p.subalgebra({"x1", "x2", "z"}));
    CHECK(overA.passed());
    CHECK(overA.complement == std::vector<Letter>{2});

    const ACEReport overU = checkAlmostCentralizing(h, p.primitiveSubalgebra());
    CHECK(overU.preconditionsHold());
    CHECK_FALSE(overU.commutesIntoSub);
    CHECK(overU.bracketsInModule);
    CHECK_FALSE(overU.passed());
    REQUIRE(overU.witnesses.size() == 1);
    CHECK(overU.witnesses.front().find("[x1,z] = z") != std::string::npos);

    // z's tail uses x2, which is outside {x1, x3}.
    const ACEReport bad = checkAlmostCentralizing(h, p.subalgebra({"x1", "x3"}));
    CHECK_FALSE(bad.preconditionsHold());
    CHECK_FALSE(bad.passed());

    const Presentation nonab = builtin("env-nonabelian-2");
    CHECK(checkAlmostCentralizing(nonab, nonab.subalgebra({"y"})).passed());
    // {x} is not an ideal: [x,y] = y leaves it.
    CHECK_FALSE(checkAlmostCentralizing(nonab, nonab.subalgebra({"x"})).passed());

    // Two extension generators whose bracket lands in the base.
    const Presentation dbl = builtin("double-acc");
    const ACEReport d = checkAlmostCentralizing(dbl, dbl.primitiveSubalgebra());
    CHECK(d.complement.size() == 2);
    CHECK(d.passed());
}

TEST_CASE("almost centralizing iff normal plus the delta condition") {
    const Presentation p = example();
    const EquivalenceReport a = almostCentralizingEquivalence(p, p.subalgebra({"x1", "x2", "z"}));
    CHECK(a.almostCentralizing);
    CHECK(a.normal);
    CHECK(a.deltaCondition);
    CHECK(a.agree);

    const EquivalenceReport u = almostCentralizingEquivalence(p, p.primitiveSubalgebra());
    CHECK_FALSE(u.almostCentralizing);
    CHECK_FALSE(u.normal);
    CHECK(u.agree);

    const Presentation ab = builtin("env-abelian-3");
    for (const auto& names : std::vector<std::vector<std::string>>{{"x1"}, {"x2", "x3"}, {"x1", "x3"}}) {
        const EquivalenceReport r = almostCentralizingEquivalence(ab, ab.subalgebra(names));
        CHECK(r.almostCentralizing);
        CHECK(r.normal);
        CHECK(r.agree);
    }
    CHECK_THROWS_AS(almostCentralizingEquivalence(p, p.subalgebra({"x1", "x3"})), CriterionInapplicable);
}

TEST_CASE("delta_cc / delta_ac biconditional on explicit pairs") {
    const Presentation p = example();
    const auto z = p.element("z"), x1 = p.element("x1"), x2 = p.element("x2");

    const DeltaPartsReport same = deltaPartsCheck(p, z, z);
    CHECK(same.ccInDeltaU3);
    CHECK(same.acInDeltaP2);

    // [z, z + x1] = [z, x1] = −z
    const HopfAlgebra h(p);
    CHECK(h.commutator(z, z + x1) == -z);
    const DeltaPartsReport r = deltaPartsCheck(p, z, z + x1);
    CHECK(r.ccInDeltaU3);
    CHECK(r.acInDeltaP2);
    CHECK(r.holds());

    const DeltaPartsReport prim = deltaPartsCheck(p, x1, x2);
    CHECK(prim.holds());
    CHECK_THROWS_AS(deltaPartsCheck(p, x1 * x2, z), DomainError);
}

TEST_CASE("delta_cc of a bracket is the bracket of the deltas") {
    const Presentation p = example();
    const HopfAlgebra h(p);
    const auto z = p.element("z"), x1 = p.element("x1"), x3 = p.element("x3");
    CHECK(deltaBracketIdentity(h, z, z + x1));
    CHECK(deltaBracketIdentity(h, z, x3));
    CHECK(deltaBracketIdentity(h, x1, x3));
}

TEST_CASE("bracket property runs are deterministic") {
    const Presentation p = example();
    const BracketPropertyReport a = bracketProperties(p, 20, 99);
    const BracketPropertyReport b = bracketProperties(p, 20, 99);
    CHECK(a.passed());
    CHECK(a.pairs == 20);
    CHECK(a.bracketCriterion == std::optional<bool>(false));
    CHECK_FALSE(a.normalFull);
    CHECK(a.witnesses == b.witnesses);
    CHECK_FALSE(bracketProperties(builtin("env-abelian-3")).inClass);
}
