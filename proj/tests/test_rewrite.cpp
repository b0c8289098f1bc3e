#include <doctest.h>

#include "hopfgk/builtins.hpp"
#include "hopfgk/error.hpp"
#include "hopfgk/rewrite.hpp"

using namespace hopfgk;

namespace {

Presentation example() { return parseOrThrow(*findBuiltin("wzz-3-5a")); }

AlgebraElement w(const Presentation& p, std::initializer_list<const char*> names, const Scalar& c = 1) {
    AlgebraElement out = AlgebraElement::scalar(p.table(), c);
    for (const char* n : names) out = out * p.element(n);
    return out;
}

const char* kJacobi = R"(hopf "jacobi"
gen x deg 1
gen y deg 1
gen z deg 1
rel [x,y] = z
rel [y,z] = x
rel [x,z] = x + z
)";

}  // namespace

TEST_CASE("single rewrites follow the bracket relations") {
    const Presentation p = example();
    // [x1,z] = z  =>  z*x1 = x1*z - z
    CHECK(normalForm(p, w(p, {"z", "x1"})) == w(p, {"x1", "z"}) - w(p, {"z"}));
    // [x1,x2] = x2  =>  x2*x1 = x1*x2 - x2
    CHECK(normalForm(p, w(p, {"x2", "x1"})) == w(p, {"x1", "x2"}) - w(p, {"x2"}));
    // [z,x3] = x2  =>  z*x3 = x3*z + x2
    CHECK(normalForm(p, w(p, {"z", "x3"})) == w(p, {"x3", "z"}) + w(p, {"x2"}));
    CHECK(normalForm(p, w(p, {"x3", "x1"})) == w(p, {"x1", "x3"}));
    CHECK(normalForm(p, w(p, {"z", "x2"})) == w(p, {"x2", "z"}));
}

TEST_CASE("longer words match hand reductions") {
    const Presentation p = example();
    // z x2 x1 = x2 z x1 = x2 (x1 z - z) = (x1 x2 - x2) z - x2 z
    CHECK(normalForm(p, w(p, {"z", "x2", "x1"})) == w(p, {"x1", "x2", "z"}) - w(p, {"x2", "z"}, 2));
    // z z x1 = z (x1 z - z) = (x1 z - z) z - z z = x1 z z - 2 z z
    CHECK(normalForm(p, w(p, {"z", "z", "x1"})) == w(p, {"x1", "z", "z"}) - w(p, {"z", "z"}, 2));
    // x2 x2 x1 = x2 (x1 x2 - x2) = (x1 x2 - x2) x2 - x2 x2 = x1 x2 x2 - 2 x2 x2
    CHECK(normalForm(p, w(p, {"x2", "x2", "x1"})) == w(p, {"x1", "x2", "x2"}) - w(p, {"x2", "x2"}, 2));
}

TEST_CASE("normal forms are idempotent and linear") {
    const Presentation p = example();
    const Normalizer nf(p);
    const auto a = w(p, {"z", "x3", "x1"}) + w(p, {"x2", "z"}, Scalar(1, 3));
    const auto b = w(p, {"x3", "x2", "x1"}, -2);
    CHECK(nf(nf(a)) == nf(a));
    CHECK(nf(a).isNormal());
    CHECK(nf(a + b) == nf(a) + nf(b));
    CHECK(nf(Scalar(5, 2) * a) == Scalar(5, 2) * nf(a));
    CHECK(nf.multiply(a, b) == nf(a * b));
    CHECK(nf.commutator(p.element("x1"), p.element("z")) == p.element("z"));
    CHECK(nf.rewriteSteps() > 0);
}

TEST_CASE("rewriteAt and the termination measure") {
    const Presentation p = example();
    const Word zx3x1{3, 2, 0};
    CHECK(rewriteAt(p, zx3x1, 0) == w(p, {"x3", "z", "x1"}) + w(p, {"x2", "x1"}));
    CHECK_THROWS_AS(rewriteAt(p, Word{0, 3}, 0), DomainError);
    for (std::size_t pos : {0u, 1u}) {
        const auto before = reductionMeasure(p, zx3x1);
        const AlgebraElement step = rewriteAt(p, zx3x1, pos);
        for (const auto& [v, c] : step.terms()) CHECK(reductionMeasure(p, v) < before);
    }
}

TEST_CASE("the example is confluent on all four overlaps") {
    const Presentation p = example();
    const ConfluenceReport r = checkConfluence(p);
    CHECK(r.confluent);
    CHECK(r.triplesChecked == 4);
    CHECK(r.failures.empty());
    CHECK(p.isConfluent());
}

TEST_CASE("a Jacobi-violating presentation yields an overlap witness") {
    const Presentation p = parseOrThrow({kJacobi, "jacobi"});
    CHECK_FALSE(p.isConfluent());
    const ConfluenceReport& r = p.confluence();
    REQUIRE(r.failures.size() == 1);
    const auto& f = r.failures.front();
    CHECK(f.triple == Word{2, 1, 0});
    // Hand reduction of z*y*x: (zy)x first vs z(yx) first.
    const auto common = w(p, {"x", "y", "z"}) - w(p, {"x", "x"}) - w(p, {"x", "y"}) - w(p, {"y", "z"}) -
                        w(p, {"z", "z"});
    CHECK(f.leftReduct == common + p.element("z"));
    CHECK(f.rightReduct == common + p.element("x"));
    CHECK_THROWS_AS(p.requireConfluent("test"), NonConfluentError);
}

TEST_CASE("builder validates relations") {
    auto builder = [] {
        PresentationBuilder b("t");
        b.generator("x", 1).generator("y", 1).generator("z", 2);
        return b;
    };
    {
        auto b = builder();
        b.bracket("x", "y", AlgebraElement::zero(b.table()));
        b.bracket("x", "z", AlgebraElement::zero(b.table()));
        CHECK_THROWS_WITH_AS(b.build(), "missing relation for pair (y,z)", MalformedPresentation);
    }
    {
        auto b = builder();
        const auto t = b.table();
        b.bracket("x", "y", AlgebraElement::one(t));
        b.bracket("x", "z", AlgebraElement::zero(t)).bracket("y", "z", AlgebraElement::zero(t));
        CHECK_THROWS_AS(b.build(), MalformedPresentation);  // constant term
    }
    {
        auto b = builder();
        const auto t = b.table();
        const auto x = AlgebraElement::generator(t, "x");
        const auto y = AlgebraElement::generator(t, "y");
        b.bracket("x", "y", AlgebraElement::zero(t)).bracket("y", "z", AlgebraElement::zero(t));
        b.bracket("x", "z", x * y * x);
        CHECK_THROWS_AS(b.build(), MalformedPresentation);  // word too long
    }
    {
        auto b = builder();
        const auto t = b.table();
        const auto x = AlgebraElement::generator(t, "x");
        const auto y = AlgebraElement::generator(t, "y");
        b.bracket("x", "y", AlgebraElement::zero(t)).bracket("y", "z", AlgebraElement::zero(t));
        b.bracket("x", "z", y * x);
        CHECK_THROWS_AS(b.build(), MalformedPresentation);  // not normal
    }
    {
        auto b = builder();
        const auto t = b.table();
        b.bracket("x", "y", AlgebraElement::generator(t, "z"));
        b.bracket("x", "z", AlgebraElement::zero(t)).bracket("y", "z", AlgebraElement::zero(t));
        CHECK_THROWS_AS(b.build(), MalformedPresentation);  // z has weight 2 = deg x + deg y
    }
    {
        auto b = builder();
        const auto t = b.table();
        b.bracket("x", "y", AlgebraElement::zero(t));
        CHECK_THROWS_AS(b.bracket("y", "x", AlgebraElement::zero(t)), MalformedPresentation);
        CHECK_THROWS_AS(b.bracket("x", "x", AlgebraElement::zero(t)), MalformedPresentation);
        CHECK_THROWS_AS(b.bracket("x", "w", AlgebraElement::zero(t)), MalformedPresentation);
        CHECK_THROWS_AS(b.deltaTail("x", TensorElement(t)), MalformedPresentation);
    }
}

TEST_CASE("relation closure and membership") {
    const Presentation p = example();
    CHECK_NOTHROW(requireRelationClosed(p, p.primitiveSubalgebra()));
    CHECK_NOTHROW(requireRelationClosed(p, p.subalgebra({"x1", "x2", "z"})));
    CHECK_THROWS_AS(requireRelationClosed(p, p.subalgebra({"z", "x3"})), InvalidSubalgebra);
    CHECK_THROWS_AS(p.subalgebra({"q"}), DomainError);

    const auto a = p.subalgebra({"x1", "x2", "z"});
    CHECK(isMember(p, w(p, {"z", "x1"}), a));
    CHECK_FALSE(isMember(p, w(p, {"z", "x1"}), p.primitiveSubalgebra()));
    // z x3 - x3 z = x2 lies in U_H although neither word does.
    CHECK(isMember(p, w(p, {"z", "x3"}) - w(p, {"x3", "z"}), p.primitiveSubalgebra()));
}

TEST_CASE("restriction to a sub-presentation") {
    const Presentation p = example();
    const Presentation a = restrictTo(p, p.subalgebra({"x1", "x2", "z"}), "A");
    CHECK(a.generatorCount() == 3);
    CHECK(a.relations().size() == 3);
    CHECK(a.isConfluent());
    CHECK(normalForm(a, w(a, {"z", "x1"})) == w(a, {"x1", "z"}) - a.element("z"));
    // The tail of z uses x1 and x2, so {x3, z} cannot be restricted to.
    CHECK_THROWS_AS(restrictTo(p, p.subalgebra({"x2", "z"})), InvalidSubalgebra);
}

TEST_CASE("reduction budget") {
    const Presentation p = example();
    const Normalizer tiny(p, 3);
    CHECK_THROWS_AS(tiny(w(p, {"z", "z", "z", "x3", "x2", "x1"})), MalformedPresentation);
}
