#include "hopfgk/growth.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "hopfgk/error.hpp"
#include "hopfgk/rewrite.hpp"
#include "hopfgk/solver.hpp"
#include "hopfgk/structure.hpp"

namespace hopfgk {

std::string certificateName(GrowthCertificate c) {
    switch (c) {
        case GrowthCertificate::EnvelopingAlgebra: return "enveloping-algebra";
        case GrowthCertificate::NormalPrimitiveSubalgebra: return "normal-primitive-subalgebra";
        case GrowthCertificate::AlmostCentralizingExtension: return "almost-centralizing-extension";
        case GrowthCertificate::PbwCount: return "pbw-count";
        case GrowthCertificate::None: return "none";
    }
    return "none";
}

std::vector<std::size_t> pbwMonomialCount(const SymbolTable& table, int maxDegree, Filtration f) {
    // exact[k] = multisets of weight exactly k; coefficients of Π 1/(1 - t^w).
    std::vector<std::size_t> exact(static_cast<std::size_t>(maxDegree) + 1, 0);
    exact[0] = 1;
    for (Letter l = 0; l < table.size(); ++l) {
        const int w = table.weight(l, f);
        for (int k = w; k <= maxDegree; ++k) exact[k] += exact[k - w];
    }
    std::vector<std::size_t> out(exact.size());
    std::size_t running = 0;
    for (std::size_t k = 0; k < exact.size(); ++k) out[k] = running += exact[k];
    return out;
}

double fittedExponent(const std::vector<std::size_t>& dims) {
    if (dims.size() < 3) return 0.0;
    const int top = static_cast<int>(dims.size()) - 1;
    const int first = std::max(1, top / 2);
    const int points = top - first + 1;
    const int corrections = std::clamp(points - 3, 0, 3);
    const int cols = 2 + corrections;

    Eigen::MatrixXd a(points, cols);
    Eigen::VectorXd b(points);
    for (int i = 0; i < points; ++i) {
        const double n = first + i;
        a(i, 0) = 1.0;
        a(i, 1) = std::log(n);
        for (int c = 0; c < corrections; ++c) a(i, 2 + c) = std::pow(n, -(c + 1));
        b(i) = std::log(static_cast<double>(dims[first + i]));
    }
    const Eigen::VectorXd x = a.colPivHouseholderQr().solve(b);
    return x(1);
}

namespace {

std::vector<std::size_t> countNormalWords(const Presentation& p, int maxDegree, Filtration f) {
    const auto& table = *p.table();
    std::vector<std::size_t> exact(static_cast<std::size_t>(maxDegree) + 1, 0);
    for (const Word& w : enumerateBasis(p, maxDegree, f).words) ++exact[table.weight(w, f)];
    std::vector<std::size_t> out(exact.size());
    std::size_t running = 0;
    for (std::size_t k = 0; k < exact.size(); ++k) out[k] = running += exact[k];
    return out;
}

bool relationClosed(const Presentation& p, const SubalgebraSpec& sub) {
    try {
        requireRelationClosed(p, sub);
        return true;
    } catch (const InvalidSubalgebra&) {
        return false;
    }
}

// Smallest extension rank d first, then lexicographic generator subsets.
std::optional<SubalgebraSpec> almostCentralizingBase(const Presentation& p) {
    const HopfAlgebra hopf(p);
    const std::size_t n = p.generatorCount();
    if (n < 2 || n > 20) return std::nullopt;
    for (std::size_t d = 1; d < n; ++d) {
        for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
            if (static_cast<std::size_t>(__builtin_popcount(mask)) != n - d) continue;
            std::vector<std::string> names;
            for (Letter l = 0; l < n; ++l)
                if (mask & (1u << l)) names.push_back(p.generator(l).name);
            const SubalgebraSpec sub = p.subalgebra(names, "A");
            if (!relationClosed(p, sub)) continue;
            bool hopfSub = true;
            for (Letter l : sub.generators)
                for (const auto& [key, c] : p.deltaTail(l).terms())
                    for (Letter x : key.first.concat(key.second)) hopfSub = hopfSub && sub.contains(x);
            if (!hopfSub) continue;
            if (checkAlmostCentralizing(hopf, sub).passed()) return sub;
        }
    }
    return std::nullopt;
}

}  // namespace

GrowthReport growthFunction(const Presentation& p, int maxDegree, Filtration f) {
    if (maxDegree < 0) throw DomainError("maxDegree must be non-negative");
    GrowthReport r;
    r.filtration = f;
    r.maxDegree = maxDegree;
    r.dims = countNormalWords(p, maxDegree, f);
    r.weightedDims = f == Filtration::Weighted ? r.dims : countNormalWords(p, maxDegree, Filtration::Weighted);
    r.fittedExponent = fittedExponent(r.dims);

    if (!p.isConfluent()) {
        r.estimateOnly = true;
        return r;
    }
    r.pbwCount = pbwMonomialCount(*p.table(), maxDegree, f);
    r.exactGK = static_cast<int>(p.generatorCount());

    if (p.generatorsOfDegree(2).empty()) {
        r.certificate = GrowthCertificate::EnvelopingAlgebra;
    } else if (checkNormal(p, p.primitiveSubalgebra()).isNormal) {
        r.certificate = GrowthCertificate::NormalPrimitiveSubalgebra;
    } else if (auto base = almostCentralizingBase(p)) {
        r.certificate = GrowthCertificate::AlmostCentralizingExtension;
        r.baseGK = static_cast<int>(base->generators.size());
        r.extensionRank = static_cast<int>(p.generatorCount() - base->generators.size());
        r.base = std::move(base);
    } else {
        r.certificate = GrowthCertificate::PbwCount;
    }
    return r;
}

GkVersusP2Report gkVersusP2(const Presentation& p) {
    GkVersusP2Report r;
    r.degreeBound = defaultDegreeBound(p);
    if (!p.isConfluent()) {
        r.note = "not confluent";
        return r;
    }
    const HopfAlgebra hopf(p);
    const SubspaceBasis prim = primitiveSpace(hopf, r.degreeBound);
    r.dimP = prim.dim();
    r.dimP2 = antiCocommutativeSpace(hopf, r.degreeBound, prim).dim();
    r.exactGK = static_cast<int>(p.generatorCount());
    r.agreement = *r.exactGK == static_cast<int>(r.dimP2);

    if (p.generatorsOfDegree(2).empty()) {
        r.note = "not in class: H is generated by primitives (H = U_H)";
        return r;
    }
    r.inClass = true;
    bool criterion = false;
    try {
        criterion = bracketCriterion(hopf);
    } catch (const CriterionInapplicable& e) {
        r.note = std::string("criterion inapplicable: ") + e.what();
        return r;
    }
    r.hypothesis = criterion && checkNormal(hopf, p.primitiveSubalgebra()).isNormal;
    r.note = r.hypothesis ? "hypothesis holds: U_H is normal" : "criterion inapplicable: U_H is not normal";
    return r;
}

}  // namespace hopfgk
