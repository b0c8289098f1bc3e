#pragma once

#include <json.hpp>

#include "hopfgk/growth.hpp"
#include "hopfgk/structure.hpp"

namespace hopfgk {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json toJson(const Scalar& s);  ///< "p/q"
Json toJson(const SymbolTable& table, const Word& w);  ///< generator-name array
Json toJson(const AlgebraElement& a);
Json toJson(const TensorElement& t);
Json toJson(const SymbolTable& table, const SubalgebraSpec& sub);
Json toJson(const Presentation& p);
Json toJson(const Presentation& p, const ConfluenceReport& r);
Json toJson(const AxiomReport& r);
Json toJson(const SubspaceBasis& b, int degreeBound);
Json toJson(const NormalityReport& r);
Json toJson(const Presentation& p, const ACEReport& r);
Json toJson(const EquivalenceReport& r);
Json toJson(const BracketPropertyReport& r);
Json toJson(const Presentation& p, const GrowthReport& r);
Json toJson(const GkVersusP2Report& r);

struct ReportOptions {
    int maxDegree = 12;
    int degreeBound = 0;  ///< 0: the presentation's default bound
    std::size_t pairs = 100;
    std::uint32_t seed = 20240601;
};

/// Every analysis on `p`, keyed by operation name. Sections that need a
/// confluent presentation are omitted otherwise.
Json fullReport(const Presentation& p, const std::string& origin, const ReportOptions& options = {});

}  // namespace hopfgk
