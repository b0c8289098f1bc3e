#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfgk/error.hpp"
#include "hopfgk/presentation.hpp"

namespace hopfgk {

/// A presentation document in the line-oriented DSL:
///
///     hopf "name"
///     gen x1 deg 1
///     gen z deg 2
///     rel [z,x1] = -z + 1/2*x1
///     delta z = x1 ox x2 - x2 ox x1
///
/// `#` starts a comment. Coefficients are integers or p/q.
struct PresentationSource {
    std::string text;
    std::string origin;  ///< file path or built-in name
};

struct Diagnostic {
    enum class Severity { Error, Warning };

    int line = 0;    ///< 1-based; 0 for whole-document diagnostics
    int column = 0;  ///< 1-based
    Severity severity = Severity::Error;
    std::string message;

    std::string str(const std::string& origin = {}) const;
};

struct ParseResult {
    std::optional<Presentation> presentation;
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return presentation.has_value(); }
};

ParseResult parse(const PresentationSource& src);

class ParseError : public Error {
public:
    ParseError(std::string origin, std::vector<Diagnostic> diagnostics);
    const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

private:
    std::vector<Diagnostic> diagnostics_;
};

/// parse() that throws ParseError on any error diagnostic.
Presentation parseOrThrow(const PresentationSource& src);

/// Renders `p` back into the DSL; parse(print(p)) reproduces p.
std::string print(const Presentation& p);

/// Same generators, relations and tails.
bool structurallyEqual(const Presentation& a, const Presentation& b);

}  // namespace hopfgk
