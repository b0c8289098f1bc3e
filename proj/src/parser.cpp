#include "hopfgk/parser.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace hopfgk {

namespace {

struct Token {
    enum class Kind { Ident, Number, String, Punct, End };
    Kind kind = Kind::End;
    std::string text;
    int column = 0;
};

struct LineError {
    int column;
    std::string message;
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        const char c = line[i];
        const int col = static_cast<int>(i) + 1;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < line.size() && (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_')) ++j;
            out.push_back({Token::Kind::Ident, line.substr(i, j - i), col});
            i = j;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
            out.push_back({Token::Kind::Number, line.substr(i, j - i), col});
            i = j;
        } else if (c == '"') {
            const std::size_t close = line.find('"', i + 1);
            if (close == std::string::npos) throw LineError{col, "unterminated string"};
            out.push_back({Token::Kind::String, line.substr(i + 1, close - i - 1), col});
            i = close + 1;
        } else if (std::string_view("[],=+-*/()").find(c) != std::string_view::npos) {
            out.push_back({Token::Kind::Punct, std::string(1, c), col});
            ++i;
        } else {
            throw LineError{col, std::string("unexpected character '") + c + "'"};
        }
    }
    out.push_back({Token::Kind::End, "", static_cast<int>(line.size()) + 1});
    return out;
}

class LineParser {
public:
    LineParser(std::vector<Token> tokens, SymbolTablePtr table)
        : tokens_(std::move(tokens)), table_(std::move(table)) {}

    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() { return tokens_[pos_ == tokens_.size() - 1 ? pos_ : pos_++]; }
    bool atEnd() const { return peek().kind == Token::Kind::End; }
    bool isPunct(char c) const { return peek().kind == Token::Kind::Punct && peek().text[0] == c; }

    void expectPunct(char c) {
        if (!isPunct(c)) throw LineError{peek().column, std::string("expected '") + c + "'"};
        next();
    }
    const Token& expectIdent(const char* what) {
        if (peek().kind != Token::Kind::Ident) throw LineError{peek().column, std::string("expected ") + what};
        return next();
    }
    void expectEnd() {
        if (!atEnd()) throw LineError{peek().column, "unexpected '" + peek().text + "'"};
    }

    Letter generator(const Token& t) const {
        const auto l = table_->find(t.text);
        if (!l) throw LineError{t.column, "unknown identifier '" + t.text + "'"};
        return *l;
    }

    Scalar rational() {
        const Token num = next();
        std::string text = num.text;
        if (isPunct('/')) {
            next();
            if (peek().kind != Token::Kind::Number) throw LineError{num.column, "malformed rational"};
            text += "/" + next().text;
        }
        try {
            return Scalar::parse(text);
        } catch (const std::invalid_argument&) {
            throw LineError{num.column, "malformed rational '" + text + "'"};
        }
    }

    // expr := ['+'|'-'] term (('+'|'-') term)*
    AlgebraElement expression() {
        AlgebraElement out(table_);
        bool negate = false;
        if (isPunct('+') || isPunct('-')) negate = next().text == "-";
        out += negate ? -term() : term();
        while (isPunct('+') || isPunct('-')) {
            const bool minus = next().text == "-";
            out += minus ? -term() : term();
        }
        return out;
    }

    AlgebraElement term() {
        AlgebraElement out = factor();
        while (isPunct('*')) {
            next();
            out = out * factor();
        }
        return out;
    }

    AlgebraElement factor() {
        const Token& t = peek();
        if (t.kind == Token::Kind::Number) return AlgebraElement::scalar(table_, rational());
        if (t.kind == Token::Kind::Ident) {
            if (t.text == "ox") throw LineError{t.column, "tensor 'ox' is only allowed in delta lines"};
            return AlgebraElement::generator(table_, generator(next()));
        }
        if (isPunct('(')) {
            next();
            AlgebraElement inner = expression();
            expectPunct(')');
            return inner;
        }
        if (isPunct('/')) throw LineError{t.column, "malformed rational"};
        throw LineError{t.column, t.kind == Token::Kind::End ? "unexpected end of line"
                                                             : "unexpected '" + t.text + "'"};
    }

    // tsum := ['+'|'-'] tterm (('+'|'-') tterm)*;  tterm := [rational ['*']] gen 'ox' gen
    TensorElement tensorSum(const SymbolTable& table) {
        TensorElement out(table_);
        if (peek().kind == Token::Kind::Number && peek().text == "0" && tokens_[pos_ + 1].kind == Token::Kind::End) {
            next();
            return out;
        }
        bool first = true;
        while (first || isPunct('+') || isPunct('-')) {
            Scalar sign = 1;
            if (isPunct('+') || isPunct('-')) sign = next().text == "-" ? -1 : 1;
            else if (!first) break;
            first = false;
            Scalar coef = 1;
            if (peek().kind == Token::Kind::Number) {
                coef = rational();
                if (isPunct('*')) next();
            }
            const Token& left = expectIdent("generator");
            const Letter l = generator(left);
            const Token& op = expectIdent("'ox'");
            if (op.text != "ox") throw LineError{op.column, "expected 'ox'"};
            const Token& right = expectIdent("generator");
            const Letter r = generator(right);
            for (const auto* tok : {&left, &right}) {
                const Letter g = generator(*tok);
                if (table[g].degree != 1)
                    throw LineError{tok->column, "delta leg '" + tok->text + "' is not a degree-1 generator"};
            }
            out.addTerm(Word::letter(l), Word::letter(r), sign * coef);
        }
        return out;
    }

private:
    std::vector<Token> tokens_;
    SymbolTablePtr table_;
    std::size_t pos_ = 0;
};

struct Line {
    int number;
    std::vector<Token> tokens;
};

}  // namespace

std::string Diagnostic::str(const std::string& origin) const {
    std::ostringstream os;
    if (!origin.empty()) os << origin << ":";
    if (line > 0) os << line << ":" << column << ": ";
    else if (!origin.empty()) os << " ";
    os << (severity == Severity::Error ? "error: " : "warning: ") << message;
    return os.str();
}

ParseError::ParseError(std::string origin, std::vector<Diagnostic> diagnostics)
    : Error([&] {
          std::string msg = "failed to parse " + (origin.empty() ? std::string("presentation") : origin);
          for (const auto& d : diagnostics)
              if (d.severity == Diagnostic::Severity::Error) msg += "\n  " + d.str();
          return msg;
      }()),
      diagnostics_(std::move(diagnostics)) {}

ParseResult parse(const PresentationSource& src) {
    ParseResult result;
    auto error = [&](int line, int col, std::string msg) {
        result.diagnostics.push_back({line, col, Diagnostic::Severity::Error, std::move(msg)});
    };
    auto warning = [&](int line, int col, std::string msg) {
        result.diagnostics.push_back({line, col, Diagnostic::Severity::Warning, std::move(msg)});
    };

    // Pass 1: tokenize, header and generators.
    std::vector<Line> body;
    std::optional<std::string> name;
    int headerLine = 0;
    std::vector<std::pair<std::string, int>> gens;
    std::map<std::string, int> genLine;
    std::istringstream in(src.text);
    std::string raw;
    int lineNo = 0;
    while (std::getline(in, raw)) {
        ++lineNo;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        try {
            auto tokens = tokenize(raw);
            if (tokens.front().kind == Token::Kind::End) continue;
            const Token& head = tokens.front();
            if (head.kind != Token::Kind::Ident) throw LineError{head.column, "expected a keyword"};
            if (head.text == "hopf") {
                if (name) throw LineError{head.column, "duplicate 'hopf' header"};
                if (tokens[1].kind != Token::Kind::String) throw LineError{tokens[1].column, "expected a quoted name"};
                if (tokens[2].kind != Token::Kind::End) throw LineError{tokens[2].column, "unexpected '" + tokens[2].text + "'"};
                name = tokens[1].text;
                headerLine = lineNo;
            } else if (head.text == "gen") {
                LineParser lp(tokens, nullptr);
                lp.next();
                const Token& id = lp.expectIdent("generator name");
                const Token& kw = lp.expectIdent("'deg'");
                if (kw.text != "deg") throw LineError{kw.column, "expected 'deg'"};
                const Token& deg = lp.next();
                if (deg.kind != Token::Kind::Number || (deg.text != "1" && deg.text != "2"))
                    throw LineError{deg.column, "degree must be 1 or 2"};
                lp.expectEnd();
                if (id.text == "ox" || id.text == "gen" || id.text == "rel" || id.text == "delta" ||
                    id.text == "hopf" || id.text == "deg")
                    throw LineError{id.column, "'" + id.text + "' is a reserved word"};
                if (genLine.count(id.text)) throw LineError{id.column, "duplicate generator '" + id.text + "'"};
                genLine[id.text] = lineNo;
                gens.emplace_back(id.text, std::stoi(deg.text));
            } else if (head.text == "rel" || head.text == "delta") {
                body.push_back({lineNo, std::move(tokens)});
            } else {
                throw LineError{head.column, "unknown keyword '" + head.text + "'"};
            }
        } catch (const LineError& e) {
            error(lineNo, e.column, e.message);
        }
    }
    if (!name) error(0, 0, "missing 'hopf \"<name>\"' header");
    if (gens.empty()) error(0, 0, "no generators declared");
    if (gens.empty()) return result;

    PresentationBuilder builder(name.value_or(src.origin));
    for (const auto& [n, d] : gens) builder.generator(n, d);
    const SymbolTablePtr table = builder.table();
    const std::size_t n = table->size();
    (void)headerLine;

    // Pass 2: relations and delta tails.
    std::vector<int> relLine(n * n, 0);
    std::vector<int> deltaLine(n, 0);
    for (const Line& line : body) {
        try {
            LineParser lp(line.tokens, table);
            const Token& head = lp.next();
            if (head.text == "rel") {
                lp.expectPunct('[');
                const Token& a = lp.expectIdent("generator");
                lp.expectPunct(',');
                const Token& b = lp.expectIdent("generator");
                lp.expectPunct(']');
                lp.expectPunct('=');
                const Letter la = lp.generator(a);
                const Letter lb = lp.generator(b);
                if (la == lb) throw LineError{a.column, "relation [" + a.text + "," + b.text + "] relates a generator with itself"};
                const int rhsColumn = lp.peek().column;
                AlgebraElement rhs = lp.expression();
                lp.expectEnd();
                const Letter hi = std::max(la, lb);
                const Letter lo = std::min(la, lb);
                if (relLine[hi * n + lo])
                    throw LineError{head.column, "duplicate relation for pair (" + (*table)[lo].name + "," +
                                                     (*table)[hi].name + ")"};
                const int budget = (*table)[la].degree + (*table)[lb].degree;
                for (const auto& [w, c] : rhs.terms()) {
                    if (w.empty()) throw LineError{rhsColumn, "relation rhs has a constant term"};
                    if (w.size() > 2) throw LineError{rhsColumn, "relation rhs word " + table->spell(w) + " is longer than 2"};
                    if (!w.isNondecreasing())
                        throw LineError{rhsColumn, "relation rhs word " + table->spell(w) + " is not in normal form"};
                    if (table->weight(w) >= budget)
                        throw LineError{rhsColumn, "relation rhs word " + table->spell(w) + " is not degree-dropping"};
                }
                relLine[hi * n + lo] = line.number;
                builder.bracket(la, lb, rhs);
            } else {
                const Token& g = lp.expectIdent("generator");
                const Letter lg = lp.generator(g);
                if ((*table)[lg].degree != 2)
                    throw LineError{g.column, "delta on degree-1 generator '" + g.text + "'"};
                if (deltaLine[lg]) throw LineError{head.column, "duplicate delta for '" + g.text + "'"};
                lp.expectPunct('=');
                const int rhsColumn = lp.peek().column;
                TensorElement tail = lp.tensorSum(*table);
                lp.expectEnd();
                if (!(tail.twist() == -tail)) throw LineError{rhsColumn, "tail not antisymmetric"};
                if (tail.isZero()) warning(line.number, rhsColumn, "delta of '" + g.text + "' is zero");
                deltaLine[lg] = line.number;
                builder.deltaTail(lg, tail);
            }
        } catch (const LineError& e) {
            error(line.number, e.column, e.message);
        } catch (const Error& e) {
            error(line.number, 1, e.what());
        }
    }

    const int lastLine = lineNo;
    for (Letter hi = 0; hi < n; ++hi)
        for (Letter lo = 0; lo < hi; ++lo)
            if (!relLine[hi * n + lo])
                error(lastLine, 1, "missing relation for pair (" + (*table)[lo].name + "," + (*table)[hi].name + ")");
    for (Letter g = 0; g < n; ++g)
        if ((*table)[g].degree == 2 && !deltaLine[g])
            error(genLine[(*table)[g].name], 1, "missing delta for degree-2 generator '" + (*table)[g].name + "'");

    for (const auto& d : result.diagnostics)
        if (d.severity == Diagnostic::Severity::Error) return result;
    try {
        result.presentation = builder.build();
    } catch (const Error& e) {
        error(0, 0, e.what());
    }
    return result;
}

Presentation parseOrThrow(const PresentationSource& src) {
    ParseResult r = parse(src);
    if (!r.ok()) throw ParseError(src.origin, std::move(r.diagnostics));
    return std::move(*r.presentation);
}

std::string print(const Presentation& p) {
    const SymbolTable& t = *p.table();
    std::ostringstream os;
    os << "hopf \"" << p.name() << "\"\n";
    for (const auto& g : t.generators()) os << "gen " << g.name << " deg " << g.degree << "\n";
    for (const Relation& r : p.relations())
        os << "rel [" << t[r.hi].name << "," << t[r.lo].name << "] = " << r.rhs.str() << "\n";
    for (const auto& g : t.generators())
        if (g.degree == 2) os << "delta " << g.name << " = " << p.deltaTail(g.index).str() << "\n";
    return os.str();
}

bool structurallyEqual(const Presentation& a, const Presentation& b) {
    if (a.name() != b.name() || !a.table()->sameAs(*b.table())) return false;
    if (a.relations().size() != b.relations().size()) return false;
    for (std::size_t i = 0; i < a.relations().size(); ++i) {
        const Relation& ra = a.relations()[i];
        const Relation& rb = b.relations()[i];
        if (ra.hi != rb.hi || ra.lo != rb.lo || ra.rhs.terms() != rb.rhs.terms()) return false;
    }
    for (Letter g = 0; g < a.generatorCount(); ++g)
        if (a.deltaTail(g).terms() != b.deltaTail(g).terms()) return false;
    return true;
}

}  // namespace hopfgk
