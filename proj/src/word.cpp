#include "hopfgk/word.hpp"

#include <algorithm>
#include <cctype>

#include "hopfgk/error.hpp"

namespace hopfgk {

bool Word::isNondecreasing() const {
    return std::is_sorted(letters_.begin(), letters_.end());
}

std::size_t Word::inversions() const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < letters_.size(); ++i)
        for (std::size_t j = i + 1; j < letters_.size(); ++j)
            if (letters_[i] > letters_[j]) ++n;
    return n;
}

std::optional<std::size_t> Word::firstDescent() const {
    for (std::size_t i = 0; i + 1 < letters_.size(); ++i)
        if (letters_[i] > letters_[i + 1]) return i;
    return std::nullopt;
}

Word Word::concat(const Word& other) const {
    std::vector<Letter> out;
    out.reserve(letters_.size() + other.letters_.size());
    out.insert(out.end(), letters_.begin(), letters_.end());
    out.insert(out.end(), other.letters_.begin(), other.letters_.end());
    return Word(std::move(out));
}

Word Word::slice(std::size_t from, std::size_t to) const {
    return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(from),
                                    letters_.begin() + static_cast<std::ptrdiff_t>(to)));
}

Word Word::reversed() const { return Word(std::vector<Letter>(letters_.rbegin(), letters_.rend())); }

std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return a.letters_ <=> b.letters_;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL ^ w.size();
    for (Letter l : w) h = (h ^ l) * 0x100000001b3ULL + (h >> 29);
    return h;
}

bool isIdentifier(std::string_view s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s.front())) && s.front() != '_') return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

SymbolTablePtr SymbolTable::make(const std::vector<std::pair<std::string, int>>& generators) {
    auto table = std::make_shared<SymbolTable>();
    for (const auto& [name, degree] : generators) {
        if (!isIdentifier(name)) throw MalformedPresentation("invalid generator name '" + name + "'");
        if (name == "ox") throw MalformedPresentation("'ox' is reserved");
        if (degree != 1 && degree != 2)
            throw MalformedPresentation("generator '" + name + "' has degree " +
                                        std::to_string(degree) + "; only 1 or 2 is supported");
        const auto index = static_cast<Letter>(table->generators_.size());
        if (!table->byName_.emplace(name, index).second)
            throw MalformedPresentation("duplicate generator '" + name + "'");
        table->generators_.push_back({name, index, degree});
    }
    return table;
}

std::optional<Letter> SymbolTable::find(std::string_view name) const {
    const auto it = byName_.find(std::string(name));
    if (it == byName_.end()) return std::nullopt;
    return it->second;
}

int SymbolTable::weight(const Word& w, Filtration f) const {
    int total = 0;
    for (Letter l : w) total += weight(l, f);
    return total;
}

int SymbolTable::maxDegree() const {
    int m = 0;
    for (const auto& g : generators_) m = std::max(m, g.degree);
    return m;
}

std::string SymbolTable::spell(const Word& w) const {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += '*';
        out += generators_.at(w[i]).name;
    }
    return out;
}

}  // namespace hopfgk
