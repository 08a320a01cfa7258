#ifndef CAYT_ALPHABET_HPP
#define CAYT_ALPHABET_HPP

#include "cayt/errors.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cayt {

using SymbolId = std::uint8_t;

// A word is a byte string of symbol indices. The pad never occurs in a word;
// it exists only inside transition labels of multi-tape automata.
using Word = std::string;
using WordTuple = std::vector<Word>;

class Alphabet {
public:
    // Reserved rendering of the pad in text formats; not a legal symbol name.
    static constexpr std::string_view pad_name = "_";

    explicit Alphabet(std::vector<std::string> symbols);

    std::size_t size() const { return symbols_.size(); }
    const std::string& name(SymbolId id) const;
    std::optional<SymbolId> find(std::string_view name) const;
    const std::vector<std::string>& names() const { return symbols_; }

    // Words render as plain concatenation when every symbol is one character,
    // otherwise as '.'-separated tokens. The empty word renders as "".
    std::string format_word(const Word& w) const;
    Word parse_word(std::string_view text) const;

    bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }
    bool operator!=(const Alphabet& other) const { return !(*this == other); }

private:
    std::vector<std::string> symbols_;
    std::map<std::string, SymbolId, std::less<>> index_;
    bool single_char_ = true;
};

using AlphabetRef = std::shared_ptr<const Alphabet>;

inline AlphabetRef make_alphabet(std::vector<std::string> symbols) {
    return std::make_shared<const Alphabet>(std::move(symbols));
}

// Length-lexicographic comparison used everywhere a word ordering is needed.
struct LengthLexLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
    bool operator()(const WordTuple& a, const WordTuple& b) const {
        return a < b; // tuples compare componentwise; used for determinism only
    }
};

} // namespace cayt

#endif
