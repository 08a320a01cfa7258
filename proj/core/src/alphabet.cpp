#include "cayt/alphabet.hpp"

#include <sstream>

namespace cayt {

namespace {

bool valid_symbol_name(std::string_view s) {
    if (s.empty() || s == Alphabet::pad_name) return false;
    for (char c : s) {
        if (c == '(' || c == ')' || c == ',' || c == '.' || c == '#' || std::isspace(static_cast<unsigned char>(c)))
            return false;
    }
    return true;
}

} // namespace

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty()) raise(Error::Kind::invalid_argument, "alphabet must be nonempty");
    if (symbols_.size() > 200) raise(Error::Kind::invalid_argument, "alphabet too large");
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        const auto& s = symbols_[i];
        if (!valid_symbol_name(s))
            raise(Error::Kind::invalid_argument, "invalid symbol name '" + s + "'");
        if (!index_.emplace(s, static_cast<SymbolId>(i)).second)
            raise(Error::Kind::invalid_argument, "duplicate symbol '" + s + "'");
        if (s.size() != 1) single_char_ = false;
    }
}

const std::string& Alphabet::name(SymbolId id) const {
    if (id >= symbols_.size()) raise(Error::Kind::invalid_argument, "symbol id out of range");
    return symbols_[id];
}

std::optional<SymbolId> Alphabet::find(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::string Alphabet::format_word(const Word& w) const {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!single_char_ && i > 0) out += '.';
        out += name(static_cast<SymbolId>(static_cast<unsigned char>(w[i])));
    }
    return out;
}

Word Alphabet::parse_word(std::string_view text) const {
    Word out;
    if (text.empty()) return out;
    if (single_char_) {
        for (char c : text) {
            auto id = find(std::string_view(&c, 1));
            if (!id) raise(Error::Kind::parse, std::string("unknown symbol '") + c + "'");
            out.push_back(static_cast<char>(*id));
        }
        return out;
    }
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t dot = text.find('.', pos);
        std::string_view tok = text.substr(pos, dot == std::string_view::npos ? std::string_view::npos : dot - pos);
        auto id = find(tok);
        if (!id) raise(Error::Kind::parse, "unknown symbol '" + std::string(tok) + "'");
        out.push_back(static_cast<char>(*id));
        if (dot == std::string_view::npos) break;
        pos = dot + 1;
    }
    return out;
}

} // namespace cayt
