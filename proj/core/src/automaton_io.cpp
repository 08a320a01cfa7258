#include "cayt/automaton_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace cayt {

namespace {

std::string label_text(const SyncAutomaton& a, Label l) {
    const LabelCodec& codec = a.codec();
    std::string out = "(";
    for (int i = 0; i < a.tapes(); ++i) {
        if (i > 0) out += ',';
        const unsigned d = codec.digit(l, i);
        out += d == codec.pad() ? std::string(Alphabet::pad_name) : a.alphabet()->name(static_cast<SymbolId>(d));
    }
    out += ')';
    return out;
}

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) {
        if (tok[0] == '#') break;
        out.push_back(tok);
    }
    return out;
}

} // namespace

void save_atm(const SyncAutomaton& a, std::ostream& os) {
    os << "tapes " << a.tapes() << '\n';
    os << "alphabet";
    for (const auto& s : a.alphabet()->names()) os << ' ' << s;
    os << '\n';
    os << "states " << a.num_states() << '\n';
    os << "initial";
    for (State s : a.initial_states()) os << ' ' << s;
    os << '\n';
    os << "accepting";
    for (State s : a.accepting_states()) os << ' ' << s;
    os << '\n';
    if (a.relaxed_padding()) os << "padding relaxed\n";
    for (State s = 0; s < a.num_states(); ++s)
        for (auto [l, d] : a.transitions_from(s)) os << s << ' ' << label_text(a, l) << ' ' << d << '\n';
}

std::string save_atm_string(const SyncAutomaton& a) {
    std::ostringstream ss;
    save_atm(a, ss);
    return ss.str();
}

SyncAutomaton load_atm(std::istream& is) {
    int tapes = -1;
    AlphabetRef alphabet;
    long long num_states = -1;
    std::vector<State> initial, accepting;
    std::vector<Transition> transitions;
    bool relaxed = false;
    bool have_initial = false, have_accepting = false;

    std::string line;
    std::size_t line_no = 0;
    auto fail = [&](const std::string& msg) {
        raise(Error::Kind::parse, "atm line " + std::to_string(line_no) + ": " + msg);
    };
    while (std::getline(is, line)) {
        ++line_no;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks[0] == "tapes") {
            if (toks.size() != 2) fail("expected 'tapes k'");
            tapes = std::stoi(toks[1]);
        } else if (toks[0] == "alphabet") {
            alphabet = make_alphabet({toks.begin() + 1, toks.end()});
        } else if (toks[0] == "states") {
            if (toks.size() != 2) fail("expected 'states N'");
            num_states = std::stoll(toks[1]);
        } else if (toks[0] == "initial") {
            have_initial = true;
            for (std::size_t i = 1; i < toks.size(); ++i) initial.push_back(static_cast<State>(std::stoul(toks[i])));
        } else if (toks[0] == "accepting") {
            have_accepting = true;
            for (std::size_t i = 1; i < toks.size(); ++i) accepting.push_back(static_cast<State>(std::stoul(toks[i])));
        } else if (toks[0] == "padding") {
            if (toks.size() != 2 || toks[1] != "relaxed") fail("expected 'padding relaxed'");
            relaxed = true;
        } else {
            // transition: src (a,b,...) dst
            if (toks.size() != 3) fail("expected 'src (label) dst'");
            if (tapes < 1 || !alphabet) fail("transition before header");
            const std::string& lab = toks[1];
            if (lab.size() < 2 || lab.front() != '(' || lab.back() != ')') fail("malformed label");
            std::vector<unsigned> digits;
            std::string cur;
            LabelCodec codec(alphabet->size(), tapes);
            for (std::size_t i = 1; i + 1 <= lab.size() - 1; ++i) {
                if (lab[i] == ',') {
                    digits.push_back(0);
                    if (cur == Alphabet::pad_name) digits.back() = codec.pad();
                    else {
                        auto id = alphabet->find(cur);
                        if (!id) fail("unknown symbol '" + cur + "'");
                        digits.back() = *id;
                    }
                    cur.clear();
                } else {
                    cur += lab[i];
                }
            }
            {
                digits.push_back(0);
                if (cur == Alphabet::pad_name) digits.back() = codec.pad();
                else {
                    auto id = alphabet->find(cur);
                    if (!id) fail("unknown symbol '" + cur + "'");
                    digits.back() = *id;
                }
            }
            if (static_cast<int>(digits.size()) != tapes) fail("label arity mismatch");
            transitions.push_back({static_cast<State>(std::stoul(toks[0])),
                                   codec.encode(digits),
                                   static_cast<State>(std::stoul(toks[2]))});
        }
    }
    if (tapes < 1 || !alphabet || num_states < 0 || !have_initial || !have_accepting)
        raise(Error::Kind::parse, "atm: incomplete header");
    return SyncAutomaton::make(alphabet, tapes, static_cast<State>(num_states), std::move(initial),
                               std::move(accepting), std::move(transitions), relaxed);
}

SyncAutomaton load_atm_string(const std::string& text) {
    std::istringstream ss(text);
    return load_atm(ss);
}

void save_atm_file(const SyncAutomaton& a, const std::string& path) {
    std::ofstream os(path);
    if (!os) raise(Error::Kind::io, "cannot open '" + path + "' for writing");
    save_atm(a, os);
}

SyncAutomaton load_atm_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) raise(Error::Kind::io, "cannot open '" + path + "'");
    return load_atm(is);
}

std::string to_dot(const SyncAutomaton& a, const std::string& name) {
    std::ostringstream os;
    os << "digraph " << name << " {\n  rankdir=LR;\n  node [shape=circle];\n";
    for (State s : a.accepting_states()) os << "  " << s << " [shape=doublecircle];\n";
    os << "  start [shape=none,label=\"\"];\n";
    for (State s : a.initial_states()) os << "  start -> " << s << ";\n";
    for (State s = 0; s < a.num_states(); ++s)
        for (auto [l, d] : a.transitions_from(s))
            os << "  " << s << " -> " << d << " [label=\"" << label_text(a, l) << "\"];\n";
    os << "}\n";
    return os.str();
}

} // namespace cayt
