#ifndef CAYT_TESTS_HELPERS_HPP
#define CAYT_TESTS_HELPERS_HPP

#include "cayt/automaton.hpp"
#include "cayt/rng.hpp"

#include <string>
#include <vector>

namespace cayt::testing {

inline AlphabetRef ab_alphabet() { return make_alphabet({"a", "b"}); }

inline Word w(const Alphabet& alphabet, const std::string& text) { return alphabet.parse_word(text); }

// single-word automaton over a 1-tape alphabet
inline SyncAutomaton word_automaton(AlphabetRef alphabet, const Word& word) {
    std::vector<Transition> trans;
    for (std::size_t i = 0; i < word.size(); ++i)
        trans.push_back({static_cast<State>(i), static_cast<Label>(static_cast<unsigned char>(word[i])),
                         static_cast<State>(i + 1)});
    return SyncAutomaton::make(alphabet, 1, static_cast<State>(word.size() + 1), {0},
                               {static_cast<State>(word.size())}, std::move(trans));
}

// identity relation over all words of the alphabet
inline SyncAutomaton identity_relation(AlphabetRef alphabet) {
    LabelCodec codec(alphabet->size(), 2);
    std::vector<Transition> trans;
    for (unsigned s = 0; s < alphabet->size(); ++s) {
        const unsigned dig[2] = {s, s};
        trans.push_back({0, codec.encode(dig), 0});
    }
    return SyncAutomaton::make(alphabet, 2, 1, {0}, {0}, std::move(trans));
}

// successor on the unary encoding over {u}: pairs (u^n, u^{n+1})
inline SyncAutomaton unary_successor() {
    AlphabetRef alphabet = make_alphabet({"u"});
    LabelCodec codec(1, 2);
    const unsigned uu[2] = {0, 0};
    const unsigned pu[2] = {codec.pad(), 0};
    std::vector<Transition> trans{{0, codec.encode(uu), 0}, {0, codec.encode(pu), 1}};
    return SyncAutomaton::make(alphabet, 2, 2, {0}, {1}, std::move(trans));
}

// seeded random k-tape automaton; normalization may trim it to nothing
inline SyncAutomaton random_automaton(AlphabetRef alphabet, int tapes, RngStream& rng,
                                      State max_states = 6, std::size_t max_transitions = 14) {
    LabelCodec codec(alphabet->size(), tapes);
    const State n = 2 + static_cast<State>(rng.below(max_states - 1));
    std::vector<Transition> trans;
    const std::size_t m = 1 + rng.below(max_transitions);
    for (std::size_t i = 0; i < m; ++i) {
        const State src = static_cast<State>(rng.below(n));
        const State dst = static_cast<State>(rng.below(n));
        const Label l = rng.below(codec.all_pad());
        trans.push_back({src, l, dst});
    }
    std::vector<State> accepting;
    for (State s = 0; s < n; ++s)
        if (rng.below(3) == 0) accepting.push_back(s);
    if (accepting.empty()) accepting.push_back(static_cast<State>(rng.below(n)));
    return SyncAutomaton::make(alphabet, tapes, n, {0}, std::move(accepting), std::move(trans));
}

// random word-tuple over the alphabet
inline WordTuple random_tuple(std::size_t alphabet_size, int tapes, RngStream& rng, std::size_t max_len = 6) {
    WordTuple out;
    for (int i = 0; i < tapes; ++i) {
        Word word;
        const std::size_t len = rng.below(max_len + 1);
        for (std::size_t j = 0; j < len; ++j)
            word.push_back(static_cast<char>(rng.below(alphabet_size)));
        out.push_back(std::move(word));
    }
    return out;
}

} // namespace cayt::testing

#endif
