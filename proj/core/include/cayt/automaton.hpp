#ifndef CAYT_AUTOMATON_HPP
#define CAYT_AUTOMATON_HPP

#include "cayt/alphabet.hpp"
#include "cayt/errors.hpp"
#include "cayt/numeric.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace cayt {

using State = std::uint32_t;

// A transition label is a k-tuple over the pad-extended alphabet, encoded in
// base |Sigma|+1 with tape 0 as the most significant digit and the pad as the
// largest digit value. Integer order on labels therefore matches tuple order
// with the pad sorting after every real symbol.
using Label = std::uint64_t;

struct LabelCodec {
    unsigned base = 0; // |Sigma|+1
    int tapes = 0;
    std::vector<Label> pow; // pow[i] = base^i, pow.size() == tapes+1

    LabelCodec() = default;
    LabelCodec(std::size_t alphabet_size, int tapes_);

    unsigned pad() const { return base - 1; }
    unsigned digit(Label l, int tape) const {
        return static_cast<unsigned>((l / pow[tapes - 1 - tape]) % base);
    }
    Label with_digit(Label l, int tape, unsigned d) const {
        const Label p = pow[tapes - 1 - tape];
        return l - (l / p % base) * p + d * p;
    }
    Label encode(std::span<const unsigned> digits) const;
    Label all_pad() const { return pow[tapes] - 1; }
    std::size_t label_count() const { return static_cast<std::size_t>(pow[tapes]); }
};

struct Transition {
    State src;
    Label label;
    State dst;
};

// Convolution of a word tuple into a label sequence; shorter words are padded.
std::vector<Label> convolve(const WordTuple& words, const Alphabet& alphabet, int tapes = -1);
// Inverse; rejects pad-then-symbol sequences on any coordinate.
WordTuple deconvolve(std::span<const Label> labels, const Alphabet& alphabet, int tapes);

// Immutable k-tape synchronous finite automaton. Every instance is trimmed
// (all states on some initial-to-accepting path) and canonically numbered by
// breadth-first discovery with transitions in label order, so structurally
// equal automata are interchangeable. The factory enforces the padding
// discipline (once a tape reads pad it keeps reading pad) unless the relaxed
// flag is set, which reversal uses.
class SyncAutomaton {
public:
    SyncAutomaton() = default;

    static SyncAutomaton make(AlphabetRef alphabet,
                              int tapes,
                              State num_states,
                              std::vector<State> initial,
                              std::vector<State> accepting,
                              std::vector<Transition> transitions,
                              bool relaxed = false);

    // Normalizes (trim + canonical renumber) but trusts the caller on the
    // padding discipline. Internal operations preserve it by construction.
    static SyncAutomaton from_parts(AlphabetRef alphabet,
                                    int tapes,
                                    State num_states,
                                    std::vector<State> initial,
                                    std::vector<State> accepting,
                                    std::vector<Transition> transitions,
                                    bool relaxed);

    int tapes() const { return codec_.tapes; }
    const AlphabetRef& alphabet() const { return alphabet_; }
    const LabelCodec& codec() const { return codec_; }
    std::size_t num_states() const { return adj_.size(); }
    std::size_t num_transitions() const;
    const std::vector<State>& initial_states() const { return initial_; }
    const std::vector<State>& accepting_states() const { return accepting_; }
    bool is_accepting(State s) const { return accepting_bits_[s]; }
    const std::vector<std::pair<Label, State>>& transitions_from(State s) const { return adj_[s]; }
    bool relaxed_padding() const { return relaxed_; }
    bool deterministic() const { return deterministic_; }

    bool operator==(const SyncAutomaton& other) const;

private:
    AlphabetRef alphabet_;
    LabelCodec codec_;
    std::vector<State> initial_;
    std::vector<State> accepting_;
    std::vector<bool> accepting_bits_;
    std::vector<std::vector<std::pair<Label, State>>> adj_;
    bool relaxed_ = false;
    bool deterministic_ = true;
};

// --- acceptance and emptiness ---------------------------------------------

bool accepts_labels(const SyncAutomaton& a, std::span<const Label> labels);
bool accepts(const SyncAutomaton& a, const WordTuple& words);
bool is_empty(const SyncAutomaton& a);
std::optional<std::vector<Label>> shortest_accepted(const SyncAutomaton& a);

// --- the closure algebra ----------------------------------------------------

SyncAutomaton determinize(const SyncAutomaton& a);
SyncAutomaton minimize(const SyncAutomaton& a);
SyncAutomaton trim(const SyncAutomaton& a);
SyncAutomaton intersect(const SyncAutomaton& a, const SyncAutomaton& b);
SyncAutomaton unite(const SyncAutomaton& a, const SyncAutomaton& b);
// Complement relative to the language of well-formed convolutions.
SyncAutomaton complement(const SyncAutomaton& a);
// All well-formed convolutions over k tapes.
SyncAutomaton universe(AlphabetRef alphabet, int tapes);
SyncAutomaton reverse(const SyncAutomaton& a);
// Existential projection onto the kept tapes (sorted, distinct); pads are
// re-normalized so outputs are well-formed convolutions again.
SyncAutomaton project(const SyncAutomaton& a, std::span<const int> keep);
// Insert an unconstrained tape at position `pos` (0-based).
SyncAutomaton cylindrify(const SyncAutomaton& a, int pos);
SyncAutomaton compose(const SyncAutomaton& r1, const SyncAutomaton& r2);

// Synchronized product: accepts a K-tape convolution iff every component
// accepts the restriction to its mapped tapes (with the trailing all-pad
// block removed). Tapes covered by no component are unconstrained. This one
// primitive realizes intersection, cylindrification, composition and the
// joint automaton of a transducer.
struct JoinComponent {
    const SyncAutomaton* automaton;
    std::vector<int> tape_map; // component tape i -> global tape tape_map[i]
};
SyncAutomaton join(std::span<const JoinComponent> components, int out_tapes, AlphabetRef alphabet,
                   std::size_t state_budget = 8'000'000);

// Language equivalence via canonical minimal automata.
bool equivalent(const SyncAutomaton& a, const SyncAutomaton& b);

// --- counting and enumeration ----------------------------------------------

BigInt count_by_length(const SyncAutomaton& a, int n);
std::vector<BigInt> count_series(const SyncAutomaton& a, int max_n);
std::vector<WordTuple> enumerate_accepted(const SyncAutomaton& a, int max_len);
std::vector<std::vector<Label>> enumerate_labels(const SyncAutomaton& a, int max_len);

// --- functional relations ---------------------------------------------------

struct FunctionalCheck {
    bool total = false;
    bool single_valued = false;
    std::optional<Word> totality_witness;   // domain word with no image
    std::optional<Word> ambiguity_witness;  // input with two images
    bool ok() const { return total && single_valued; }
};
FunctionalCheck check_functional(const SyncAutomaton& relation, const SyncAutomaton& domain);

// Unique image of x under a functional relation; throws Error::Kind::domain
// when x has no image and Error::Kind::functionality on two images.
Word unique_image(const SyncAutomaton& relation, const Word& x);

// Least c with |y| <= |x| + c over all accepted pairs; an accepting cycle
// that reads pad on tape 0 makes the difference unbounded and raises
// Error::Kind::not_bounded.
int length_difference_bound(const SyncAutomaton& relation);

// Swap the two tapes of a binary relation.
SyncAutomaton swap_tapes(const SyncAutomaton& relation);

} // namespace cayt

#endif
