#ifndef CAYT_EDGE_FN_HPP
#define CAYT_EDGE_FN_HPP

#include "cayt/automaton.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace cayt {

// Evaluator for a functional binary relation: computes the image of an input
// word without per-call automaton products. Internally a minimal DFA over
// symbol pairs; evaluation is a memoized search over (position, state) with
// the output digits as the only branching, so it runs in
// O(|x| * states * alphabet) worst case and far less in practice.
class EdgeFn {
public:
    explicit EdgeFn(const SyncAutomaton& relation);

    // First image found (least in label order). nullopt: no image.
    std::optional<Word> apply(const Word& x) const;

    // Explores every branch and raises Error::Kind::functionality if the
    // relation has two distinct images for x.
    std::optional<Word> apply_verified(const Word& x) const;

    const SyncAutomaton& relation_dfa() const { return dfa_; }

private:
    std::optional<Word> run(const Word& x, bool verify) const;

    SyncAutomaton dfa_;
    unsigned alpha_size_ = 0;
    // options_[state * (alpha_size_+1) + x_digit] = list of (y_digit, next)
    std::vector<std::vector<std::pair<std::uint8_t, State>>> options_;
    int pad_cap_ = 0; // longest admissible run of pad on the input tape
};

} // namespace cayt

#endif
