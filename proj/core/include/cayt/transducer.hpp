#ifndef CAYT_TRANSDUCER_HPP
#define CAYT_TRANSDUCER_HPP

#include "cayt/presentation.hpp"

namespace cayt {

// Semantic realization of a synchronized transducer: a validated graph
// presentation together with a base word and the overrun constant, the least
// c with |output| <= |input| + c across all edges.
class ClassTTransducer {
public:
    static ClassTTransducer from_presentation(GraphPresentation p);
    static ClassTTransducer from_presentation(GraphPresentation p, Word base_word);

    struct Translation {
        bool accepted = false;
        std::vector<Word> outputs; // one per label when accepted
    };
    // Rejection (input outside the domain) is a result, not an error.
    Translation translate(const Word& x) const;

    const GraphPresentation& presentation() const { return presentation_; }
    int label_count() const { return presentation_.label_count(); }
    const Word& base_word() const { return base_word_; }
    int overrun() const { return overrun_; }

    // (k+1)-tape automaton accepting x (x) y_1 (x) ... (x) y_k exactly when
    // translate(x) = (y_1,...,y_k); the product of the edge relations glued
    // along the input tape.
    SyncAutomaton joint_automaton(std::size_t state_budget = 8'000'000) const;

private:
    ClassTTransducer(GraphPresentation p, Word w0, int overrun);

    GraphPresentation presentation_;
    Word base_word_;
    int overrun_ = 0;
};

} // namespace cayt

#endif
