#include "cayt/transducer.hpp"

namespace cayt {

ClassTTransducer::ClassTTransducer(GraphPresentation p, Word w0, int overrun)
    : presentation_(std::move(p)), base_word_(std::move(w0)), overrun_(overrun) {}

ClassTTransducer ClassTTransducer::from_presentation(GraphPresentation p) {
    Word w0 = p.base_word();
    return from_presentation(std::move(p), std::move(w0));
}

ClassTTransducer ClassTTransducer::from_presentation(GraphPresentation p, Word base_word) {
    ValidationReport report = p.validate();
    if (!report.ok())
        raise(Error::Kind::invalid_presentation, "presentation rejected:\n" + report.summary());
    if (!p.in_domain(base_word))
        raise(Error::Kind::domain, "base word not in the domain language");
    int overrun = 0;
    for (int j = 0; j < p.label_count(); ++j)
        overrun = std::max(overrun, length_difference_bound(p.edge(j)));
    return ClassTTransducer(std::move(p), std::move(base_word), overrun);
}

ClassTTransducer::Translation ClassTTransducer::translate(const Word& x) const {
    Translation out;
    if (!presentation_.in_domain(x)) return out;
    out.accepted = true;
    out.outputs.reserve(static_cast<std::size_t>(label_count()));
    for (int j = 0; j < label_count(); ++j) out.outputs.push_back(presentation_.apply_edge(j, x));
    return out;
}

SyncAutomaton ClassTTransducer::joint_automaton(std::size_t state_budget) const {
    const int k = label_count();
    std::vector<JoinComponent> comps;
    comps.reserve(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j)
        comps.push_back({&presentation_.edge(j), {0, j + 1}});
    return join(comps, k + 1, presentation_.alphabet(), state_budget);
}

} // namespace cayt
