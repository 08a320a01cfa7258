#ifndef CAYT_PRESENTATION_HPP
#define CAYT_PRESENTATION_HPP

#include "cayt/automaton.hpp"
#include "cayt/edge_fn.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cayt {

struct ValidationCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool ok() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
    std::string summary() const;
};

// Automatic presentation of a labeled directed graph: a regular vertex
// language plus one functional, total edge relation per label. Instances are
// immutable; edge application runs through precompiled evaluators.
class GraphPresentation {
public:
    GraphPresentation(AlphabetRef alphabet,
                      SyncAutomaton domain,
                      std::vector<SyncAutomaton> edges,
                      std::vector<std::string> edge_names,
                      std::optional<std::vector<int>> inverse_pairing,
                      Word base_word);

    int label_count() const { return static_cast<int>(edges_.size()); }
    const AlphabetRef& alphabet() const { return alphabet_; }
    const SyncAutomaton& domain() const { return domain_; }
    const SyncAutomaton& edge(int j) const { return edges_.at(static_cast<std::size_t>(j)); }
    const std::vector<std::string>& edge_names() const { return edge_names_; }
    const std::optional<std::vector<int>>& inverse_pairing() const { return inverse_pairing_; }
    const Word& base_word() const { return base_word_; }

    bool in_domain(const Word& w) const;
    // Image of w under edge j; throws Error::Kind::domain if w has none.
    Word apply_edge(int j, const Word& w) const;
    std::optional<Word> try_edge(int j, const Word& w) const;

    // Follow edge labels from w0; a missing image mid-path is a domain error.
    Word word_of(const Word& w0, std::span<const int> path) const;

    // Functionality, totality, closure and inverse-pairing consistency, each
    // reported with a witness when it fails.
    ValidationReport validate() const;

    // Derived presentation whose label j is the composition of this
    // presentation's edges along paths[j].
    GraphPresentation generator_products(const std::vector<std::vector<int>>& paths,
                                         std::vector<std::string> names) const;

    // Bundle layout: domain.atm, edge_<j>.atm, meta.json.
    void save_bundle(const std::string& dir) const;
    static GraphPresentation load_bundle(const std::string& dir);

    // --- built-in Cayley-graph presentations --------------------------------
    // Z^m with standard generators and inverses; representative length equals
    // the word-metric length exactly and the empty word is the identity.
    static GraphPresentation zm(int m);
    // Free group of rank m over the language of reduced words.
    static GraphPresentation free_group(int m);
    // Z2 wr Z with generators {t, t^-1, h} over an interval encoding.
    static GraphPresentation lamplighter();
    // The same graph over the eight products {t, th, ht, hth}^{+-1}.
    static GraphPresentation lamplighter_s1();

private:
    AlphabetRef alphabet_;
    SyncAutomaton domain_;
    SyncAutomaton domain_dfa_;
    std::vector<SyncAutomaton> edges_;
    std::vector<EdgeFn> edge_fns_;
    std::vector<std::string> edge_names_;
    std::optional<std::vector<int>> inverse_pairing_;
    Word base_word_;
};

} // namespace cayt

#endif
