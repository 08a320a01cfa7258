#ifndef CAYT_ISO_HPP
#define CAYT_ISO_HPP

#include "cayt/oracles.hpp"
#include "cayt/presentation.hpp"

#include <unordered_map>

namespace cayt {

template <class G>
struct IsoResult {
    bool ok = false;
    std::string detail;
    std::size_t vertices_checked = 0;
    // word <-> element bijection over the explored ball, in discovery order
    std::vector<std::pair<Word, typename G::Element>> mapping;
};

// Parallel breadth-first traversal from (w0, identity) matching labeled
// edges; both graphs are deterministic and rooted so the partial isomorphism
// is unique, and any mismatch within the radius is a conflict.
template <class G>
IsoResult<G> isomorphic_to_oracle(const GraphPresentation& p, const Word& w0, const G& group,
                                  int radius) {
    IsoResult<G> out;
    if (static_cast<std::size_t>(p.label_count()) != group.generators().size()) {
        out.detail = "label count differs from generator count";
        return out;
    }
    if (!p.in_domain(w0)) {
        out.detail = "base word not in the domain";
        return out;
    }
    using Element = typename G::Element;
    struct WordHash {
        std::size_t operator()(const Word& w) const { return std::hash<std::string>{}(w); }
    };
    std::unordered_map<Word, std::size_t, WordHash> word_index;
    std::unordered_map<Element, std::size_t, OracleHash<G>> elem_index(16, OracleHash<G>{&group});

    out.mapping.emplace_back(w0, group.identity());
    word_index.emplace(w0, 0);
    elem_index.emplace(group.identity(), 0);
    std::size_t begin = 0;
    for (int r = 1; r <= radius; ++r) {
        const std::size_t end = out.mapping.size();
        for (std::size_t i = begin; i < end; ++i) {
            for (int j = 0; j < p.label_count(); ++j) {
                const Word w = p.apply_edge(j, out.mapping[i].first);
                const Element g = group.mul(out.mapping[i].second, group.generators()[static_cast<std::size_t>(j)]);
                auto wi = word_index.find(w);
                auto gi = elem_index.find(g);
                const bool w_seen = wi != word_index.end();
                const bool g_seen = gi != elem_index.end();
                if (w_seen != g_seen || (w_seen && wi->second != gi->second)) {
                    out.detail = "conflict at radius " + std::to_string(r) + " on edge '" +
                                 p.edge_names()[static_cast<std::size_t>(j)] + "' from word '" +
                                 p.alphabet()->format_word(out.mapping[i].first) + "'";
                    out.vertices_checked = out.mapping.size();
                    return out;
                }
                if (!w_seen) {
                    word_index.emplace(w, out.mapping.size());
                    elem_index.emplace(g, out.mapping.size());
                    out.mapping.emplace_back(w, g);
                }
            }
        }
        begin = end;
    }
    out.ok = true;
    out.vertices_checked = out.mapping.size();
    return out;
}

} // namespace cayt

#endif
