#include "cayt/presentation.hpp"

#include "cayt/automaton_io.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace cayt {

namespace fs = std::filesystem;
using nlohmann::json;

std::string ValidationReport::summary() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.passed ? "[pass] " : "[FAIL] ") << c.name;
        if (!c.detail.empty()) os << ": " << c.detail;
        os << '\n';
    }
    return os.str();
}

GraphPresentation::GraphPresentation(AlphabetRef alphabet, SyncAutomaton domain,
                                     std::vector<SyncAutomaton> edges,
                                     std::vector<std::string> edge_names,
                                     std::optional<std::vector<int>> inverse_pairing,
                                     Word base_word)
    : alphabet_(std::move(alphabet)),
      domain_(std::move(domain)),
      edges_(std::move(edges)),
      edge_names_(std::move(edge_names)),
      inverse_pairing_(std::move(inverse_pairing)),
      base_word_(std::move(base_word)) {
    if (!alphabet_) raise(Error::Kind::invalid_argument, "null alphabet");
    if (domain_.tapes() != 1) raise(Error::Kind::arity_mismatch, "domain must be a 1-tape automaton");
    if (*domain_.alphabet() != *alphabet_)
        raise(Error::Kind::alphabet_mismatch, "domain alphabet mismatch");
    if (edges_.empty()) raise(Error::Kind::invalid_argument, "presentation needs at least one edge");
    if (edge_names_.size() != edges_.size())
        raise(Error::Kind::invalid_argument, "one name per edge required");
    for (const auto& e : edges_) {
        if (e.tapes() != 2) raise(Error::Kind::arity_mismatch, "edges must be 2-tape automata");
        if (*e.alphabet() != *alphabet_) raise(Error::Kind::alphabet_mismatch, "edge alphabet mismatch");
    }
    if (inverse_pairing_) {
        const auto& inv = *inverse_pairing_;
        if (inv.size() != edges_.size())
            raise(Error::Kind::invalid_argument, "inverse pairing size mismatch");
        for (std::size_t j = 0; j < inv.size(); ++j) {
            if (inv[j] < 0 || static_cast<std::size_t>(inv[j]) >= inv.size() ||
                inv[static_cast<std::size_t>(inv[j])] != static_cast<int>(j))
                raise(Error::Kind::invalid_argument, "inverse pairing is not an involution");
        }
    }
    domain_dfa_ = minimize(domain_);
    edge_fns_.reserve(edges_.size());
    for (const auto& e : edges_) edge_fns_.emplace_back(e);
}

bool GraphPresentation::in_domain(const Word& w) const {
    if (domain_dfa_.num_states() == 0) return false;
    State s = domain_dfa_.initial_states()[0];
    for (char c : w) {
        if (static_cast<unsigned char>(c) >= alphabet_->size()) return false;
        const Label l = static_cast<unsigned char>(c);
        const auto& row = domain_dfa_.transitions_from(s);
        auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(l, State{0}));
        if (it == row.end() || it->first != l) return false;
        s = it->second;
    }
    return domain_dfa_.is_accepting(s);
}

std::optional<Word> GraphPresentation::try_edge(int j, const Word& w) const {
    if (j < 0 || j >= label_count()) raise(Error::Kind::invalid_argument, "edge label out of range");
    return edge_fns_[static_cast<std::size_t>(j)].apply(w);
}

Word GraphPresentation::apply_edge(int j, const Word& w) const {
    auto out = try_edge(j, w);
    if (!out)
        raise(Error::Kind::domain,
              "word '" + alphabet_->format_word(w) + "' has no image under edge " + edge_names_[static_cast<std::size_t>(j)]);
    return *out;
}

Word GraphPresentation::word_of(const Word& w0, std::span<const int> path) const {
    Word cur = w0;
    for (int j : path) cur = apply_edge(j, cur);
    return cur;
}

ValidationReport GraphPresentation::validate() const {
    ValidationReport report;
    auto add = [&](std::string name, bool passed, std::string detail = "") {
        report.checks.push_back({std::move(name), passed, std::move(detail)});
    };

    add("base word in domain", in_domain(base_word_),
        in_domain(base_word_) ? "" : "'" + alphabet_->format_word(base_word_) + "' rejected");

    for (int j = 0; j < label_count(); ++j) {
        const auto& name = edge_names_[static_cast<std::size_t>(j)];
        FunctionalCheck fc = check_functional(edges_[static_cast<std::size_t>(j)], domain_);
        add("edge " + name + " total on domain", fc.total,
            fc.totality_witness ? "no image for '" + alphabet_->format_word(*fc.totality_witness) + "'" : "");
        add("edge " + name + " single-valued", fc.single_valued,
            fc.ambiguity_witness ? "two images for '" + alphabet_->format_word(*fc.ambiguity_witness) + "'" : "");

        const int keep1[] = {1};
        SyncAutomaton range = project(edges_[static_cast<std::size_t>(j)], keep1);
        SyncAutomaton escape = intersect(range, complement(domain_));
        bool closed = is_empty(escape);
        std::string detail;
        if (!closed) {
            if (auto w = shortest_accepted(escape))
                detail = "image '" + alphabet_->format_word(deconvolve(*w, *alphabet_, 1)[0]) + "' outside domain";
        }
        add("edge " + name + " closed into domain", closed, detail);
    }

    if (inverse_pairing_) {
        for (int j = 0; j < label_count(); ++j) {
            const int i = (*inverse_pairing_)[static_cast<std::size_t>(j)];
            if (i < j) continue; // each pair once
            bool consistent = equivalent(edges_[static_cast<std::size_t>(i)],
                                         swap_tapes(edges_[static_cast<std::size_t>(j)]));
            add("edges " + edge_names_[static_cast<std::size_t>(j)] + " / " +
                    edge_names_[static_cast<std::size_t>(i)] + " mutually inverse",
                consistent, consistent ? "" : "converse languages differ");
        }
    }
    return report;
}

GraphPresentation GraphPresentation::generator_products(const std::vector<std::vector<int>>& paths,
                                                        std::vector<std::string> names) const {
    if (paths.empty()) raise(Error::Kind::invalid_argument, "no generator paths given");
    if (names.size() != paths.size()) raise(Error::Kind::invalid_argument, "one name per path required");
    std::vector<SyncAutomaton> new_edges;
    new_edges.reserve(paths.size());
    for (const auto& path : paths) {
        if (path.empty()) raise(Error::Kind::invalid_argument, "generator path must be nonempty");
        for (int j : path)
            if (j < 0 || j >= label_count()) raise(Error::Kind::invalid_argument, "invalid label in path");
        SyncAutomaton rel = edges_[static_cast<std::size_t>(path[0])];
        for (std::size_t i = 1; i < path.size(); ++i)
            rel = compose(rel, edges_[static_cast<std::size_t>(path[i])]);
        new_edges.push_back(minimize(rel));
    }

    // pairing carries over when the inverse of every path is itself a path
    std::optional<std::vector<int>> pairing;
    if (inverse_pairing_) {
        std::vector<int> inv(paths.size(), -1);
        bool all = true;
        for (std::size_t j = 0; j < paths.size() && all; ++j) {
            std::vector<int> ipath(paths[j].rbegin(), paths[j].rend());
            for (int& l : ipath) l = (*inverse_pairing_)[static_cast<std::size_t>(l)];
            auto it = std::find(paths.begin(), paths.end(), ipath);
            if (it == paths.end()) all = false;
            else inv[j] = static_cast<int>(it - paths.begin());
        }
        if (all) pairing = std::move(inv);
    }
    return GraphPresentation(alphabet_, domain_, std::move(new_edges), std::move(names),
                             std::move(pairing), base_word_);
}

void GraphPresentation::save_bundle(const std::string& dir) const {
    fs::create_directories(dir);
    save_atm_file(domain_, (fs::path(dir) / "domain.atm").string());
    for (int j = 0; j < label_count(); ++j)
        save_atm_file(edges_[static_cast<std::size_t>(j)],
                      (fs::path(dir) / ("edge_" + std::to_string(j) + ".atm")).string());
    json meta;
    meta["format"] = "cayt-bundle";
    meta["version"] = 1;
    meta["labels"] = label_count();
    meta["edge_names"] = edge_names_;
    if (inverse_pairing_) meta["inverse_pairing"] = *inverse_pairing_;
    else meta["inverse_pairing"] = nullptr;
    meta["base_word"] = alphabet_->format_word(base_word_);
    std::ofstream os(fs::path(dir) / "meta.json");
    if (!os) raise(Error::Kind::io, "cannot write meta.json in '" + dir + "'");
    os << meta.dump(2) << '\n';
}

GraphPresentation GraphPresentation::load_bundle(const std::string& dir) {
    std::ifstream is(fs::path(dir) / "meta.json");
    if (!is) raise(Error::Kind::io, "cannot open '" + dir + "/meta.json'");
    json meta = json::parse(is, nullptr, true, true);
    const int labels = meta.at("labels").get<int>();
    if (labels < 1) raise(Error::Kind::parse, "bundle has no edges");
    SyncAutomaton domain = load_atm_file((fs::path(dir) / "domain.atm").string());
    std::vector<SyncAutomaton> edges;
    for (int j = 0; j < labels; ++j)
        edges.push_back(load_atm_file((fs::path(dir) / ("edge_" + std::to_string(j) + ".atm")).string()));
    std::vector<std::string> names = meta.at("edge_names").get<std::vector<std::string>>();
    std::optional<std::vector<int>> pairing;
    if (!meta.at("inverse_pairing").is_null())
        pairing = meta.at("inverse_pairing").get<std::vector<int>>();
    AlphabetRef alphabet = domain.alphabet();
    Word base = alphabet->parse_word(meta.at("base_word").get<std::string>());
    return GraphPresentation(alphabet, std::move(domain), std::move(edges), std::move(names),
                             std::move(pairing), std::move(base));
}

} // namespace cayt
