#include "cayt/automaton.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <queue>
#include <unordered_map>
#include <unordered_set>

namespace cayt {

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<std::uint32_t>& v) const {
        std::size_t h = 0x811c9dc5u ^ v.size();
        for (auto x : v) {
            h ^= x + 0x9e3779b9u + (h << 6) + (h >> 2);
        }
        return h;
    }
};

void sort_unique(std::vector<State>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace

LabelCodec::LabelCodec(std::size_t alphabet_size, int tapes_) {
    if (tapes_ < 1) raise(Error::Kind::invalid_argument, "tape count must be positive");
    base = static_cast<unsigned>(alphabet_size) + 1;
    tapes = tapes_;
    pow.assign(static_cast<std::size_t>(tapes) + 1, 1);
    for (int i = 1; i <= tapes; ++i) {
        if (pow[i - 1] > (UINT64_MAX >> 8) / base)
            raise(Error::Kind::unsupported, "label space exceeds 64 bits");
        pow[i] = pow[i - 1] * base;
    }
}

Label LabelCodec::encode(std::span<const unsigned> digits) const {
    Label l = 0;
    for (int i = 0; i < tapes; ++i) l = l * base + digits[i];
    return l;
}

std::vector<Label> convolve(const WordTuple& words, const Alphabet& alphabet, int tapes) {
    if (tapes < 0) tapes = static_cast<int>(words.size());
    if (static_cast<int>(words.size()) != tapes)
        raise(Error::Kind::arity_mismatch, "word tuple arity does not match tape count");
    LabelCodec codec(alphabet.size(), tapes);
    std::size_t len = 0;
    for (const auto& w : words) {
        for (char c : w) {
            if (static_cast<unsigned char>(c) >= alphabet.size())
                raise(Error::Kind::alphabet_mismatch, "word symbol outside the alphabet");
        }
        len = std::max(len, w.size());
    }
    std::vector<Label> out;
    out.reserve(len);
    std::vector<unsigned> digits(tapes);
    for (std::size_t t = 0; t < len; ++t) {
        for (int i = 0; i < tapes; ++i) {
            digits[i] = t < words[i].size() ? static_cast<unsigned char>(words[i][t]) : codec.pad();
        }
        out.push_back(codec.encode(digits));
    }
    return out;
}

WordTuple deconvolve(std::span<const Label> labels, const Alphabet& alphabet, int tapes) {
    LabelCodec codec(alphabet.size(), tapes);
    WordTuple out(tapes);
    std::vector<bool> ended(tapes, false);
    for (Label l : labels) {
        if (l == codec.all_pad()) raise(Error::Kind::malformed_convolution, "all-pad label");
        for (int i = 0; i < tapes; ++i) {
            const unsigned d = codec.digit(l, i);
            if (d == codec.pad()) {
                ended[i] = true;
            } else {
                if (ended[i])
                    raise(Error::Kind::malformed_convolution, "pad followed by a symbol");
                if (d >= alphabet.size())
                    raise(Error::Kind::alphabet_mismatch, "label digit outside the alphabet");
                out[i].push_back(static_cast<char>(d));
            }
        }
    }
    return out;
}

// --- construction ------------------------------------------------------------

SyncAutomaton SyncAutomaton::from_parts(AlphabetRef alphabet, int tapes, State num_states,
                                        std::vector<State> initial, std::vector<State> accepting,
                                        std::vector<Transition> transitions, bool relaxed) {
    if (!alphabet) raise(Error::Kind::invalid_argument, "null alphabet");
    LabelCodec codec(alphabet->size(), tapes);

    for (State s : initial)
        if (s >= num_states) raise(Error::Kind::invalid_argument, "initial state out of range");
    for (State s : accepting)
        if (s >= num_states) raise(Error::Kind::invalid_argument, "accepting state out of range");
    for (const auto& t : transitions) {
        if (t.src >= num_states || t.dst >= num_states)
            raise(Error::Kind::invalid_argument, "transition endpoint out of range");
        if (t.label >= codec.all_pad())
            raise(Error::Kind::invalid_argument, "transition label out of range");
    }
    sort_unique(initial);
    sort_unique(accepting);

    // forward reachability
    std::vector<std::vector<std::pair<Label, State>>> adj(num_states);
    for (const auto& t : transitions) adj[t.src].emplace_back(t.label, t.dst);
    for (auto& row : adj) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
    }
    std::vector<bool> fwd(num_states, false);
    {
        std::deque<State> q(initial.begin(), initial.end());
        for (State s : initial) fwd[s] = true;
        while (!q.empty()) {
            State s = q.front();
            q.pop_front();
            for (auto [l, d] : adj[s])
                if (!fwd[d]) {
                    fwd[d] = true;
                    q.push_back(d);
                }
        }
    }
    // backward co-reachability
    std::vector<std::vector<State>> radj(num_states);
    for (State s = 0; s < num_states; ++s)
        for (auto [l, d] : adj[s]) radj[d].push_back(s);
    std::vector<bool> bwd(num_states, false);
    {
        std::deque<State> q;
        for (State s : accepting)
            if (fwd[s]) {
                bwd[s] = true;
                q.push_back(s);
            }
        while (!q.empty()) {
            State s = q.front();
            q.pop_front();
            for (State p : radj[s])
                if (fwd[p] && !bwd[p]) {
                    bwd[p] = true;
                    q.push_back(p);
                }
        }
    }

    // canonical renumbering by BFS discovery
    constexpr State kUnseen = UINT32_MAX;
    std::vector<State> renum(num_states, kUnseen);
    std::vector<State> order;
    std::deque<State> q;
    for (State s : initial)
        if (bwd[s] && renum[s] == kUnseen) {
            renum[s] = static_cast<State>(order.size());
            order.push_back(s);
            q.push_back(s);
        }
    while (!q.empty()) {
        State s = q.front();
        q.pop_front();
        for (auto [l, d] : adj[s]) {
            if (bwd[d] && renum[d] == kUnseen) {
                renum[d] = static_cast<State>(order.size());
                order.push_back(d);
                q.push_back(d);
            }
        }
    }

    SyncAutomaton out;
    out.alphabet_ = std::move(alphabet);
    out.codec_ = codec;
    out.relaxed_ = relaxed;
    out.adj_.resize(order.size());
    out.accepting_bits_.assign(order.size(), false);
    for (State s : initial)
        if (renum[s] != kUnseen) out.initial_.push_back(renum[s]);
    sort_unique(out.initial_);
    for (State s : accepting)
        if (renum[s] != kUnseen) {
            out.accepting_.push_back(renum[s]);
            out.accepting_bits_[renum[s]] = true;
        }
    sort_unique(out.accepting_);
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (auto [l, d] : adj[order[i]]) {
            if (renum[d] != kUnseen) out.adj_[i].emplace_back(l, renum[d]);
        }
        std::sort(out.adj_[i].begin(), out.adj_[i].end());
    }
    out.deterministic_ = out.initial_.size() <= 1;
    if (out.deterministic_) {
        for (const auto& row : out.adj_) {
            for (std::size_t i = 1; i < row.size(); ++i) {
                if (row[i].first == row[i - 1].first) {
                    out.deterministic_ = false;
                    break;
                }
            }
            if (!out.deterministic_) break;
        }
    }
    return out;
}

namespace {

// For a trimmed automaton: does every accepting path respect the padding
// discipline? Exact because every state lies on an accepting path.
bool discipline_clean(const SyncAutomaton& a) {
    const int tapes = a.tapes();
    const LabelCodec& codec = a.codec();
    auto label_mask = [&](Label l) {
        std::uint32_t m = 0;
        for (int i = 0; i < tapes; ++i)
            if (codec.digit(l, i) == codec.pad()) m |= 1u << i;
        return m;
    };
    std::unordered_set<std::uint64_t> seen;
    std::deque<std::pair<State, std::uint32_t>> q;
    for (State s : a.initial_states()) {
        q.emplace_back(s, 0);
        seen.insert(static_cast<std::uint64_t>(s) << 17);
    }
    while (!q.empty()) {
        auto [s, mask] = q.front();
        q.pop_front();
        for (auto [l, d] : a.transitions_from(s)) {
            const std::uint32_t lm = label_mask(l);
            if ((mask & ~lm) != 0) return false; // ended tape resurrected
            const std::uint32_t nmask = mask | lm;
            const std::uint64_t key = (static_cast<std::uint64_t>(d) << 17) | nmask;
            if (seen.insert(key).second) q.emplace_back(d, nmask);
        }
    }
    return true;
}

} // namespace

SyncAutomaton SyncAutomaton::make(AlphabetRef alphabet, int tapes, State num_states,
                                  std::vector<State> initial, std::vector<State> accepting,
                                  std::vector<Transition> transitions, bool relaxed) {
    if (relaxed || tapes == 1) {
        // a 1-tape automaton never sees a pad, so the discipline is vacuous
        return from_parts(std::move(alphabet), tapes, num_states, std::move(initial),
                          std::move(accepting), std::move(transitions), relaxed);
    }
    if (tapes > 16) raise(Error::Kind::unsupported, "more than 16 tapes");
    SyncAutomaton trimmed = from_parts(std::move(alphabet), tapes, num_states, std::move(initial),
                                       std::move(accepting), std::move(transitions), false);
    // Verify first so already-disciplined automata keep their structure
    // (load(save(A)) must reproduce A bit-exactly). Only violating inputs
    // get restructured by the pruning product below.
    if (discipline_clean(trimmed)) return trimmed;

    const LabelCodec codec = trimmed.codec();
    auto label_mask = [&](Label l) {
        std::uint32_t m = 0;
        for (int i = 0; i < tapes; ++i)
            if (codec.digit(l, i) == codec.pad()) m |= 1u << i;
        return m;
    };
    std::unordered_map<std::uint64_t, State> ids;
    std::vector<std::pair<State, std::uint32_t>> states;
    std::vector<Transition> out_trans;
    std::vector<State> out_initial, out_accepting;
    auto intern = [&](State q, std::uint32_t mask) {
        const std::uint64_t key = (static_cast<std::uint64_t>(q) << 17) | mask;
        auto [it, fresh] = ids.emplace(key, static_cast<State>(states.size()));
        if (fresh) states.emplace_back(q, mask);
        return it->second;
    };
    std::deque<State> q;
    for (State s : trimmed.initial_states()) {
        State id = intern(s, 0);
        out_initial.push_back(id);
        q.push_back(id);
    }
    std::unordered_set<State> seen(q.begin(), q.end());
    while (!q.empty()) {
        State id = q.front();
        q.pop_front();
        auto [s, mask] = states[id];
        if (trimmed.is_accepting(s)) out_accepting.push_back(id);
        for (auto [l, d] : trimmed.transitions_from(s)) {
            const std::uint32_t lm = label_mask(l);
            if ((mask & ~lm) != 0) continue; // drop the violating transition
            State nid = intern(d, mask | lm);
            out_trans.push_back({id, l, nid});
            if (seen.insert(nid).second) q.push_back(nid);
        }
    }
    return from_parts(trimmed.alphabet(), tapes, static_cast<State>(states.size()),
                      std::move(out_initial), std::move(out_accepting), std::move(out_trans),
                      false);
}

std::size_t SyncAutomaton::num_transitions() const {
    std::size_t n = 0;
    for (const auto& row : adj_) n += row.size();
    return n;
}

bool SyncAutomaton::operator==(const SyncAutomaton& other) const {
    return codec_.tapes == other.codec_.tapes && *alphabet_ == *other.alphabet_ &&
           initial_ == other.initial_ && accepting_ == other.accepting_ && adj_ == other.adj_ &&
           relaxed_ == other.relaxed_;
}

// --- acceptance ---------------------------------------------------------------

bool accepts_labels(const SyncAutomaton& a, std::span<const Label> labels) {
    std::vector<State> frontier = a.initial_states();
    for (Label l : labels) {
        std::vector<State> next;
        for (State s : frontier) {
            const auto& row = a.transitions_from(s);
            auto lo = std::lower_bound(row.begin(), row.end(), std::make_pair(l, State{0}));
            for (auto it = lo; it != row.end() && it->first == l; ++it) next.push_back(it->second);
        }
        sort_unique(next);
        if (next.empty()) return false;
        frontier = std::move(next);
    }
    for (State s : frontier)
        if (a.is_accepting(s)) return true;
    return false;
}

bool accepts(const SyncAutomaton& a, const WordTuple& words) {
    if (static_cast<int>(words.size()) != a.tapes())
        raise(Error::Kind::arity_mismatch, "tuple arity does not match tape count");
    auto labels = convolve(words, *a.alphabet(), a.tapes());
    return accepts_labels(a, labels);
}

bool is_empty(const SyncAutomaton& a) { return a.accepting_states().empty(); }

std::optional<std::vector<Label>> shortest_accepted(const SyncAutomaton& a) {
    if (is_empty(a)) return std::nullopt;
    struct Link {
        State prev;
        Label label;
    };
    std::vector<std::optional<Link>> parent(a.num_states());
    std::vector<bool> seen(a.num_states(), false);
    std::deque<State> q;
    for (State s : a.initial_states()) {
        seen[s] = true;
        q.push_back(s);
    }
    State hit = UINT32_MAX;
    for (State s : a.initial_states())
        if (a.is_accepting(s)) hit = s;
    while (hit == UINT32_MAX && !q.empty()) {
        State s = q.front();
        q.pop_front();
        for (auto [l, d] : a.transitions_from(s)) {
            if (seen[d]) continue;
            seen[d] = true;
            parent[d] = Link{s, l};
            if (a.is_accepting(d)) {
                hit = d;
                break;
            }
            q.push_back(d);
        }
    }
    if (hit == UINT32_MAX) return std::nullopt;
    std::vector<Label> path;
    for (State s = hit; parent[s]; s = parent[s]->prev) path.push_back(parent[s]->label);
    std::reverse(path.begin(), path.end());
    return path;
}

// --- determinize / minimize ----------------------------------------------------

SyncAutomaton determinize(const SyncAutomaton& a) {
    if (a.num_states() == 0)
        return SyncAutomaton::from_parts(a.alphabet(), a.tapes(), 0, {}, {}, {}, a.relaxed_padding());
    std::unordered_map<std::vector<State>, State, VecHash> ids;
    std::vector<std::vector<State>> subsets;
    auto intern = [&](std::vector<State> set) {
        auto [it, fresh] = ids.emplace(set, static_cast<State>(subsets.size()));
        if (fresh) subsets.push_back(std::move(set));
        return it->second;
    };
    std::vector<Transition> trans;
    std::vector<State> accepting;
    std::vector<State> start = a.initial_states();
    intern(start);
    for (State id = 0; id < subsets.size(); ++id) {
        const auto subset = subsets[id];
        bool acc = false;
        std::map<Label, std::vector<State>> moves;
        for (State s : subset) {
            acc = acc || a.is_accepting(s);
            for (auto [l, d] : a.transitions_from(s)) moves[l].push_back(d);
        }
        if (acc) accepting.push_back(id);
        for (auto& [l, dsts] : moves) {
            sort_unique(dsts);
            trans.push_back({id, l, intern(std::move(dsts))});
        }
    }
    return SyncAutomaton::from_parts(a.alphabet(), a.tapes(), static_cast<State>(subsets.size()),
                                     {0}, std::move(accepting), std::move(trans),
                                     a.relaxed_padding());
}

SyncAutomaton minimize(const SyncAutomaton& input) {
    SyncAutomaton a = input.deterministic() ? input : determinize(input);
    const std::size_t n = a.num_states();
    if (n == 0) return a;

    // Moore refinement on the partial DFA; absent transitions act as an
    // implicit dead state, which the signature encodes by omission.
    std::vector<std::uint32_t> cls(n);
    for (std::size_t s = 0; s < n; ++s) cls[s] = a.is_accepting(static_cast<State>(s)) ? 1 : 0;
    std::size_t count = 2;
    for (;;) {
        std::map<std::pair<std::uint32_t, std::vector<std::pair<Label, std::uint32_t>>>, std::uint32_t> sig_ids;
        std::vector<std::uint32_t> next(n);
        for (std::size_t s = 0; s < n; ++s) {
            std::vector<std::pair<Label, std::uint32_t>> sig;
            sig.reserve(a.transitions_from(static_cast<State>(s)).size());
            for (auto [l, d] : a.transitions_from(static_cast<State>(s))) sig.emplace_back(l, cls[d]);
            auto key = std::make_pair(cls[s], std::move(sig));
            auto [it, fresh] = sig_ids.emplace(std::move(key), static_cast<std::uint32_t>(sig_ids.size()));
            (void)fresh;
            next[s] = it->second;
        }
        if (sig_ids.size() == count || sig_ids.size() == n) {
            cls = std::move(next);
            count = sig_ids.size();
            break;
        }
        count = sig_ids.size();
        cls = std::move(next);
    }

    std::vector<Transition> trans;
    std::vector<State> accepting;
    std::vector<bool> seen_cls(count, false);
    for (std::size_t s = 0; s < n; ++s) {
        if (seen_cls[cls[s]]) continue;
        seen_cls[cls[s]] = true;
        for (auto [l, d] : a.transitions_from(static_cast<State>(s)))
            trans.push_back({cls[s], l, cls[d]});
        if (a.is_accepting(static_cast<State>(s))) accepting.push_back(cls[s]);
    }
    std::vector<State> initial;
    for (State s : a.initial_states()) initial.push_back(cls[s]);
    return SyncAutomaton::from_parts(a.alphabet(), a.tapes(), static_cast<State>(count),
                                     std::move(initial), std::move(accepting), std::move(trans),
                                     a.relaxed_padding());
}

SyncAutomaton trim(const SyncAutomaton& a) { return a; } // normalized on construction

bool equivalent(const SyncAutomaton& a, const SyncAutomaton& b) {
    if (a.tapes() != b.tapes() || *a.alphabet() != *b.alphabet())
        raise(Error::Kind::alphabet_mismatch, "equivalence over different signatures");
    SyncAutomaton ma = minimize(a);
    SyncAutomaton mb = minimize(b);
    ma = SyncAutomaton::from_parts(ma.alphabet(), ma.tapes(), static_cast<State>(ma.num_states()),
                                   ma.initial_states(), ma.accepting_states(), [&] {
                                       std::vector<Transition> t;
                                       for (State s = 0; s < ma.num_states(); ++s)
                                           for (auto [l, d] : ma.transitions_from(s)) t.push_back({s, l, d});
                                       return t;
                                   }(), false);
    mb = SyncAutomaton::from_parts(mb.alphabet(), mb.tapes(), static_cast<State>(mb.num_states()),
                                   mb.initial_states(), mb.accepting_states(), [&] {
                                       std::vector<Transition> t;
                                       for (State s = 0; s < mb.num_states(); ++s)
                                           for (auto [l, d] : mb.transitions_from(s)) t.push_back({s, l, d});
                                       return t;
                                   }(), false);
    return ma == mb;
}

// --- synchronized product -------------------------------------------------------

namespace {

constexpr State kDone = UINT32_MAX;

struct JoinContext {
    const std::span<const JoinComponent>* comps;
    LabelCodec codec;
    int out_tapes;
    std::vector<std::uint32_t> comp_tape_bits; // mask of global tapes per component
};

} // namespace

SyncAutomaton join(std::span<const JoinComponent> components, int out_tapes, AlphabetRef alphabet,
                   std::size_t state_budget) {
    if (out_tapes < 1 || out_tapes > 16) raise(Error::Kind::unsupported, "tape count out of range");
    LabelCodec codec(alphabet->size(), out_tapes);
    const unsigned pad = codec.pad();

    std::uint32_t covered = 0;
    for (const auto& c : components) {
        if (*c.automaton->alphabet() != *alphabet)
            raise(Error::Kind::alphabet_mismatch, "join over mixed alphabets");
        if (c.automaton->relaxed_padding())
            raise(Error::Kind::unsupported, "join of relaxed-discipline automata");
        if (static_cast<int>(c.tape_map.size()) != c.automaton->tapes())
            raise(Error::Kind::arity_mismatch, "tape map arity mismatch");
        for (int t : c.tape_map) {
            if (t < 0 || t >= out_tapes) raise(Error::Kind::invalid_argument, "tape map out of range");
            covered |= 1u << t;
        }
    }
    const int r = static_cast<int>(components.size());
    for (const auto& c : components)
        if (c.automaton->num_states() == 0)
            return SyncAutomaton::from_parts(alphabet, out_tapes, 0, {}, {}, {}, false);

    // product state: r component states (kDone = finished) + ended mask
    std::unordered_map<std::vector<std::uint32_t>, State, VecHash> ids;
    std::vector<std::vector<std::uint32_t>> states;
    auto intern = [&](std::vector<std::uint32_t> key) {
        auto [it, fresh] = ids.emplace(key, static_cast<State>(states.size()));
        if (fresh) states.push_back(std::move(key));
        return it->second;
    };

    std::vector<State> initial;
    {
        std::vector<std::uint32_t> key(r + 1, 0);
        std::vector<std::size_t> idx(r, 0);
        for (;;) {
            for (int i = 0; i < r; ++i) key[i] = components[i].automaton->initial_states()[idx[i]];
            key[r] = 0;
            initial.push_back(intern(key));
            int i = r - 1;
            while (i >= 0 && ++idx[i] == components[i].automaton->initial_states().size()) {
                idx[i] = 0;
                --i;
            }
            if (i < 0) break;
        }
        sort_unique(initial);
    }

    std::vector<Transition> trans;
    std::vector<State> accepting;
    std::vector<unsigned> digits(out_tapes);
    std::vector<std::uint32_t> next_key(r + 1);

    for (State id = 0; id < states.size(); ++id) {
        if (states.size() > state_budget)
            raise(Error::Kind::budget_exceeded, "join state budget exceeded");
        const auto key = states[id];
        const std::uint32_t mask = key[r];

        bool acc = true;
        for (int i = 0; i < r; ++i) {
            if (key[i] == kDone) continue;
            if (!components[i].automaton->is_accepting(key[i])) {
                acc = false;
                break;
            }
        }
        if (acc) accepting.push_back(id);

        // Backtracking enumeration of compatible label assignments.
        std::fill(digits.begin(), digits.end(), UINT32_MAX);
        auto emit = [&]() {
            // unassigned tapes: pad if ended, else free choice
            std::vector<int> free_tapes;
            for (int t = 0; t < out_tapes; ++t) {
                if (digits[t] != UINT32_MAX) continue;
                if (mask >> t & 1u) {
                    digits[t] = pad;
                } else {
                    free_tapes.push_back(t);
                }
            }
            std::vector<unsigned> choice(free_tapes.size(), 0);
            for (;;) {
                for (std::size_t i = 0; i < free_tapes.size(); ++i) digits[free_tapes[i]] = choice[i];
                const Label l = codec.encode(digits);
                if (l != codec.all_pad()) {
                    std::uint32_t nmask = mask;
                    for (int t = 0; t < out_tapes; ++t)
                        if (digits[t] == pad) nmask |= 1u << t;
                    next_key[r] = nmask;
                    trans.push_back({id, l, intern(next_key)});
                }
                if (free_tapes.empty()) break;
                std::size_t i = free_tapes.size() - 1;
                for (;;) {
                    if (++choice[i] <= pad) break;
                    choice[i] = 0;
                    if (i == 0) goto done_free;
                    --i;
                }
            }
        done_free:
            for (int t : free_tapes) digits[t] = UINT32_MAX;
            for (int t = 0; t < out_tapes; ++t)
                if (digits[t] == pad && !(mask >> t & 1u) && (covered >> t & 1u) == 0) digits[t] = UINT32_MAX;
        };

        // recursive lambda over components
        auto step = [&](auto&& self, int i) -> void {
            if (i == r) {
                emit();
                return;
            }
            const auto& comp = components[i];
            const auto& tm = comp.tape_map;
            auto try_assign = [&](std::span<const unsigned> comp_digits, State next_state) {
                // check compatibility, remember which tapes we set
                std::uint32_t set_here = 0;
                bool ok = true;
                for (std::size_t j = 0; j < tm.size(); ++j) {
                    const int t = tm[j];
                    const unsigned d = comp_digits[j];
                    if ((mask >> t & 1u) && d != pad) {
                        ok = false;
                        break;
                    }
                    if (digits[t] == UINT32_MAX) {
                        digits[t] = d;
                        set_here |= 1u << t;
                    } else if (digits[t] != d) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    next_key[i] = next_state;
                    self(self, i + 1);
                }
                for (int t = 0; t < out_tapes; ++t)
                    if (set_here >> t & 1u) digits[t] = UINT32_MAX;
            };

            std::vector<unsigned> comp_digits(tm.size());
            if (key[i] == kDone) {
                for (auto& d : comp_digits) d = pad;
                try_assign(comp_digits, kDone);
                return;
            }
            for (auto [l, d] : comp.automaton->transitions_from(key[i])) {
                for (std::size_t j = 0; j < tm.size(); ++j)
                    comp_digits[j] = comp.automaton->codec().digit(l, static_cast<int>(j));
                try_assign(comp_digits, d);
            }
            if (comp.automaton->is_accepting(key[i])) {
                for (auto& d : comp_digits) d = pad;
                try_assign(comp_digits, kDone);
            }
        };
        step(step, 0);
    }

    return SyncAutomaton::from_parts(alphabet, out_tapes, static_cast<State>(states.size()),
                                     std::move(initial), std::move(accepting), std::move(trans),
                                     false);
}

SyncAutomaton intersect(const SyncAutomaton& a, const SyncAutomaton& b) {
    if (a.tapes() != b.tapes()) raise(Error::Kind::arity_mismatch, "intersect arity mismatch");
    std::vector<int> id_map(a.tapes());
    for (int i = 0; i < a.tapes(); ++i) id_map[i] = i;
    const JoinComponent comps[] = {{&a, id_map}, {&b, id_map}};
    return join(comps, a.tapes(), a.alphabet());
}

SyncAutomaton unite(const SyncAutomaton& a, const SyncAutomaton& b) {
    if (a.tapes() != b.tapes()) raise(Error::Kind::arity_mismatch, "union arity mismatch");
    if (*a.alphabet() != *b.alphabet()) raise(Error::Kind::alphabet_mismatch, "union alphabet mismatch");
    const State na = static_cast<State>(a.num_states());
    std::vector<Transition> trans;
    std::vector<State> initial, accepting;
    for (State s = 0; s < na; ++s)
        for (auto [l, d] : a.transitions_from(s)) trans.push_back({s, l, d});
    for (State s = 0; s < b.num_states(); ++s)
        for (auto [l, d] : b.transitions_from(s)) trans.push_back({static_cast<State>(na + s), l, static_cast<State>(na + d)});
    initial = a.initial_states();
    for (State s : b.initial_states()) initial.push_back(na + s);
    accepting = a.accepting_states();
    for (State s : b.accepting_states()) accepting.push_back(na + s);
    return SyncAutomaton::from_parts(a.alphabet(), a.tapes(),
                                     static_cast<State>(na + b.num_states()), std::move(initial),
                                     std::move(accepting), std::move(trans),
                                     a.relaxed_padding() || b.relaxed_padding());
}

SyncAutomaton universe(AlphabetRef alphabet, int tapes) {
    LabelCodec codec(alphabet->size(), tapes);
    if (codec.label_count() > 65536) raise(Error::Kind::unsupported, "universe label space too large");
    if (tapes > 16) raise(Error::Kind::unsupported, "more than 16 tapes");
    // states = sets of ended tapes that actually occur
    std::map<std::uint32_t, State> ids;
    std::vector<std::uint32_t> masks;
    auto intern = [&](std::uint32_t m) {
        auto [it, fresh] = ids.emplace(m, static_cast<State>(masks.size()));
        if (fresh) masks.push_back(m);
        return it->second;
    };
    intern(0);
    std::vector<Transition> trans;
    for (State id = 0; id < masks.size(); ++id) {
        const std::uint32_t mask = masks[id];
        for (Label l = 0; l + 1 < codec.label_count(); ++l) {
            std::uint32_t lm = 0;
            bool ok = true;
            for (int i = 0; i < tapes; ++i) {
                const unsigned d = codec.digit(l, i);
                if (d == codec.pad()) lm |= 1u << i;
                else if (mask >> i & 1u) {
                    ok = false;
                    break;
                }
            }
            if (ok) trans.push_back({id, l, intern(mask | lm)});
        }
    }
    std::vector<State> all(masks.size());
    for (State s = 0; s < masks.size(); ++s) all[s] = s;
    return SyncAutomaton::from_parts(std::move(alphabet), tapes, static_cast<State>(masks.size()),
                                     {0}, std::move(all), std::move(trans), false);
}

SyncAutomaton complement(const SyncAutomaton& a) {
    if (a.relaxed_padding()) raise(Error::Kind::unsupported, "complement of a relaxed automaton");
    const LabelCodec& codec = a.codec();
    if (codec.label_count() > 65536) raise(Error::Kind::unsupported, "complement label space too large");
    SyncAutomaton det = determinize(a);

    // product of the universe's ended-mask automaton with the completed DFA
    constexpr State kDead = UINT32_MAX;
    std::unordered_map<std::uint64_t, State> ids;
    std::vector<std::pair<std::uint32_t, State>> states;
    auto intern = [&](std::uint32_t mask, State q) {
        const std::uint64_t key = (static_cast<std::uint64_t>(mask) << 32) | q;
        auto [it, fresh] = ids.emplace(key, static_cast<State>(states.size()));
        if (fresh) states.emplace_back(mask, q);
        return it->second;
    };
    State start_q = det.num_states() == 0 ? kDead : det.initial_states()[0];
    intern(0, start_q);
    std::vector<Transition> trans;
    std::vector<State> accepting;
    const int tapes = a.tapes();
    for (State id = 0; id < states.size(); ++id) {
        auto [mask, q] = states[id];
        const bool in_lang = q != kDead && det.is_accepting(q);
        if (!in_lang) accepting.push_back(id);
        for (Label l = 0; l + 1 < codec.label_count(); ++l) {
            std::uint32_t lm = 0;
            bool ok = true;
            for (int i = 0; i < tapes; ++i) {
                const unsigned d = codec.digit(l, i);
                if (d == codec.pad()) lm |= 1u << i;
                else if (mask >> i & 1u) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            State nq = kDead;
            if (q != kDead) {
                const auto& row = det.transitions_from(q);
                auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(l, State{0}));
                if (it != row.end() && it->first == l) nq = it->second;
            }
            trans.push_back({id, l, intern(mask | lm, nq)});
        }
    }
    return SyncAutomaton::from_parts(a.alphabet(), tapes, static_cast<State>(states.size()), {0},
                                     std::move(accepting), std::move(trans), false);
}

SyncAutomaton reverse(const SyncAutomaton& a) {
    std::vector<Transition> trans;
    for (State s = 0; s < a.num_states(); ++s)
        for (auto [l, d] : a.transitions_from(s)) trans.push_back({d, l, s});
    return SyncAutomaton::from_parts(a.alphabet(), a.tapes(), static_cast<State>(a.num_states()),
                                     a.accepting_states(), a.initial_states(), std::move(trans),
                                     true);
}

SyncAutomaton project(const SyncAutomaton& a, std::span<const int> keep) {
    const int k = a.tapes();
    if (keep.empty()) raise(Error::Kind::invalid_argument, "projection must keep a tape");
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] < 0 || keep[i] >= k) raise(Error::Kind::invalid_argument, "projection index out of range");
        if (i > 0 && keep[i] <= keep[i - 1])
            raise(Error::Kind::invalid_argument, "projection indices must be strictly increasing");
    }
    const int out_tapes = static_cast<int>(keep.size());
    LabelCodec out_codec(a.alphabet()->size(), out_tapes);
    const LabelCodec& codec = a.codec();

    // relabel; labels that become all-pad are epsilon moves
    const std::size_t n = a.num_states();
    std::vector<std::vector<State>> eps(n);
    std::vector<std::vector<std::pair<Label, State>>> real(n);
    std::vector<unsigned> digits(out_tapes);
    for (State s = 0; s < n; ++s) {
        for (auto [l, d] : a.transitions_from(s)) {
            bool all_pad = true;
            for (int i = 0; i < out_tapes; ++i) {
                digits[i] = codec.digit(l, keep[i]);
                all_pad = all_pad && digits[i] == codec.pad();
            }
            if (all_pad) eps[s].push_back(d);
            else real[s].emplace_back(out_codec.encode(digits), d);
        }
    }
    // epsilon closure per state
    std::vector<std::vector<State>> closure(n);
    for (State s = 0; s < n; ++s) {
        std::vector<bool> seen(n, false);
        std::deque<State> q{s};
        seen[s] = true;
        while (!q.empty()) {
            State u = q.front();
            q.pop_front();
            closure[s].push_back(u);
            for (State v : eps[u])
                if (!seen[v]) {
                    seen[v] = true;
                    q.push_back(v);
                }
        }
    }
    std::vector<Transition> trans;
    std::vector<State> accepting;
    for (State s = 0; s < n; ++s) {
        bool acc = false;
        for (State u : closure[s]) {
            acc = acc || a.is_accepting(u);
            for (auto [l, d] : real[u]) trans.push_back({s, l, d});
        }
        if (acc) accepting.push_back(s);
    }
    return SyncAutomaton::from_parts(a.alphabet(), out_tapes, static_cast<State>(n),
                                     a.initial_states(), std::move(accepting), std::move(trans),
                                     a.relaxed_padding());
}

SyncAutomaton cylindrify(const SyncAutomaton& a, int pos) {
    const int k = a.tapes();
    if (pos < 0 || pos > k) raise(Error::Kind::invalid_argument, "cylindrification position out of range");
    std::vector<int> map(k);
    for (int i = 0; i < k; ++i) map[i] = i < pos ? i : i + 1;
    const JoinComponent comps[] = {{&a, map}};
    return join(comps, k + 1, a.alphabet());
}

SyncAutomaton compose(const SyncAutomaton& r1, const SyncAutomaton& r2) {
    if (r1.tapes() != 2 || r2.tapes() != 2) raise(Error::Kind::arity_mismatch, "compose needs binary relations");
    if (*r1.alphabet() != *r2.alphabet()) raise(Error::Kind::alphabet_mismatch, "compose alphabet mismatch");
    const JoinComponent comps[] = {{&r1, {0, 1}}, {&r2, {1, 2}}};
    SyncAutomaton three = join(comps, 3, r1.alphabet());
    const int keep[] = {0, 2};
    return project(three, keep);
}

SyncAutomaton swap_tapes(const SyncAutomaton& relation) {
    if (relation.tapes() != 2) raise(Error::Kind::arity_mismatch, "swap_tapes needs a binary relation");
    const LabelCodec& codec = relation.codec();
    std::vector<Transition> trans;
    for (State s = 0; s < relation.num_states(); ++s) {
        for (auto [l, d] : relation.transitions_from(s)) {
            const unsigned dig[2] = {codec.digit(l, 1), codec.digit(l, 0)};
            trans.push_back({s, codec.encode(dig), d});
        }
    }
    return SyncAutomaton::from_parts(relation.alphabet(), 2, static_cast<State>(relation.num_states()),
                                     relation.initial_states(), relation.accepting_states(),
                                     std::move(trans), relation.relaxed_padding());
}

// --- counting -------------------------------------------------------------------

BigInt count_by_length(const SyncAutomaton& a, int n) {
    if (n < 0) raise(Error::Kind::invalid_argument, "negative length");
    return count_series(a, n)[static_cast<std::size_t>(n)];
}

std::vector<BigInt> count_series(const SyncAutomaton& a, int max_n) {
    if (max_n < 0) raise(Error::Kind::invalid_argument, "negative length");
    SyncAutomaton dfa = a.deterministic() ? a : determinize(a);
    std::vector<BigInt> out(static_cast<std::size_t>(max_n) + 1, BigInt(0));
    if (dfa.num_states() == 0) return out;
    std::vector<BigInt> cur(dfa.num_states(), BigInt(0)), next;
    for (State s : dfa.initial_states()) cur[s] = 1;
    for (int n = 0;; ++n) {
        BigInt total = 0;
        for (State s : dfa.accepting_states()) total += cur[s];
        out[static_cast<std::size_t>(n)] = total;
        if (n == max_n) break;
        next.assign(dfa.num_states(), BigInt(0));
        for (State s = 0; s < dfa.num_states(); ++s) {
            if (cur[s] == 0) continue;
            for (auto [l, d] : dfa.transitions_from(s)) next[d] += cur[s];
        }
        cur.swap(next);
    }
    return out;
}

std::vector<std::vector<Label>> enumerate_labels(const SyncAutomaton& a, int max_len) {
    SyncAutomaton dfa = a.deterministic() ? a : determinize(a);
    std::vector<std::vector<Label>> out;
    if (dfa.num_states() == 0) return out;
    std::vector<Label> path;
    auto dfs = [&](auto&& self, State s, int remaining) -> void {
        if (remaining == 0) {
            if (dfa.is_accepting(s)) out.push_back(path);
            return;
        }
        for (auto [l, d] : dfa.transitions_from(s)) {
            path.push_back(l);
            self(self, d, remaining - 1);
            path.pop_back();
        }
    };
    for (int len = 0; len <= max_len; ++len) dfs(dfs, dfa.initial_states()[0], len);
    return out;
}

std::vector<WordTuple> enumerate_accepted(const SyncAutomaton& a, int max_len) {
    if (a.relaxed_padding())
        raise(Error::Kind::unsupported, "cannot deconvolve a relaxed-discipline language");
    std::vector<WordTuple> out;
    for (auto& labels : enumerate_labels(a, max_len))
        out.push_back(deconvolve(labels, *a.alphabet(), a.tapes()));
    return out;
}

// --- functional relations ---------------------------------------------------------

namespace {

SyncAutomaton difference_automaton(AlphabetRef alphabet) {
    // binary relation: the two coordinates differ as words
    LabelCodec codec(alphabet->size(), 2);
    std::vector<Transition> trans;
    const unsigned pad = codec.pad();
    for (unsigned x = 0; x <= pad; ++x) {
        for (unsigned y = 0; y <= pad; ++y) {
            if (x == pad && y == pad) continue;
            const unsigned dig[2] = {x, y};
            const Label l = codec.encode(dig);
            if (x == y) trans.push_back({0, l, 0});
            else trans.push_back({0, l, 1});
            trans.push_back({1, l, 1});
        }
    }
    return SyncAutomaton::make(std::move(alphabet), 2, 2, {0}, {1}, std::move(trans));
}

} // namespace

FunctionalCheck check_functional(const SyncAutomaton& relation, const SyncAutomaton& domain) {
    if (relation.tapes() != 2) raise(Error::Kind::arity_mismatch, "relation must be binary");
    if (domain.tapes() != 1) raise(Error::Kind::arity_mismatch, "domain must be unary");
    FunctionalCheck out;

    const int keep0[] = {0};
    SyncAutomaton defined = project(relation, keep0);
    SyncAutomaton missing = intersect(domain, complement(defined));
    out.total = is_empty(missing);
    if (!out.total) {
        if (auto w = shortest_accepted(missing)) {
            out.totality_witness = deconvolve(*w, *domain.alphabet(), 1)[0];
        }
    }

    SyncAutomaton neq = difference_automaton(relation.alphabet());
    const JoinComponent comps[] = {
        {&domain, {0}}, {&relation, {0, 1}}, {&relation, {0, 2}}, {&neq, {1, 2}}};
    SyncAutomaton ambiguous = join(comps, 3, relation.alphabet());
    out.single_valued = is_empty(ambiguous);
    if (!out.single_valued) {
        if (auto w = shortest_accepted(ambiguous)) {
            out.ambiguity_witness = deconvolve(*w, *relation.alphabet(), 3)[0];
        }
    }
    return out;
}

int length_difference_bound(const SyncAutomaton& relation) {
    if (relation.tapes() != 2) raise(Error::Kind::arity_mismatch, "relation must be binary");
    const std::size_t n = relation.num_states();
    if (n == 0) return 0;
    const LabelCodec& codec = relation.codec();
    auto pad_on_input = [&](Label l) { return codec.digit(l, 0) == codec.pad(); };

    // Tarjan SCC
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<bool> on_stack(n, false);
    std::vector<State> stack;
    int next_index = 0, comp_count = 0;
    std::vector<State> scc_order; // roots in completion order (reverse topological)
    struct Frame {
        State s;
        std::size_t edge;
    };
    for (State root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        std::vector<Frame> frames{{root, 0}};
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            auto& f = frames.back();
            if (f.edge < relation.transitions_from(f.s).size()) {
                State d = relation.transitions_from(f.s)[f.edge].second;
                ++f.edge;
                if (index[d] == -1) {
                    index[d] = low[d] = next_index++;
                    stack.push_back(d);
                    on_stack[d] = true;
                    frames.push_back({d, 0});
                } else if (on_stack[d]) {
                    low[f.s] = std::min(low[f.s], index[d]);
                }
            } else {
                if (low[f.s] == index[f.s]) {
                    for (;;) {
                        State w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        comp[w] = comp_count;
                        if (w == f.s) break;
                    }
                    ++comp_count;
                }
                State done = f.s;
                frames.pop_back();
                if (!frames.empty()) low[frames.back().s] = std::min(low[frames.back().s], low[done]);
            }
        }
    }
    (void)scc_order;

    // pad-reading edge inside an SCC => unbounded (all states are live)
    for (State s = 0; s < n; ++s) {
        for (auto [l, d] : relation.transitions_from(s)) {
            if (comp[s] == comp[d] && pad_on_input(l))
                raise(Error::Kind::not_bounded, "accepting pad-reading cycle: output length unbounded");
        }
    }

    // longest pad-edge count over the condensation; Tarjan numbers SCCs in
    // reverse topological order, so iterate components from high to low
    std::vector<int> dist(comp_count, -1);
    for (State s : relation.initial_states()) dist[comp[s]] = 0;
    std::vector<std::vector<std::pair<int, int>>> cedges(comp_count); // (dst comp, weight)
    for (State s = 0; s < n; ++s)
        for (auto [l, d] : relation.transitions_from(s))
            if (comp[s] != comp[d]) cedges[comp[s]].emplace_back(comp[d], pad_on_input(l) ? 1 : 0);
    for (int c = comp_count - 1; c >= 0; --c) {
        if (dist[c] < 0) continue;
        for (auto [d, w] : cedges[c]) dist[d] = std::max(dist[d], dist[c] + w);
    }
    int best = 0;
    for (State s : relation.accepting_states()) best = std::max(best, dist[comp[s]]);
    return best;
}

} // namespace cayt
