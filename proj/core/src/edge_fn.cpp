#include "cayt/edge_fn.hpp"

#include <algorithm>

namespace cayt {

EdgeFn::EdgeFn(const SyncAutomaton& relation) : dfa_(minimize(relation)) {
    if (relation.tapes() != 2) raise(Error::Kind::arity_mismatch, "EdgeFn needs a binary relation");
    alpha_size_ = static_cast<unsigned>(dfa_.alphabet()->size());
    const unsigned base = alpha_size_ + 1;
    const LabelCodec& codec = dfa_.codec();
    options_.assign(dfa_.num_states() * base, {});
    for (State s = 0; s < dfa_.num_states(); ++s) {
        for (auto [l, d] : dfa_.transitions_from(s)) {
            const unsigned x = codec.digit(l, 0);
            const unsigned y = codec.digit(l, 1);
            options_[s * base + x].emplace_back(static_cast<std::uint8_t>(y), d);
        }
    }
    pad_cap_ = static_cast<int>(dfa_.num_states()) + 1;
}

std::optional<Word> EdgeFn::apply(const Word& x) const { return run(x, false); }
std::optional<Word> EdgeFn::apply_verified(const Word& x) const { return run(x, true); }

std::optional<Word> EdgeFn::run(const Word& x, bool verify) const {
    if (dfa_.num_states() == 0) return std::nullopt;
    for (char c : x)
        if (static_cast<unsigned char>(c) >= alpha_size_)
            raise(Error::Kind::alphabet_mismatch, "input symbol outside the alphabet");
    const unsigned base = alpha_size_ + 1;
    const unsigned pad = alpha_size_;
    const int xlen = static_cast<int>(x.size());
    const int tmax = xlen + pad_cap_ + 1;
    const std::size_t nstates = dfa_.num_states();

    enum : std::uint8_t { kUnseen = 0, kFail = 1, kOk = 2 };
    // memo over (t, state, y_ended); choice_ stores the successful y digit,
    // with `base` meaning "stop here"
    std::vector<std::uint8_t> memo(static_cast<std::size_t>(tmax + 1) * nstates * 2, kUnseen);
    std::vector<std::uint8_t> choice(verify ? memo.size() : 0, 0);
    auto idx = [&](int t, State q, bool ended) {
        return (static_cast<std::size_t>(t) * nstates + q) * 2 + (ended ? 1 : 0);
    };

    auto dfs = [&](auto&& self, int t, State q, bool ended) -> bool {
        const std::size_t key = idx(t, q, ended);
        if (memo[key] == kFail) return false;
        if (memo[key] == kOk) {
            if (verify)
                raise(Error::Kind::functionality, "relation has two images for an input");
            return true;
        }
        // no cycle risk: t strictly increases along every branch
        int successes = 0;
        std::uint8_t first_choice = 0;
        const unsigned xd = t < xlen ? static_cast<unsigned char>(x[static_cast<std::size_t>(t)]) : pad;
        if (t >= xlen) {
            // the convolution may end at this position
            if (dfa_.is_accepting(q)) {
                ++successes;
                first_choice = static_cast<std::uint8_t>(base);
                if (!verify) {
                    memo[key] = kOk;
                    return true;
                }
            }
            if (t == tmax) {
                memo[key] = successes ? kOk : kFail;
                if (verify && successes) choice[key] = first_choice;
                return successes > 0;
            }
        }
        const auto& opts = options_[q * base + xd];
        for (auto [y, next] : opts) {
            if (ended && y != pad) continue;
            if (xd == pad && y == pad) continue; // all-pad label cannot exist
            if (self(self, t + 1, next, ended || y == pad)) {
                ++successes;
                if (successes == 1) first_choice = y;
                if (!verify) break;
                if (successes >= 2)
                    raise(Error::Kind::functionality, "relation has two images for an input");
            }
        }
        memo[key] = successes ? kOk : kFail;
        if (verify && successes) choice[key] = first_choice;
        return successes > 0;
    };

    const State start = dfa_.initial_states()[0];
    if (!dfs(dfs, 0, start, false)) return std::nullopt;

    // reconstruct by replaying the memoized choices (verified mode) or a
    // second greedy pass (fast mode, every step now hits kOk nodes)
    Word y;
    int t = 0;
    State q = start;
    bool ended = false;
    while (true) {
        const unsigned xd = t < xlen ? static_cast<unsigned char>(x[static_cast<std::size_t>(t)]) : pad;
        std::uint8_t pick = base + 1; // sentinel
        if (verify) {
            pick = choice[idx(t, q, ended)];
        } else {
            if (t >= xlen && dfa_.is_accepting(q)) pick = static_cast<std::uint8_t>(base);
            if (pick > base) {
                for (auto [yd, next] : options_[q * base + xd]) {
                    if (ended && yd != pad) continue;
                    if (xd == pad && yd == pad) continue;
                    if (memo[idx(t + 1, next, ended || yd == pad)] == kOk) {
                        pick = yd;
                        break;
                    }
                }
            }
        }
        if (pick == base) break; // stop
        // follow the chosen transition
        State next_state = 0;
        bool found = false;
        for (auto [yd, next] : options_[q * base + xd]) {
            if (yd == pick) {
                next_state = next;
                found = true;
                break;
            }
        }
        if (!found) raise(Error::Kind::functionality, "inconsistent evaluator state");
        if (pick != pad) y.push_back(static_cast<char>(pick));
        ended = ended || pick == pad;
        q = next_state;
        ++t;
    }
    return y;
}

Word unique_image(const SyncAutomaton& relation, const Word& x) {
    EdgeFn fn(relation);
    auto y = fn.apply_verified(x);
    if (!y) raise(Error::Kind::domain, "input word has no image under the relation");
    return *y;
}

} // namespace cayt
