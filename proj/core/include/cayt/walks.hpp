#ifndef CAYT_WALKS_HPP
#define CAYT_WALKS_HPP

#include "cayt/oracles.hpp"
#include "cayt/rng.hpp"

#include <cmath>
#include <cstdint>
#include <memory>
#include <optional>
#include <thread>
#include <vector>

namespace cayt {

struct WalkEstimate {
    int n = 0;
    double mean = 0.0;
    double std_error = 0.0;
    std::size_t samples = 0;
    std::size_t invalid = 0; // resampled trajectories (length cap exceeded)
    std::uint64_t seed = 0;
};

namespace detail {

template <class Factory>
WalkEstimate run_walks(int n, std::size_t samples, std::uint64_t seed, int threads,
                       std::size_t gen_count, Factory&& factory) {
    if (samples < 1) raise(Error::Kind::invalid_argument, "need at least one sample");
    std::vector<double> values(samples, 0.0);
    std::vector<std::size_t> invalid(samples, 0);
    constexpr int kMaxAttempts = 64;
    auto run_range = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t s = lo; s < hi; ++s) {
            RngStream rng(seed, s);
            for (int attempt = 0;; ++attempt) {
                auto walker = factory();
                for (int i = 0; i < n; ++i)
                    walker.step(static_cast<int>(rng.below(static_cast<std::uint64_t>(gen_count))));
                if (auto v = walker.value()) {
                    values[s] = *v;
                    break;
                }
                ++invalid[s];
                if (attempt + 1 >= kMaxAttempts)
                    raise(Error::Kind::budget_exceeded, "walk sample kept exceeding the length cap");
            }
        }
    };
    const int workers = std::max(1, std::min<int>(threads, static_cast<int>(samples)));
    if (workers == 1) {
        run_range(0, samples);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (samples + static_cast<std::size_t>(workers) - 1) / static_cast<std::size_t>(workers);
        for (int w = 0; w < workers; ++w) {
            const std::size_t lo = static_cast<std::size_t>(w) * chunk;
            const std::size_t hi = std::min(samples, lo + chunk);
            if (lo < hi) pool.emplace_back(run_range, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    double mean = 0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(samples);
    double var = 0;
    for (double v : values) var += (v - mean) * (v - mean);
    var = samples > 1 ? var / static_cast<double>(samples - 1) : 0.0;
    WalkEstimate est;
    est.n = n;
    est.mean = mean;
    est.std_error = std::sqrt(var / static_cast<double>(samples));
    est.samples = samples;
    est.seed = seed;
    for (auto c : invalid) est.invalid += c;
    return est;
}

} // namespace detail

// --- specialized drift walkers (O(1)-ish per step) -----------------------------------

class ZmDriftWalker {
public:
    explicit ZmDriftWalker(const ZmGroup& g) : g_(&g), pos_(static_cast<std::size_t>(g.rank()), 0) {}
    void step(int gen) {
        const auto& e = g_->generators()[static_cast<std::size_t>(gen)];
        for (std::size_t i = 0; i < pos_.size(); ++i) pos_[i] += e[i];
    }
    std::optional<double> value() const {
        std::int64_t l = 0;
        for (auto v : pos_) l += v < 0 ? -v : v;
        return static_cast<double>(l);
    }

private:
    const ZmGroup* g_;
    std::vector<std::int64_t> pos_;
};

class FreeDriftWalker {
public:
    explicit FreeDriftWalker(const FreeGroup& g) : g_(&g) {}
    void step(int gen) {
        const char c = g_->generators()[static_cast<std::size_t>(gen)][0];
        if (!word_.empty() && (static_cast<unsigned char>(word_.back()) ^ 1u) == static_cast<unsigned char>(c))
            word_.pop_back();
        else
            word_.push_back(c);
    }
    std::optional<double> value() const { return static_cast<double>(word_.size()); }

private:
    const FreeGroup* g_;
    std::string word_;
};

// Lamplighter generators all decompose as (toggle at departure?, move,
// toggle at arrival?), which keeps the walk state update constant-time.
class LamplighterDriftWalker {
public:
    explicit LamplighterDriftWalker(const LamplighterGroup& g) : g_(&g) {
        for (const auto& e : g.generators()) {
            Move m;
            m.delta = e.pos;
            for (auto l : e.lamps) {
                if (l == 0) m.toggle_departure = true;
                else m.toggle_arrival = true;
            }
            // a lamp away from both endpoints would not be a single move
            moves_.push_back(m);
        }
    }
    void step(int gen) {
        const Move& m = moves_[static_cast<std::size_t>(gen)];
        if (m.toggle_departure) toggle(pos_);
        pos_ += m.delta;
        if (m.toggle_arrival) toggle(pos_);
    }
    std::optional<double> value() const {
        LamplighterGroup::Element e;
        e.lamps.assign(lamps_.begin(), lamps_.end());
        std::sort(e.lamps.begin(), e.lamps.end());
        e.pos = pos_;
        return static_cast<double>(g_->word_length(e));
    }

private:
    struct Move {
        bool toggle_departure = false;
        bool toggle_arrival = false;
        std::int64_t delta = 0;
    };
    void toggle(std::int64_t cell) {
        auto it = lamps_.find(cell);
        if (it == lamps_.end()) lamps_.insert(cell);
        else lamps_.erase(it);
    }
    const LamplighterGroup* g_;
    std::vector<Move> moves_;
    std::unordered_set<std::int64_t> lamps_;
    std::int64_t pos_ = 0;
};

// Walk on G2 = (Z2 wr Z) wr Z; cells are updated in place and the reported
// value is the constant-factor surrogate length.
class G2DriftWalker {
public:
    explicit G2DriftWalker(const G2Group& g) : g_(&g) {}
    void step(int gen) {
        const auto& e = g_->generators()[static_cast<std::size_t>(gen)];
        for (const auto& [off, val] : e.cells) {
            const std::int64_t key = pos_ + off;
            auto it = cells_.find(key);
            if (it == cells_.end()) {
                cells_.emplace(key, val);
            } else {
                it->second = g_->base().mul(it->second, val);
                if (it->second == g_->base().identity()) cells_.erase(it);
            }
        }
        pos_ += e.pos;
    }
    std::optional<double> value() const {
        if (cells_.empty() && pos_ == 0) return 0.0;
        std::int64_t lo = std::min<std::int64_t>(0, pos_);
        std::int64_t hi = std::max<std::int64_t>(0, pos_);
        std::int64_t work = 0;
        for (const auto& [c, v] : cells_) {
            lo = std::min(lo, c);
            hi = std::max(hi, c);
            work += g_->base().word_length(v);
        }
        return static_cast<double>(LamplighterGroup::cover_walk_cost(lo, hi, pos_) + work);
    }

private:
    const G2Group* g_;
    std::unordered_map<std::int64_t, LamplighterGroup::Element> cells_;
    std::int64_t pos_ = 0;
};

// Generic fallback: exact group arithmetic plus a BFS length table with a cap;
// endpoints outside the table invalidate the sample.
template <class G>
class TableDriftWalker {
public:
    using Table = std::unordered_map<typename G::Element, int, OracleHash<G>>;
    TableDriftWalker(const G& g, std::shared_ptr<const Table> table)
        : g_(&g), table_(std::move(table)), cur_(g.identity()) {}
    void step(int gen) { cur_ = g_->mul(cur_, g_->generators()[static_cast<std::size_t>(gen)]); }
    std::optional<double> value() const {
        auto it = table_->find(cur_);
        if (it == table_->end()) return std::nullopt;
        return static_cast<double>(it->second);
    }

private:
    const G* g_;
    std::shared_ptr<const Table> table_;
    typename G::Element cur_;
};

template <class G>
std::shared_ptr<const typename TableDriftWalker<G>::Table> make_length_table(const G& g, int radius) {
    auto b = ball(g, radius);
    auto table = std::make_shared<typename TableDriftWalker<G>::Table>(16, OracleHash<G>{&g});
    std::size_t idx = 0;
    for (int r = 0; r <= radius; ++r) {
        for (; idx < b.ball_sizes[static_cast<std::size_t>(r)]; ++idx) table->emplace(b.elements[idx], r);
    }
    return table;
}

// --- range walker -----------------------------------------------------------------

template <class G>
class RangeWalker {
public:
    explicit RangeWalker(const G& g) : g_(&g), cur_(g.identity()), visited_(16, OracleHash<G>{&g}) {
        visited_.insert(cur_);
    }
    void step(int gen) {
        cur_ = g_->mul(cur_, g_->generators()[static_cast<std::size_t>(gen)]);
        visited_.insert(cur_);
    }
    std::optional<double> value() const { return static_cast<double>(visited_.size()); }

private:
    const G* g_;
    typename G::Element cur_;
    std::unordered_set<typename G::Element, OracleHash<G>> visited_;
};

// --- public drivers ----------------------------------------------------------------

template <class G>
WalkEstimate walk_drift(const G& group, int n, std::size_t samples, std::uint64_t seed,
                        int threads = 1) {
    const std::size_t k = group.generators().size();
    if constexpr (std::is_same_v<G, ZmGroup>) {
        return detail::run_walks(n, samples, seed, threads, k,
                                 [&] { return ZmDriftWalker(group); });
    } else if constexpr (std::is_same_v<G, FreeGroup>) {
        return detail::run_walks(n, samples, seed, threads, k,
                                 [&] { return FreeDriftWalker(group); });
    } else if constexpr (std::is_same_v<G, LamplighterGroup>) {
        return detail::run_walks(n, samples, seed, threads, k,
                                 [&] { return LamplighterDriftWalker(group); });
    } else if constexpr (std::is_same_v<G, G2Group>) {
        return detail::run_walks(n, samples, seed, threads, k,
                                 [&] { return G2DriftWalker(group); });
    } else {
        auto table = make_length_table(group, 8);
        return detail::run_walks(n, samples, seed, threads, k,
                                 [&] { return TableDriftWalker<G>(group, table); });
    }
}

template <class G>
WalkEstimate walk_range(const G& group, int n, std::size_t samples, std::uint64_t seed,
                        int threads = 1) {
    return detail::run_walks(n, samples, seed, threads, group.generators().size(),
                             [&] { return RangeWalker<G>(group); });
}

} // namespace cayt

#endif
