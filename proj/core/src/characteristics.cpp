#include "cayt/characteristics.hpp"

#include "cayt/rng.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace cayt {

namespace {

struct WordHash {
    std::size_t operator()(const Word& w) const { return std::hash<std::string>{}(w); }
};

} // namespace

GrowthRecord growth(const ClassTTransducer& t, int max_n) {
    if (max_n < 0) raise(Error::Kind::invalid_argument, "negative horizon");
    GrowthRecord out;
    out.base_word = t.base_word();
    std::unordered_set<Word, WordHash> visited;
    std::vector<Word> frontier{t.base_word()};
    visited.insert(t.base_word());
    out.ball_sizes.push_back(1);
    out.frontier_sizes.push_back(1);
    const int k = t.label_count();
    for (int n = 1; n <= max_n; ++n) {
        std::unordered_set<Word, WordHash> next_set;
        std::vector<Word> next;
        for (const Word& w : frontier) {
            for (int j = 0; j < k; ++j) {
                Word y = t.presentation().apply_edge(j, w);
                if (next_set.insert(y).second) next.push_back(std::move(y));
            }
        }
        out.frontier_sizes.push_back(static_cast<long long>(next.size()));
        for (const Word& w : next) visited.insert(w);
        out.ball_sizes.push_back(static_cast<long long>(visited.size()));
        frontier = std::move(next);
    }
    return out;
}

std::vector<Word> ball_words(const ClassTTransducer& t, int radius) {
    std::unordered_set<Word, WordHash> visited{t.base_word()};
    std::vector<Word> order{t.base_word()};
    std::size_t begin = 0;
    const int k = t.label_count();
    for (int n = 1; n <= radius; ++n) {
        const std::size_t end = order.size();
        for (std::size_t i = begin; i < end; ++i) {
            const Word w = order[i];
            for (int j = 0; j < k; ++j) {
                Word y = t.presentation().apply_edge(j, w);
                if (visited.insert(y).second) order.push_back(std::move(y));
            }
        }
        begin = end;
    }
    return order;
}

std::vector<Word> boundary(const ClassTTransducer& t, const std::vector<Word>& set) {
    std::unordered_set<Word, WordHash> members(set.begin(), set.end());
    std::vector<Word> out;
    const int k = t.label_count();
    for (const Word& w : set) {
        if (!t.presentation().in_domain(w))
            raise(Error::Kind::domain, "set contains a word outside the domain");
        for (int j = 0; j < k; ++j) {
            if (!members.count(t.presentation().apply_edge(j, w))) {
                out.push_back(w);
                break;
            }
        }
    }
    return out;
}

Rational folner_ratio(const ClassTTransducer& t, const std::vector<Word>& set) {
    if (set.empty()) raise(Error::Kind::invalid_argument, "empty set has no boundary ratio");
    std::unordered_set<Word, WordHash> distinct(set.begin(), set.end());
    std::vector<Word> canon(distinct.begin(), distinct.end());
    return Rational(static_cast<long long>(boundary(t, canon).size()),
                    static_cast<long long>(canon.size()));
}

FolnerReport folner_upper(const ClassTTransducer& t, const WordSetFamily& family,
                          const Rational& epsilon) {
    if (epsilon <= 0 || epsilon > 1) raise(Error::Kind::invalid_argument, "epsilon must be in (0,1]");
    FolnerReport report;
    report.epsilon = epsilon;
    for (int i = 1; i <= family.max_index(); ++i) {
        std::vector<Word> w = family.member(i);
        if (w.empty()) continue;
        std::vector<Word> bw = boundary(t, w);
        const Rational ratio(static_cast<long long>(bw.size()), static_cast<long long>(w.size()));
        if (ratio < epsilon) {
            report.found = true;
            report.witness = std::move(w);
            report.boundary_size = bw.size();
            report.boundary_words = std::move(bw);
            report.ratio = ratio;
            report.note = "upper bound from family '" + family.name() + "'";
            return report;
        }
    }
    report.note = "not-found-within-budget: family '" + family.name() + "' exhausted";
    return report;
}

WordSetFamily ball_family(const ClassTTransducer& t, int max_radius) {
    auto cache = std::make_shared<std::vector<std::vector<Word>>>();
    const ClassTTransducer* tp = &t;
    return WordSetFamily("balls", max_radius, [tp, cache](int r) {
        while (static_cast<int>(cache->size()) < r + 1)
            cache->push_back(ball_words(*tp, static_cast<int>(cache->size())));
        return (*cache)[static_cast<std::size_t>(r)];
    });
}

WordSetFamily lamplighter_rectangle_family(const ClassTTransducer& t, int max_radius) {
    // Elements with lamps and head inside [-r, r], materialized by walking
    // label paths from the base word: sweep right lighting lamps, sweep
    // left, then park the head.
    const ClassTTransducer* tp = &t;
    return WordSetFamily("rectangles", max_radius, [tp](int r) {
        const int t_fwd = 0, t_bwd = 1, t_h = 2;
        std::vector<Word> out;
        const int cells = 2 * r + 1;
        for (std::uint64_t lampbits = 0; lampbits < (1ull << cells); ++lampbits) {
            for (int head = -r; head <= r; ++head) {
                std::vector<int> path;
                int pos = 0;
                auto lamp_at = [&](int c) { return (lampbits >> (c + r)) & 1ull; };
                if (lamp_at(0)) path.push_back(t_h);
                for (int c = 1; c <= r; ++c) {
                    path.push_back(t_fwd);
                    ++pos;
                    if (lamp_at(c)) path.push_back(t_h);
                }
                while (pos > -r) {
                    path.push_back(t_bwd);
                    --pos;
                    if (pos < 0 && lamp_at(pos)) path.push_back(t_h);
                }
                while (pos < head) {
                    path.push_back(t_fwd);
                    ++pos;
                }
                out.push_back(tp->presentation().word_of(tp->base_word(), path));
            }
        }
        return out;
    });
}

FolnerReport folner_exact(const ClassTTransducer& t, const Rational& epsilon, int size_budget,
                          int radius_budget) {
    if (epsilon <= 0 || epsilon > 1) raise(Error::Kind::invalid_argument, "epsilon must be in (0,1]");
    if (size_budget < 1) raise(Error::Kind::invalid_argument, "size budget must be positive");
    FolnerReport report;
    report.epsilon = epsilon;

    const std::vector<Word> universe = ball_words(t, radius_budget);
    const int n = static_cast<int>(universe.size());
    std::unordered_map<Word, int, WordHash> index;
    for (int i = 0; i < n; ++i) index.emplace(universe[static_cast<std::size_t>(i)], i);

    const int k = t.label_count();
    // outs[i]: indices of the outputs inside the universe, -1 when outside
    std::vector<std::vector<int>> outs(static_cast<std::size_t>(n));
    std::vector<std::vector<int>> ins(static_cast<std::size_t>(n)); // reverse edges within universe
    for (int i = 0; i < n; ++i) {
        auto& row = outs[static_cast<std::size_t>(i)];
        for (int j = 0; j < k; ++j) {
            Word y = t.presentation().apply_edge(j, universe[static_cast<std::size_t>(i)]);
            auto it = index.find(y);
            const int target = it == index.end() ? -1 : it->second;
            row.push_back(target);
            if (target >= 0 && target != i) ins[static_cast<std::size_t>(target)].push_back(i);
        }
    }

    enum : std::int8_t { kUndecided = 0, kIn = 1, kOut = 2 };
    std::vector<std::int8_t> status(static_cast<std::size_t>(n), kUndecided);
    std::vector<bool> is_boundary(static_cast<std::size_t>(n), false);
    std::vector<int> chosen;
    std::uint64_t nodes = 0;
    constexpr std::uint64_t kNodeBudget = 200'000'000;

    for (int target_size = 1; target_size <= size_budget; ++target_size) {
        // need boundary < epsilon * target_size
        const Rational bound = epsilon * target_size;
        long long maxb = static_cast<long long>(rat_num(bound) / rat_den(bound));
        if (Rational(maxb) == bound) maxb -= 1; // strict inequality
        if (maxb < 0) continue;

        int locked = 0;
        std::vector<int> boundary_marks; // stack of indices marked boundary, for undo

        auto new_boundary = [&](int w) {
            if (!is_boundary[static_cast<std::size_t>(w)]) {
                is_boundary[static_cast<std::size_t>(w)] = true;
                boundary_marks.push_back(w);
                ++locked;
            }
        };

        auto dfs = [&](auto&& self, int idx) -> bool {
            if (++nodes > kNodeBudget)
                raise(Error::Kind::budget_exceeded, "folner_exact search budget exceeded");
            if (locked > maxb) return false;
            const int have = static_cast<int>(chosen.size());
            if (have == target_size) {
                // remaining words are implicitly out; finish the count
                long long extra = 0;
                for (int w : chosen) {
                    if (is_boundary[static_cast<std::size_t>(w)]) continue;
                    for (int o : outs[static_cast<std::size_t>(w)]) {
                        if (o < 0 || status[static_cast<std::size_t>(o)] == kOut ||
                            (o >= idx && status[static_cast<std::size_t>(o)] == kUndecided)) {
                            ++extra;
                            break;
                        }
                    }
                }
                return Rational(locked + extra) < bound;
            }
            if (idx >= n || have + (n - idx) < target_size) return false;

            const std::size_t mark = boundary_marks.size();
            const int undo_locked = locked;

            // include idx
            status[static_cast<std::size_t>(idx)] = kIn;
            chosen.push_back(idx);
            for (int o : outs[static_cast<std::size_t>(idx)])
                if (o < 0 || (o < idx && status[static_cast<std::size_t>(o)] == kOut)) {
                    new_boundary(idx);
                    break;
                }
            if (self(self, idx + 1)) return true;
            chosen.pop_back();
            while (boundary_marks.size() > mark) {
                is_boundary[static_cast<std::size_t>(boundary_marks.back())] = false;
                boundary_marks.pop_back();
            }
            locked = undo_locked;

            // exclude idx
            status[static_cast<std::size_t>(idx)] = kOut;
            for (int w : ins[static_cast<std::size_t>(idx)])
                if (status[static_cast<std::size_t>(w)] == kIn) new_boundary(w);
            const bool found = self(self, idx + 1);
            if (!found) {
                while (boundary_marks.size() > mark) {
                    is_boundary[static_cast<std::size_t>(boundary_marks.back())] = false;
                    boundary_marks.pop_back();
                }
                locked = undo_locked;
                status[static_cast<std::size_t>(idx)] = kUndecided;
            }
            return found;
        };

        if (dfs(dfs, 0)) {
            report.found = true;
            for (int w : chosen) report.witness.push_back(universe[static_cast<std::size_t>(w)]);
            report.boundary_words = boundary(t, report.witness);
            report.boundary_size = report.boundary_words.size();
            report.ratio = Rational(static_cast<long long>(report.boundary_size),
                                    static_cast<long long>(report.witness.size()));
            report.note = "exact over searched universe (ball radius " +
                          std::to_string(radius_budget) + ", size budget " +
                          std::to_string(size_budget) + ")";
            return report;
        }
        std::fill(status.begin(), status.end(), kUndecided);
        std::fill(is_boundary.begin(), is_boundary.end(), false);
        chosen.clear();
    }
    report.note = "not-found: no subset within budgets beats epsilon";
    return report;
}

std::vector<AvgLengthRecord> avg_length_exact(const ClassTTransducer& t, int max_n) {
    if (max_n < 0) raise(Error::Kind::invalid_argument, "negative horizon");
    const int k = t.label_count();
    std::vector<AvgLengthRecord> out;
    std::unordered_map<Word, BigInt, WordHash> mult;
    mult.emplace(t.base_word(), 1);
    for (int n = 0;; ++n) {
        const BigInt mass = int_pow(k, static_cast<unsigned>(n));
        BigInt weighted = 0, check = 0;
        for (const auto& [w, m] : mult) {
            weighted += m * static_cast<long long>(w.size());
            check += m;
        }
        if (check != mass) raise(Error::Kind::invalid_argument, "multiset mass invariant broken");
        AvgLengthRecord rec;
        rec.n = n;
        rec.value = Rational(weighted, mass);
        rec.distinct_words = static_cast<long long>(mult.size());
        rec.total_mass = mass;
        out.push_back(std::move(rec));
        if (n == max_n) break;
        std::unordered_map<Word, BigInt, WordHash> next;
        next.reserve(mult.size() * 2);
        for (const auto& [w, m] : mult) {
            for (int j = 0; j < k; ++j) next[t.presentation().apply_edge(j, w)] += m;
        }
        mult = std::move(next);
    }
    return out;
}

McEstimate avg_length_mc(const ClassTTransducer& t, int n, std::size_t samples, std::uint64_t seed,
                         int threads) {
    if (samples < 1) raise(Error::Kind::invalid_argument, "need at least one sample");
    if (n < 0) raise(Error::Kind::invalid_argument, "negative step count");
    const int k = t.label_count();
    std::vector<double> values(samples);
    auto run_range = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t s = lo; s < hi; ++s) {
            RngStream rng(seed, s);
            Word w = t.base_word();
            for (int i = 0; i < n; ++i)
                w = t.presentation().apply_edge(static_cast<int>(rng.below(static_cast<std::uint64_t>(k))), w);
            values[s] = static_cast<double>(w.size());
        }
    };
    const int workers = std::max(1, std::min<int>(threads, static_cast<int>(samples)));
    if (workers == 1) {
        run_range(0, samples);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (samples + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const std::size_t lo = w * chunk;
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
    McEstimate est;
    est.n = n;
    est.samples = samples;
    est.mean = mean;
    est.std_error = std::sqrt(var / static_cast<double>(samples));
    est.seed = seed;
    return est;
}

} // namespace cayt
