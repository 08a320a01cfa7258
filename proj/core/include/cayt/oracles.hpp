#ifndef CAYT_ORACLES_HPP
#define CAYT_ORACLES_HPP

#include "cayt/errors.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace cayt {

// Oracle groups provide exact arithmetic as ground truth for the automata
// side. The informal concept: value-type Element with ==, group.hash(e),
// identity/mul/inverse, and a symmetric generator list with inverse pairing.

inline std::size_t hash_mix(std::size_t h, std::size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
}

// --- Z^m --------------------------------------------------------------------------

class ZmGroup {
public:
    using Element = std::vector<std::int64_t>;

    explicit ZmGroup(int m);

    int rank() const { return m_; }
    Element identity() const { return Element(static_cast<std::size_t>(m_), 0); }
    Element mul(const Element& a, const Element& b) const;
    Element inverse(const Element& a) const;
    std::size_t hash(const Element& e) const;
    const std::vector<Element>& generators() const { return gens_; }
    const std::vector<int>& inverse_pairing() const { return pairing_; }
    const std::vector<std::string>& generator_names() const { return names_; }
    // l1 norm; the exact word length for the standard generators
    std::int64_t word_length(const Element& e) const;

private:
    int m_;
    std::vector<Element> gens_;
    std::vector<int> pairing_;
    std::vector<std::string> names_;
};

// --- free groups -------------------------------------------------------------------

class FreeGroup {
public:
    // reduced byte string; letter 2i is generator i, 2i+1 its inverse
    using Element = std::string;

    explicit FreeGroup(int m);

    int rank() const { return m_; }
    Element identity() const { return {}; }
    Element mul(const Element& a, const Element& b) const;
    Element inverse(const Element& a) const;
    std::size_t hash(const Element& e) const { return std::hash<std::string>{}(e); }
    const std::vector<Element>& generators() const { return gens_; }
    const std::vector<int>& inverse_pairing() const { return pairing_; }
    const std::vector<std::string>& generator_names() const { return names_; }
    std::int64_t word_length(const Element& e) const { return static_cast<std::int64_t>(e.size()); }

private:
    int m_;
    std::vector<Element> gens_;
    std::vector<int> pairing_;
    std::vector<std::string> names_;
};

// --- Z2 wr Z ------------------------------------------------------------------------

class LamplighterGroup {
public:
    enum class GenSet {
        S1Prime, // {t, t^-1, h}
        S1,      // {t, th, ht, hth} and inverses
    };

    struct Element {
        std::vector<std::int64_t> lamps; // sorted positions of lit lamps
        std::int64_t pos = 0;
        bool operator==(const Element&) const = default;
        auto operator<=>(const Element&) const = default;
    };

    explicit LamplighterGroup(GenSet set);

    GenSet gen_set() const { return set_; }
    Element identity() const { return {}; }
    Element mul(const Element& a, const Element& b) const;
    Element inverse(const Element& a) const;
    std::size_t hash(const Element& e) const;
    const std::vector<Element>& generators() const { return gens_; }
    const std::vector<int>& inverse_pairing() const { return pairing_; }
    const std::vector<std::string>& generator_names() const { return names_; }

    // Closed-form word length for the active generator set: the shortest
    // walk from 0 to pos covering every lit lamp, plus one step per lamp
    // when toggles are separate generators (S1'). Cross-checked against BFS
    // in the test suite before the walks rely on it.
    std::int64_t word_length(const Element& e) const;

    static std::int64_t cover_walk_cost(std::int64_t lo, std::int64_t hi, std::int64_t end);

private:
    GenSet set_;
    std::vector<Element> gens_;
    std::vector<int> pairing_;
    std::vector<std::string> names_;
};

// --- Z2 wr Z^2 ----------------------------------------------------------------------

class Z2WreathZ2 {
public:
    struct Element {
        std::vector<std::array<std::int64_t, 2>> lamps; // sorted
        std::array<std::int64_t, 2> pos{0, 0};
        bool operator==(const Element&) const = default;
    };

    Z2WreathZ2();

    Element identity() const { return {}; }
    Element mul(const Element& a, const Element& b) const;
    Element inverse(const Element& a) const;
    std::size_t hash(const Element& e) const;
    const std::vector<Element>& generators() const { return gens_; }
    const std::vector<int>& inverse_pairing() const { return pairing_; }
    const std::vector<std::string>& generator_names() const { return names_; }

private:
    std::vector<Element> gens_;
    std::vector<int> pairing_;
    std::vector<std::string> names_;
};

// --- G wr Z with the h_i^p t h_j^q generator scheme ------------------------------------

template <class Base>
class WreathZ {
public:
    struct Element {
        // sorted by position; values are never the base identity
        std::vector<std::pair<std::int64_t, typename Base::Element>> cells;
        std::int64_t pos = 0;
        bool operator==(const Element&) const = default;
    };

    explicit WreathZ(Base base) : base_(std::move(base)) {
        const auto& bg = base_.generators();
        const int m = static_cast<int>(bg.size());
        raw_generator_count_ = 9 * m * m;
        std::vector<Element> q;
        std::vector<std::string> qnames;
        for (int i = 0; i < m; ++i) {
            for (int p = -1; p <= 1; ++p) {
                for (int j = 0; j < m; ++j) {
                    for (int qq = -1; qq <= 1; ++qq) {
                        Element e;
                        e.pos = 1;
                        auto left = power(bg[static_cast<std::size_t>(i)], p);
                        auto right = power(bg[static_cast<std::size_t>(j)], qq);
                        if (!(left == base_.identity())) e.cells.emplace_back(0, left);
                        if (!(right == base_.identity())) e.cells.emplace_back(1, right);
                        if (std::find(q.begin(), q.end(), e) == q.end()) {
                            q.push_back(e);
                            qnames.push_back(gen_name(i, p, j, qq));
                        }
                    }
                }
            }
        }
        // symmetrize and pair inverses
        gens_ = q;
        names_ = qnames;
        for (std::size_t i = 0; i < q.size(); ++i) {
            Element inv = inverse(q[i]);
            if (std::find(gens_.begin(), gens_.end(), inv) == gens_.end()) {
                gens_.push_back(inv);
                names_.push_back(qnames[i] + "^-1");
            }
        }
        pairing_.assign(gens_.size(), -1);
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            Element inv = inverse(gens_[i]);
            auto it = std::find(gens_.begin(), gens_.end(), inv);
            pairing_[i] = static_cast<int>(it - gens_.begin());
        }
    }

    const Base& base() const { return base_; }
    int raw_generator_count() const { return raw_generator_count_; }

    Element identity() const { return {}; }

    Element mul(const Element& a, const Element& b) const {
        Element out;
        out.pos = a.pos + b.pos;
        out.cells.reserve(a.cells.size() + b.cells.size());
        std::size_t i = 0, j = 0;
        while (i < a.cells.size() || j < b.cells.size()) {
            const std::int64_t pa = i < a.cells.size() ? a.cells[i].first : INT64_MAX;
            const std::int64_t pb = j < b.cells.size() ? b.cells[j].first + a.pos : INT64_MAX;
            if (pa < pb) {
                out.cells.push_back(a.cells[i++]);
            } else if (pb < pa) {
                out.cells.emplace_back(pb, b.cells[j++].second);
            } else {
                auto v = base_.mul(a.cells[i].second, b.cells[j].second);
                if (!(v == base_.identity())) out.cells.emplace_back(pa, std::move(v));
                ++i;
                ++j;
            }
        }
        return out;
    }

    Element inverse(const Element& a) const {
        Element out;
        out.pos = -a.pos;
        out.cells.reserve(a.cells.size());
        for (const auto& [c, v] : a.cells) out.cells.emplace_back(c - a.pos, base_.inverse(v));
        std::sort(out.cells.begin(), out.cells.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        return out;
    }

    std::size_t hash(const Element& e) const {
        std::size_t h = std::hash<std::int64_t>{}(e.pos);
        for (const auto& [c, v] : e.cells) {
            h = hash_mix(h, std::hash<std::int64_t>{}(c));
            h = hash_mix(h, base_.hash(v));
        }
        return h;
    }

    const std::vector<Element>& generators() const { return gens_; }
    const std::vector<int>& inverse_pairing() const { return pairing_; }
    const std::vector<std::string>& generator_names() const { return names_; }

    // Constant-factor length surrogate: cover-walk cost over the occupied
    // cells plus the total base length to deposit. Sandwiched between l - 2
    // and 3l (checked in tests on small balls), so log-log exponents are
    // unaffected.
    std::int64_t length_surrogate(const Element& e) const {
        if (e.cells.empty() && e.pos == 0) return 0;
        std::int64_t lo = std::min<std::int64_t>(0, e.pos);
        std::int64_t hi = std::max<std::int64_t>(0, e.pos);
        std::int64_t work = 0;
        for (const auto& [c, v] : e.cells) {
            lo = std::min(lo, c);
            hi = std::max(hi, c);
            work += base_.word_length(v);
        }
        return LamplighterGroup::cover_walk_cost(lo, hi, e.pos) + work;
    }
    std::int64_t word_length(const Element& e) const { return length_surrogate(e); }

private:
    typename Base::Element power(const typename Base::Element& g, int p) const {
        if (p == 0) return base_.identity();
        if (p == 1) return g;
        return base_.inverse(g);
    }
    static std::string gen_name(int i, int p, int j, int q) {
        std::string out;
        if (p != 0) out += "h" + std::to_string(i + 1) + (p < 0 ? "^-1" : "") + ".";
        out += "t";
        if (q != 0) out += ".h" + std::to_string(j + 1) + (q < 0 ? "^-1" : "");
        return out;
    }

    Base base_;
    std::vector<Element> gens_;
    std::vector<int> pairing_;
    std::vector<std::string> names_;
    int raw_generator_count_ = 0;
};

using G2Group = WreathZ<LamplighterGroup>;

inline G2Group make_g2() { return G2Group(LamplighterGroup(LamplighterGroup::GenSet::S1)); }

// --- generic algorithms over oracle groups ----------------------------------------------

template <class G>
struct OracleHash {
    const G* group;
    std::size_t operator()(const typename G::Element& e) const { return group->hash(e); }
};

template <class G>
struct BallResult {
    std::vector<typename G::Element> elements; // BFS discovery order
    std::vector<std::size_t> ball_sizes;       // cumulative count per radius
};

template <class G>
BallResult<G> ball(const G& group, int radius, std::size_t element_cap = 50'000'000) {
    BallResult<G> out;
    using Element = typename G::Element;
    std::unordered_set<Element, OracleHash<G>> seen(16, OracleHash<G>{&group});
    out.elements.push_back(group.identity());
    seen.insert(group.identity());
    out.ball_sizes.push_back(1);
    std::size_t begin = 0;
    for (int r = 1; r <= radius; ++r) {
        const std::size_t end = out.elements.size();
        for (std::size_t i = begin; i < end; ++i) {
            for (const auto& s : group.generators()) {
                Element next = group.mul(out.elements[i], s);
                if (seen.insert(next).second) {
                    out.elements.push_back(std::move(next));
                    if (out.elements.size() > element_cap)
                        raise(Error::Kind::budget_exceeded, "ball element budget exceeded");
                }
            }
        }
        out.ball_sizes.push_back(out.elements.size());
        begin = end;
    }
    return out;
}

// Breadth-first word length up to a cap; nullopt when the cap is exceeded.
template <class G>
std::optional<int> bfs_word_length(const G& group, const typename G::Element& target, int radius_cap) {
    using Element = typename G::Element;
    if (target == group.identity()) return 0;
    std::unordered_set<Element, OracleHash<G>> seen(16, OracleHash<G>{&group});
    std::deque<Element> frontier{group.identity()};
    seen.insert(group.identity());
    for (int r = 1; r <= radius_cap; ++r) {
        std::deque<Element> next;
        for (const auto& e : frontier) {
            for (const auto& s : group.generators()) {
                Element ns = group.mul(e, s);
                if (ns == target) return r;
                if (seen.insert(ns).second) next.push_back(std::move(ns));
            }
        }
        frontier = std::move(next);
    }
    return std::nullopt;
}

// Exact word length: closed form when the group provides one (asserted
// against BFS in tests), otherwise BFS with the given cap.
template <class G>
std::int64_t word_length(const G& group, const typename G::Element& g, int radius_cap = 12) {
    if constexpr (requires { group.word_length(g); }) {
        return group.word_length(g);
    } else {
        auto r = bfs_word_length(group, g, radius_cap);
        if (!r) raise(Error::Kind::budget_exceeded, "word length exceeds the BFS cap");
        return *r;
    }
}

} // namespace cayt

#endif
