#include "cayt/oracles.hpp"

namespace cayt {

// --- ZmGroup -----------------------------------------------------------------

ZmGroup::ZmGroup(int m) : m_(m) {
    if (m < 1) raise(Error::Kind::invalid_argument, "ZmGroup needs m >= 1");
    for (int i = 0; i < m; ++i) {
        Element plus(static_cast<std::size_t>(m), 0), minus(static_cast<std::size_t>(m), 0);
        plus[static_cast<std::size_t>(i)] = 1;
        minus[static_cast<std::size_t>(i)] = -1;
        gens_.push_back(std::move(plus));
        gens_.push_back(std::move(minus));
        pairing_.push_back(2 * i + 1);
        pairing_.push_back(2 * i);
        names_.push_back("+e" + std::to_string(i + 1));
        names_.push_back("-e" + std::to_string(i + 1));
    }
}

ZmGroup::Element ZmGroup::mul(const Element& a, const Element& b) const {
    Element out(a);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

ZmGroup::Element ZmGroup::inverse(const Element& a) const {
    Element out(a);
    for (auto& v : out) v = -v;
    return out;
}

std::size_t ZmGroup::hash(const Element& e) const {
    std::size_t h = 0x2545f491u;
    for (auto v : e) h = hash_mix(h, std::hash<std::int64_t>{}(v));
    return h;
}

std::int64_t ZmGroup::word_length(const Element& e) const {
    std::int64_t out = 0;
    for (auto v : e) out += v < 0 ? -v : v;
    return out;
}

// --- FreeGroup ---------------------------------------------------------------

FreeGroup::FreeGroup(int m) : m_(m) {
    if (m < 1) raise(Error::Kind::invalid_argument, "FreeGroup needs m >= 1");
    for (int i = 0; i < m; ++i) {
        gens_.push_back(Element(1, static_cast<char>(2 * i)));
        gens_.push_back(Element(1, static_cast<char>(2 * i + 1)));
        pairing_.push_back(2 * i + 1);
        pairing_.push_back(2 * i);
        names_.push_back("g" + std::to_string(i + 1));
        names_.push_back("g" + std::to_string(i + 1) + "^-1");
    }
}

FreeGroup::Element FreeGroup::mul(const Element& a, const Element& b) const {
    Element out = a;
    for (char c : b) {
        if (!out.empty() && (static_cast<unsigned char>(out.back()) ^ 1u) == static_cast<unsigned char>(c))
            out.pop_back();
        else
            out.push_back(c);
    }
    return out;
}

FreeGroup::Element FreeGroup::inverse(const Element& a) const {
    Element out;
    out.reserve(a.size());
    for (auto it = a.rbegin(); it != a.rend(); ++it)
        out.push_back(static_cast<char>(static_cast<unsigned char>(*it) ^ 1u));
    return out;
}

// --- LamplighterGroup -----------------------------------------------------------

namespace {

LamplighterGroup::Element lamp_elem(std::initializer_list<std::int64_t> lamps, std::int64_t pos) {
    LamplighterGroup::Element e;
    e.lamps.assign(lamps);
    std::sort(e.lamps.begin(), e.lamps.end());
    e.pos = pos;
    return e;
}

} // namespace

LamplighterGroup::LamplighterGroup(GenSet set) : set_(set) {
    const Element t = lamp_elem({}, 1);
    const Element t_inv = lamp_elem({}, -1);
    const Element h = lamp_elem({0}, 0);
    if (set == GenSet::S1Prime) {
        gens_ = {t, t_inv, h};
        pairing_ = {1, 0, 2};
        names_ = {"t", "t^-1", "h"};
    } else {
        const Element th = mul(t, h);
        const Element ht = mul(h, t);
        const Element hth = mul(h, th);
        gens_ = {t, th, ht, hth, inverse(t), inverse(th), inverse(ht), inverse(hth)};
        pairing_ = {4, 5, 6, 7, 0, 1, 2, 3};
        names_ = {"t", "th", "ht", "hth", "t^-1", "ht^-1", "t^-1h", "ht^-1h"};
    }
}

LamplighterGroup::Element LamplighterGroup::mul(const Element& a, const Element& b) const {
    Element out;
    out.pos = a.pos + b.pos;
    out.lamps.reserve(a.lamps.size() + b.lamps.size());
    // symmetric difference of a.lamps and b.lamps shifted by a.pos
    std::size_t i = 0, j = 0;
    while (i < a.lamps.size() || j < b.lamps.size()) {
        const std::int64_t la = i < a.lamps.size() ? a.lamps[i] : INT64_MAX;
        const std::int64_t lb = j < b.lamps.size() ? b.lamps[j] + a.pos : INT64_MAX;
        if (la < lb) out.lamps.push_back(a.lamps[i++]);
        else if (lb < la) out.lamps.push_back(lb), ++j;
        else ++i, ++j;
    }
    return out;
}

LamplighterGroup::Element LamplighterGroup::inverse(const Element& a) const {
    Element out;
    out.pos = -a.pos;
    out.lamps.reserve(a.lamps.size());
    for (auto l : a.lamps) out.lamps.push_back(l - a.pos);
    std::sort(out.lamps.begin(), out.lamps.end());
    return out;
}

std::size_t LamplighterGroup::hash(const Element& e) const {
    std::size_t h = std::hash<std::int64_t>{}(e.pos);
    for (auto l : e.lamps) h = hash_mix(h, std::hash<std::int64_t>{}(l));
    return h;
}

std::int64_t LamplighterGroup::cover_walk_cost(std::int64_t lo, std::int64_t hi, std::int64_t end) {
    // shortest walk from 0 to `end` visiting all of [lo, hi]; lo <= 0 <= hi
    const std::int64_t left = -lo, right = hi;
    const std::int64_t down = 2 * (left + right) - (end < 0 ? -end : end);
    return down;
}

std::int64_t LamplighterGroup::word_length(const Element& e) const {
    if (e.lamps.empty() && e.pos == 0) return 0;
    std::int64_t lo = std::min<std::int64_t>(0, e.pos);
    std::int64_t hi = std::max<std::int64_t>(0, e.pos);
    if (!e.lamps.empty()) {
        lo = std::min(lo, e.lamps.front());
        hi = std::max(hi, e.lamps.back());
    }
    const std::int64_t walk = cover_walk_cost(lo, hi, e.pos);
    if (set_ == GenSet::S1Prime) return static_cast<std::int64_t>(e.lamps.size()) + walk;
    // with S1 every toggle rides along a move; only the stationary single
    // lamp at the origin needs a two-step detour
    return walk == 0 ? 2 : walk;
}

// --- Z2WreathZ2 --------------------------------------------------------------------

Z2WreathZ2::Z2WreathZ2() {
    Element t1, t2, h;
    t1.pos = {1, 0};
    t2.pos = {0, 1};
    h.lamps.push_back({0, 0});
    gens_ = {t1, inverse(t1), t2, inverse(t2), h};
    pairing_ = {1, 0, 3, 2, 4};
    names_ = {"t1", "t1^-1", "t2", "t2^-1", "h"};
}

Z2WreathZ2::Element Z2WreathZ2::mul(const Element& a, const Element& b) const {
    Element out;
    out.pos = {a.pos[0] + b.pos[0], a.pos[1] + b.pos[1]};
    out.lamps.reserve(a.lamps.size() + b.lamps.size());
    std::size_t i = 0, j = 0;
    auto shifted = [&](std::size_t jj) {
        return std::array<std::int64_t, 2>{b.lamps[jj][0] + a.pos[0], b.lamps[jj][1] + a.pos[1]};
    };
    while (i < a.lamps.size() || j < b.lamps.size()) {
        if (j >= b.lamps.size()) {
            out.lamps.push_back(a.lamps[i++]);
        } else if (i >= a.lamps.size()) {
            out.lamps.push_back(shifted(j++));
        } else {
            const auto sb = shifted(j);
            if (a.lamps[i] < sb) out.lamps.push_back(a.lamps[i++]);
            else if (sb < a.lamps[i]) out.lamps.push_back(sb), ++j;
            else ++i, ++j;
        }
    }
    return out;
}

Z2WreathZ2::Element Z2WreathZ2::inverse(const Element& a) const {
    Element out;
    out.pos = {-a.pos[0], -a.pos[1]};
    out.lamps.reserve(a.lamps.size());
    for (const auto& l : a.lamps) out.lamps.push_back({l[0] - a.pos[0], l[1] - a.pos[1]});
    std::sort(out.lamps.begin(), out.lamps.end());
    return out;
}

std::size_t Z2WreathZ2::hash(const Element& e) const {
    std::size_t h = hash_mix(std::hash<std::int64_t>{}(e.pos[0]), std::hash<std::int64_t>{}(e.pos[1]));
    for (const auto& l : e.lamps) {
        h = hash_mix(h, std::hash<std::int64_t>{}(l[0]));
        h = hash_mix(h, std::hash<std::int64_t>{}(l[1]));
    }
    return h;
}

} // namespace cayt
