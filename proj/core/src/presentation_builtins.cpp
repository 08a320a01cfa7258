#include "cayt/presentation.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace cayt {

namespace {

// Small helper for hand-built NFAs over symbol pairs.
struct RelBuilder {
    AlphabetRef alphabet;
    LabelCodec codec;
    std::vector<Transition> trans;
    State count = 0;
    std::vector<State> initial, accepting;

    explicit RelBuilder(AlphabetRef a) : alphabet(std::move(a)), codec(alphabet->size(), 2) {}

    State state() { return count++; }
    unsigned pad() const { return codec.pad(); }
    void arc(State a, unsigned x, unsigned y, State b) {
        const unsigned dig[2] = {x, y};
        trans.push_back({a, codec.encode(dig), b});
    }
    SyncAutomaton build() {
        return SyncAutomaton::make(alphabet, 2, count, std::move(initial), std::move(accepting),
                                   std::move(trans));
    }
};

// (x,y) pairs with x = y on every position, then y gains one trailing `sym`.
SyncAutomaton insert_at_end(AlphabetRef alphabet, unsigned sym) {
    RelBuilder b(alphabet);
    State eq = b.state(), done = b.state();
    for (unsigned s = 0; s < alphabet->size(); ++s) b.arc(eq, s, s, eq);
    b.arc(eq, b.pad(), sym, done);
    b.initial = {eq};
    b.accepting = {done};
    return b.build();
}

// x = y plus one trailing `sym` on x.
SyncAutomaton delete_at_end(AlphabetRef alphabet, unsigned sym) {
    RelBuilder b(alphabet);
    State eq = b.state(), done = b.state();
    for (unsigned s = 0; s < alphabet->size(); ++s) b.arc(eq, s, s, eq);
    b.arc(eq, sym, b.pad(), done);
    b.initial = {eq};
    b.accepting = {done};
    return b.build();
}

// y = x with one `sym` inserted at an arbitrary position; the suffix of y
// lags x by one cell.
SyncAutomaton insert_anywhere(AlphabetRef alphabet, unsigned sym) {
    const unsigned n = static_cast<unsigned>(alphabet->size());
    RelBuilder b(alphabet);
    State eq = b.state(), done = b.state();
    std::vector<State> shift(n);
    for (unsigned s = 0; s < n; ++s) shift[s] = b.state();
    for (unsigned s = 0; s < n; ++s) b.arc(eq, s, s, eq);
    for (unsigned s = 0; s < n; ++s) b.arc(eq, s, sym, shift[s]); // insertion point
    b.arc(eq, b.pad(), sym, done);                                // insertion at the very end
    for (unsigned held = 0; held < n; ++held) {
        for (unsigned s = 0; s < n; ++s) b.arc(shift[held], s, held, shift[s]);
        b.arc(shift[held], b.pad(), held, done);
    }
    b.initial = {eq};
    b.accepting = {done};
    return b.build();
}

// y = x with one `sym` removed from an arbitrary position; y runs one cell
// ahead of x after the removal.
SyncAutomaton delete_anywhere(AlphabetRef alphabet, unsigned sym) {
    const unsigned n = static_cast<unsigned>(alphabet->size());
    RelBuilder b(alphabet);
    State eq = b.state(), done = b.state();
    std::vector<State> expect(n);
    for (unsigned s = 0; s < n; ++s) expect[s] = b.state();
    for (unsigned s = 0; s < n; ++s) b.arc(eq, s, s, eq);
    for (unsigned s = 0; s < n; ++s) b.arc(eq, sym, s, expect[s]); // removal point
    b.arc(eq, sym, b.pad(), done);                                 // removal at the very end
    for (unsigned held = 0; held < n; ++held) {
        for (unsigned s = 0; s < n; ++s) b.arc(expect[held], held, s, expect[s]);
        b.arc(expect[held], held, b.pad(), done);
    }
    b.initial = {eq};
    b.accepting = {done};
    return b.build();
}

// Restrict a raw pair relation to domain x domain.
SyncAutomaton on_domain(const SyncAutomaton& raw, const SyncAutomaton& domain) {
    const JoinComponent comps[] = {{&domain, {0}}, {&domain, {1}}, {&raw, {0, 1}}};
    return minimize(join(comps, 2, raw.alphabet()));
}

} // namespace

// --- Z^m -----------------------------------------------------------------------

GraphPresentation GraphPresentation::zm(int m) {
    if (m < 1) raise(Error::Kind::invalid_argument, "zm needs m >= 1");
    std::vector<std::string> symbols;
    for (int i = 1; i <= m; ++i) {
        if (m == 1) {
            symbols.push_back("p");
            symbols.push_back("n");
        } else {
            symbols.push_back("p" + std::to_string(i));
            symbols.push_back("n" + std::to_string(i));
        }
    }
    AlphabetRef alphabet = make_alphabet(symbols);

    // words are blocks of per-coordinate signed unary; letters double as
    // separators, so the language just requires coordinates to appear in
    // order with a consistent sign inside each block
    const State start = 0;
    auto block_state = [&](int coord, int sign) {
        return static_cast<State>(1 + 2 * coord + sign); // coord 0-based, sign 0=+,1=-
    };
    std::vector<Transition> trans;
    auto letter = [&](int coord, int sign) { return static_cast<Label>(2 * coord + sign); };
    for (int j = 0; j < m; ++j)
        for (int s = 0; s < 2; ++s) trans.push_back({start, letter(j, s), block_state(j, s)});
    for (int i = 0; i < m; ++i) {
        for (int si = 0; si < 2; ++si) {
            trans.push_back({block_state(i, si), letter(i, si), block_state(i, si)});
            for (int j = i + 1; j < m; ++j)
                for (int sj = 0; sj < 2; ++sj)
                    trans.push_back({block_state(i, si), letter(j, sj), block_state(j, sj)});
        }
    }
    std::vector<State> all_states(static_cast<std::size_t>(1 + 2 * m));
    for (State s = 0; s < all_states.size(); ++s) all_states[s] = s;
    SyncAutomaton domain = SyncAutomaton::make(alphabet, 1, static_cast<State>(1 + 2 * m), {start},
                                               all_states, std::move(trans));

    std::vector<SyncAutomaton> edges;
    std::vector<std::string> names;
    std::vector<int> pairing;
    for (int i = 0; i < m; ++i) {
        const unsigned pos = static_cast<unsigned>(2 * i);
        const unsigned neg = pos + 1;
        edges.push_back(on_domain(unite(insert_anywhere(alphabet, pos), delete_anywhere(alphabet, neg)), domain));
        edges.push_back(on_domain(unite(insert_anywhere(alphabet, neg), delete_anywhere(alphabet, pos)), domain));
        names.push_back("+e" + std::to_string(i + 1));
        names.push_back("-e" + std::to_string(i + 1));
        pairing.push_back(2 * i + 1);
        pairing.push_back(2 * i);
    }
    return GraphPresentation(alphabet, std::move(domain), std::move(edges), std::move(names),
                             pairing, Word{});
}

// --- free groups -----------------------------------------------------------------

GraphPresentation GraphPresentation::free_group(int m) {
    if (m < 1) raise(Error::Kind::invalid_argument, "free_group needs m >= 1");
    std::vector<std::string> symbols;
    std::vector<std::string> names;
    static const char* lower = "abc";
    static const char* upper = "ABC";
    for (int i = 0; i < m; ++i) {
        if (i < 3) {
            symbols.emplace_back(1, lower[i]);
            symbols.emplace_back(1, upper[i]);
        } else {
            symbols.push_back("s" + std::to_string(i + 1));
            symbols.push_back("S" + std::to_string(i + 1));
        }
        names.push_back(symbols[static_cast<std::size_t>(2 * i)]);
        names.push_back(symbols[static_cast<std::size_t>(2 * i)] + "^-1");
    }
    AlphabetRef alphabet = make_alphabet(symbols);

    // reduced words: never follow a letter with its inverse
    std::vector<Transition> trans;
    const int k = 2 * m;
    auto inv_letter = [&](int l) { return l ^ 1; };
    for (int l = 0; l < k; ++l) trans.push_back({0, static_cast<Label>(l), static_cast<State>(1 + l)});
    for (int last = 0; last < k; ++last)
        for (int l = 0; l < k; ++l)
            if (l != inv_letter(last))
                trans.push_back({static_cast<State>(1 + last), static_cast<Label>(l), static_cast<State>(1 + l)});
    std::vector<State> all_states(static_cast<std::size_t>(1 + k));
    for (State s = 0; s < all_states.size(); ++s) all_states[s] = s;
    SyncAutomaton domain = SyncAutomaton::make(alphabet, 1, static_cast<State>(1 + k), {0},
                                               all_states, std::move(trans));

    std::vector<SyncAutomaton> edges;
    std::vector<int> pairing;
    for (int l = 0; l < k; ++l) {
        edges.push_back(on_domain(unite(insert_at_end(alphabet, static_cast<unsigned>(l)),
                                        delete_at_end(alphabet, static_cast<unsigned>(inv_letter(l)))),
                                  domain));
        pairing.push_back(inv_letter(l));
    }
    return GraphPresentation(alphabet, std::move(domain), std::move(edges), std::move(names),
                             pairing, Word{});
}

// --- lamplighter -------------------------------------------------------------------

namespace lamp {

// symbol = bit * 4 + mark; mark: 0 none, 1 origin, 2 head, 3 both
constexpr unsigned kMarkNone = 0, kMarkOrigin = 1, kMarkHead = 2, kMarkBoth = 3;

unsigned sym(unsigned bit, unsigned mark) { return bit * 4 + mark; }
bool has_head(unsigned s) { return (s & 3u) >= kMarkHead; }
bool has_origin(unsigned s) { return (s & 3u) == kMarkOrigin || (s & 3u) == kMarkBoth; }
unsigned strip_head(unsigned s) { return (s & ~3u) | ((s & 3u) == kMarkBoth ? kMarkOrigin : kMarkNone); }
unsigned add_head(unsigned s) { return (s & ~3u) | ((s & 3u) == kMarkOrigin ? kMarkBoth : kMarkHead); }
unsigned toggle_bit(unsigned s) { return s ^ 4u; }
constexpr unsigned kPlain = 0; // bit 0, no marks: a cell that pins nothing

std::vector<std::string> symbol_names() {
    std::vector<std::string> out;
    static const char* marks = "-ohb";
    for (unsigned bit = 0; bit < 2; ++bit)
        for (unsigned mark = 0; mark < 4; ++mark)
            out.push_back(std::string(1, static_cast<char>('0' + bit)) + marks[mark]);
    return out;
}

SyncAutomaton domain(AlphabetRef alphabet) {
    // exactly one origin mark, one head mark, first and last cells pin the
    // interval (i.e. are not the plain bit-0 cell)
    std::vector<Transition> trans;
    auto st = [](bool o, bool h, bool plain) {
        return static_cast<State>(1 + (o ? 1 : 0) + (h ? 2 : 0) + (plain ? 4 : 0));
    };
    std::vector<State> accepting;
    for (unsigned s = 0; s < 8; ++s) {
        if (s == kPlain) continue;
        trans.push_back({0, s, st(has_origin(s), has_head(s), false)});
    }
    for (int o = 0; o < 2; ++o)
        for (int h = 0; h < 2; ++h)
            for (int p = 0; p < 2; ++p) {
                const State from = st(o, h, p);
                if (o && h && !p) accepting.push_back(from);
                for (unsigned s = 0; s < 8; ++s) {
                    if (has_origin(s) && o) continue;
                    if (has_head(s) && h) continue;
                    trans.push_back({from, s, st(o || has_origin(s), h || has_head(s), s == kPlain)});
                }
            }
    return SyncAutomaton::make(std::move(alphabet), 1, 9, {0}, std::move(accepting), std::move(trans));
}

// toggle the bit under the head; length never changes
SyncAutomaton edge_h(AlphabetRef alphabet) {
    RelBuilder b(alphabet);
    State before = b.state(), after = b.state();
    for (unsigned s = 0; s < 8; ++s) b.arc(before, s, s, before);
    for (unsigned s = 0; s < 8; ++s)
        if (has_head(s)) b.arc(before, s, toggle_bit(s), after);
    for (unsigned s = 0; s < 8; ++s) b.arc(after, s, s, after);
    b.initial = {before};
    b.accepting = {after};
    return b.build();
}

// head moves right: an interior two-cell edit, a one-cell extension on the
// right, or dropping an unpinned leftmost cell
SyncAutomaton edge_t(AlphabetRef alphabet) {
    RelBuilder b(alphabet);
    // interior
    State eq0 = b.state(), mid = b.state(), eq1 = b.state();
    for (unsigned s = 0; s < 8; ++s) b.arc(eq0, s, s, eq0);
    for (unsigned s = 0; s < 8; ++s)
        if (has_head(s)) b.arc(eq0, s, strip_head(s), mid);
    for (unsigned s = 0; s < 8; ++s)
        if (!has_head(s)) b.arc(mid, s, add_head(s), eq1);
    for (unsigned s = 0; s < 8; ++s) b.arc(eq1, s, s, eq1);
    // extend right
    State pre = b.state(), done_ext = b.state();
    for (unsigned s = 0; s < 8; ++s)
        if (has_head(s)) b.arc(eq0, s, strip_head(s), pre);
    b.arc(pre, b.pad(), sym(0, kMarkHead), done_ext);
    // shrink left: the first cell is the bare head; the second cell inherits it
    std::vector<State> sh(8);
    for (unsigned s = 0; s < 8; ++s) sh[s] = b.state();
    State start2 = b.state(), done_shrink = b.state();
    for (unsigned s = 0; s < 8; ++s)
        if (has_head(s)) b.arc(start2, sym(0, kMarkHead), s, sh[strip_head(s)]);
    for (unsigned held = 0; held < 8; ++held) {
        for (unsigned s = 0; s < 8; ++s) b.arc(sh[held], held, s, sh[s]);
        b.arc(sh[held], held, b.pad(), done_shrink);
    }
    b.initial = {eq0, start2};
    b.accepting = {eq1, done_ext, done_shrink};
    return b.build();
}

// head moves left: mirror image of edge_t
SyncAutomaton edge_t_inv(AlphabetRef alphabet) {
    RelBuilder b(alphabet);
    // interior: the receiving cell comes first
    State eq0 = b.state(), mid = b.state(), eq1 = b.state();
    for (unsigned s = 0; s < 8; ++s) b.arc(eq0, s, s, eq0);
    for (unsigned s = 0; s < 8; ++s)
        if (!has_head(s)) b.arc(eq0, s, add_head(s), mid);
    for (unsigned s = 0; s < 8; ++s)
        if (has_head(s)) b.arc(mid, s, strip_head(s), eq1);
    for (unsigned s = 0; s < 8; ++s) b.arc(eq1, s, s, eq1);
    // extend left: y grows a bare-head cell in front, then lags x by one
    std::vector<State> bk(8);
    for (unsigned s = 0; s < 8; ++s) bk[s] = b.state();
    State start2 = b.state(), done_ext = b.state();
    for (unsigned s = 0; s < 8; ++s)
        if (has_head(s)) b.arc(start2, s, sym(0, kMarkHead), bk[strip_head(s)]);
    for (unsigned held = 0; held < 8; ++held) {
        for (unsigned s = 0; s < 8; ++s) b.arc(bk[held], s, held, bk[s]);
        b.arc(bk[held], b.pad(), held, done_ext);
    }
    // shrink right: second-to-last cell gains the head, bare-head last cell dropped
    State pre = b.state(), done_shrink = b.state();
    for (unsigned s = 0; s < 8; ++s)
        if (!has_head(s)) b.arc(eq0, s, add_head(s), pre);
    b.arc(pre, sym(0, kMarkHead), b.pad(), done_shrink);
    b.initial = {eq0, start2};
    b.accepting = {eq1, done_ext, done_shrink};
    return b.build();
}

} // namespace lamp

GraphPresentation GraphPresentation::lamplighter() {
    AlphabetRef alphabet = make_alphabet(lamp::symbol_names());
    SyncAutomaton domain = lamp::domain(alphabet);
    std::vector<SyncAutomaton> edges;
    edges.push_back(on_domain(lamp::edge_t(alphabet), domain));
    edges.push_back(on_domain(lamp::edge_t_inv(alphabet), domain));
    edges.push_back(on_domain(lamp::edge_h(alphabet), domain));
    Word base;
    base.push_back(static_cast<char>(lamp::sym(0, lamp::kMarkBoth)));
    return GraphPresentation(alphabet, std::move(domain), std::move(edges),
                             {"t", "t^-1", "h"}, std::vector<int>{1, 0, 2}, base);
}

GraphPresentation GraphPresentation::lamplighter_s1() {
    GraphPresentation base = lamplighter();
    const std::vector<std::vector<int>> paths = {
        {0}, {0, 2}, {2, 0}, {2, 0, 2}, {1}, {2, 1}, {1, 2}, {2, 1, 2}};
    return base.generator_products(
        paths, {"t", "th", "ht", "hth", "t^-1", "ht^-1", "t^-1h", "ht^-1h"});
}

} // namespace cayt
