#include "cayt/automaton.hpp"
#include "cayt/automaton_io.hpp"
#include "cayt/edge_fn.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace cayt;
using namespace cayt::testing;

TEST_CASE("convolution of words") {
    auto alphabet = ab_alphabet();
    LabelCodec codec(2, 2);

    SUBCASE("uneven lengths pad the shorter word") {
        auto labels = convolve({w(*alphabet, "ab"), w(*alphabet, "a")}, *alphabet);
        REQUIRE(labels.size() == 2);
        const unsigned aa[2] = {0, 0};
        const unsigned bp[2] = {1, codec.pad()};
        CHECK(labels[0] == codec.encode(aa));
        CHECK(labels[1] == codec.encode(bp));
    }
    SUBCASE("all-empty convolution is empty") {
        CHECK(convolve({Word{}, Word{}}, *alphabet).empty());
    }
    SUBCASE("three words, coordinatewise") {
        AlphabetRef abc = make_alphabet({"a", "b", "c"});
        auto labels = convolve({w(*abc, "abc"), w(*abc, "ab"), w(*abc, "a")}, *abc);
        REQUIRE(labels.size() == 3);
        auto tuple = deconvolve(labels, *abc, 3);
        CHECK(tuple == WordTuple{w(*abc, "abc"), w(*abc, "ab"), w(*abc, "a")});
    }
    SUBCASE("symbols outside the alphabet are rejected") {
        Word bad;
        bad.push_back(7);
        CHECK_THROWS_AS((void)convolve({bad, Word{}}, *alphabet), Error);
    }
}

TEST_CASE("deconvolve rejects pad-then-symbol") {
    auto alphabet = ab_alphabet();
    LabelCodec codec(2, 2);
    const unsigned aa[2] = {0, 0};
    const unsigned pb[2] = {codec.pad(), 1};
    std::vector<Label> labels{codec.encode(aa), codec.encode(pb)};
    // (a,a)(pad,b): coordinate 0 resurrects after its pad
    std::vector<Label> bad{codec.encode(pb), codec.encode(aa)};
    CHECK_NOTHROW((void)deconvolve(labels, *alphabet, 2));
    CHECK_THROWS_AS((void)deconvolve(bad, *alphabet, 2), Error);
    CHECK(deconvolve(std::vector<Label>{}, *alphabet, 2) == WordTuple{Word{}, Word{}});
}

TEST_CASE("round trip: deconvolve(convolve(t)) == t") {
    auto alphabet = ab_alphabet();
    RngStream rng(7, 0);
    for (int iter = 0; iter < 300; ++iter) {
        const int tapes = 1 + static_cast<int>(rng.below(3));
        WordTuple t = random_tuple(alphabet->size(), tapes, rng);
        auto labels = convolve(t, *alphabet, tapes);
        CHECK(deconvolve(labels, *alphabet, tapes) == t);
    }
}

TEST_CASE("acceptance on the identity relation") {
    auto alphabet = ab_alphabet();
    SyncAutomaton id = identity_relation(alphabet);
    CHECK(accepts(id, {w(*alphabet, "ab"), w(*alphabet, "ab")}));
    CHECK_FALSE(accepts(id, {w(*alphabet, "ab"), w(*alphabet, "a")}));
    CHECK(accepts(id, {Word{}, Word{}}));
    CHECK_THROWS_AS((void)accepts(id, {Word{}}), Error);
}

TEST_CASE("successor relation on the unary encoding") {
    SyncAutomaton succ = unary_successor();
    const auto& alphabet = *succ.alphabet();
    CHECK(accepts(succ, {w(alphabet, "uuu"), w(alphabet, "uuuu")}));
    CHECK_FALSE(accepts(succ, {w(alphabet, "uuu"), w(alphabet, "uu")}));
    // enumerate the relation to length 5 against the arithmetic oracle
    auto pairs = enumerate_accepted(succ, 5);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& t : pairs) seen.emplace(t[0].size(), t[1].size());
    std::set<std::pair<std::size_t, std::size_t>> expected;
    for (std::size_t n = 0; n + 1 <= 5; ++n) expected.emplace(n, n + 1);
    CHECK(seen == expected);
}

TEST_CASE("determinize and minimize preserve the language") {
    auto alphabet = ab_alphabet();
    RngStream rng(11, 1);
    int nonempty = 0;
    for (int iter = 0; iter < 40; ++iter) {
        SyncAutomaton a = random_automaton(alphabet, 2, rng);
        SyncAutomaton d = determinize(a);
        SyncAutomaton m = minimize(a);
        CHECK(equivalent(a, d));
        CHECK(equivalent(a, m));
        CHECK(m.num_states() <= std::max<std::size_t>(d.num_states(), 1));
        if (!is_empty(a)) ++nonempty;
        // spot-check acceptance agreement on random tuples
        for (int probe = 0; probe < 25; ++probe) {
            WordTuple t = random_tuple(alphabet->size(), 2, rng, 4);
            const bool expected = accepts(a, t);
            CHECK(accepts(d, t) == expected);
            CHECK(accepts(m, t) == expected);
        }
    }
    CHECK(nonempty > 5); // the generator must exercise real languages
}

TEST_CASE("boolean algebra laws") {
    auto alphabet = ab_alphabet();
    RngStream rng(13, 2);
    for (int iter = 0; iter < 25; ++iter) {
        SyncAutomaton a = random_automaton(alphabet, 2, rng);
        CHECK(is_empty(intersect(a, complement(a))));
        SyncAutomaton empty = SyncAutomaton::make(alphabet, 2, 0, {}, {}, {});
        CHECK(equivalent(unite(a, empty), a));
        // equivalence via product emptiness agrees with canonical compare
        SyncAutomaton b = random_automaton(alphabet, 2, rng);
        const bool canon = equivalent(a, b);
        const bool via_products =
            is_empty(intersect(a, complement(b))) && is_empty(intersect(b, complement(a)));
        CHECK(canon == via_products);
    }
}

TEST_CASE("complement stays inside well-formed convolutions") {
    auto alphabet = ab_alphabet();
    SyncAutomaton id = identity_relation(alphabet);
    SyncAutomaton co = complement(id);
    CHECK(accepts(co, {w(*alphabet, "a"), w(*alphabet, "b")}));
    CHECK_FALSE(accepts(co, {w(*alphabet, "ab"), w(*alphabet, "ab")}));
    CHECK(equivalent(unite(co, id), universe(alphabet, 2)));
}

TEST_CASE("reverse") {
    auto alphabet = ab_alphabet();
    SUBCASE("single word {ab} reverses to {ba}") {
        SyncAutomaton a = word_automaton(alphabet, w(*alphabet, "ab"));
        SyncAutomaton r = reverse(a);
        CHECK(r.relaxed_padding());
        CHECK(accepts(r, {w(*alphabet, "ba")}));
        CHECK_FALSE(accepts(r, {w(*alphabet, "ab")}));
        CHECK(count_by_length(r, 2) == 1);
    }
    SUBCASE("a*b reverses to ba*") {
        std::vector<Transition> trans{{0, 0, 0}, {0, 1, 1}};
        SyncAutomaton astarb = SyncAutomaton::make(alphabet, 1, 2, {0}, {1}, std::move(trans));
        SyncAutomaton r = reverse(astarb);
        CHECK(accepts(r, {w(*alphabet, "b")}));
        CHECK(accepts(r, {w(*alphabet, "baaa")}));
        CHECK_FALSE(accepts(r, {w(*alphabet, "ab")}));
    }
    SUBCASE("reverse of reverse is language-equivalent") {
        RngStream rng(17, 3);
        for (int iter = 0; iter < 20; ++iter) {
            SyncAutomaton a = random_automaton(alphabet, 2, rng);
            CHECK(equivalent(reverse(reverse(a)), a));
        }
    }
}

TEST_CASE("compose") {
    auto alphabet = make_alphabet({"u"});
    SyncAutomaton succ = unary_successor();
    SyncAutomaton id = identity_relation(alphabet);

    SUBCASE("identity is neutral") {
        CHECK(equivalent(compose(id, succ), succ));
        CHECK(equivalent(compose(succ, id), succ));
    }
    SUBCASE("successor twice is the add-2 relation, checked on all pairs up to length 8") {
        SyncAutomaton add2 = compose(succ, succ);
        for (std::size_t x = 0; x <= 8; ++x) {
            for (std::size_t y = 0; y <= 9; ++y) {
                WordTuple t{Word(x, 0), Word(y, 0)};
                CHECK(accepts(add2, t) == (y == x + 2));
            }
        }
    }
    SUBCASE("composition with the empty relation is empty") {
        SyncAutomaton empty = SyncAutomaton::make(alphabet, 2, 0, {}, {}, {});
        CHECK(is_empty(compose(succ, empty)));
        CHECK(is_empty(compose(empty, succ)));
    }
    SUBCASE("associativity on random relations") {
        auto ab = ab_alphabet();
        RngStream rng(23, 4);
        for (int iter = 0; iter < 12; ++iter) {
            SyncAutomaton r1 = random_automaton(ab, 2, rng);
            SyncAutomaton r2 = random_automaton(ab, 2, rng);
            SyncAutomaton r3 = random_automaton(ab, 2, rng);
            CHECK(equivalent(compose(compose(r1, r2), r3), compose(r1, compose(r2, r3))));
        }
    }
}

TEST_CASE("project and cylindrify") {
    auto alphabet = ab_alphabet();
    SyncAutomaton id = identity_relation(alphabet);

    SUBCASE("projection of the identity relation is the full language") {
        const int keep[] = {0};
        SyncAutomaton p = project(id, keep);
        CHECK(equivalent(p, universe(alphabet, 1)));
    }
    SUBCASE("projecting a cylinder back recovers the original") {
        RngStream rng(29, 5);
        for (int iter = 0; iter < 15; ++iter) {
            SyncAutomaton a = random_automaton(alphabet, 2, rng);
            for (int pos = 0; pos <= 2; ++pos) {
                SyncAutomaton c = cylindrify(a, pos);
                std::vector<int> keep;
                for (int i = 0; i < 3; ++i)
                    if (i != pos) keep.push_back(i);
                CHECK(equivalent(project(c, keep), a));
            }
        }
    }
    SUBCASE("projection re-normalizes pads") {
        // pairs (x, y) with |y| = |x|+1; projecting onto x must shed the
        // trailing pad column
        SyncAutomaton succ = unary_successor();
        const int keep[] = {0};
        SyncAutomaton dom = project(succ, keep);
        CHECK(accepts(dom, {Word{}}));
        CHECK(accepts(dom, {Word(4, 0)}));
        CHECK_FALSE(dom.relaxed_padding());
    }
}

TEST_CASE("counting and enumeration") {
    auto alphabet = ab_alphabet();
    SUBCASE("empty automaton") {
        SyncAutomaton empty = SyncAutomaton::make(alphabet, 1, 0, {}, {}, {});
        CHECK(is_empty(empty));
        CHECK(count_by_length(empty, 3) == 0);
        CHECK(enumerate_accepted(empty, 4).empty());
    }
    SUBCASE("counts match enumeration lengths") {
        RngStream rng(31, 6);
        for (int iter = 0; iter < 15; ++iter) {
            SyncAutomaton a = random_automaton(alphabet, 2, rng);
            auto counts = count_series(a, 5);
            std::map<std::size_t, int> by_len;
            for (const auto& labels : enumerate_labels(a, 5)) ++by_len[labels.size()];
            for (std::size_t n = 0; n <= 5; ++n)
                CHECK(counts[n] == by_len[n]);
        }
    }
    SUBCASE("enumeration is in length-lexicographic order") {
        SyncAutomaton u = universe(alphabet, 1);
        auto words = enumerate_accepted(u, 2);
        REQUIRE(words.size() == 7); // "", a, b, aa, ab, ba, bb
        CHECK(words[0][0].empty());
        CHECK(words[1][0] == w(*alphabet, "a"));
        CHECK(words[2][0] == w(*alphabet, "b"));
        CHECK(words[3][0] == w(*alphabet, "aa"));
        CHECK(words[6][0] == w(*alphabet, "bb"));
    }
}

TEST_CASE("functional checks") {
    auto alphabet = ab_alphabet();
    SyncAutomaton id = identity_relation(alphabet);
    SyncAutomaton full_domain = universe(alphabet, 1);

    SUBCASE("identity is functional on any regular domain") {
        auto fc = check_functional(id, full_domain);
        CHECK(fc.ok());
    }
    SUBCASE("two outputs for one input fail") {
        // relation {(a,a),(a,b)} with domain {a}
        LabelCodec codec(2, 2);
        const unsigned aa[2] = {0, 0};
        const unsigned ab[2] = {0, 1};
        SyncAutomaton rel = SyncAutomaton::make(
            alphabet, 2, 2, {0}, {1},
            {{0, codec.encode(aa), 1}, {0, codec.encode(ab), 1}});
        SyncAutomaton dom = word_automaton(alphabet, w(*alphabet, "a"));
        auto fc = check_functional(rel, dom);
        CHECK(fc.total);
        CHECK_FALSE(fc.single_valued);
        REQUIRE(fc.ambiguity_witness.has_value());
        CHECK(*fc.ambiguity_witness == w(*alphabet, "a"));
    }
    SUBCASE("missing input fails totality with a witness") {
        SyncAutomaton rel = identity_relation(alphabet);
        // domain contains "aa" but the relation restricted below misses it
        SyncAutomaton small = word_automaton(alphabet, w(*alphabet, "a"));
        const JoinComponent comps[] = {{&small, {0}}, {&rel, {0, 1}}};
        SyncAutomaton restricted = join(comps, 2, alphabet);
        SyncAutomaton dom = unite(word_automaton(alphabet, w(*alphabet, "a")),
                                  word_automaton(alphabet, w(*alphabet, "aa")));
        auto fc = check_functional(restricted, dom);
        CHECK_FALSE(fc.total);
        REQUIRE(fc.totality_witness.has_value());
        CHECK(*fc.totality_witness == w(*alphabet, "aa"));
    }
    SUBCASE("unary successor is functional, exhaustively to length 10") {
        SyncAutomaton succ = unary_successor();
        const int keep[] = {0};
        SyncAutomaton dom = project(succ, keep);
        CHECK(check_functional(succ, dom).ok());
        EdgeFn fn(succ);
        for (std::size_t n = 0; n <= 10; ++n) {
            auto y = fn.apply_verified(Word(n, 0));
            REQUIRE(y.has_value());
            CHECK(y->size() == n + 1);
        }
    }
}

TEST_CASE("unique_image") {
    auto alphabet = ab_alphabet();
    SyncAutomaton id = identity_relation(alphabet);
    CHECK(unique_image(id, w(*alphabet, "ab")) == w(*alphabet, "ab"));

    SyncAutomaton succ = unary_successor();
    CHECK(unique_image(succ, Word{}) == Word(1, 0));

    SUBCASE("outside the domain raises a domain error") {
        CHECK_THROWS_AS((void)unique_image(succ, Word(1, 1)), Error); // wrong symbol
    }
    SUBCASE("two images raise a functionality error") {
        LabelCodec codec(2, 2);
        const unsigned aa[2] = {0, 0};
        const unsigned ab[2] = {0, 1};
        SyncAutomaton rel = SyncAutomaton::make(
            alphabet, 2, 2, {0}, {1},
            {{0, codec.encode(aa), 1}, {0, codec.encode(ab), 1}});
        CHECK_THROWS_AS((void)unique_image(rel, w(*alphabet, "a")), Error);
    }
}

TEST_CASE("length_difference_bound") {
    auto alphabet = make_alphabet({"u"});
    SUBCASE("identity has bound 0") {
        CHECK(length_difference_bound(identity_relation(ab_alphabet())) == 0);
    }
    SUBCASE("unary successor has bound 1") {
        CHECK(length_difference_bound(unary_successor()) == 1);
    }
    SUBCASE("an accepting pad-reading cycle is unbounded") {
        LabelCodec codec(1, 2);
        const unsigned uu[2] = {0, 0};
        const unsigned pu[2] = {codec.pad(), 0};
        // (u,u)* (pad,u)+ : output arbitrarily longer than input
        SyncAutomaton bad = SyncAutomaton::make(
            alphabet, 2, 2, {0}, {1},
            {{0, codec.encode(uu), 0}, {0, codec.encode(pu), 1}, {1, codec.encode(pu), 1}});
        CHECK_THROWS_AS((void)length_difference_bound(bad), Error);
    }
    SUBCASE("bound matches the enumerated maximum and the state count") {
        SyncAutomaton succ = unary_successor();
        int max_diff = 0;
        for (const auto& t : enumerate_accepted(succ, 10))
            max_diff = std::max(max_diff, static_cast<int>(t[1].size()) - static_cast<int>(t[0].size()));
        CHECK(length_difference_bound(succ) == max_diff);
        CHECK(length_difference_bound(succ) <= static_cast<int>(succ.num_states()));
    }
}

TEST_CASE("atm round trip is bit-exact") {
    auto alphabet = ab_alphabet();
    RngStream rng(37, 8);
    for (int iter = 0; iter < 20; ++iter) {
        SyncAutomaton a = random_automaton(alphabet, 2, rng);
        SyncAutomaton b = load_atm_string(save_atm_string(a));
        CHECK(a == b);
        CHECK(save_atm_string(a) == save_atm_string(b));
    }
    SUBCASE("relaxed flag survives the round trip") {
        SyncAutomaton r = reverse(word_automaton(alphabet, w(*alphabet, "ab")));
        SyncAutomaton r2 = load_atm_string(save_atm_string(r));
        CHECK(r2.relaxed_padding());
        CHECK(r == r2);
    }
    SUBCASE("comments and blank lines are ignored") {
        SyncAutomaton a = word_automaton(alphabet, w(*alphabet, "ab"));
        std::string text = "# header comment\n\n" + save_atm_string(a) + "# trailing\n";
        CHECK(load_atm_string(text) == a);
    }
}

TEST_CASE("dot export mentions every state") {
    auto alphabet = ab_alphabet();
    SyncAutomaton a = word_automaton(alphabet, w(*alphabet, "ab"));
    std::string dot = to_dot(a);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("(a)") != std::string::npos);
}
