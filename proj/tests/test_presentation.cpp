#include "cayt/iso.hpp"
#include "cayt/oracles.hpp"
#include "cayt/presentation.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <map>

using namespace cayt;
using namespace cayt::testing;

namespace {

// decode a lamplighter word back to the oracle element
LamplighterGroup::Element decode_lamp_word(const Alphabet& alphabet, const Word& word) {
    LamplighterGroup::Element e;
    std::int64_t origin = -1, head = -1;
    for (std::size_t i = 0; i < word.size(); ++i) {
        const std::string& name = alphabet.name(static_cast<SymbolId>(static_cast<unsigned char>(word[i])));
        REQUIRE(name.size() == 2);
        if (name[1] == 'o' || name[1] == 'b') origin = static_cast<std::int64_t>(i);
        if (name[1] == 'h' || name[1] == 'b') head = static_cast<std::int64_t>(i);
    }
    REQUIRE(origin >= 0);
    REQUIRE(head >= 0);
    for (std::size_t i = 0; i < word.size(); ++i) {
        const std::string& name = alphabet.name(static_cast<SymbolId>(static_cast<unsigned char>(word[i])));
        if (name[0] == '1') e.lamps.push_back(static_cast<std::int64_t>(i) - origin);
    }
    e.pos = head - origin;
    return e;
}

// identity relation restricted to a domain language
SyncAutomaton identity_on(const SyncAutomaton& domain) {
    SyncAutomaton id = identity_relation(domain.alphabet());
    const JoinComponent comps[] = {{&domain, {0}}, {&domain, {1}}, {&id, {0, 1}}};
    return minimize(join(comps, 2, domain.alphabet()));
}

} // namespace

TEST_CASE("zm presentation, m = 1") {
    GraphPresentation p = GraphPresentation::zm(1);
    const auto& alphabet = *p.alphabet();
    CHECK(p.label_count() == 2);
    CHECK(p.base_word().empty());

    SUBCASE("representatives are signed unary") {
        CHECK(p.in_domain(w(alphabet, "ppp")));
        CHECK(p.in_domain(w(alphabet, "nn")));
        CHECK(p.in_domain(Word{}));
        CHECK_FALSE(p.in_domain(w(alphabet, "pn")));
    }
    SUBCASE("edge +1 maps nn to n") {
        CHECK(p.apply_edge(0, w(alphabet, "nn")) == w(alphabet, "n"));
        CHECK(p.apply_edge(0, Word{}) == w(alphabet, "p"));
        CHECK(p.apply_edge(1, Word{}) == w(alphabet, "n"));
        CHECK(p.apply_edge(1, w(alphabet, "p")) == Word{});
    }
    SUBCASE("validation passes") { CHECK(p.validate().ok()); }
    SUBCASE("isomorphic to the oracle to radius 8, with exact lengths") {
        ZmGroup g(1);
        auto iso = isomorphic_to_oracle(p, p.base_word(), g, 8);
        CHECK(iso.ok);
        CHECK(iso.vertices_checked == 17);
        for (const auto& [word, elem] : iso.mapping)
            CHECK(static_cast<std::int64_t>(word.size()) == g.word_length(elem));
    }
}

TEST_CASE("zm presentation, m = 2") {
    GraphPresentation p = GraphPresentation::zm(2);
    const auto& alphabet = *p.alphabet();
    ZmGroup g(2);

    SUBCASE("|encode((2,-1))| equals the word-metric length") {
        // blocks: p1 p1 then n2
        Word word = alphabet.parse_word("p1.p1.n2");
        CHECK(p.in_domain(word));
        CHECK(word.size() == 3);
        CHECK(g.word_length({2, -1}) == 3);
    }
    SUBCASE("ball-8 isomorphism with length equality") {
        auto iso = isomorphic_to_oracle(p, p.base_word(), g, 8);
        CHECK(iso.ok);
        for (const auto& [word, elem] : iso.mapping)
            CHECK(static_cast<std::int64_t>(word.size()) == g.word_length(elem));
    }
    SUBCASE("validation passes") { CHECK(p.validate().ok()); }
}

TEST_CASE("free group presentation") {
    GraphPresentation p = GraphPresentation::free_group(2);
    const auto& alphabet = *p.alphabet();
    CHECK(p.label_count() == 4);

    SUBCASE("append with cancellation") {
        CHECK(p.apply_edge(0, w(alphabet, "A")) == Word{});            // a applied to a^-1
        CHECK(p.apply_edge(2, w(alphabet, "a")) == w(alphabet, "ab")); // b appended
        CHECK(p.apply_edge(1, w(alphabet, "ab")) == w(alphabet, "abA"));
    }
    SUBCASE("domain counts reduced words: 4 * 3^(n-1)") {
        auto counts = count_series(p.domain(), 8);
        CHECK(counts[0] == 1);
        BigInt expect = 4;
        for (int n = 1; n <= 8; ++n) {
            CHECK(counts[static_cast<std::size_t>(n)] == expect);
            expect *= 3;
        }
        // brute-force cross-check via enumeration
        auto words = enumerate_accepted(p.domain(), 5);
        std::map<std::size_t, int> by_len;
        for (const auto& t : words) ++by_len[t[0].size()];
        CHECK(by_len[5] == 4 * 81);
    }
    SUBCASE("oracle isomorphism to radius 8") {
        FreeGroup g(2);
        auto iso = isomorphic_to_oracle(p, p.base_word(), g, 8);
        CHECK(iso.ok);
        CHECK(iso.vertices_checked == 2 * 6561 - 1); // 2*3^8 - 1
        for (const auto& [word, elem] : iso.mapping)
            CHECK(static_cast<std::int64_t>(word.size()) == g.word_length(elem));
    }
    SUBCASE("validation passes") { CHECK(p.validate().ok()); }
}

TEST_CASE("lamplighter presentation") {
    GraphPresentation p = GraphPresentation::lamplighter();
    const auto& alphabet = *p.alphabet();
    LamplighterGroup g(LamplighterGroup::GenSet::S1Prime);
    CHECK(p.label_count() == 3);

    SUBCASE("base word is the one-cell identity") {
        CHECK(alphabet.format_word(p.base_word()) == "0b");
        CHECK(p.in_domain(p.base_word()));
    }
    SUBCASE("h t h t^-1 reaches lamps {0,1} at position 0 and decodes back") {
        const int path[] = {2, 0, 2, 1};
        Word word = p.word_of(p.base_word(), path);
        LamplighterGroup::Element expect;
        expect.lamps = {0, 1};
        expect.pos = 0;
        CHECK(decode_lamp_word(alphabet, word) == expect);
        // and the oracle agrees, stepping through the same generators
        auto e = g.identity();
        e = g.mul(e, g.generators()[2]);
        e = g.mul(e, g.generators()[0]);
        e = g.mul(e, g.generators()[2]);
        e = g.mul(e, g.generators()[1]);
        CHECK(e == expect);
    }
    SUBCASE("validation passes") { CHECK(p.validate().ok()); }
    SUBCASE("oracle isomorphism to radius 8 and length bounds") {
        auto iso = isomorphic_to_oracle(p, p.base_word(), g, 8);
        CHECK(iso.ok);
        // |w| is the interval width: l/3 + 2/3 <= |w| <= l + 1
        for (const auto& [word, elem] : iso.mapping) {
            const double len = static_cast<double>(g.word_length(elem));
            const double width = static_cast<double>(word.size());
            CHECK(width <= len + 1.0);
            CHECK(3.0 * width >= len + 2.0 - 1e-9);
        }
    }
    SUBCASE("every word decodes to the element the traversal claims") {
        auto iso = isomorphic_to_oracle(p, p.base_word(), g, 6);
        REQUIRE(iso.ok);
        for (const auto& [word, elem] : iso.mapping)
            CHECK(decode_lamp_word(alphabet, word) == elem);
    }
}

TEST_CASE("generator products") {
    GraphPresentation p = GraphPresentation::lamplighter();

    SUBCASE("single labels reproduce the original edges") {
        GraphPresentation q = p.generator_products({{0}, {1}, {2}}, {"t", "t^-1", "h"});
        for (int j = 0; j < 3; ++j) CHECK(equivalent(q.edge(j), p.edge(j)));
        REQUIRE(q.inverse_pairing().has_value());
        CHECK(*q.inverse_pairing() == std::vector<int>{1, 0, 2});
    }
    SUBCASE("a label composed with its inverse is the identity on L") {
        GraphPresentation q = p.generator_products({{0, 1}}, {"tt^-1"});
        CHECK(equivalent(q.edge(0), identity_on(p.domain())));
    }
    SUBCASE("edge th agrees with the oracle product") {
        LamplighterGroup g(LamplighterGroup::GenSet::S1Prime);
        GraphPresentation q = p.generator_products({{0, 2}}, {"th"});
        Word word = q.apply_edge(0, q.base_word());
        auto elem = g.mul(g.mul(g.identity(), g.generators()[0]), g.generators()[2]);
        CHECK(decode_lamp_word(*q.alphabet(), word) == elem);
    }
    SUBCASE("lamplighter_s1 has eight paired edges and validates") {
        GraphPresentation s1 = GraphPresentation::lamplighter_s1();
        CHECK(s1.label_count() == 8);
        REQUIRE(s1.inverse_pairing().has_value());
        CHECK(*s1.inverse_pairing() == std::vector<int>{4, 5, 6, 7, 0, 1, 2, 3});
        CHECK(s1.validate().ok());
    }
}

TEST_CASE("word_of") {
    SUBCASE("empty path returns the start word") {
        GraphPresentation p = GraphPresentation::zm(1);
        CHECK(p.word_of(p.base_word(), {}) == p.base_word());
    }
    SUBCASE("path (+1,+1,-1) from the identity gives p") {
        GraphPresentation p = GraphPresentation::zm(1);
        const int path[] = {0, 0, 1};
        CHECK(p.word_of(p.base_word(), path) == w(*p.alphabet(), "p"));
    }
    SUBCASE("free group path (a, a^-1) cancels") {
        GraphPresentation p = GraphPresentation::free_group(2);
        const int path[] = {0, 1};
        CHECK(p.word_of(p.base_word(), path).empty());
    }
}

TEST_CASE("validation failures carry witnesses") {
    auto alphabet = ab_alphabet();
    SyncAutomaton domain = universe(alphabet, 1);

    SUBCASE("duplicated output reports a functionality failure") {
        LabelCodec codec(2, 2);
        const unsigned aa[2] = {0, 0};
        const unsigned ab[2] = {0, 1};
        const unsigned bb[2] = {1, 1};
        SyncAutomaton rel = SyncAutomaton::make(
            alphabet, 2, 2, {0}, {0, 1},
            {{0, codec.encode(aa), 0}, {0, codec.encode(bb), 0}, {0, codec.encode(ab), 1}});
        GraphPresentation p(alphabet, domain, {rel}, {"e"}, std::nullopt, Word{});
        auto report = p.validate();
        CHECK_FALSE(report.ok());
        bool saw_ambiguity = false;
        for (const auto& c : report.checks)
            if (!c.passed && c.name.find("single-valued") != std::string::npos) saw_ambiguity = true;
        CHECK(saw_ambiguity);
    }
    SUBCASE("missing input reports a totality failure") {
        // identity restricted to words of length <= 1
        SyncAutomaton rel = identity_relation(alphabet);
        SyncAutomaton small = unite(word_automaton(alphabet, Word{}),
                                    unite(word_automaton(alphabet, w(*alphabet, "a")),
                                          word_automaton(alphabet, w(*alphabet, "b"))));
        const JoinComponent comps[] = {{&small, {0}}, {&rel, {0, 1}}};
        SyncAutomaton restricted = join(comps, 2, alphabet);
        GraphPresentation p(alphabet, domain, {restricted}, {"e"}, std::nullopt, Word{});
        auto report = p.validate();
        CHECK_FALSE(report.ok());
        bool saw_totality = false;
        for (const auto& c : report.checks)
            if (!c.passed && c.name.find("total") != std::string::npos) saw_totality = true;
        CHECK(saw_totality);
    }
}

TEST_CASE("corrupted edge fails the oracle isomorphism") {
    GraphPresentation p = GraphPresentation::zm(1);
    // both labels act as +1, so the graph is no longer the line
    GraphPresentation broken(p.alphabet(), p.domain(), {p.edge(0), p.edge(0)},
                             {"+e1", "-e1"}, std::nullopt, p.base_word());
    ZmGroup g(1);
    auto iso = isomorphic_to_oracle(broken, broken.base_word(), g, 4);
    CHECK_FALSE(iso.ok);
    CHECK_FALSE(iso.detail.empty());
}

TEST_CASE("iso success is monotone in the radius") {
    GraphPresentation p = GraphPresentation::free_group(2);
    FreeGroup g(2);
    for (int r = 0; r <= 6; ++r) CHECK(isomorphic_to_oracle(p, p.base_word(), g, r).ok);
}

TEST_CASE("edge functionality agrees with brute-force image counting") {
    // enumerate each edge relation as pairs and count images per input
    for (auto make : {+[] { return GraphPresentation::zm(1); },
                      +[] { return GraphPresentation::free_group(2); },
                      +[] { return GraphPresentation::lamplighter(); }}) {
        GraphPresentation p = make();
        auto domain_words = enumerate_accepted(p.domain(), 6);
        for (int j = 0; j < p.label_count(); ++j) {
            std::map<Word, int> image_count;
            for (const auto& pair : enumerate_accepted(p.edge(j), 7))
                if (pair[0].size() <= 6) ++image_count[pair[0]];
            REQUIRE(check_functional(p.edge(j), p.domain()).ok());
            for (const auto& tuple : domain_words) {
                CHECK(image_count[tuple[0]] == 1);
            }
        }
    }
}

TEST_CASE("unary domain counts two representatives per positive length") {
    GraphPresentation p = GraphPresentation::zm(1);
    auto counts = count_series(p.domain(), 8);
    CHECK(counts[0] == 1);
    for (int n = 1; n <= 8; ++n) CHECK(counts[static_cast<std::size_t>(n)] == 2);
}

TEST_CASE("lamplighter length bounds hold on the radius-10 ball") {
    GraphPresentation p = GraphPresentation::lamplighter();
    LamplighterGroup g(LamplighterGroup::GenSet::S1Prime);
    auto iso = isomorphic_to_oracle(p, p.base_word(), g, 10);
    REQUIRE(iso.ok);
    for (const auto& [word, elem] : iso.mapping) {
        const double len = static_cast<double>(g.word_length(elem));
        const double width = static_cast<double>(word.size());
        CHECK(width <= len + 1.0);           // A = 1, B = 1
        CHECK(3.0 * width >= len + 2.0 - 1e-9); // a = 1/3, b = 2/3
    }
}

TEST_CASE("bundle save and load round trip") {
    GraphPresentation p = GraphPresentation::zm(1);
    const std::string dir = (std::filesystem::temp_directory_path() / "cayt_bundle_test").string();
    std::filesystem::remove_all(dir);
    p.save_bundle(dir);
    GraphPresentation q = GraphPresentation::load_bundle(dir);
    CHECK(q.label_count() == p.label_count());
    CHECK(q.domain() == p.domain());
    for (int j = 0; j < p.label_count(); ++j) CHECK(q.edge(j) == p.edge(j));
    CHECK(q.base_word() == p.base_word());
    REQUIRE(q.inverse_pairing().has_value());
    CHECK(*q.inverse_pairing() == *p.inverse_pairing());
    std::filesystem::remove_all(dir);
}
