#ifndef CAYT_CHARACTERISTICS_HPP
#define CAYT_CHARACTERISTICS_HPP

#include "cayt/numeric.hpp"
#include "cayt/transducer.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace cayt {

// --- growth ---------------------------------------------------------------------

struct GrowthRecord {
    Word base_word;
    std::vector<BigInt> ball_sizes;     // b_0 .. b_N, cumulative distinct words
    std::vector<BigInt> frontier_sizes; // #W_0 .. #W_N
};

GrowthRecord growth(const ClassTTransducer& t, int max_n);

// Words of the ball V_r in deterministic (discovery) order.
std::vector<Word> ball_words(const ClassTTransducer& t, int radius);

// --- boundary and Folner ----------------------------------------------------------

// Words of W with at least one output outside W.
std::vector<Word> boundary(const ClassTTransducer& t, const std::vector<Word>& set);
Rational folner_ratio(const ClassTTransducer& t, const std::vector<Word>& set);

struct FolnerReport {
    bool found = false;
    Rational epsilon;
    std::vector<Word> witness;
    std::vector<Word> boundary_words;
    std::size_t boundary_size = 0;
    Rational ratio; // #boundary / #witness when found
    std::string note;
};

// Increasing family of candidate sets indexed 1..max_index.
class WordSetFamily {
public:
    WordSetFamily(std::string name, int max_index, std::function<std::vector<Word>(int)> member)
        : name_(std::move(name)), max_index_(max_index), member_(std::move(member)) {}
    const std::string& name() const { return name_; }
    int max_index() const { return max_index_; }
    std::vector<Word> member(int i) const { return member_(i); }

private:
    std::string name_;
    int max_index_;
    std::function<std::vector<Word>(int)> member_;
};

// Smallest family member whose boundary ratio beats epsilon; an upper bound
// on the Folner function at epsilon.
FolnerReport folner_upper(const ClassTTransducer& t, const WordSetFamily& family, const Rational& epsilon);

// Exhaustive branch-and-bound over subsets of the ball V_radius_budget with
// |W| <= size_budget; minimal result is exact over the searched universe.
FolnerReport folner_exact(const ClassTTransducer& t, const Rational& epsilon, int size_budget,
                          int radius_budget);

// Built-in families: balls V_r, and for the lamplighter presentation the
// rectangles (lamps within [-r, r], head within [-r, r]).
WordSetFamily ball_family(const ClassTTransducer& t, int max_radius);
WordSetFamily lamplighter_rectangle_family(const ClassTTransducer& t, int max_radius);

// --- average length ------------------------------------------------------------------

struct AvgLengthRecord {
    int n = 0;
    Rational value;        // exact, denominator k^n
    BigInt distinct_words; // support size of the multiset M_n
    BigInt total_mass;     // k^n
};

// Exact multiset recursion over word multiplicities.
std::vector<AvgLengthRecord> avg_length_exact(const ClassTTransducer& t, int max_n);

struct McEstimate {
    int n = 0;
    std::size_t samples = 0;
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t seed = 0;
};

// Monte Carlo estimate of the average length after n uniform edge steps.
McEstimate avg_length_mc(const ClassTTransducer& t, int n, std::size_t samples, std::uint64_t seed,
                         int threads = 1);

} // namespace cayt

#endif
