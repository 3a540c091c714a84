#ifndef CUMULANTKIT_MOMENTS_HPP
#define CUMULANTKIT_MOMENTS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cumulantkit/rational.hpp"

namespace cumulantkit {

// Word over variable indices 1..r; the empty word is the formal unit.
using Word = std::vector<int>;

std::string word_key(const Word& w);          // "1,2,1"; "" for the unit
Word parse_word_key(const std::string& key);  // throws ParseError

/// All words of length 1..max_len over 1..r, shortest first,
/// lexicographic within a length.
std::vector<Word> all_words(int r, int max_len);

/// Words of exactly the given length over 1..r, lexicographic.
std::vector<Word> words_of_length(int r, int len);

/// Letters of w at the given 1-based positions, in position order.
Word subword_at(const Word& w, const std::vector<int>& positions);

/// A state restricted to joint moments: an exact value for every word of
/// length 1..max_len over 1..num_vars. The empty word has moment 1.
struct MomentFunctional {
    int num_vars = 0;
    int max_len = 0;
    std::map<Word, Rational> table;

    /// Stored moment; empty word yields 1. Throws DepthError for words
    /// longer than max_len or with variables outside 1..num_vars.
    Rational moment(const Word& w) const;

    // Completeness and range checks; throws ParseError when violated.
    void validate() const;
};

MomentFunctional moments_from_json_text(const std::string& text);
std::string moments_to_json_text(const MomentFunctional& phi);
MomentFunctional load_moments(const std::string& path);
void save_moments(const MomentFunctional& phi, const std::string& path);

/// Seed-deterministic functional with numerators in [-9,9] and
/// denominators in [1,9].
MomentFunctional random_functional(int r, int max_len, std::uint64_t seed);

} // namespace cumulantkit

#endif
