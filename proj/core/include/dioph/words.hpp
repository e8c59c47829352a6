#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include "dioph/exact_reals.hpp"

namespace dioph {

using Letter = std::uint64_t;
using Word = std::vector<Letter>;

// Two distinct positive letters.
class LetterPair {
 public:
  LetterPair(Letter a, Letter b);
  Letter a() const { return a_; }
  Letter b() const { return b_; }

 private:
  Letter a_;
  Letter b_;
};

// Prefix of the limit of w1 = a, w2 = ab, w_{k+1} = w_k w_{k-1}.
Word fibonacci_word(const LetterPair& pair, std::size_t n);

// Characteristic Sturmian word of slope [0; a1, a2, ...] built from the
// standard sequence s1 = a, s2 = a^(a1-1) b, s_{k+1} = s_k^(a_{k+1}) s_{k-1}.
// Letter `a` plays the role of 0 in the cutting sequence
// floor((k+1)t) - floor(kt), so slope [0; 2, 1, 1, ...] reproduces
// fibonacci_word(pair) and slope [0; 1, 1, ...] reproduces it with the
// letters exchanged.
Word sturmian_word(const QuotientStream& slope, const LetterPair& pair, std::size_t n);

Word periodic_word(const Word& pattern, std::size_t n);

struct FibonacciWord {
  LetterPair pair;
};
struct SturmianWord {
  QuotientStream slope;
  LetterPair pair;
};
struct PeriodicWord {
  Word pattern;
};
struct ExplicitWord {
  Word letters;
};
using WordSpec = std::variant<FibonacciWord, SturmianWord, PeriodicWord, ExplicitWord>;

// First n letters; explicit words return at most their own length.
Word generate(const WordSpec& spec, std::size_t n);
bool is_finite(const WordSpec& spec);

// Partial quotients [a0; w1, w2, ...] with the word as the tail.
QuotientStream word_stream(const WordSpec& spec, const Integer& a0 = 0);
// The given head terms followed by the letters of the word.
QuotientStream prepend_word(std::vector<Integer> head, const WordSpec& spec);

}  // namespace dioph
