#include "dioph/words.hpp"

#include <algorithm>
#include <string>

#include "dioph/errors.hpp"

namespace dioph {

LetterPair::LetterPair(Letter a, Letter b) : a_(a), b_(b) {
  if (a == 0 || b == 0) throw DomainError("word letters must be positive integers");
  if (a == b) throw DomainError("word letters must be distinct");
}

Word fibonacci_word(const LetterPair& pair, std::size_t n) {
  Word prev{pair.a()};
  Word cur{pair.a(), pair.b()};
  if (n <= 1) return Word(prev.begin(), prev.begin() + static_cast<std::ptrdiff_t>(n));
  while (cur.size() < n) {
    Word next = cur;
    next.insert(next.end(), prev.begin(), prev.end());
    prev = std::move(cur);
    cur = std::move(next);
  }
  cur.resize(n);
  return cur;
}

Word sturmian_word(const QuotientStream& slope, const LetterPair& pair, std::size_t n) {
  if (n == 0) return {};
  // Fetching n + 2 terms is always enough: |s_{k+1}| > |s_k| from k = 2 on.
  std::vector<Integer> terms = slope.prefix(n + 2);
  if (terms.empty() || terms[0] != 0) throw DomainError("Sturmian slope must be [0; a1, a2, ...]");
  if (terms.size() < 2) throw StreamExhausted("Sturmian slope has no partial quotients");
  for (std::size_t j = 1; j < terms.size(); ++j) {
    if (terms[j] <= 0) throw DomainError("Sturmian slope partial quotients must be positive");
  }

  const std::uint64_t a1 = to_u64(terms[1]);
  Word prev{pair.a()};
  Word cur(a1 - 1, pair.a());
  cur.push_back(pair.b());
  std::size_t next_term = 2;
  while (cur.size() < n) {
    if (next_term >= terms.size()) {
      throw StreamExhausted("Sturmian slope exhausted after " + std::to_string(terms.size()) +
                            " terms with " + std::to_string(cur.size()) + " letters determined");
    }
    const std::uint64_t reps = to_u64(terms[next_term++]);
    Word next;
    // Only the first n letters are ever needed.
    for (std::uint64_t r = 0; r < reps && next.size() < n; ++r) next.insert(next.end(), cur.begin(), cur.end());
    if (next.size() < n) next.insert(next.end(), prev.begin(), prev.end());
    prev = std::move(cur);
    cur = std::move(next);
  }
  cur.resize(n);
  return cur;
}

Word periodic_word(const Word& pattern, std::size_t n) {
  if (pattern.empty()) throw DomainError("periodic word pattern is empty");
  Word out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(pattern[k % pattern.size()]);
  return out;
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

Word generate(const WordSpec& spec, std::size_t n) {
  return std::visit(
      overloaded{
          [n](const FibonacciWord& w) { return fibonacci_word(w.pair, n); },
          [n](const SturmianWord& w) { return sturmian_word(w.slope, w.pair, n); },
          [n](const PeriodicWord& w) { return periodic_word(w.pattern, n); },
          [n](const ExplicitWord& w) {
            return Word(w.letters.begin(), w.letters.begin() + static_cast<std::ptrdiff_t>(std::min(n, w.letters.size())));
          },
      },
      spec);
}

bool is_finite(const WordSpec& spec) { return std::holds_alternative<ExplicitWord>(spec); }

QuotientStream word_stream(const WordSpec& spec, const Integer& a0) { return prepend_word({a0}, spec); }

QuotientStream prepend_word(std::vector<Integer> head, const WordSpec& spec) {
  auto to_terms = [](const Word& w) {
    std::vector<Integer> out;
    out.reserve(w.size());
    for (Letter l : w) out.emplace_back(static_cast<unsigned long>(l));
    return out;
  };
  if (const auto* expl = std::get_if<ExplicitWord>(&spec)) {
    for (Integer& t : to_terms(expl->letters)) head.push_back(std::move(t));
    return QuotientStream::finite(std::move(head));
  }
  if (const auto* per = std::get_if<PeriodicWord>(&spec)) {
    if (per->pattern.empty()) throw DomainError("periodic pattern must be non-empty");
    return QuotientStream::eventually_periodic(std::move(head), to_terms(per->pattern));
  }
  return QuotientStream::with_tail(std::move(head), [spec](std::size_t n) {
    Word w = generate(spec, n);
    std::vector<Integer> out;
    out.reserve(w.size());
    for (Letter l : w) out.emplace_back(static_cast<unsigned long>(l));
    return out;
  });
}

}  // namespace dioph
