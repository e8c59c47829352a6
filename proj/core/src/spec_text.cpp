#include "dioph/spec_text.hpp"

#include <string>
#include <vector>

#include "dioph/errors.hpp"

namespace dioph {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  bool done() const { return pos_ == text_.size(); }

  bool accept(std::string_view token) {
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  void finish() {
    if (!done()) fail("unexpected trailing text");
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  // Maximal run of characters that can belong to a number.
  std::string_view number_token() {
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if ((c >= '0' && c <= '9') || c == '-' || c == '+' || c == '/' || c == '.') {
        ++pos_;
      } else {
        break;
      }
    }
    if (start == pos_) fail("expected a number");
    return text_.substr(start, pos_ - start);
  }

  Integer integer() {
    std::size_t at = pos_;
    std::string_view tok = number_token();
    try {
      return parse_integer(tok);
    } catch (const ParseError&) {
      pos_ = at;
      fail("expected an integer");
    }
  }

  Rational rational() {
    std::size_t at = pos_;
    std::string_view tok = number_token();
    try {
      return parse_rational(tok);
    } catch (const ParseError&) {
      pos_ = at;
      fail("expected a rational");
    }
  }

  Letter letter() {
    Integer n = integer();
    if (n <= 0) fail("letters must be positive");
    return to_u64(n);
  }

  Word letters() {
    Word out{letter()};
    while (accept(",")) out.push_back(letter());
    return out;
  }

  QuotientStream cf() {
    expect("[");
    std::vector<Integer> head{integer()};
    if (accept(";")) {
      head.push_back(integer());
      while (accept(",")) head.push_back(integer());
    }
    for (std::size_t j = 1; j < head.size(); ++j) {
      if (head[j] <= 0) fail("partial quotients after a0 must be positive");
    }
    if (accept("|")) {
      WordSpec w = word();
      expect("]");
      return prepend_word(std::move(head), w);
    }
    expect("]");
    return QuotientStream::finite(std::move(head));
  }

  WordSpec word() {
    if (accept("fib(")) {
      Letter a = letter();
      expect(",");
      Letter b = letter();
      expect(")");
      return FibonacciWord{LetterPair(a, b)};
    }
    if (accept("sturm(")) {
      QuotientStream slope = cf();
      expect(",");
      Letter a = letter();
      expect(",");
      Letter b = letter();
      expect(")");
      return SturmianWord{std::move(slope), LetterPair(a, b)};
    }
    if (accept("per(")) {
      Word pattern = letters();
      expect(")");
      return PeriodicWord{std::move(pattern)};
    }
    if (accept("expl(")) {
      Word ls = letters();
      expect(")");
      return ExplicitWord{std::move(ls)};
    }
    fail("unknown word id");
  }

  RealSpec real() {
    if (accept("cf:")) return RealSpec::continued_fraction(cf());
    if (accept("word:")) return RealSpec::continued_fraction(word_stream(word()));
    if (accept("sq:")) return RealSpec::square(real());
    if (accept("rat:")) return RealSpec::rational(rational());
    if (accept("poly:")) {
      std::vector<Rational> coeffs{rational()};
      while (accept(",")) coeffs.push_back(rational());
      expect(":");
      return RealSpec::polynomial(std::move(coeffs), real());
    }
    fail("unknown real spec");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RealSpec parse_real_spec(std::string_view text) {
  Parser p(text);
  RealSpec spec = p.real();
  p.finish();
  return spec;
}

WordSpec parse_word_spec(std::string_view text) {
  Parser p(text);
  WordSpec w = p.word();
  p.finish();
  return w;
}

QuotientStream parse_cf(std::string_view text) {
  Parser p(text);
  QuotientStream s = p.cf();
  p.finish();
  return s;
}

ConicForm parse_conic(std::string_view text) {
  if (text == "parabola") return parabola_form();
  Parser p(text);
  p.expect("conic:poly:");
  std::array<Rational, 6> c;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k) p.expect(",");
    c[k] = p.rational();
  }
  p.finish();
  return conic_from_poly(quadratic_polynomial(c));
}

}  // namespace dioph
