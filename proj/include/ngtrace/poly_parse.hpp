#pragma once

// Text syntax for polynomials: "X1^2*X3 - X2^2", "3/2*Y1 + 1". No
// parentheses; juxtaposition is not multiplication.

#include <cctype>
#include <string>

#include "ngtrace/error.hpp"
#include "ngtrace/polynomial.hpp"

namespace ngtrace {

namespace detail {

class PolyParser {
public:
  PolyParser(RingPtr ring, const std::string& text) : ring_(std::move(ring)), s_(text) {}

  Polynomial parse() {
    Polynomial out(ring_);
    skip();
    if (pos_ == s_.size()) fail("empty polynomial");
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected + or -");
      }
      first = false;
      Term t = term();
      t.coeff *= sign;
      out.add_scaled(t.coeff, t.mono, Polynomial::constant(ring_, 1));
      skip();
    }
    return out;
  }

private:
  Term term() {
    Term t{Monomial{}, 1};
    bool more = true;
    bool any = false;
    while (more) {
      skip();
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        t.coeff *= number();
      } else if (std::isalpha(static_cast<unsigned char>(peek()))) {
        std::string name;
        while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_])))
          name += s_[pos_++];
        int idx = ring_->index_of(name);
        if (idx < 0) fail("unknown variable " + name);
        skip();
        std::int32_t e = 1;
        if (peek() == '^') {
          ++pos_;
          skip();
          mpz_class v(integer());
          if (v < 0 || v > 100000) fail("exponent out of range");
          e = static_cast<std::int32_t>(v.get_si());
        }
        t.mono = t.mono * ring_->variable(static_cast<std::size_t>(idx), e);
      } else {
        fail("expected a number or a variable");
      }
      any = true;
      skip();
      more = peek() == '*';
      if (more) ++pos_;
    }
    if (!any) fail("empty term");
    return t;
  }

  std::string integer() {
    std::string digits;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      digits += s_[pos_++];
    if (digits.empty()) fail("expected digits");
    return digits;
  }

  Rational number() {
    std::string text = integer();
    skip();
    if (peek() == '/') {
      ++pos_;
      skip();
      text += "/" + integer();
    }
    Rational r(text);
    if (r.get_den() == 0) fail("zero denominator");
    r.canonicalize();
    return r;
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw InvalidInput("cannot parse polynomial \"" + s_ + "\" at " + std::to_string(pos_) +
                       ": " + why);
  }

  RingPtr ring_;
  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse_polynomial(const RingPtr& ring, const std::string& text) {
  return detail::PolyParser(ring, text).parse();
}

}  // namespace ngtrace
