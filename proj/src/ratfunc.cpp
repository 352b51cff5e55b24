#include "symfun/ratfunc.hpp"

#include <cctype>

#include "symfun/errors.hpp"

namespace symfun {

RatFunc::RatFunc(const Poly& p) : scale_(0), num_(1), den_(1) {
  if (p.is_zero()) return;
  num_ = p.primitive();
  scale_ = p.trailing().second / num_.trailing().second;
}

RatFunc RatFunc::reduce(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw ZeroDenominator();
  if (num.is_zero()) return RatFunc();
  Poly g = gcd(num, den);
  Poly n = g.is_constant() ? num : divide_exact(num, g);
  Poly d = g.is_constant() ? den : divide_exact(den, g);
  Poly np = n.primitive(), dp = d.primitive();
  Rational s = (n.trailing().second / np.trailing().second) / (d.trailing().second / dp.trailing().second);
  return RatFunc(std::move(s), std::move(np), std::move(dp));
}

Rational RatFunc::constant_value() const {
  if (!is_constant()) throw Error("rational function is not constant: " + to_string());
  return scale_ * num_.coeff(0, 0) / den_.coeff(0, 0);
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) return *this = reduce(num_ * scale_ + o.num_ * o.scale_, den_);
  if (den_.is_constant() || o.den_.is_constant())
    return *this = reduce(num_ * o.den_ * scale_ + o.num_ * den_ * o.scale_, den_ * o.den_);
  Poly g = gcd(den_, o.den_);
  Poly a = divide_exact(o.den_, g);  // cofactor for this
  Poly b = divide_exact(den_, g);    // cofactor for o
  return *this = reduce(num_ * a * scale_ + o.num_ * b * o.scale_, den_ * a);
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const Rational& s) {
  if (symfun::is_zero(s)) return *this = RatFunc();
  scale_ *= s;
  return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc();
  Poly g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
  Poly n = divide_exact(num_, g1) * divide_exact(o.num_, g2);
  Poly d = divide_exact(den_, g2) * divide_exact(o.den_, g1);
  Poly np = n.primitive(), dp = d.primitive();
  Rational s = scale_ * o.scale_ * (n.trailing().second / np.trailing().second) /
               (d.trailing().second / dp.trailing().second);
  scale_ = std::move(s);
  num_ = std::move(np);
  den_ = std::move(dp);
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw ZeroDenominator();
  RatFunc inv(1 / o.scale_, o.den_, o.num_);
  return *this *= inv;
}

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return RatFunc(1) / pow(-e);
  RatFunc r(1);
  for (int i = 0; i < e; ++i) r *= *this;
  return r;
}

Rational RatFunc::evaluate(const Rational& q, const Rational& t) const {
  Rational d = den_.evaluate(q, t);
  if (symfun::is_zero(d)) throw ZeroDenominator();
  return scale_ * num_.evaluate(q, t) / d;
}

RatFunc RatFunc::substitute_q(const Rational& value) const {
  return reduce(num_.substitute_q(value) * scale_, den_.substitute_q(value));
}

RatFunc RatFunc::substitute_t(const Rational& value) const {
  return reduce(num_.substitute_t(value) * scale_, den_.substitute_t(value));
}

RatFunc RatFunc::q_as_t() const { return reduce(num_.q_as_t() * scale_, den_.q_as_t()); }
RatFunc RatFunc::t_as_q() const { return reduce(num_.t_as_q() * scale_, den_.t_as_q()); }

std::string RatFunc::to_string() const {
  std::string top = numerator().to_string();
  if (den_.is_constant()) return top;
  return top + "/" + den_.to_string();
}

namespace {

// Recursive-descent parser over the rendering grammar:
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' integer)?
//   atom   := integer | 'q' | 't' | '(' expr ')'
class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  RatFunc parse() {
    RatFunc r = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse '" + s_ + "' at " + std::to_string(pos_) + ": " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  RatFunc expr() {
    RatFunc r = term();
    for (;;) {
      if (eat('+')) r += term();
      else if (eat('-')) r -= term();
      else return r;
    }
  }
  RatFunc term() {
    RatFunc r = unary();
    for (;;) {
      if (eat('*')) r *= unary();
      else if (eat('/')) r /= unary();
      else return r;
    }
  }
  RatFunc unary() {
    if (eat('-')) return -unary();
    return power();
  }
  RatFunc power() {
    RatFunc base = atom();
    if (eat('^')) {
      skip();
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(std::stoi(s_.substr(start, pos_ - start)));
    }
    return base;
  }
  RatFunc atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RatFunc r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (c == 'q' || c == 't') {
      ++pos_;
      return RatFunc(c == 'q' ? Poly::q() : Poly::t());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RatFunc(Rational(Integer(s_.substr(start, pos_ - start))));
    }
    fail("unexpected character");
  }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

RatFunc parse_ratfunc(const std::string& text) { return Parser(text).parse(); }

}  // namespace symfun
