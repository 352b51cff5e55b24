#include "symfun/symfunc.hpp"

#include <cctype>
#include <regex>

#include "symfun/tabloids.hpp"

namespace symfun {

Sym skew(Basis family, const Partition& lambda, const Partition& mu) {
  if (family == Basis::p) throw UnsupportedCombination("skew power sums are not a supported family");
  const int d = lambda.size() - mu.size();
  Sym out(Basis::h);
  if (d < 0) return out;
  Sym u_lambda = Sym::element(family, lambda);
  Sym u_mu = Sym::element(family, mu);
  for (const auto& nu : partitions_of(d))
    out.add(nu, hall_inner(u_lambda, multiply(u_mu, Sym::element(Basis::m, nu))));
  return out;
}

Rational skew_monomial_tabloid_sum(const Partition& lambda, const Partition& mu, int n) {
  if (n < 1 || lambda.size() != mu.size() + n)
    throw SizeMismatch("skew monomial: |" + lambda.to_string() + "| != |" + mu.to_string() + "| + " +
                       std::to_string(n));
  Rational sum = 0;
  for (const auto& xi : partitions_of(mu.size())) {
    std::int64_t a = tabloid_weight(xi, mu);
    if (a == 0) continue;
    std::int64_t b = tabloid_weight(join(xi, Partition{n}), lambda);
    if (b == 0) continue;
    sum += Rational(a) * Rational(b) / Rational(zee(xi));
  }
  return sum;
}

Rational skew_monomial_pn_inner(const Partition& lambda, const Partition& mu, int n) {
  Rational sum = skew_monomial_tabloid_sum(lambda, mu, n);
  int sign = (n % 2 == 1 ? 1 : -1) * epsilon(mu) * epsilon(lambda);
  return sign * sum;
}

namespace {

// Splits at top-level binary '+'/'-'; the sign stays attached to its term.
std::vector<std::string> split_terms(const std::string& text) {
  std::vector<std::string> terms;
  std::string cur;
  int depth = 0;
  char prev = 0;  // last non-space character
  for (char c : text) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    bool binary = depth == 0 && (c == '+' || c == '-') && prev != 0 && prev != '*' && prev != '/' && prev != '^' &&
                  prev != '+' && prev != '-';
    if (binary) {
      terms.push_back(cur);
      cur = c == '-' ? "-" : "";
    } else {
      cur += c;
    }
    if (!std::isspace(static_cast<unsigned char>(c))) prev = c;
  }
  terms.push_back(cur);
  return terms;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

template <class F, class CoefParser>
SymFunc<F> parse_generic(const std::string& text, CoefParser&& parse_coef) {
  static const std::regex element_re(R"(^(.*?)\s*\*?\s*([mhepsf])\s*(\[[0-9,\s]*\])$)");
  std::optional<SymFunc<F>> out;
  std::string body = trim(text);
  if (body == "0") throw ParseError("the zero function has no basis; write e.g. 0*m[]");
  for (const auto& raw : split_terms(body)) {
    std::string term = trim(raw);
    std::smatch mt;
    if (!std::regex_match(term, mt, element_re)) throw ParseError("bad term '" + term + "' in '" + text + "'");
    Basis b = basis_from_letter(mt[2].str()[0]);
    Partition p = Partition::parse(mt[3].str());
    std::string coef = trim(mt[1].str());
    if (!coef.empty() && coef.back() == '*') coef = trim(coef.substr(0, coef.size() - 1));
    F c = coef.empty() ? F(1) : coef == "-" ? F(-1) : parse_coef(coef);
    if (!out) out.emplace(b);
    if (out->basis() != b) throw ParseError("mixed bases in '" + text + "'");
    out->add(p, c);
  }
  return *out;
}

}  // namespace

Sym parse_symfunc(const std::string& text) {
  return parse_generic<Rational>(text, [](const std::string& c) {
    std::string s;
    for (char ch : c)
      if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    return parse_rational(s);
  });
}

SymFunc<RatFunc> parse_symfunc_ratfunc(const std::string& text) {
  return parse_generic<RatFunc>(text, [](const std::string& c) { return parse_ratfunc(c); });
}

}  // namespace symfun
