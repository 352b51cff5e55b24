#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "symfun/criteria.hpp"
#include "symfun/cyclo.hpp"
#include "symfun/deformed.hpp"
#include "symfun/oracle.hpp"
#include "symfun/symfunc.hpp"
#include "symfun/tabloids.hpp"

using namespace symfun;

namespace {

class Check {
 public:
  void expect(bool cond, const std::function<std::string()>& what) {
    ++count_;
    if (!cond && failures_++ < 5) first_ += (first_.empty() ? "" : "; ") + what();
  }
  bool ok() const { return failures_ == 0; }
  std::string summary() const {
    std::ostringstream s;
    s << count_ << " checks";
    if (failures_) s << ", " << failures_ << " failed: " << first_;
    return s.str();
  }

 private:
  long count_ = 0;
  long failures_ = 0;
  std::string first_;
};

std::string str(const Partition& l) { return l.to_string(); }
std::string str(const Partition& l, const Partition& mu) { return SkewPartition{l, mu}.to_string(); }

Sym el(Basis b, const Partition& l) { return Sym::element(b, l); }
Sym pn(int n) { return el(Basis::p, Partition{n}); }
QSym qpn(int n) { return QSym::element(Basis::p, Partition{n}); }
QSym in_m(Basis b, const Partition& l) { return lift(to_basis(el(b, l), Basis::m)); }
bool unit(const Rational& v) { return v == 1 || v == -1; }
int sign(int e) { return e % 2 ? -1 : 1; }

FamilySpec spec(Family f, Ring r, Specialization at = {}) { return FamilySpec{f, r, at, 16}; }

std::vector<Partition> up_to(int n) {
  std::vector<Partition> out;
  for (int d = 1; d <= n; ++d)
    for (const auto& l : partitions_of(d)) out.push_back(l);
  return out;
}

bool distinct_parts(const Partition& l) {
  for (int i = 1; i < l.length(); ++i)
    if (l.part(i) == l.part(i - 1)) return false;
  return true;
}

void mead(Check& c) {
  for (int n = 1; n <= 9; ++n)
    for (const auto& l : partitions_of(n)) {
      Rational v = hall_inner(el(Basis::m, l), pn(n));
      c.expect(v != 0, [&] { return "<m" + str(l) + ",p_n> = 0"; });
      c.expect(unit(v) == (l == Partition::rectangle(1, n)), [&] { return "unit mismatch at " + str(l); });
      c.expect(v == skew_monomial_pn_inner(l, {}, n), [&] { return "closed form differs at " + str(l); });
    }
}

void skew_monomial(Check& c) {
  for (int k = 0; k <= 3; ++k)
    for (int n = 1; n <= 5; ++n)
      for (const auto& mu : partitions_of(k))
        for (const auto& l : partitions_of(n + k)) {
          Rational v = skew_monomial_pn_inner(l, mu, n);
          c.expect((v != 0) == refines(l, n), [&] { return "refinement mismatch at " + str(l, mu); });
          Rational w = skew_monomial_tabloid_sum(l, mu, n);
          c.expect(w >= 0 && w.get_den() == 1, [&] { return "tabloid sum not a nonnegative integer at " + str(l, mu); });
          c.expect(v == hall_inner(skew(Basis::m, l, mu), pn(n)), [&] { return "skew pairing differs at " + str(l, mu); });
        }
}

void monomial_classification(Check& c) {
  for (int k = 0; k <= 4; ++k)
    for (int n = 1; n <= 4; ++n)
      for (const auto& mu : partitions_of(k))
        for (const auto& l : partitions_of(n + k)) {
          bool one = skew_monomial_tabloid_sum(l, mu, n) == 1;
          c.expect(one == (monomial_unit_case(l, mu, n) != 0), [&] { return "classification mismatch at " + str(l, mu); });
        }
  for (int n = 1; n <= 10; ++n)
    for (const auto& l : partitions_of(n))
      if (!is_rectangular(l))
        c.expect(tabloid_weight(Partition{n}, l) >= n, [&] { return "w((n)," + str(l) + ") < n"; });
  for (int n = 1; n <= 9; ++n)
    for (const auto& xi : partitions_of(n))
      for (const auto& l : partitions_of(n)) {
        auto w = tabloid_weight(xi, l);
        if (w >= 1)
          c.expect((w == 1) == (l == Partition::rectangle(1, n)), [&] { return "w(" + str(xi) + "," + str(l) + ") = 1"; });
      }
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b)
      for (const auto& xi : partitions_of(a))
        for (const auto& l : partitions_of(a)) {
          auto w1 = tabloid_weight(xi, l);
          if (w1 == 0) continue;
          for (const auto& eta : partitions_of(b))
            for (const auto& mu : partitions_of(b))
              c.expect(tabloid_weight(join(xi, eta), join(l, mu)) >= w1 * tabloid_weight(eta, mu),
                       [&] { return "super-multiplicativity fails at " + str(xi) + "," + str(eta); });
        }
}

void complete_elementary(Check& c) {
  for (int d = 1; d <= 8; ++d)
    for (int n = 1; n <= d; ++n)
      for (const auto& l : partitions_of(d))
        for (const auto& mu : partitions_of(d - n)) {
          Rational h = hall_inner(el(Basis::h, l), multiply(el(Basis::h, mu), pn(n)));
          Rational e = hall_inner(el(Basis::e, l), multiply(el(Basis::e, mu), pn(n)));
          c.expect((h != 0) == (l.part(0) >= n), [&] { return "h nonvanishing mismatch at " + str(l, mu); });
          c.expect(e == h * sign(n - 1), [&] { return "omega duality fails at " + str(l, mu); });
          for (Family f : {Family::skew_h, Family::skew_e}) {
            c.expect(criterion(spec(f, Ring::Q), l, mu, n).holds == (h != 0), [&] { return "field criterion at " + str(l, mu); });
            if (d <= 7) {
              auto z = criterion(spec(f, Ring::Z), l, mu, n);
              c.expect(z.holds == unit(h), [&] { return "integral criterion at " + str(l, mu); });
              c.expect(z.holds == (l.part(0) >= n && complete_unit_case(l, mu, n) != 0), [&] { return "case mismatch at " + str(l, mu); });
            }
          }
        }
}

void schur(Check& c) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& l : partitions_of(n)) {
      Rational v = hall_inner(el(Basis::s, l), pn(n));
      c.expect(v == (is_hook(l) ? sign(n - l.part(0)) : 0), [&] { return "hook rule fails at " + str(l); });
      c.expect(criterion(spec(Family::s, Ring::Z), l, {}, n).holds == unit(v), [&] { return "criterion at " + str(l); });
    }
  for (int d = 1; d <= 6; ++d)
    for (int k = 0; k < d; ++k)
      for (const auto& l : partitions_of(d))
        for (const auto& mu : partitions_of(k)) {
          const int n = d - k;
          SkewPartition shape{l, mu};
          Rational v = hall_inner(skew(Basis::s, l, mu), pn(n));
          Rational expected = is_ribbon(shape) ? sign(ribbon_height(shape)) : 0;
          c.expect(v == expected, [&] { return "Murnaghan-Nakayama fails at " + shape.to_string(); });
          for (Ring r : {Ring::Q, Ring::Z})
            c.expect(criterion(spec(Family::skew_s, r), l, mu, n).holds == (v != 0),
                     [&] { return "criterion at " + shape.to_string(); });
        }
}

void hall_littlewood(Check& c) {
  for (const auto& l : up_to(6)) {
    const int n = l.size();
    RatFunc hall = hall_pn(hl_P(l), n);
    if (n <= 5) {
      c.expect(hall == hl_P_pn_closed(l, n), [&] { return "<P,p_n> differs at " + str(l); });
      c.expect(deformed_inner(hl_Q(l), qpn(n), InnerKind::t) == hl_Q_pn_closed(l, n),
               [&] { return "<Q,p_n>_t differs at " + str(l); });
      c.expect(substitute_t(hl_P(l), 0) == in_m(Basis::s, l), [&] { return "t=0 is not Schur at " + str(l); });
      c.expect(substitute_t(hl_P(l), 1) == in_m(Basis::m, l), [&] { return "t=1 is not monomial at " + str(l); });
    }
    for (int k = 2; k <= 4; ++k) {
      bool closed = !specialize_root_of_unity(hl_P_pn_closed(l, n), k).is_zero();
      bool built = !specialize_root_of_unity(hall, k).is_zero();
      c.expect(closed == hl_floor_condition(l, n, k) && built == closed,
               [&] { return "P vanishing at " + str(l) + " k=" + std::to_string(k); });
      auto crit = criterion(spec(Family::hl_P, Ring::Qt, RootOfUnity{k}), l, {}, n);
      c.expect(crit.holds == closed, [&] { return "P criterion at " + str(l); });
      bool q = !specialize_root_of_unity(hl_Q_pn_hall_closed(l, n), k).is_zero();
      c.expect(q == (n % k != 0 && k > l.length() - 1), [&] { return "Q vanishing at " + str(l) + " k=" + std::to_string(k); });
      c.expect(criterion(spec(Family::hl_Q, Ring::Qt, RootOfUnity{k}), l, {}, n).holds == q,
               [&] { return "Q criterion at " + str(l); });
    }
  }
  for (const auto& l : up_to(5)) {
    const int n = l.size();
    QSym p = substitute_t(hl_P(l), -1), q = substitute_t(hl_Q(l), -1);
    c.expect(distinct_parts(l) ? q == p * RatFunc(Rational(1 << l.length())) : q.is_zero(),
             [&] { return "Schur Q relation at " + str(l); });
    bool p_nonzero = hall_pn(hl_P(l), n).evaluate(0, -1) != 0;
    bool q_nonzero = hall_pn(hl_Q(l), n).evaluate(0, -1) != 0;
    c.expect(criterion(spec(Family::hl_P, Ring::Qt, ParameterValue{-1}), l, {}, n).holds == p_nonzero,
             [&] { return "Schur P criterion at " + str(l); });
    c.expect(q_nonzero == (n % 2 == 1 && 2 > l.length() - 1), [&] { return "Schur Q vanishing at " + str(l); });
    c.expect(criterion(spec(Family::hl_Q, Ring::Qt, ParameterValue{-1}), l, {}, n).holds == q_nonzero,
             [&] { return "Schur Q criterion at " + str(l); });
  }
}

void macdonald(Check& c) {
  for (const auto& l : up_to(4)) {
    const int n = l.size();
    c.expect(hall_pn(mac_P(l), n) == mac_P_pn_closed(l, n), [&] { return "<P,p_n> differs at " + str(l); });
    c.expect(hall_pn(mac_J(l), n) == mac_J_pn_closed(l, n), [&] { return "<J,p_n> differs at " + str(l); });
    c.expect(substitute_q(mac_P(l), 0) == hl_P(l), [&] { return "q=0 is not Hall-Littlewood at " + str(l); });
    c.expect(substitute_t(mac_P(l), 0) == whittaker(l), [&] { return "t=0 is not Whittaker at " + str(l); });
  }
  for (const auto& l : up_to(5)) {
    const int n = l.size();
    RatFunc w = hall_pn(whittaker(l), n);
    c.expect(w == whittaker_pn_closed(l, n), [&] { return "<W,p_n> differs at " + str(l); });
    for (int k = 2; k <= 3; ++k) {
      bool nonzero = !specialize_root_of_unity(w.q_as_t(), k).is_zero();
      c.expect(nonzero == (l.part(0) <= k), [&] { return "W vanishing at " + str(l) + " k=" + std::to_string(k); });
      c.expect(criterion(spec(Family::whittaker, Ring::Qt, RootOfUnity{k}), l, {}, n).holds == nonzero,
               [&] { return "W criterion at " + str(l); });
    }
  }
}

using Shape = std::function<SequenceEntry(int)>;

std::vector<Shape> straight_shapes() {
  return {
      [](int n) { return SequenceEntry{Partition{n}, {}}; },
      [](int n) { return SequenceEntry{Partition::rectangle(1, n), {}}; },
      [](int n) { return SequenceEntry{n == 1 ? Partition{1} : Partition{n - 1, 1}, {}}; },
      [](int n) { return SequenceEntry{Partition::from_unsorted({n - n / 2, n / 2}), {}}; },
      [](int n) { return SequenceEntry{n == 4 ? Partition{2, 2} : Partition{n}, {}}; },
      [](int n) { return SequenceEntry{n >= 3 ? Partition::from_unsorted({n - 2, 1, 1}) : Partition{n}, {}}; },
  };
}

std::vector<Shape> skew_shapes() {
  return {
      [](int n) { return SequenceEntry{Partition{n + 1}, {1}}; },
      [](int n) { return SequenceEntry{Partition::rectangle(1, n + 1), {1}}; },
      [](int n) { return SequenceEntry{Partition{n, 1}, {1}}; },
      [](int n) { return SequenceEntry{Partition{n, n}, {n}}; },
      [](int n) { return SequenceEntry{n >= 2 ? Partition{n, 2} : Partition{1}, n >= 2 ? Partition{2} : Partition{}}; },
      [](int n) { return SequenceEntry{Partition::from_unsorted({n, 2, 1}), {2, 1}}; },
      [](int n) { return SequenceEntry{Partition::rectangle(1, n + 2), {2}}; },
  };
}

std::vector<Sequence> master_sequences() {
  std::vector<Sequence> out;
  auto build = [&](Family f, Ring r, const std::vector<Specialization>& ats, const std::vector<Shape>& shapes, int N) {
    for (size_t i = 0; i < shapes.size(); ++i) {
      Sequence s{spec(f, r, ats[i % ats.size()]), {}};
      for (int n = 1; n <= N; ++n) s.entries.push_back(shapes[i](n));
      out.push_back(std::move(s));
    }
  };
  for (Family f : {Family::m, Family::f, Family::s})
    for (Ring r : {Ring::Q, Ring::Z}) build(f, r, {{}}, straight_shapes(), 5);
  for (Family f : {Family::skew_m, Family::skew_f, Family::skew_h, Family::skew_e, Family::skew_s})
    for (Ring r : {Ring::Q, Ring::Z}) build(f, r, {{}}, skew_shapes(), 5);
  std::vector<Specialization> one = {std::monostate{}, RootOfUnity{2}, RootOfUnity{3}, ParameterValue{0},
                                     ParameterValue{-1}, ParameterValue{2}};
  for (Family f : {Family::hl_P, Family::hl_Q, Family::big_S, Family::whittaker})
    build(f, Ring::Qt, one, straight_shapes(), 5);
  std::vector<Specialization> two = {std::monostate{}, ParameterPair{2, 3}, ParameterPair{3, 3},
                                     ParameterPair{0, 2}, ParameterPair{2, 4}, ParameterPair{Rational(1, 2), Rational(1, 4)}};
  for (Family f : {Family::mac_P, Family::mac_J}) build(f, Ring::Qqt, two, straight_shapes(), 4);
  return out;
}

void master(Check& c) {
  int failing = 0;
  for (const auto& seq : master_sequences()) {
    std::string name = family_name(seq.spec.family) + "/" + ring_name(seq.spec.ring) + "/" + describe(seq.spec.at);
    auto v = oracle_verdict(seq, static_cast<int>(seq.entries.size()), 4);
    bool all_inner = true;
    for (const auto& d : v) {
      const auto& e = seq.entries[static_cast<size_t>(d.n - 1)];
      all_inner = all_inner && d.inner_ok;
      c.expect(d.generates == all_inner, [&] { return name + " determinant verdict at n=" + std::to_string(d.n); });
      c.expect(d.inner_ok == criterion(seq.spec, e.lambda, e.mu, d.n).holds,
               [&] { return name + " criterion at n=" + std::to_string(d.n); });
      c.expect(render(d.inner) == render(inner_value(seq.spec, e.lambda, e.mu, d.n)),
               [&] { return name + " pairing at n=" + std::to_string(d.n); });
    }
    failing += !v.back().generates;
  }
  c.expect(failing > 0, [] { return "no failing sequence exercised"; });
  Sequence p{spec(Family::p, Ring::Z), {}};
  for (int n = 1; n <= 5; ++n) p.entries.push_back({Partition{n}, {}});
  auto v = oracle_verdict(p, 5);
  c.expect(v.back().independent && !v.back().generates, [] { return "power sums over Z misreported"; });
}

void probe(Check& c, std::ostream& log) {
  for (int d = 1; d <= 6; ++d)
    for (int k = 0; k < d; ++k)
      for (const auto& l : partitions_of(d))
        for (const auto& mu : partitions_of(k)) {
          const int n = d - k;
          if (n > 4 || !contains(mu, l)) continue;
          SkewPartition shape{l, mu};
          bool ribbon = is_ribbon(shape), separated = column_separated(shape);
          if (!ribbon && !separated) continue;
          std::vector<SequenceEntry> entries;
          for (int j = 1; j < n; ++j) entries.push_back({Partition{j}, {}});
          entries.push_back({l, mu});
          auto rec = conjecture_probe(entries, n).back();
          if (ribbon) c.expect(rec.nonzero, [&] { return "ribbon " + shape.to_string() + " pairs to zero"; });
          if (separated) log << "  column-separated " << shape.to_string() << ": " << rec.value.to_string() << "\n";
        }
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void(Check&)> run;
  };
  std::ostringstream probe_log;
  std::vector<Criterion> all = {
      {"monomial pairings and integral monomial sequences", mead},
      {"skew monomial nonvanishing", skew_monomial},
      {"integral skew monomial classification and tabloid inequalities", monomial_classification},
      {"skew complete and elementary", complete_elementary},
      {"Schur hook rule and skew Schur ribbons", schur},
      {"Hall-Littlewood closed forms, specializations and roots of unity", hall_littlewood},
      {"Macdonald, J and q-Whittaker", macdonald},
      {"determinant verdicts agree with pairings", master},
      {"skew Hall-Littlewood probe", [&](Check& c) { probe(c, probe_log); }},
  };
  bool ok = true;
  for (size_t i = 0; i < all.size(); ++i) {
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    std::string error;
    try {
      all[i].run(c);
    } catch (const std::exception& e) {
      error = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool pass = c.ok() && error.empty();
    ok = ok && pass;
    std::cout << (pass ? "PASS" : "FAIL") << " " << i + 1 << " " << all[i].name << " (" << c.summary()
              << (error.empty() ? "" : ", exception: " + error) << ", " << secs << "s)" << std::endl;
  }
  std::cout << "column-separated probe values:\n" << probe_log.str();
  return ok ? 0 : 1;
}
