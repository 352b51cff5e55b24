#pragma once

#include "symfun/ratfunc.hpp"
#include "symfun/symfunc.hpp"

namespace symfun {

/// Symmetric function with coefficients in Q(t) or Q(q,t).
using QSym = SymFunc<RatFunc>;

/// The t-form <p_l,p_m>_t = z_l prod (1-t^{l_i})^{-1} delta, the (q,t)-form
/// which multiplies each factor by (1-q^{l_i}), and that form at t = 0.
enum class InnerKind { t, qt, q };

/// <p_rho, p_rho> under the given form.
RatFunc deformed_norm(const Partition& rho, InnerKind kind);
RatFunc deformed_inner(const QSym& x, const QSym& y, InnerKind kind);

/// Lifts a rational symmetric function to rational-function coefficients.
QSym lift(const Sym& x);
/// Requires every coefficient to be constant.
Sym lower(const QSym& x);
QSym substitute_t(const QSym& x, const Rational& value);
QSym substitute_q(const QSym& x, const Rational& value);
/// Replaces q by t in every coefficient.
QSym q_as_t(const QSym& x);

/// How the unitriangular orthogonal family is solved for.
enum class OrthoMethod {
  /// unknowns and equations over the partitions strictly dominated by lambda
  dominance_ideal,
  /// Gram-Schmidt along the lexicographic linear extension of dominance
  lex_extension,
  /// Gram-Schmidt along the extension sorted by n(lambda) descending, ties reverse-lex
  n_extension,
};

/// m_lambda + lower terms, orthogonal to all lower m_mu under the form; m basis.
QSym orthogonal_unitriangular(const Partition& lambda, InnerKind kind, OrthoMethod method = OrthoMethod::dominance_ideal);

/// phi_r(t) = (1-t)(1-t^2)...(1-t^r)
Poly phi(int r);
/// prod_i phi_{m_i(lambda)}(t)
Poly hl_b(const Partition& lambda);

/// Hall-Littlewood P (cached, m basis), Q = b_lambda P, q_n = Q_(n).
const QSym& hl_P(const Partition& lambda);
QSym hl_Q(const Partition& lambda);
QSym qn(int n);
/// det(q_{lambda_i - i + j}) with q_0 = 1, q_{<0} = 0; m basis.
QSym big_schur(const Partition& lambda);

/// Macdonald P (cached, m basis), J = c_lambda P, and the q-Whittaker W = P at t = 0
/// (coefficients in q only, solved directly against the (q,0)-form).
const QSym& mac_P(const Partition& lambda);
QSym mac_J(const Partition& lambda);
QSym whittaker(const Partition& lambda);

/// c_lambda(q,t) = prod_s (1 - q^{a(s)} t^{l(s)+1})
Poly mac_c(const Partition& lambda);
/// prod over cells (i,j) != (1,1) of (t^{i-1} - q^{j-1})
Poly mac_X(const Partition& lambda);

/// Closed forms for pairings with p_n; all throw SizeMismatch unless |lambda| = n.
/// <Q_lambda, p_n>_t = t^{n(lambda)} phi_{l-1}(t^{-1})
RatFunc hl_Q_pn_closed(const Partition& lambda, int n);
/// <Q_lambda, p_n> (Hall) = (1-t^n) <Q_lambda, p_n>_t
RatFunc hl_Q_pn_hall_closed(const Partition& lambda, int n);
/// <P_lambda, p_n> (Hall)
RatFunc hl_P_pn_closed(const Partition& lambda, int n);
/// <S_lambda, p_n> (Hall) = (-1)^{n-lambda_1}(1-t^n) for hooks, else 0
RatFunc big_schur_pn_closed(const Partition& lambda, int n);
RatFunc mac_P_pn_closed(const Partition& lambda, int n);
RatFunc mac_J_pn_closed(const Partition& lambda, int n);
/// In the variable q.
RatFunc whittaker_pn_closed(const Partition& lambda, int n);

/// Skew Hall-Littlewood P_{lambda/mu}, defined by <P_{lambda/mu}, P_nu>_t = <P_lambda, P_mu P_nu>_t
/// and reconstructed against the t-dual of {P_nu}; m basis. Zero when |lambda| < |mu|.
QSym skew_hl_P(const Partition& lambda, const Partition& mu);

/// Hall pairing with p_n.
RatFunc hall_pn(const QSym& x, int n);

}  // namespace symfun
