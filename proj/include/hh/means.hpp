#pragma once

#include "hh/core.hpp"

namespace hh::means {

enum class MeanKind { A, G, H, L, I, Lp };

std::string_view to_string(MeanKind kind);

/// Two-variable means of a, b > 0. All are symmetric, homogeneous of degree
/// one and collapse to a when |b - a| < 1e-12 max(a, b).
///
/// Lp is the p-logarithmic mean ((b^{p+1} - a^{p+1}) / ((p+1)(b-a)))^{1/p};
/// p = -1 and p = 0 dispatch to L and I, its limits there.
double mean(MeanKind kind, double a, double b, double p = 1.0);

double arithmetic(double a, double b);
double geometric(double a, double b);
double harmonic(double a, double b);
double logarithmic(double a, double b);
double identric(double a, double b);
double p_logarithmic(double a, double b, double p);

/// (1/(b-a)) integral_a^b x^n dx = L_n^n(a, b) for integer n not in {-1, 0}.
double monomial_average(double a, double b, int n);

inline constexpr double kChainSlack = 1e-12;

/// H <= G <= L <= I <= A, each step within kChainSlack.
bool chain_check(double a, double b);

// Special-means inequalities. Each returns a report whose true_gap is the
// left-hand side, bound the right-hand side, and valid the verdict.

/// |L_n^n - A^n| <= |n(n-1)| (b-a)^2/24 A(a^{n-2}, b^{n-2}).
/// literal_bound carries the same expression with 48 in place of 24, which
/// (1, 2, n = 3) refutes. Requires |n(n-1)| >= 3.
BoundReport check_prop_monomial_q1(double a, double b, int n);

/// ln(A/I) <= (b-a)^2 / (8 a^2 b^2 (2p+1)^{1/p}) [A(a^{2q}, b^{2q})]^{1/q}.
BoundReport check_prop_identric(double a, double b, const ConjugatePair& pq);

/// |L_n^n - A^n| <= |n(n-1)| (b-a)^2/24 [A(a^{q(n-2)}, b^{q(n-2)})]^{1/q}, q > 1.
BoundReport check_prop_monomial_pm(double a, double b, int n, double q);

/// |1/L - 1/A| <= (b-a)^2/24 * 2^{(q-1)/q} / (a^3 b^3) * [a^{3q} + b^{3q}]^{1/q}, q > 1.
BoundReport check_prop_reciprocal_pm(double a, double b, double q);

/// |1/L - 1/A| <= (b-a)^2/24 * max(2/a^3, 2/b^3), any q >= 1.
BoundReport check_prop_reciprocal_quasi(double a, double b, double q);

/// |L_n^n - A^n| <= |n(n-1)| (b-a)^2 / (8 (2p+1)^{1/p}) max(a^{n-2}, b^{n-2}).
BoundReport check_prop_monomial_quasi(double a, double b, int n, const ConjugatePair& pq);

}  // namespace hh::means
