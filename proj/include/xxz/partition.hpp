#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <span>
#include <vector>

#include "xxz/lattice.hpp"
#include "xxz/lognum.hpp"

namespace xxz {

/// Coefficients of prod_x (1 + z * w_x) with w_x = q^{2 l(x)} (real case) or
/// e^{i phi(x)} q^{2 l(x)} (phase-twisted case). Coefficient n is the
/// canonical partition function Z(Lambda, n), resp. the twisted sector sum.
/// Stored in (log-magnitude, phase) form with one global log scale.
class PartitionPolynomial {
public:
    // sites are convolved plane by plane, from the lowest level up
    static PartitionPolynomial from_levels(std::span<const int> levels, double q);
    static PartitionPolynomial from_volume(const Volume& v, double q);
    // phase-twisted variant; phi[i] pairs with levels[i]
    static PartitionPolynomial from_levels_phased(std::span<const int> levels,
                                                  std::span<const double> phi, double q);

    long num_sites() const { return static_cast<long>(coeff_.size()) - 1; }
    bool is_real() const { return real_; }

    LogComplex coeff(long n) const;
    // real case only: log Z(Lambda, n)
    double log_coeff(long n) const;
    // log of Z(n)/Z(n-k), real case
    double log_ratio(long n, long k) const;
    // log of sum_n c_n q^{-2 mu n}; must agree with the closed-form product
    double log_gc_sum(double q, double mu) const;

private:
    std::vector<LogComplex> coeff_;
    double log_scale_ = 0.0;
    bool real_ = true;
};

/// log of the closed-form grand canonical product prod_x (1 + q^{2(l(x)-mu)}).
double log_grand_partition(std::span<const int> levels, double q, double mu);
double log_grand_partition(const Volume& v, double q, double mu);

// ---------------------------------------------------------------------------
// exact rational mode (q rational, |Lambda| <= 24)

using Rational = boost::multiprecision::cpp_rational;

class RationalPolynomial {
public:
    static RationalPolynomial from_levels(std::span<const int> levels, const Rational& q);
    long num_sites() const { return static_cast<long>(coeff_.size()) - 1; }
    const Rational& coeff(long n) const;
    friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

private:
    std::vector<Rational> coeff_;
};

// q^{2l} as an exact rational, l may be negative
Rational rational_site_weight(const Rational& q, int level);

// ---------------------------------------------------------------------------
// activity bounds

/// Hypothesis window of the activity-bounds lemma. sigma2 and mean_stick are
/// the 1D grand-canonical variance and mean supplied by the caller.
struct ActivityWindow {
    double A0 = 0;
    int A = 0;
    int k = 0;
    double mu = 0;
    double q = 0;
    double a = 0;       // 2 |ln q|
    double sigma2 = 0;  // sigma^2(mu, L)
    double mean_stick = 0;
    long n = 0;
    double C = 1;  // C(A0, A)

    /// Validates |n - A <N>| <= A0 sqrt(A)/2, |k| <= A0 sqrt(A)/2 and C > 0.
    static ActivityWindow make(double A0, int A, long n, int k, double mu, double q,
                               double mean_stick, double sigma2);
};

/// Two-sided bound on log[Z(n)/Z(n-k)] (general form of the lemma).
std::pair<double, double> activity_bounds_log(const ActivityWindow& w);

/// Sharpened brackets on log[q^{-2 k mu} Z(n)/Z(n-k)].
/// mean_at_n:        mu solves <N> = n/A
/// mean_at_n_minus_k: mu solves <N> = (n-k)/A
enum class SpecialForm { mean_at_n, mean_at_n_minus_k };
std::pair<double, double> activity_bounds_special_log(double A0, int A, int k, double q,
                                                      double sigma2, SpecialForm form);

// C(A0, A) = (1 + A0/(sigma2 sqrt(A))) / (1 - A0/(sigma2 sqrt(A)))
double activity_constant(double A0, int A, double sigma2);

// ---------------------------------------------------------------------------

/// Xi = Z(Lambda, n) q^{-2 mu rho |Lambda0|} / (Z(Lambda0^c, floor(rho
/// |Lambda0^c|)) * Z_GC(Lambda0, mu)), the normalization factor of the
/// equivalence-of-ensembles argument. Returns Xi (linear scale).
double xi_factor(const Volume& big, const Volume& sub, long n, double q, double mu);

}  // namespace xxz
