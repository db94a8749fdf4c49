#include "xxz/partition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace xxz {

namespace {

std::vector<std::size_t> level_order(std::span<const int> levels) {
    std::vector<std::size_t> idx(levels.size());
    std::iota(idx.begin(), idx.end(), 0u);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t i, std::size_t j) { return levels[i] < levels[j]; });
    return idx;
}

}  // namespace

PartitionPolynomial PartitionPolynomial::from_levels(std::span<const int> levels, double q) {
    std::vector<double> phi;  // empty = no phases
    return from_levels_phased(levels, phi, q);
}

PartitionPolynomial PartitionPolynomial::from_volume(const Volume& v, double q) {
    auto lv = v.levels();
    return from_levels(lv, q);
}

PartitionPolynomial PartitionPolynomial::from_levels_phased(std::span<const int> levels,
                                                            std::span<const double> phi,
                                                            double q) {
    if (!(q > 0.0 && q < 1.0))
        throw std::invalid_argument("PartitionPolynomial: q must lie in (0,1)");
    if (!phi.empty() && phi.size() != levels.size())
        throw std::invalid_argument("PartitionPolynomial: phase/level size mismatch");

    PartitionPolynomial p;
    p.real_ = phi.empty();
    p.coeff_.assign(1, LogComplex::one());
    p.coeff_.reserve(levels.size() + 1);

    const double lnq = std::log(q);
    for (std::size_t i : level_order(levels)) {
        LogComplex w{2.0 * levels[i] * lnq, phi.empty() ? 0.0 : phi[i]};
        // c'_m = c_m + w * c_{m-1}, in place from the top
        p.coeff_.push_back(LogComplex::zero());
        for (std::size_t m = p.coeff_.size() - 1; m >= 1; --m)
            p.coeff_[m] = log_add(p.coeff_[m], log_mul(w, p.coeff_[m - 1]));
    }

    // fold the running magnitude into the global scale
    double top = kLogZero;
    for (const LogComplex& c : p.coeff_) top = std::max(top, c.log_mag);
    if (top != kLogZero && top != 0.0) {
        for (LogComplex& c : p.coeff_)
            if (!c.is_zero()) c.log_mag -= top;
        p.log_scale_ = top;
    }
    return p;
}

LogComplex PartitionPolynomial::coeff(long n) const {
    if (n < 0 || n > num_sites())
        throw std::out_of_range("PartitionPolynomial::coeff: index out of range");
    LogComplex c = coeff_[static_cast<std::size_t>(n)];
    if (!c.is_zero()) c.log_mag += log_scale_;
    return c;
}

double PartitionPolynomial::log_coeff(long n) const {
    if (!real_) throw std::logic_error("log_coeff: polynomial has phases");
    return coeff(n).log_mag;
}

double PartitionPolynomial::log_ratio(long n, long k) const {
    if (n - k < 0 || n - k > num_sites() || n < 0 || n > num_sites())
        throw std::out_of_range("PartitionPolynomial::log_ratio: index out of range");
    return log_coeff(n) - log_coeff(n - k);
}

double PartitionPolynomial::log_gc_sum(double q, double mu) const {
    if (!real_) throw std::logic_error("log_gc_sum: polynomial has phases");
    const double lnq = std::log(q);
    double acc = kLogZero;
    for (long n = 0; n <= num_sites(); ++n)
        acc = log_add(acc, log_coeff(n) - 2.0 * mu * n * lnq);
    return acc;
}

double log_grand_partition(std::span<const int> levels, double q, double mu) {
    if (!(q > 0.0 && q < 1.0))
        throw std::invalid_argument("log_grand_partition: q must lie in (0,1)");
    const double lnq = std::log(q);
    KahanSum s;
    for (int l : levels) s.add(softplus(2.0 * (l - mu) * lnq));
    return s.value();
}

double log_grand_partition(const Volume& v, double q, double mu) {
    auto lv = v.levels();
    return log_grand_partition(lv, q, mu);
}

// ---------------------------------------------------------------------------

Rational rational_site_weight(const Rational& q, int level) {
    Rational q2 = q * q;
    Rational w = 1;
    if (level >= 0)
        for (int i = 0; i < level; ++i) w *= q2;
    else
        for (int i = 0; i < -level; ++i) w /= q2;
    return w;
}

RationalPolynomial RationalPolynomial::from_levels(std::span<const int> levels,
                                                   const Rational& q) {
    if (levels.size() > 24)
        throw std::invalid_argument("RationalPolynomial: rational mode limited to 24 sites");
    RationalPolynomial p;
    p.coeff_.assign(1, Rational(1));
    p.coeff_.reserve(levels.size() + 1);
    for (std::size_t i : level_order(levels)) {
        Rational w = rational_site_weight(q, levels[i]);
        p.coeff_.push_back(Rational(0));
        for (std::size_t m = p.coeff_.size() - 1; m >= 1; --m)
            p.coeff_[m] += w * p.coeff_[m - 1];
    }
    return p;
}

const Rational& RationalPolynomial::coeff(long n) const {
    if (n < 0 || n > num_sites())
        throw std::out_of_range("RationalPolynomial::coeff: index out of range");
    return coeff_[static_cast<std::size_t>(n)];
}

// ---------------------------------------------------------------------------

double activity_constant(double A0, int A, double sigma2) {
    double t = A0 / (sigma2 * std::sqrt(static_cast<double>(A)));
    if (t >= 1.0)
        throw std::invalid_argument(
            "activity_constant: C denominator <= 0 (A too small for this A0)");
    return (1.0 + t) / (1.0 - t);
}

ActivityWindow ActivityWindow::make(double A0, int A, long n, int k, double mu, double q,
                                    double mean_stick, double sigma2) {
    ActivityWindow w;
    w.A0 = A0;
    w.A = A;
    w.k = k;
    w.mu = mu;
    w.q = q;
    w.a = 2.0 * std::abs(std::log(q));
    w.sigma2 = sigma2;
    w.mean_stick = mean_stick;
    w.n = n;
    double half = 0.5 * A0 * std::sqrt(static_cast<double>(A));
    if (std::abs(static_cast<double>(n) - A * mean_stick) > half)
        throw std::invalid_argument("ActivityWindow: |n - A<N>| exceeds A0 sqrt(A)/2");
    if (std::abs(k) > half)
        throw std::invalid_argument("ActivityWindow: |k| exceeds A0 sqrt(A)/2");
    w.C = activity_constant(A0, A, sigma2);
    return w;
}

std::pair<double, double> activity_bounds_log(const ActivityWindow& w) {
    const double lnq = std::log(w.q);
    double expo = w.k *
                  (2.0 * w.n / w.A - 2.0 * w.mean_stick + 2.0 * w.mu * w.a * w.sigma2 -
                   static_cast<double>(w.k) / w.A) /
                  (w.a * w.sigma2);
    double center = expo * lnq;
    double lc = std::log(w.C);
    return {center - lc, center + lc};
}

std::pair<double, double> activity_bounds_special_log(double A0, int A, int k, double q,
                                                      double sigma2, SpecialForm form) {
    const double lnq = std::log(q);
    const double a = 2.0 * std::abs(lnq);
    double C = activity_constant(A0 / 2.0, A, sigma2);
    double lc = std::log(C);
    double k2 = static_cast<double>(k) * k;
    // exponents of q in the printed brackets
    double e_wide = 2.0 * k2 * (1.0 - q * q) / (a * q * q * A);
    double e_tight = k2 * (1.0 - q * q) / (2.0 * a * (1.0 + q * q) * A);
    if (form == SpecialForm::mean_at_n) {
        // value ~ exp(+k^2 / (2 sigma^2 A)) >= 1
        return {-lc + (-e_tight) * lnq, lc + (-e_wide) * lnq};
    }
    // mean at (n-k)/A: value ~ exp(-k^2 / (2 sigma^2 A)) <= 1. The lemma as
    // printed swaps the two Gaussian factors here; the corrected assignment
    // below matches the form actually applied in the equivalence argument.
    return {-lc + e_wide * lnq, lc + e_tight * lnq};
}

// ---------------------------------------------------------------------------

double xi_factor(const Volume& big, const Volume& sub, long n, double q, double mu) {
    if (big.length() != sub.length())
        throw std::invalid_argument("xi_factor: volumes must share L");
    if (!big.contains_volume(sub)) throw std::invalid_argument("xi_factor: sub not contained");
    if (sub.size() >= big.size())
        throw std::invalid_argument("xi_factor: complement of sub is empty");

    double rho = static_cast<double>(n) / static_cast<double>(big.size());

    // level multiset of big \ sub
    std::vector<int> lv = big.levels();
    for (const Site& s : sub.sites()) {
        auto it = std::find(lv.begin(), lv.end(), s.level());
        lv.erase(it);
    }
    long n_comp = static_cast<long>(std::floor(rho * static_cast<double>(lv.size())));

    auto zbig = PartitionPolynomial::from_volume(big, q);
    auto zcomp = PartitionPolynomial::from_levels(lv, q);
    auto sub_levels = sub.levels();
    double log_gc_sub = log_grand_partition(sub_levels, q, mu);

    double lnq = std::log(q);
    double log_xi = zbig.log_coeff(n) - 2.0 * mu * rho * sub.size() * lnq -
                    zcomp.log_coeff(n_comp) - log_gc_sub;
    return std::exp(log_xi);
}

}  // namespace xxz
