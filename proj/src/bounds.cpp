#include "ferrook/bounds.hpp"

#include "ferrook/census.hpp"
#include "ferrook/errors.hpp"
#include "ferrook/qcount.hpp"
#include "ferrook/rook.hpp"

#include <algorithm>
#include <limits>

namespace ferrook {

namespace {

void require_d_range(const FerrersDiagram& f, int d, int lowest) {
    const int top = std::min(f.rows(), f.cols());
    if (d < lowest || d > top) {
        throw HypothesisViolation("need " + std::to_string(lowest) + " <= d <= min(n, m) = " + std::to_string(top) +
                                  ", got d = " + std::to_string(d));
    }
}

}  // namespace

KappaReport kappa(const FerrersDiagram& f, int d) {
    require_d_range(f, d, 1);
    const int m = f.cols();
    KappaReport rep;
    rep.minimum = std::numeric_limits<long>::max();
    for (int j = 0; j <= d - 1; ++j) {
        long v = 0;
        for (int t = 1; t <= m - d + 1 + j; ++t) v += std::max(f.height(t) - j, 0);
        rep.values.push_back(v);
        rep.minimum = std::min(rep.minimum, v);
    }
    for (int j = 0; j <= d - 1; ++j) {
        if (rep.values[static_cast<std::size_t>(j)] == rep.minimum) rep.argmin.push_back(j);
    }
    return rep;
}

MdsVerdict mds_constructible(const FerrersDiagram& f, int d) {
    MdsVerdict v;
    v.kappa = kappa(f, d).minimum;
    const DiagonalProfile prof = diagonal_profile(f);
    v.diag_sum_all = prof.excess_sum(d - 1);
    if (f.cols() >= f.rows()) v.diag_sum_first_m = prof.excess_sum(d - 1, f.cols());
    v.is_mds_constructible = v.kappa == v.diag_sum_all;
    if (d == 1) {
        v.tau = f.size();
    } else {
        v.tau = tau_closed_form(f, d - 1);
    }
    return v;
}

bool EquivalenceReport::agree() const {
    if (first_m_equal && *first_m_equal != all_equal) return false;
    if (tau_equal && *tau_equal != all_equal) return false;
    return true;
}

EquivalenceReport check_equivalences(const FerrersDiagram& f, int d) {
    EquivalenceReport rep;
    const MdsVerdict v = mds_constructible(f, d);
    rep.all_equal = v.is_mds_constructible;
    const int n = f.rows(), m = f.cols();
    if (m < n) {
        rep.violations.push_back("first-m diagonal form needs m >= n (transpose first)");
    } else if (d < 2) {
        rep.violations.push_back("first-m diagonal form needs d >= 2");
    } else {
        rep.first_m_equal = v.kappa == *v.diag_sum_first_m;
    }
    if (v.kappa < 1) {
        rep.violations.push_back("rook trailing-degree form needs kappa(F, d) >= 1");
    } else {
        const ExtendedInt tau = tau_via_polynomial(f, d - 1);
        rep.tau_equal = tau.is_finite() && tau.value() == v.kappa;
    }
    return rep;
}

std::string to_string(DensityClass c) {
    switch (c) {
        case DensityClass::Dense: return "DENSE";
        case DensityClass::Sparse: return "SPARSE";
        case DensityClass::NotDenseAtMostHalf: return "NOT_DENSE_AT_MOST_HALF";
    }
    return "?";
}

DensityClass classify_density(const FerrersDiagram& f, int d, int k) {
    require_d_range(f, d, 2);
    if (k < 1 || k > f.size()) {
        throw HypothesisViolation("need 1 <= k <= |F| = " + std::to_string(f.size()) + ", got k = " + std::to_string(k));
    }
    if (kappa(f, d).minimum < 1) throw HypothesisViolation("density regimes need kappa(F, d) >= 1");
    const auto tau = tau_closed_form(f, d - 1);
    if (!tau) throw HypothesisViolation("kappa(F, d-1) = 0");
    if (k <= *tau) return DensityClass::Dense;
    if (k >= *tau + 2) return DensityClass::Sparse;
    return DensityClass::NotDenseAtMostHalf;
}

bool is_prime_power(const BigInt& q) {
    if (q < 2) return false;
    const std::size_t bits = mpz_sizeinbase(q.get_mpz_t(), 2);
    for (unsigned long k = 1; k <= bits; ++k) {
        BigInt root;
        if (mpz_root(root.get_mpz_t(), q.get_mpz_t(), k) != 0 && mpz_probab_prime_p(root.get_mpz_t(), 30)) return true;
    }
    return false;
}

BigInt existence_lower_bound(const FerrersDiagram& f, int d, int k, const BigInt& q) {
    require_d_range(f, d, 2);
    const long kap = kappa(f, d).minimum;
    if (k < 1 || k > kap) {
        throw HypothesisViolation("need 1 <= k <= kappa(F, d) = " + std::to_string(kap) + ", got k = " +
                                  std::to_string(k));
    }
    if (!is_prime_power(q)) throw HypothesisViolation("q must be a prime power, got " + to_string(q));
    const auto size = static_cast<unsigned>(f.size());
    const auto dim = static_cast<unsigned>(k);
    const BigInt ball = ball_size(f, d - 1, q);
    const BigInt projective_ball = divide_exact(ball - 1, q - 1);
    return q_binomial_eval(size, dim, q) - projective_ball * q_binomial_eval(size - 1, dim - 1, q);
}

BigInt mc_upper_bound(const FerrersDiagram& f, int d, const BigInt& q) {
    const int n = f.rows(), m = f.cols();
    if (m < n) throw HypothesisViolation("needs m >= n (transpose first)");
    require_d_range(f, d, 2);
    if (!mds_constructible(f, d).is_mds_constructible) throw HypothesisViolation("(F, d) is not MDS-constructible");
    const DiagonalProfile prof = diagonal_profile(f);
    BigInt product = 1;
    for (int i = 1; i <= m; ++i) {
        const int len = prof.at(i);
        if (len >= d) product *= q_binomial_eval(static_cast<unsigned>(len), static_cast<unsigned>(len - d + 1), q);
    }
    return product;
}

long mc_density_exponent(const FerrersDiagram& f, int d) {
    const MdsVerdict v = mds_constructible(f, d);
    if (!v.is_mds_constructible) throw HypothesisViolation("(F, d) is not MDS-constructible");
    return v.kappa * (f.size() - v.kappa - d + 1);
}

}  // namespace ferrook
