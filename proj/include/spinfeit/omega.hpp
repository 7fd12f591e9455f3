#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "spinfeit/partition.hpp"
#include "spinfeit/rational.hpp"

namespace spinfeit {

// Homogeneous element of Omega, stored in the odd power-sum basis p_lambda.
class OmegaElement {
  public:
    explicit OmegaElement(int degree = 0) : degree_(degree) {}
    static OmegaElement unit() { return power_sum_basis(Partition{}); }
    static OmegaElement power_sum_basis(const Partition& lam);

    int degree() const { return degree_; }
    const std::map<Partition, Rational>& coeffs() const { return coeffs_; }
    Rational coeff(const Partition& lam) const;
    void add_term(const Partition& lam, const Rational& c);

    OmegaElement& operator+=(const OmegaElement& o);
    OmegaElement& operator-=(const OmegaElement& o);
    OmegaElement& operator*=(const Rational& r);
    friend OmegaElement operator+(OmegaElement a, const OmegaElement& b) { return a += b; }
    friend OmegaElement operator-(OmegaElement a, const OmegaElement& b) { return a -= b; }
    friend OmegaElement operator*(OmegaElement a, const Rational& r) { return a *= r; }
    friend OmegaElement operator*(const OmegaElement& a, const OmegaElement& b);
    bool operator==(const OmegaElement& o) const { return degree_ == o.degree_ && coeffs_ == o.coeffs_; }

    // e.g. "4/3*p(1,1,1)-4/3*p(3)"; symbol names the basis for display.
    std::string to_string(const std::string& symbol = "p") const;

  private:
    int degree_;
    std::map<Partition, Rational> coeffs_;
};

OmegaElement power_sum(const Partition& lam);
// t^n coefficient of exp(sum_{r odd} 2 p_r t^r / r).
OmegaElement q_one_part(int n);
// q_lambda = prod of q_{lambda_i}.
OmegaElement q_product(const Partition& lam);
Rational inner(const OmegaElement& a, const OmegaElement& b);

// Q_lambda by the Pfaffian of two-row functions.
OmegaElement schur_Q(const Partition& lam);
// Q_lambda from the triangular system q_mu = sum K'_{lambda,mu} 2^{-l(lambda)} Q_lambda,
// with K' counted by marked shifted tableaux. Independent of schur_Q; small n only.
OmegaElement schur_Q_triangular(const Partition& lam);

// Coefficient of x_1^{mu_1} x_2^{mu_2} ... in f.
Rational monomial_coeff(const OmegaElement& f, const Partition& mu);
// Coefficient of x^mu in Q_lambda, via the monomial expansion of schur_Q.
std::int64_t kprime(const Partition& lam, const Partition& mu);
// Number of marked shifted tableaux of shape lambda and content mu.
std::int64_t kprime_tableaux(const Partition& lam, const Partition& mu);

// Coordinates of f in {Q_lambda : lambda in D(n)}.
std::map<Partition, Rational> expand_in_Q(const OmegaElement& f);
// Coordinates of f in {q_lambda : lambda in O(n)}.
std::map<Partition, Rational> expand_in_q(const OmegaElement& f);

// f^lambda_{mu,nu} of Q_mu Q_nu = sum 2^{l(mu)+l(nu)-l(lambda)} f Q_lambda.
std::int64_t f_coeff(const Partition& lam, const Partition& mu, const Partition& nu);

}  // namespace spinfeit
