#pragma once

#include <vector>

#include "lcfn/eval.hpp"

namespace lcfn {

// Character modulo q held as exact root-of-unity exponents: chi(a) =
// e^(2 i pi t(a)/L) with L the unit-group exponent, alongside a rendered
// complex table. Equality and conjugation are exact on the exponents.
class DirichletCharacter {
public:
    int modulus() const { return q_; }
    int conductor() const { return conductor_; }
    bool principal() const { return principal_; }
    int parity() const { return parity_; } // chi(-1), +1 even / -1 odd
    int delta() const { return (1 - parity_) / 2; }
    bool primitive() const { return conductor_ == q_; }

    // chi(n) for any integer n (zero when gcd(n,q) > 1).
    Complex operator()(long n) const;
    const std::vector<Complex>& values() const { return values_; }

    DirichletCharacter conjugate() const;
    bool operator==(const DirichletCharacter& other) const;

    // Position in the deterministic characters_mod ordering.
    const std::vector<int>& index_tuple() const { return index_; }

private:
    friend std::vector<DirichletCharacter> characters_mod(int q);
    int q_ = 1;
    int order_lcm_ = 1;
    std::vector<int> exponents_; // t(a) for a = 0..q-1; -1 where chi = 0
    std::vector<Complex> values_;
    std::vector<int> index_;
    int conductor_ = 1;
    int parity_ = 1;
    bool principal_ = true;
};

// All phi(q) characters, 1 <= q <= 10^4. Built by CRT factorisation with
// primitive roots for the odd prime powers and the {-1, 5} pair for 2^k,
// k >= 3. Ordering is lexicographic in the exponent tuples, so the
// principal character is always index 0.
std::vector<DirichletCharacter> characters_mod(int q);

// Gauss sum G(alpha, chi) = sum_{k=1..q} chi(k) e^(2 i pi k alpha / q).
Complex gauss_sum(Complex alpha, const DirichletCharacter& chi);

// L(s,chi) by blocked summation over full periods plus an iterated
// Abel-transformed tail (periodic partial-sum tables, five levels).
// Region: re(s) > 1, or re(s) > 0 for non-principal chi. err_est follows
// the single-transform model (max partial sum) N^-sigma |s|/sigma.
EvalResult l_series(Complex s, const DirichletCharacter& chi, double tol = 1e-12);

// L(s,chi) = q^-s sum_a chi(a) zeta(s, a/q), s != 1.
EvalResult l_via_hurwitz(Complex s, const DirichletCharacter& chi);

// Cotangent closed forms: k = 1 needs chi odd non-principal (q >= 2);
// k >= 2 needs chi(-1) = (-1)^k and q >= 3.
Complex l_value_cot(int k, const DirichletCharacter& chi);

// Alkan's Gauss-sum/Bernoulli-number double sum, q >= 2, chi(-1) = (-1)^k.
Complex l_value_alkan(int k, const DirichletCharacter& chi);

// Generalized Bernoulli number B_{n,chi} = q^(n-1) sum_a chi(a) B_n(a/q).
Complex generalized_bernoulli(int n, const DirichletCharacter& chi);

enum class ClassicalForm { Unified, PerParity };

// Classical formula for primitive chi:
//   L(k,chi) = (-1)^(k+1) i^k 2^(k-1) pi^k G(1,chi) B_{k,conj(chi)} / (q^k k!).
// PerParity evaluates the separate even/odd textbook displays instead;
// the two are algebraically identical.
Complex l_value_classical(int k, const DirichletCharacter& chi,
                          ClassicalForm form = ClassicalForm::Unified);

// |L(1-s,chi) - 2 Gamma(s) cos(pi(s-delta)/2) G(1,chi) L(s,conj chi) /
//  (i^delta (2 pi)^s q^(1-s))| with the left side through l_via_hurwitz
// and the right through l_series.
double dirichlet_functional_residual(Complex s, const DirichletCharacter& chi,
                                     double tol = 1e-12);

long euler_phi(long n);

// JSON record {q, conductor, parity, values: [[re, im], ...]}.
std::string character_to_json(const DirichletCharacter& chi);

} // namespace lcfn
