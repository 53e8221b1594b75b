#include "lcfn/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "lcfn/numerics.hpp"

namespace lcfn {

namespace {

std::vector<std::pair<long, int>> factorize(long n) {
    std::vector<std::pair<long, int>> out;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            out.emplace_back(d, e);
        }
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

long power_mod(long base, long exp, long mod) {
    long result = 1 % mod;
    base %= mod;
    while (exp > 0) {
        if (exp & 1)
            result = result * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return result;
}

// Smallest primitive root of an odd prime power (or of 2, 4).
long primitive_root(long pe) {
    long phi = euler_phi(pe);
    auto prime_factors = factorize(phi);
    for (long g = 2; g < pe; ++g) {
        if (std::gcd(g, pe) != 1)
            continue;
        bool ok = true;
        for (const auto& [p, e] : prime_factors) {
            (void)e;
            if (power_mod(g, phi / p, pe) == 1) {
                ok = false;
                break;
            }
        }
        if (ok)
            return g;
    }
    return 1;
}

struct CyclicFactor {
    long generator; // lifted mod q
    long order;
};

// Generators of (Z/q)^* as a product of cyclic groups, CRT-lifted so each
// generator is 1 modulo the complementary factor.
std::vector<CyclicFactor> unit_group_generators(long q) {
    std::vector<CyclicFactor> gens;
    if (q == 1)
        return gens;
    auto lift = [q](long a, long pe) {
        long rest = q / pe;
        if (rest == 1)
            return a % q;
        // x = a (mod pe), x = 1 (mod rest)
        long inv = 1;
        {
            long t = pe % rest;
            for (long candidate = 1; candidate < rest; ++candidate) {
                if (t * candidate % rest == 1) {
                    inv = candidate;
                    break;
                }
            }
        }
        long k = ((1 - a) % rest + rest) % rest * inv % rest;
        return (a + pe * k) % q;
    };
    for (const auto& [p, e] : factorize(q)) {
        long pe = 1;
        for (int i = 0; i < e; ++i)
            pe *= p;
        if (p == 2) {
            if (e == 1)
                continue;
            if (e == 2) {
                gens.push_back({lift(3, pe), 2});
            } else {
                gens.push_back({lift(pe - 1, pe), 2});            // -1
                gens.push_back({lift(5, pe), pe / 4});            // 5, order 2^(e-2)
            }
        } else {
            gens.push_back({lift(primitive_root(pe), pe), euler_phi(pe)});
        }
    }
    return gens;
}

} // namespace

long euler_phi(long n) {
    long r = n;
    for (const auto& [p, e] : factorize(n)) {
        (void)e;
        r = r / p * (p - 1);
    }
    return r;
}

Complex DirichletCharacter::operator()(long n) const {
    long a = ((n % q_) + q_) % q_;
    if (q_ == 1)
        return Complex(1.0);
    int t = exponents_[static_cast<std::size_t>(a)];
    if (t < 0)
        return Complex(0.0);
    return values_[static_cast<std::size_t>(a)];
}

DirichletCharacter DirichletCharacter::conjugate() const {
    DirichletCharacter out = *this;
    for (std::size_t a = 0; a < out.exponents_.size(); ++a) {
        int t = out.exponents_[a];
        if (t > 0)
            out.exponents_[a] = out.order_lcm_ - t;
        if (t >= 0)
            out.values_[a] = std::conj(out.values_[a]);
    }
    return out;
}

bool DirichletCharacter::operator==(const DirichletCharacter& other) const {
    return q_ == other.q_ && exponents_ == other.exponents_;
}

std::vector<DirichletCharacter> characters_mod(int q) {
    if (q < 1 || q > 10000)
        throw range_error("characters_mod: q out of [1, 10^4]");

    std::vector<DirichletCharacter> chars;
    if (q == 1) {
        DirichletCharacter chi;
        chi.q_ = 1;
        chi.order_lcm_ = 1;
        chi.exponents_ = {0};
        chi.values_ = {Complex(1.0)};
        chi.index_ = {};
        chi.conductor_ = 1;
        chi.parity_ = 1;
        chi.principal_ = true;
        chars.push_back(std::move(chi));
        return chars;
    }

    auto gens = unit_group_generators(q);
    std::vector<long> orders;
    for (const auto& g : gens)
        orders.push_back(g.order);
    long L = 1;
    for (long o : orders)
        L = std::lcm(L, o);

    // Discrete logs by enumerating the full exponent lattice once.
    const long phi = euler_phi(q);
    std::vector<std::vector<int>> dlog(static_cast<std::size_t>(q));
    std::vector<bool> seen(static_cast<std::size_t>(q), false);
    std::vector<int> exps(gens.size(), 0);
    long count = 0;
    while (true) {
        long x = 1;
        for (std::size_t i = 0; i < gens.size(); ++i)
            x = x * power_mod(gens[i].generator, exps[i], q) % q;
        if (!seen[static_cast<std::size_t>(x)]) {
            seen[static_cast<std::size_t>(x)] = true;
            dlog[static_cast<std::size_t>(x)] = exps;
            ++count;
        }
        std::size_t i = 0;
        for (; i < gens.size(); ++i) {
            if (++exps[i] < gens[i].order)
                break;
            exps[i] = 0;
        }
        if (i == gens.size())
            break;
    }
    if (count != phi)
        throw std::logic_error("characters_mod: unit group enumeration mismatch");

    // One character per exponent tuple, lexicographic from the principal.
    std::vector<int> jexps(gens.size(), 0);
    while (true) {
        DirichletCharacter chi;
        chi.q_ = q;
        chi.order_lcm_ = static_cast<int>(L);
        chi.exponents_.assign(static_cast<std::size_t>(q), -1);
        chi.values_.assign(static_cast<std::size_t>(q), Complex(0.0));
        chi.index_.assign(jexps.begin(), jexps.end());
        bool principal = true;
        for (long a = 0; a < q; ++a) {
            if (std::gcd(a, static_cast<long>(q)) != 1)
                continue;
            const auto& e = dlog[static_cast<std::size_t>(a)];
            long t = 0;
            for (std::size_t i = 0; i < gens.size(); ++i) {
                long contrib = static_cast<long>(jexps[i]) * static_cast<long>(e[i]) %
                               orders[i] * (L / orders[i]) % L;
                t = (t + contrib) % L;
            }
            chi.exponents_[static_cast<std::size_t>(a)] = static_cast<int>(t);
            chi.values_[static_cast<std::size_t>(a)] =
                std::exp(Complex(0.0, 2.0 * pi * static_cast<double>(t) / static_cast<double>(L)));
            if (t != 0)
                principal = false;
        }
        chi.principal_ = principal;
        chi.parity_ = chi.exponents_[static_cast<std::size_t>((q - 1) % q)] == 0 ? 1 : -1;
        // conductor: smallest d | q with chi trivial on units = 1 (mod d)
        chi.conductor_ = q;
        for (int d = 1; d <= q; ++d) {
            if (q % d != 0)
                continue;
            bool trivial = true;
            for (long a = 1; a < q && trivial; ++a) {
                if (std::gcd(a, static_cast<long>(q)) != 1)
                    continue;
                if (a % d == 1 % d && chi.exponents_[static_cast<std::size_t>(a)] != 0)
                    trivial = false;
            }
            if (trivial) {
                chi.conductor_ = d;
                break;
            }
        }
        chars.push_back(std::move(chi));

        std::size_t i = jexps.size();
        while (i > 0) {
            --i;
            if (++jexps[i] < orders[i])
                break;
            jexps[i] = 0;
            if (i == 0)
                return chars;
        }
        if (gens.empty())
            return chars;
    }
}

Complex gauss_sum(Complex alpha, const DirichletCharacter& chi) {
    const int q = chi.modulus();
    Complex sum(0.0);
    for (int k = 1; k <= q; ++k) {
        Complex v = chi(k);
        if (v == Complex(0.0))
            continue;
        sum += v * std::exp(Complex(0.0, 2.0 * pi) * (static_cast<double>(k) * alpha /
                                                      static_cast<double>(q)));
    }
    return sum;
}

namespace {

// Iterated Abel tail for sum_{n>N} c_n n^-s with c_n periodic mod q.
// Level tables: T_{j+1}(n) = partial sums of (T_j - mean), all periodic.
struct AbelTables {
    std::vector<std::vector<Complex>> levels; // levels[j][a], a = n mod q
    std::vector<Complex> means;
};

AbelTables build_tables(const DirichletCharacter& chi, int J) {
    const int q = chi.modulus();
    AbelTables t;
    std::vector<Complex> cur(static_cast<std::size_t>(q));
    for (int a = 0; a < q; ++a)
        cur[static_cast<std::size_t>(a)] = chi(a);
    for (int j = 0; j <= J; ++j) {
        Complex mean(0.0);
        if (j == 0) {
            // exactly phi(q)/q for the principal character, exactly 0 otherwise
            if (chi.principal())
                mean = Complex(static_cast<double>(euler_phi(q)) / q);
        } else {
            for (const auto& v : cur)
                mean += v;
            mean /= static_cast<double>(q);
        }
        t.levels.push_back(cur);
        t.means.push_back(mean);
        // partial sums Q(n) = sum_{k=1..n} (cur(k) - mean), table over n mod q
        std::vector<Complex> next(static_cast<std::size_t>(q));
        Complex run(0.0);
        for (int n = 1; n <= q; ++n) {
            run += cur[static_cast<std::size_t>(n % q)] - mean;
            next[static_cast<std::size_t>(n % q)] = run;
        }
        cur = std::move(next);
    }
    return t;
}

// j-th forward difference of n^-s at n.
Complex forward_diff(Complex s, int j, long n) {
    Complex acc(0.0);
    double sign = 1.0;
    for (int i = 0; i <= j; ++i) {
        acc += sign * binomial(j, i) * std::pow(static_cast<double>(n + i), -s);
        sign = -sign;
    }
    return acc;
}

} // namespace

EvalResult l_series(Complex s, const DirichletCharacter& chi, double tol) {
    const double sigma = s.real();
    const int q = chi.modulus();
    if (!(sigma > 1.0 || (sigma > 0.0 && !chi.principal())))
        throw domain_error("l_series: s outside the summation region");

    constexpr int J = 5;
    const long blocks = std::max<long>(8, 120 / q + 1);
    const long N = blocks * q;

    Complex sum(0.0);
    double max_partial = 0.0;
    Complex partial(0.0);
    for (long n = 1; n <= N; ++n) {
        Complex c = chi(n);
        partial += c;
        max_partial = std::max(max_partial, std::abs(partial));
        if (c != Complex(0.0))
            sum += c * std::pow(static_cast<double>(n), -s);
    }

    // Tail sum_{n>N} chi(n) n^-s by repeated summation by parts. At each
    // level the periodic coefficients split into mean (telescoped exactly;
    // the level-0 mean runs through hurwitz_zeta) plus a zero-mean part
    // whose partial sums become the next level's coefficients at one extra
    // power of decay. Level J is summed directly.
    AbelTables tables = build_tables(chi, J);
    for (int j = 0; j < J; ++j) {
        Complex mu = tables.means[static_cast<std::size_t>(j)];
        if (std::abs(mu) > 1e-18) {
            if (j == 0)
                sum += mu * hurwitz_zeta(s, Complex(static_cast<double>(N + 1))).value;
            else
                sum += mu * forward_diff(s, j - 1, N + 1);
        }
        Complex qn =
            tables.levels[static_cast<std::size_t>(j + 1)][static_cast<std::size_t>(N % q)];
        sum -= qn * forward_diff(s, j, N + 1);
    }
    double cmax = 0.0;
    for (const auto& v : tables.levels[J])
        cmax = std::max(cmax, std::abs(v));
    const long M = 2000;
    for (long n = N + 1; n <= N + M; ++n) {
        Complex c = tables.levels[J][static_cast<std::size_t>(n % q)];
        if (c != Complex(0.0))
            sum += c * forward_diff(s, J, n);
    }

    double abs_s = std::abs(s);
    double err_model = max_partial * std::pow(static_cast<double>(N), -sigma) * abs_s /
                       std::max(sigma, 1e-6);
    // remaining tail of the final level
    double rem = cmax * std::pow(abs_s + J, J) *
                 std::pow(static_cast<double>(N + M), -(sigma + J)) / std::max(sigma + J - 1.0, 1.0);
    (void)tol;
    return {sum, "blocked-abel", std::min(err_model, 1.0) + rem};
}

EvalResult l_via_hurwitz(Complex s, const DirichletCharacter& chi) {
    if (s == Complex(1.0))
        throw domain_error("l_via_hurwitz: s = 1");
    const int q = chi.modulus();
    Complex sum(0.0);
    double err = 0.0;
    for (int a = 1; a <= q; ++a) {
        Complex c = chi(a);
        if (c == Complex(0.0))
            continue;
        EvalResult z = hurwitz_zeta(s, Complex(static_cast<double>(a) / q));
        sum += c * z.value;
        err += z.err_est;
    }
    Complex qs = std::pow(Complex(static_cast<double>(q)), -s);
    return {qs * sum, "hurwitz-identity", std::abs(qs) * err};
}

Complex l_value_cot(int k, const DirichletCharacter& chi) {
    const int q = chi.modulus();
    if (k < 1)
        throw range_error("l_value_cot: k must be positive");
    if (chi.parity() != (k % 2 == 0 ? 1 : -1))
        throw domain_error("l_value_cot: chi(-1) must equal (-1)^k");
    if (k == 1) {
        if (chi.principal() || q < 2)
            throw domain_error("l_value_cot: k = 1 needs an odd non-principal character");
        Complex sum(0.0);
        for (int a = 1; a < q; ++a) {
            Complex c = chi(a);
            if (c == Complex(0.0))
                continue;
            double x = pi * a / q;
            sum += c * (std::cos(x) / std::sin(x));
        }
        return pi / (2.0 * q) * sum;
    }
    if (q < 3)
        throw domain_error("l_value_cot: k >= 2 needs q >= 3");
    Complex sum(0.0);
    for (int a = 1; a < q; ++a) {
        Complex c = chi(a);
        if (c == Complex(0.0))
            continue;
        sum += c * cot_derivative(k - 1, Complex(static_cast<double>(a) / q));
    }
    double sign = (k % 2 == 0) ? -1.0 : 1.0; // (-1)^(k-1)
    return sign * std::pow(pi, k) / (2.0 * std::pow(static_cast<double>(q), k) *
                                     std::tgamma(static_cast<double>(k))) *
           sum;
}

Complex l_value_alkan(int k, const DirichletCharacter& chi) {
    const int q = chi.modulus();
    if (k < 1)
        throw range_error("l_value_alkan: k must be positive");
    if (q < 2)
        throw domain_error("l_value_alkan: q must be at least 2");
    if (chi.parity() != (k % 2 == 0 ? 1 : -1))
        throw domain_error("l_value_alkan: chi(-1) must equal (-1)^k");

    static const std::vector<double> bern = bernoulli_numbers(60);
    std::vector<Complex> gauss(static_cast<std::size_t>(q) + 1);
    for (int a = 1; a <= q; ++a)
        gauss[static_cast<std::size_t>(a)] = gauss_sum(Complex(static_cast<double>(a)), chi);

    Complex total(0.0);
    const int lmax = 2 * (k / 2);
    for (int l = 0; l <= lmax; ++l) {
        if (bern[static_cast<std::size_t>(l)] == 0.0)
            continue;
        Complex inner(0.0);
        for (int a = 1; a <= q; ++a)
            inner += std::pow(static_cast<double>(a) / q, k - l) *
                     gauss[static_cast<std::size_t>(a)];
        total += binomial(k, l) * bern[static_cast<std::size_t>(l)] * inner;
    }
    Complex ik = std::pow(Complex(0.0, 1.0), k);
    double sign = (k % 2 == 0) ? -1.0 : 1.0; // (-1)^(k+1)
    return sign * ik * std::pow(2.0, k - 1) * std::pow(pi, k) /
           (static_cast<double>(q) * std::tgamma(static_cast<double>(k) + 1.0)) * total;
}

Complex generalized_bernoulli(int n, const DirichletCharacter& chi) {
    if (n < 0 || n > 40)
        throw range_error("generalized_bernoulli: n out of [0, 40]");
    const int q = chi.modulus();
    Polynomial bn = bernoulli_polynomial(n);
    Complex sum(0.0);
    for (int a = 1; a <= q; ++a) {
        Complex c = chi(a);
        if (c == Complex(0.0))
            continue;
        sum += c * bn(Complex(static_cast<double>(a) / q));
    }
    return std::pow(static_cast<double>(q), n - 1) * sum;
}

Complex l_value_classical(int k, const DirichletCharacter& chi, ClassicalForm form) {
    const int q = chi.modulus();
    if (k < 1)
        throw range_error("l_value_classical: k must be positive");
    if (!chi.primitive() || q < 2)
        throw domain_error("l_value_classical: chi must be primitive with q >= 2");
    if (chi.parity() != (k % 2 == 0 ? 1 : -1))
        throw domain_error("l_value_classical: chi(-1) must equal (-1)^k");

    DirichletCharacter conj = chi.conjugate();
    Complex g = gauss_sum(Complex(1.0), chi);

    if (form == ClassicalForm::Unified) {
        Complex bk = generalized_bernoulli(k, conj);
        Complex ik = std::pow(Complex(0.0, 1.0), k);
        double sign = (k % 2 == 0) ? -1.0 : 1.0;
        return sign * ik * std::pow(2.0, k - 1) * std::pow(pi, k) * g * bk /
               (std::pow(static_cast<double>(q), k) * std::tgamma(static_cast<double>(k) + 1.0));
    }

    // Per-parity textbook displays.
    Polynomial bk = bernoulli_polynomial(k);
    Complex inner(0.0);
    for (int a = 1; a <= q; ++a) {
        Complex c = conj(a);
        if (c != Complex(0.0))
            inner += c * bk(Complex(static_cast<double>(a) / q));
    }
    if (k % 2 == 0) {
        int p = k / 2;
        double sign = (p % 2 == 0) ? -1.0 : 1.0; // (-1)^(p+1)
        return sign * std::pow(2.0, 2 * p - 1) * std::pow(pi, 2 * p) * g /
               (static_cast<double>(q) * std::tgamma(2.0 * p + 1.0)) * inner;
    }
    int p = (k - 1) / 2;
    double sign = (p % 2 == 0) ? 1.0 : -1.0; // (-1)^p
    return Complex(0.0, 1.0) * sign * std::pow(2.0, 2 * p) * std::pow(pi, 2 * p + 1) * g /
           (static_cast<double>(q) * std::tgamma(2.0 * p + 2.0)) * inner;
}

double dirichlet_functional_residual(Complex s, const DirichletCharacter& chi, double tol) {
    const int q = chi.modulus();
    if (!chi.primitive() || q < 2)
        throw domain_error("dirichlet_functional_residual: chi must be primitive, q > 1");
    int delta = chi.delta();
    Complex lhs = l_via_hurwitz(1.0 - s, chi).value;
    Complex ls = l_series(s, chi.conjugate(), tol).value;
    Complex g = gauss_sum(Complex(1.0), chi);
    Complex idelta = delta == 0 ? Complex(1.0) : Complex(0.0, 1.0);
    Complex rhs = 2.0 * gamma_complex(s) * std::cos(pi / 2.0 * (s - static_cast<double>(delta))) /
                  (idelta * std::pow(2.0 * pi, s)) * g * ls /
                  std::pow(static_cast<double>(q), 1.0 - s);
    return std::abs(lhs - rhs);
}

std::string character_to_json(const DirichletCharacter& chi) {
    std::ostringstream os;
    os.precision(17);
    os << "{\"q\":" << chi.modulus() << ",\"conductor\":" << chi.conductor()
       << ",\"parity\":" << chi.parity() << ",\"values\":[";
    const int q = chi.modulus();
    for (int a = 1; a <= q; ++a) {
        Complex v = chi(a);
        os << (a > 1 ? "," : "") << "[" << v.real() << "," << v.imag() << "]";
    }
    os << "]}";
    return os.str();
}

} // namespace lcfn
