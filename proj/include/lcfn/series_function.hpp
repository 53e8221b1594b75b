#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "lcfn/eval.hpp"
#include "lcfn/polynomial.hpp"

namespace lcfn {

enum class Parity { Even, Odd, None };

// n_f = floor(r_f) + 1, m_f = floor(r_f / 2pi) + 1.
struct StructuralConstants {
    double r_f = 0.0;
    int n_f = 1;
    int m_f = 1;
};

// A seed function f carried through its coefficient streams: the C-numbers
// (exponential generating coefficients of f) and the P-numbers (those of
// the modulator p_f(t) = f(t)(e^t - 1)/t). One stream is given at
// construction together with r_f = 1/rho_f; the other is derived via the
//   P_n = sum_k C(n,k) C_k / (n-k+1)
//   C_n = sum_k C(n,k) B_{n-k} P_k
// convolutions. Streams are memoized; instances are immutable apart from
// the memo tables, whose fill is idempotent and mutex-guarded.
class SeriesFunction {
public:
    using CoeffFn = std::function<Complex(int)>;
    using ClosedEval = std::function<Complex(Complex)>;

    static SeriesFunction from_c_stream(CoeffFn c, double r_f, int depth_cap = default_depth_cap());
    static SeriesFunction from_p_stream(CoeffFn p, double r_f, int depth_cap = default_depth_cap());

    Complex c(int n) const;
    Complex p(int n) const;
    double r() const { return r_f_; }
    int depth_cap() const { return depth_cap_; }

    std::optional<Parity> declared_parity() const { return declared_parity_; }
    void declare_parity(Parity p) { declared_parity_ = p; }
    void set_closed_f(ClosedEval f) { closed_f_ = std::move(f); }
    void set_closed_pf(ClosedEval f) { closed_pf_ = std::move(f); }
    const std::optional<ClosedEval>& closed_f() const { return closed_f_; }
    const std::optional<ClosedEval>& closed_pf() const { return closed_pf_; }

    // Process-wide default for newly built instances (CLI: LCFN_MAX_DEPTH).
    static int default_depth_cap();
    static void set_default_depth_cap(int cap);

private:
    SeriesFunction() = default;

    enum class Basis { C, P };
    Basis basis_ = Basis::P;
    CoeffFn source_;
    double r_f_ = 0.0;
    int depth_cap_ = 256;
    std::optional<Parity> declared_parity_;
    std::optional<ClosedEval> closed_f_, closed_pf_;

    struct Memo {
        std::mutex mutex;
        std::vector<Complex> source, derived;
    };
    std::shared_ptr<Memo> memo_ = std::make_shared<Memo>();

    Complex source_coeff(int n) const;
    Complex derived_coeff(int n) const;
};

// P_{f,0..n} from the C-stream.
std::vector<Complex> p_from_c(const SeriesFunction& f, int n);

// Standalone inverse: C_0..C_n from a P prefix (independent of any
// SeriesFunction instance; needs Bernoulli numbers through index n).
std::vector<Complex> c_from_p(const std::vector<Complex>& p_coeffs, int n);

// C-polynomial C_{f,n}(x) = sum_k C(n,k) C_{f,k} x^(n-k).
Polynomial c_polynomial(const SeriesFunction& f, int n);

// f_(alpha): P'_n = alpha^n P_n, r' = |alpha| r_f, closed evaluators
// composed. alpha = 0 rejected.
SeriesFunction alpha_transform(const SeriesFunction& f, Complex alpha);

// Parity of the modulator from the first `depth` P-numbers: indices of the
// opposite class must stay below tol * (largest magnitude seen).
Parity detect_parity(const SeriesFunction& f, int depth = 64, double tol = 1e-10);

StructuralConstants structural_constants(const SeriesFunction& f);

// p_f(t): closed evaluator when present, else partial sums of the entire
// series sum P_n t^n / n! until two successive terms drop under
// tol * |partial sum|. Failure to settle within the depth cap signals a
// bad coefficient stream (accuracy_error).
Complex eval_modulator(const SeriesFunction& f, Complex t, double tol = 1e-15);

// f(t) itself, through the closed evaluator or f(t) = t p_f(t)/(e^t - 1)
// with the removable singularity at t = 0 patched by f(0) = p_f(0).
Complex eval_seed(const SeriesFunction& f, Complex t, double tol = 1e-15);

} // namespace lcfn
