#pragma once

#include <vector>

#include "lcfn/eval.hpp"

namespace lcfn {

// Dense complex polynomial, coefficients in ascending degree. The zero
// polynomial is represented as {0}; otherwise the trailing coefficient is
// kept nonzero by trim().
class Polynomial {
public:
    Polynomial() : coeffs_{Complex(0.0)} {}
    explicit Polynomial(std::vector<Complex> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }
    Complex coeff(int k) const;

    Complex operator()(Complex x) const; // Horner
    Polynomial derivative() const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator*=(Complex c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator*(Polynomial a, Complex c) { return a *= c; }

private:
    void trim();
    std::vector<Complex> coeffs_;
};

} // namespace lcfn
