#include "lcfn/polynomial.hpp"

#include <utility>

namespace lcfn {

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        coeffs_.push_back(Complex(0.0));
    trim();
}

Complex Polynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size()))
        return Complex(0.0);
    return coeffs_[static_cast<std::size_t>(k)];
}

Complex Polynomial::operator()(Complex x) const {
    Complex acc(0.0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1)
        return Polynomial();
    std::vector<Complex> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        d[k - 1] = coeffs_[k] * static_cast<double>(k);
    return Polynomial(std::move(d));
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    if (other.coeffs_.size() > coeffs_.size())
        coeffs_.resize(other.coeffs_.size(), Complex(0.0));
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k)
        coeffs_[k] += other.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(Complex c) {
    for (auto& a : coeffs_)
        a *= c;
    trim();
    return *this;
}

void Polynomial::trim() {
    while (coeffs_.size() > 1 && coeffs_.back() == Complex(0.0))
        coeffs_.pop_back();
}

} // namespace lcfn
