#include "kd/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kd {

FourierSeries FourierSeries::from_cosine(const std::vector<double>& amps) {
    int order = static_cast<int>(amps.size()) - 1;
    if (order < 0) order = 0;
    FourierSeries f(order);
    if (!amps.empty()) f.set_coeff(0, amps[0]);
    for (int m = 1; m <= order; ++m) {
        f.set_coeff(m, amps[static_cast<std::size_t>(m)] / 2.0);
        f.set_coeff(-m, amps[static_cast<std::size_t>(m)] / 2.0);
    }
    return f;
}

void FourierSeries::set_coeff(int n, cplx v) {
    if (n < -order_ || n > order_)
        throw std::out_of_range("FourierSeries::set_coeff: mode outside truncation");
    coeffs_[static_cast<std::size_t>(n + order_)] = v;
}

FourierSeries FourierSeries::operator*(const FourierSeries& other) const {
    FourierSeries out(order_ + other.order_);
    for (int n = -order_; n <= order_; ++n) {
        cplx a = coeff(n);
        if (a == cplx(0.0)) continue;
        for (int m = -other.order_; m <= other.order_; ++m) {
            cplx b = other.coeff(m);
            if (b == cplx(0.0)) continue;
            out.coeffs_[static_cast<std::size_t>(n + m + out.order_)] += a * b;
        }
    }
    return out;
}

FourierSeries FourierSeries::operator+(const FourierSeries& other) const {
    FourierSeries out(std::max(order_, other.order_));
    for (int n = -out.order_; n <= out.order_; ++n)
        out.set_coeff(n, coeff(n) + other.coeff(n));
    return out;
}

FourierSeries FourierSeries::operator-(const FourierSeries& other) const {
    FourierSeries out(std::max(order_, other.order_));
    for (int n = -out.order_; n <= out.order_; ++n)
        out.set_coeff(n, coeff(n) - other.coeff(n));
    return out;
}

FourierSeries& FourierSeries::operator*=(double s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
}

FourierSeries FourierSeries::derivative() const {
    FourierSeries out(order_);
    for (int n = -order_; n <= order_; ++n)
        out.set_coeff(n, cplx(0.0, static_cast<double>(n)) * coeff(n));
    return out;
}

double FourierSeries::l2_norm() const {
    double s = 0.0;
    for (const auto& c : coeffs_) s += std::norm(c);
    return std::sqrt(s);
}

double FourierSeries::eval(double z) const {
    cplx s(0.0);
    for (int n = -order_; n <= order_; ++n)
        s += coeff(n) * std::exp(cplx(0.0, n * z));
    return s.real();
}

double FourierSeries::max_realness_defect() const {
    double d = 0.0;
    for (int n = 0; n <= order_; ++n)
        d = std::max(d, std::abs(coeff(-n) - std::conj(coeff(n))));
    return d;
}

double FourierSeries::max_imag_part() const {
    double d = 0.0;
    for (const auto& c : coeffs_) d = std::max(d, std::abs(c.imag()));
    return d;
}

double FourierSeries::cosine_amp(int m) const {
    if (m == 0) return coeff(0).real();
    return 2.0 * coeff(m).real();
}

bool FourierSeries::is_zero(double tol) const {
    for (const auto& c : coeffs_)
        if (std::abs(c) > tol) return false;
    return true;
}

}  // namespace kd
