#ifndef KD_FOURIER_HPP
#define KD_FOURIER_HPP

#include <complex>
#include <vector>
#include <cstddef>

namespace kd {

using cplx = std::complex<double>;

// Truncated Fourier series of a 2pi-periodic function,
//   f(z) = sum_{|n|<=N} coeff(n) e^{inz},
// with coeff(n) = (1/2pi) int_0^{2pi} f(z) e^{-inz} dz.
// A real function satisfies coeff(-n) = conj(coeff(n)); a cosine amplitude
// A at mode m corresponds to coeff(+-m) = A/2.
class FourierSeries {
public:
    FourierSeries() : order_(0), coeffs_(1, cplx(0.0)) {}
    explicit FourierSeries(int order)
        : order_(order), coeffs_(2 * static_cast<std::size_t>(order) + 1, cplx(0.0)) {}

    // Build from cosine amplitudes: f(z) = amps[0] + sum_m amps[m] cos(mz).
    static FourierSeries from_cosine(const std::vector<double>& amps);

    int order() const { return order_; }

    cplx coeff(int n) const {
        if (n < -order_ || n > order_) return cplx(0.0);
        return coeffs_[static_cast<std::size_t>(n + order_)];
    }
    void set_coeff(int n, cplx v);

    // Pointwise product, computed as exact convolution (output order is the
    // sum of input orders, so no truncation bias).
    FourierSeries operator*(const FourierSeries& other) const;
    FourierSeries operator+(const FourierSeries& other) const;
    FourierSeries operator-(const FourierSeries& other) const;
    FourierSeries& operator*=(double s);

    FourierSeries derivative() const;  // d/dz, multiplies coeff(n) by in

    double l2_norm() const;            // sqrt(sum |coeff(n)|^2), Parseval norm
    double eval(double z) const;       // real part of the series at z
    double max_realness_defect() const;  // max |coeff(-n) - conj(coeff(n))|
    double max_imag_part() const;        // max |Im coeff(n)| (evenness check)

    // Cosine amplitude of mode m (= 2 Re coeff(m) for m>=1, Re coeff(0) for m=0).
    double cosine_amp(int m) const;

    bool is_zero(double tol = 0.0) const;

private:
    int order_;
    std::vector<cplx> coeffs_;  // index n + order_
};

}  // namespace kd

#endif
