#pragma once

#include <vector>

namespace cylbend {

// amp * sinh(x/ell) / cosh(half/ell) when odd, amp * cosh(x/ell) / cosh(half/ell)
// otherwise. Dividing by the cosh at the surface keeps every term O(amp) on
// [-half, half] however small ell gets.
struct HypTerm {
    double amp = 0.0;
    double ell = 1.0;
    bool odd = true;
    // even terms only: cosh(x/ell) - 1 in place of cosh(x/ell)
    bool shifted = false;
};

// Polynomial plus scaled hyperbolic terms on x in [-half, half].
class HypPoly {
public:
    HypPoly() = default;
    explicit HypPoly(double half) : half_(half) {}
    HypPoly(double half, std::vector<double> poly, std::vector<HypTerm> terms = {});

    double half() const { return half_; }
    const std::vector<double>& poly() const { return poly_; }
    const std::vector<HypTerm>& terms() const { return terms_; }

    HypPoly& add_poly(int degree, double c);
    HypPoly& add_term(double amp, double ell, bool odd, bool shifted = false);

    double operator()(double x) const { return deriv(x, 0); }
    double deriv(double x, int n) const;

    HypPoly derivative() const;
    // antiderivative vanishing at x = 0
    HypPoly antiderivative() const;

    HypPoly operator+(const HypPoly& o) const;
    HypPoly operator-(const HypPoly& o) const;
    HypPoly scaled(double s) const;

    std::vector<double> sample(const std::vector<double>& xs, int n = 0) const;

private:
    double half_ = 0.5;
    std::vector<double> poly_;
    std::vector<HypTerm> terms_;
};

HypPoly operator*(double s, const HypPoly& p);

// sinh(x/ell)/cosh(half/ell) and cosh(x/ell)/cosh(half/ell) for |x| <= half
double scaled_sinh(double x, double ell, double half);
double scaled_cosh(double x, double ell, double half);

// tanh saturated to +-1 beyond |x| > 40, sech via exp(-|x|)
double stable_tanh(double x);
double stable_sech(double x);

// (1 - tanh(y)/y)/y^2 for y >= 0, series near zero where the difference cancels
double tanh_defect(double y);

// Uniform grid of n points over [-h/2, h/2].
std::vector<double> thickness_grid(double h, int n);

// Gauss-Legendre nodes and weights on [a, b].
struct Quadrature {
    std::vector<double> x;
    std::vector<double> w;
};
Quadrature gauss_legendre(int n, double a, double b);

// n-node Gauss-Legendre panels on [-h/2, h/2], with extra panels packed
// within a few ell of both surfaces when ell is small against h.
Quadrature layered_gauss_legendre(int n, double h, double ell);

}  // namespace cylbend
