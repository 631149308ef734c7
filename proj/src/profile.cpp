#include "cylbend/profile.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cylbend {

double scaled_sinh(double x, double ell, double half) {
    const double ax = std::abs(x);
    const double a = std::exp((ax - half) / ell);
    const double b = std::exp((-ax - half) / ell);
    const double r = (a - b) / (1.0 + std::exp(-2.0 * half / ell));
    return x < 0.0 ? -r : r;
}

double scaled_cosh(double x, double ell, double half) {
    const double ax = std::abs(x);
    const double a = std::exp((ax - half) / ell);
    const double b = std::exp((-ax - half) / ell);
    return (a + b) / (1.0 + std::exp(-2.0 * half / ell));
}

double stable_tanh(double x) {
    if (x > 40.0) return 1.0;
    if (x < -40.0) return -1.0;
    return std::tanh(x);
}

double stable_sech(double x) {
    const double e = std::exp(-std::abs(x));
    return 2.0 * e / (1.0 + e * e);
}

double tanh_defect(double y) {
    y = std::abs(y);
    if (y < 0.3) {
        // Taylor coefficients of tanh, shifted by two orders
        static const double c[] = {0.33333333333333331,     -0.13333333333333333,    0.053968253968253971,
                                   -0.021869488536155203,   0.0088632355299021973,   -0.0035921280365724811,
                                   0.0014558343870513183,   -0.00059002744094558595, 0.00023912911424355248,
                                   -9.6915379569294509e-05, 3.9278323883316833e-05,  -1.5918905069328964e-05,
                                   6.4516892156554306e-06,  -2.6147711512907546e-06};
        const double y2 = y * y;
        double s = 0.0;
        for (int i = 13; i >= 0; --i) s = s * y2 + c[i];
        return s;
    }
    return (1.0 - stable_tanh(y) / y) / (y * y);
}

HypPoly::HypPoly(double half, std::vector<double> poly, std::vector<HypTerm> terms)
    : half_(half), poly_(std::move(poly)), terms_(std::move(terms)) {}

HypPoly& HypPoly::add_poly(int degree, double c) {
    if (int(poly_.size()) <= degree) poly_.resize(degree + 1, 0.0);
    poly_[degree] += c;
    return *this;
}

HypPoly& HypPoly::add_term(double amp, double ell, bool odd, bool shifted) {
    if (amp != 0.0) terms_.push_back({amp, ell, odd, shifted && !odd});
    return *this;
}

double HypPoly::deriv(double x, int n) const {
    double s = 0.0;
    for (int k = int(poly_.size()) - 1; k >= n; --k) {
        double c = poly_[k];
        for (int j = 0; j < n; ++j) c *= double(k - j);
        s = s * x + c;
    }
    for (const auto& t : terms_) {
        const bool odd = (t.odd != (n % 2 == 1));
        double v = odd ? scaled_sinh(x, t.ell, half_) : scaled_cosh(x, t.ell, half_);
        if (t.shifted && n == 0) {
            const double y = x / t.ell;
            if (std::abs(y) < 0.5) {
                const double sh = std::sinh(0.5 * y);
                v = 2.0 * sh * sh * stable_sech(half_ / t.ell);
            } else {
                v -= scaled_cosh(0.0, t.ell, half_);
            }
        }
        s += t.amp * v / std::pow(t.ell, n);
    }
    return s;
}

HypPoly HypPoly::derivative() const {
    HypPoly d(half_);
    for (std::size_t k = 1; k < poly_.size(); ++k) d.add_poly(int(k) - 1, double(k) * poly_[k]);
    for (const auto& t : terms_) d.add_term(t.amp / t.ell, t.ell, !t.odd);
    return d;
}

HypPoly HypPoly::antiderivative() const {
    HypPoly a(half_);
    a.add_poly(0, 0.0);
    for (std::size_t k = 0; k < poly_.size(); ++k) a.add_poly(int(k) + 1, poly_[k] / double(k + 1));
    for (const auto& t : terms_) {
        if (t.odd) {
            a.add_term(t.amp * t.ell, t.ell, false, true);
        } else {
            a.add_term(t.amp * t.ell, t.ell, true);
            if (t.shifted) a.add_poly(1, -t.amp * stable_sech(half_ / t.ell));
        }
    }
    return a;
}

HypPoly HypPoly::operator+(const HypPoly& o) const {
    HypPoly r = *this;
    for (std::size_t k = 0; k < o.poly_.size(); ++k) r.add_poly(int(k), o.poly_[k]);
    for (const auto& t : o.terms_) r.add_term(t.amp, t.ell, t.odd, t.shifted);
    return r;
}

HypPoly HypPoly::scaled(double s) const {
    HypPoly r(half_);
    for (std::size_t k = 0; k < poly_.size(); ++k) r.add_poly(int(k), s * poly_[k]);
    for (const auto& t : terms_) r.add_term(s * t.amp, t.ell, t.odd, t.shifted);
    return r;
}

HypPoly HypPoly::operator-(const HypPoly& o) const { return *this + o.scaled(-1.0); }

HypPoly operator*(double s, const HypPoly& p) { return p.scaled(s); }

std::vector<double> HypPoly::sample(const std::vector<double>& xs, int n) const {
    std::vector<double> out;
    out.reserve(xs.size());
    for (double x : xs) out.push_back(deriv(x, n));
    return out;
}

std::vector<double> thickness_grid(double h, int n) {
    if (n < 2) throw std::invalid_argument("grid needs at least 2 points");
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) x[i] = -0.5 * h + h * double(i) / double(n - 1);
    x[n - 1] = 0.5 * h;
    if (n % 2 == 1) x[n / 2] = 0.0;
    return x;
}

Quadrature gauss_legendre(int n, double a, double b) {
    Quadrature q;
    q.x.resize(n);
    q.w.resize(n);
    const double xm = 0.5 * (b + a), xl = 0.5 * (b - a);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < 1e-16) break;
        }
        // recompute derivative at the converged root
        double p1 = 1.0, p2 = 0.0;
        for (int j = 0; j < n; ++j) {
            const double p3 = p2;
            p2 = p1;
            p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
        }
        pp = n * (z * p1 - p2) / (z * z - 1.0);
        q.x[i] = xm - xl * z;
        q.x[n - 1 - i] = xm + xl * z;
        q.w[i] = q.w[n - 1 - i] = 2.0 * xl / ((1.0 - z * z) * pp * pp);
    }
    return q;
}

Quadrature layered_gauss_legendre(int n, double h, double ell) {
    const double H = 0.5 * h;
    std::vector<double> cuts{-H};
    std::vector<double> inner;
    for (double m : {40.0, 8.0, 2.0})
        if (m * ell < 0.5 * H) inner.push_back(H - m * ell);
    for (auto it = inner.rbegin(); it != inner.rend(); ++it) cuts.push_back(-*it);
    for (double c : inner) cuts.push_back(c);
    cuts.push_back(H);
    Quadrature q;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const Quadrature p = gauss_legendre(n, cuts[i], cuts[i + 1]);
        q.x.insert(q.x.end(), p.x.begin(), p.x.end());
        q.w.insert(q.w.end(), p.w.begin(), p.w.end());
    }
    return q;
}

}  // namespace cylbend
