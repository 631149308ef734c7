#include "cylbend/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cylbend {

Vector3 Vector3::e(int i) {
    Vector3 r;
    r.v[i] = 1.0;
    return r;
}

Vector3 operator+(const Vector3& a, const Vector3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Vector3 operator-(const Vector3& a, const Vector3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vector3 operator*(double s, const Vector3& a) { return {s * a[0], s * a[1], s * a[2]}; }
double dot(const Vector3& a, const Vector3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vector3 cross(const Vector3& a, const Vector3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
double norm(const Vector3& a) { return std::sqrt(dot(a, a)); }

Tensor3::Tensor3(std::initializer_list<std::initializer_list<double>> rows) {
    int i = 0;
    for (const auto& r : rows) {
        int j = 0;
        for (double x : r) (*this)(i, j++) = x;
        ++i;
    }
}

Tensor3 Tensor3::identity() { return {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}; }

Tensor3 Tensor3::dyad(const Vector3& a, const Vector3& b) {
    Tensor3 t;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) t(i, j) = a[i] * b[j];
    return t;
}

Tensor3 Tensor3::unit(int i, int j) {
    Tensor3 t;
    t(i, j) = 1.0;
    return t;
}

Tensor3 operator+(const Tensor3& a, const Tensor3& b) {
    Tensor3 r;
    for (int k = 0; k < 9; ++k) r.m[k] = a.m[k] + b.m[k];
    return r;
}
Tensor3 operator-(const Tensor3& a, const Tensor3& b) {
    Tensor3 r;
    for (int k = 0; k < 9; ++k) r.m[k] = a.m[k] - b.m[k];
    return r;
}
Tensor3 operator-(const Tensor3& a) { return -1.0 * a; }
Tensor3 operator*(double s, const Tensor3& a) {
    Tensor3 r;
    for (int k = 0; k < 9; ++k) r.m[k] = s * a.m[k];
    return r;
}
Tensor3 operator*(const Tensor3& a, const Tensor3& b) {
    Tensor3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += a(i, k) * b(k, j);
            r(i, j) = s;
        }
    return r;
}
Vector3 operator*(const Tensor3& a, const Vector3& b) {
    Vector3 r;
    for (int i = 0; i < 3; ++i) r[i] = a(i, 0) * b[0] + a(i, 1) * b[1] + a(i, 2) * b[2];
    return r;
}
Tensor3& operator+=(Tensor3& a, const Tensor3& b) {
    for (int k = 0; k < 9; ++k) a.m[k] += b.m[k];
    return a;
}

Tensor3 transpose(const Tensor3& t) {
    Tensor3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = t(j, i);
    return r;
}

double trace(const Tensor3& t) { return t(0, 0) + t(1, 1) + t(2, 2); }

Tensor3 sym(const Tensor3& t) {
    Tensor3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = 0.5 * (t(i, j) + t(j, i));
    return r;
}

Tensor3 skew(const Tensor3& t) {
    Tensor3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = 0.5 * (t(i, j) - t(j, i));
    return r;
}

Tensor3 sphere(const Tensor3& t) { return (trace(t) / 3.0) * Tensor3::identity(); }
Tensor3 dev(const Tensor3& t) { return t - sphere(t); }
Tensor3 devsym(const Tensor3& t) { return dev(sym(t)); }

double inner(const Tensor3& a, const Tensor3& b) {
    double s = 0.0;
    for (int k = 0; k < 9; ++k) s += a.m[k] * b.m[k];
    return s;
}
double norm2(const Tensor3& t) { return inner(t, t); }
double norm(const Tensor3& t) { return std::sqrt(norm2(t)); }
double max_abs(const Tensor3& t) {
    double s = 0.0;
    for (double x : t.m) s = std::max(s, std::abs(x));
    return s;
}

Decomposition decompose(const Tensor3& t) { return {devsym(t), skew(t), sphere(t)}; }

Vector3 axl(const Tensor3& a) {
    if (norm(sym(a)) > 1e-12 * norm(a)) throw std::invalid_argument("axl: argument is not skew-symmetric");
    return {a(2, 1), a(0, 2), a(1, 0)};
}

Tensor3 anti(const Vector3& v) { return {{0.0, -v[2], v[1]}, {v[2], 0.0, -v[0]}, {-v[1], v[0], 0.0}}; }

double levi_civita(int i, int j, int k) {
    if (i == j || j == k || i == k) return 0.0;
    return ((j - i + 3) % 3 == 1) ? 1.0 : -1.0;
}

Tensor3 cross_tensor_vector(const Tensor3& m, const Vector3& b) {
    Tensor3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k)
                for (int h = 0; h < 3; ++h) s += m(i, k) * levi_civita(k, j, h) * b[h];
            r(i, j) = s;
        }
    return r;
}

Tensor3 curl_from_gradient(const MatrixGradient& d) {
    Tensor3 r;
    for (int i = 0; i < 3; ++i)
        for (int a = 0; a < 3; ++a) {
            double s = 0.0;
            for (int b = 0; b < 3; ++b)
                for (int c = 0; c < 3; ++c) s += levi_civita(a, b, c) * d[b](i, c);
            r(i, a) = s;
        }
    return r;
}

Third chi_from_gradient(const MatrixGradient& d) {
    Third x;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) x(i, j, k) = d[i](j, k);
    return x;
}

double nye_check(const AnalyticVectorField& a, const std::vector<Vector3>& samples) {
    double worst = 0.0;
    for (const auto& x : samples) {
        const auto s = a(x);
        MatrixGradient d;
        for (int b = 0; b < 3; ++b) d[b] = anti({s.gradient(0, b), s.gradient(1, b), s.gradient(2, b)});
        const Tensor3 curl = curl_from_gradient(d);
        const Tensor3 gt = transpose(s.gradient);
        const Tensor3 r = -curl - (gt - trace(gt) * Tensor3::identity());
        worst = std::max(worst, max_abs(r));
    }
    return worst;
}

}  // namespace cylbend
