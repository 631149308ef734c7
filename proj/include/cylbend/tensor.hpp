#pragma once

#include <array>
#include <functional>
#include <vector>

namespace cylbend {

struct Vector3 {
    std::array<double, 3> v{0.0, 0.0, 0.0};

    Vector3() = default;
    Vector3(double a, double b, double c) : v{a, b, c} {}

    double& operator[](int i) { return v[i]; }
    double operator[](int i) const { return v[i]; }

    static Vector3 e(int i);
};

Vector3 operator+(const Vector3& a, const Vector3& b);
Vector3 operator-(const Vector3& a, const Vector3& b);
Vector3 operator*(double s, const Vector3& a);
double dot(const Vector3& a, const Vector3& b);
Vector3 cross(const Vector3& a, const Vector3& b);
double norm(const Vector3& a);

struct Tensor3 {
    std::array<double, 9> m{};

    Tensor3() = default;
    Tensor3(std::initializer_list<std::initializer_list<double>> rows);

    double& operator()(int i, int j) { return m[3 * i + j]; }
    double operator()(int i, int j) const { return m[3 * i + j]; }

    static Tensor3 identity();
    static Tensor3 zero() { return {}; }
    static Tensor3 dyad(const Vector3& a, const Vector3& b);
    static Tensor3 unit(int i, int j);
};

Tensor3 operator+(const Tensor3& a, const Tensor3& b);
Tensor3 operator-(const Tensor3& a, const Tensor3& b);
Tensor3 operator-(const Tensor3& a);
Tensor3 operator*(double s, const Tensor3& a);
Tensor3 operator*(const Tensor3& a, const Tensor3& b);
Vector3 operator*(const Tensor3& a, const Vector3& b);
Tensor3& operator+=(Tensor3& a, const Tensor3& b);

Tensor3 transpose(const Tensor3& t);
double trace(const Tensor3& t);
Tensor3 sym(const Tensor3& t);
Tensor3 skew(const Tensor3& t);
Tensor3 dev(const Tensor3& t);
Tensor3 devsym(const Tensor3& t);
Tensor3 sphere(const Tensor3& t);
double inner(const Tensor3& a, const Tensor3& b);
double norm2(const Tensor3& t);
double norm(const Tensor3& t);
double max_abs(const Tensor3& t);

struct Decomposition {
    Tensor3 devsym;
    Tensor3 skew;
    Tensor3 sphere;
};

Decomposition decompose(const Tensor3& t);

// Throws std::invalid_argument when |sym A| > 1e-12 |A|.
Vector3 axl(const Tensor3& a);
Tensor3 anti(const Vector3& v);

// (m x b)_ij = m_ik eps_kjh b_h
Tensor3 cross_tensor_vector(const Tensor3& m, const Vector3& b);

// Gradient of a matrix field: d[i] holds the partial derivative d/dx_i of the
// field. Curl acts row-wise: (Curl P)_ia = eps_abc dP_ic/dx_b.
using MatrixGradient = std::array<Tensor3, 3>;

Tensor3 curl_from_gradient(const MatrixGradient& d);

// Third-order array chi_ijk, used for Mindlin-type contractions.
struct Third {
    std::array<double, 27> c{};
    double& operator()(int i, int j, int k) { return c[9 * i + 3 * j + k]; }
    double operator()(int i, int j, int k) const { return c[9 * i + 3 * j + k]; }
};

// chi_ijk = P_jk,i
Third chi_from_gradient(const MatrixGradient& d);

double levi_civita(int i, int j, int k);

// Analytic vector field with its gradient (D a)_ij = da_i/dx_j.
struct VectorFieldSample {
    Vector3 value;
    Tensor3 gradient;
};
using AnalyticVectorField = std::function<VectorFieldSample(const Vector3&)>;

// max over samples of |-Curl A - ((D axl A)^T - tr((D axl A)^T) 1)| for
// A = anti(a(x)); Curl A is assembled from the supplied gradient.
double nye_check(const AnalyticVectorField& a, const std::vector<Vector3>& samples);

}  // namespace cylbend
