#include <doctest.h>

#include <cmath>

#include "cylbend/tensor.hpp"
#include "gen.hpp"

using namespace cylbend;
using cylbend::testing::Gen;

namespace {

double max_diff(const Tensor3& a, const Tensor3& b) { return max_abs(a - b); }

}  // namespace

TEST_SUITE("tensor") {

TEST_CASE("decompose identity, skew and a dyad") {
    const Decomposition d = decompose(Tensor3::identity());
    CHECK(max_abs(d.devsym) == 0.0);
    CHECK(max_abs(d.skew) == 0.0);
    CHECK(max_diff(d.sphere, Tensor3::identity()) == 0.0);

    const Tensor3 A = anti({0.3, -1.2, 2.0});
    const Decomposition ds = decompose(A);
    CHECK(max_abs(ds.devsym) == 0.0);
    CHECK(max_diff(ds.skew, A) == 0.0);
    CHECK(max_abs(ds.sphere) == 0.0);

    const Tensor3 T = Tensor3::dyad(Vector3::e(0), Vector3::e(1));
    const Decomposition dd = decompose(T);
    CHECK(dd.devsym(0, 1) == 0.5);
    CHECK(dd.devsym(1, 0) == 0.5);
    CHECK(dd.skew(0, 1) == 0.5);
    CHECK(dd.skew(1, 0) == -0.5);
    CHECK(max_abs(dd.sphere) == 0.0);
}

TEST_CASE("decomposition sums back and is orthogonal") {
    Gen g(11);
    for (int n = 0; n < 200; ++n) {
        const Tensor3 T = g.tensor();
        const Decomposition d = decompose(T);
        const double s = norm2(T);
        CHECK(max_diff(d.devsym + d.skew + d.sphere, T) <= 1e-15 * norm(T) * 4);
        CHECK(max_diff(sym(T) + skew(T), T) <= 1e-15 * norm(T) * 4);
        CHECK(std::abs(trace(dev(T))) <= 1e-14 * norm(T));
        CHECK(std::abs(inner(d.devsym, d.skew)) <= 1e-13 * s);
        CHECK(std::abs(inner(d.devsym, d.sphere)) <= 1e-13 * s);
        CHECK(std::abs(inner(d.skew, d.sphere)) <= 1e-13 * s);
    }
}

TEST_CASE("anti and axl") {
    const Tensor3 A = anti({1.0, 0.0, 0.0});
    const Tensor3 expect{{0, 0, 0}, {0, 0, -1}, {0, 1, 0}};
    CHECK(max_diff(A, expect) == 0.0);

    Gen g(12);
    for (int n = 0; n < 100; ++n) {
        const Vector3 v = g.vector();
        const Vector3 w = axl(anti(v));
        for (int i = 0; i < 3; ++i) CHECK(w[i] == v[i]);

        const Tensor3 S = g.skew_tensor();
        CHECK(max_diff(anti(axl(S)), S) <= 1e-15);
        const Vector3 lhs = S * Vector3::e(1);
        const Vector3 rhs = cross(axl(S), Vector3::e(1));
        for (int i = 0; i < 3; ++i) CHECK(std::abs(lhs[i] - rhs[i]) <= 1e-14);
        const Vector3 b = g.vector();
        const Vector3 l2 = S * b, r2 = cross(axl(S), b);
        for (int i = 0; i < 3; ++i) CHECK(std::abs(l2[i] - r2[i]) <= 1e-14 * (1.0 + norm(b)));
    }
}

TEST_CASE("axl rejects a non-skew argument") {
    CHECK_THROWS_AS(axl(Tensor3::identity()), std::invalid_argument);
    Tensor3 A = anti({1.0, 2.0, 3.0});
    A(0, 1) += 1e-9;
    CHECK_THROWS_AS(axl(A), std::invalid_argument);
    A = anti({1.0, 2.0, 3.0});
    A(0, 1) += 1e-14;
    CHECK_NOTHROW(axl(A));
}

TEST_CASE("tensor-vector cross product") {
    const Tensor3 c = cross_tensor_vector(Tensor3::identity(), Vector3::e(1));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double expect = 0.0;
            if (i == 0 && j == 2) expect = -1.0;
            if (i == 2 && j == 0) expect = 1.0;
            CHECK(c(i, j) == expect);
        }
    Gen g(13);
    for (int n = 0; n < 50; ++n) {
        const Tensor3 m = g.tensor();
        const Vector3 b = g.vector(), b2 = g.vector();
        const double a = g.normal();
        CHECK(max_abs(cross_tensor_vector(m, Vector3{})) == 0.0);
        CHECK(max_diff(cross_tensor_vector(a * m, b), a * cross_tensor_vector(m, b)) <= 1e-14 * (1 + std::abs(a)) * 10);
        CHECK(max_diff(cross_tensor_vector(m, b + b2), cross_tensor_vector(m, b) + cross_tensor_vector(m, b2)) <= 1e-13);
        // row i is b x (row i of m), from m_ik eps_kjh b_h
        const Tensor3 c2 = cross_tensor_vector(m, b);
        for (int i = 0; i < 3; ++i) {
            const Vector3 r = cross(b, {m(i, 0), m(i, 1), m(i, 2)});
            for (int j = 0; j < 3; ++j) CHECK(std::abs(c2(i, j) - r[j]) <= 1e-14 * 10);
        }
    }
}

TEST_CASE("Nye relation on constant, bending and polynomial fields") {
    std::vector<Vector3> pts;
    Gen g(14);
    for (int n = 0; n < 20; ++n) pts.push_back(g.vector());

    const Vector3 c = g.vector();
    CHECK(nye_check([c](const Vector3&) { return VectorFieldSample{c, Tensor3{}}; }, pts) == 0.0);

    const double kappa = 0.7;
    auto bending = [kappa](const Vector3& x) {
        VectorFieldSample s;
        s.value = {0.0, 0.0, -kappa * x[0]};
        s.gradient(2, 0) = -kappa;
        return s;
    };
    CHECK(nye_check(bending, pts) <= 1e-14);

    for (int trial = 0; trial < 20; ++trial) {
        const Tensor3 B = g.tensor();
        auto linear = [B](const Vector3& x) { return VectorFieldSample{B * x, B}; };
        CHECK(nye_check(linear, pts) <= 1e-12);
    }

    // cubic components a_i = sum_j c_ij x_j^3 + B x
    Tensor3 C = g.tensor(), B = g.tensor();
    auto cubic = [C, B](const Vector3& x) {
        VectorFieldSample s;
        s.value = B * x;
        s.gradient = B;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                s.value[i] += C(i, j) * x[j] * x[j] * x[j];
                s.gradient(i, j) += 3.0 * C(i, j) * x[j] * x[j];
            }
        return s;
    };
    CHECK(nye_check(cubic, pts) <= 1e-12 * 100);
}

TEST_CASE("plane curvature identity for the bending skew field") {
    Gen g(15);
    for (int n = 0; n < 100; ++n) {
        // A = anti((0, 0, theta(x1, x2))) with arbitrary in-plane gradient
        const double t1 = g.normal(), t2 = g.normal();
        MatrixGradient d{};
        d[0] = anti({0.0, 0.0, t1});
        d[1] = anti({0.0, 0.0, t2});
        const Tensor3 C = curl_from_gradient(d);
        const double c2 = norm2(C);
        CHECK(std::abs(norm2(devsym(C)) - 0.5 * c2) <= 1e-13 * (1 + c2));
        CHECK(std::abs(norm2(skew(C)) - 0.5 * c2) <= 1e-13 * (1 + c2));
        CHECK(std::abs(trace(C)) <= 1e-13);
    }
}

TEST_CASE("Curl of a gradient field vanishes") {
    Gen g(16);
    for (int n = 0; n < 50; ++n) {
        // P = D u for u quadratic: dP_ij/dx_k = H_ijk symmetric in j, k
        MatrixGradient d{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = j; k < 3; ++k) {
                    const double v = g.normal();
                    d[k](i, j) = v;
                    d[j](i, k) = v;
                }
        CHECK(max_abs(curl_from_gradient(d)) <= 1e-15);
    }
}

TEST_CASE("Levi-Civita symbol") {
    CHECK(levi_civita(0, 1, 2) == 1.0);
    CHECK(levi_civita(1, 0, 2) == -1.0);
    CHECK(levi_civita(2, 0, 1) == 1.0);
    CHECK(levi_civita(0, 0, 2) == 0.0);
}

}
