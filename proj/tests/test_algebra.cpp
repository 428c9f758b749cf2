#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <random>

#include "rieszkit/linalg.hpp"
#include "rieszkit/matrix.hpp"

using namespace rieszkit;
using Catch::Approx;

namespace {

template <class S>
S random_scalar(std::mt19937_64& gen) {
    std::normal_distribution<double> dist(0.0, 1.0);
    std::array<double, 4> c{0, 0, 0, 0};
    for (int i = 0; i < algebra_traits<S>::beta; ++i) c[i] = dist(gen);
    return algebra_traits<S>::from_components(c);
}

template <class S>
Matrix<S> random_matrix(int rows, int cols, std::mt19937_64& gen) {
    Matrix<S> m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = random_scalar<S>(gen);
    return m;
}

template <class S>
Matrix<S> random_hpd(int n, std::mt19937_64& gen) {
    Matrix<S> b = random_matrix<S>(n + 2, n, gen);
    Matrix<S> p = b.adjoint() * b;
    for (int i = 0; i < n; ++i) p(i, i) = p(i, i) + algebra_traits<S>::from_real(0.5);
    return symmetrized(p);
}

} // namespace

TEST_CASE("conjugate transpose definition and involution") {
    // 1x1 quaternion [(1,2,3,4)] -> [(1,-2,-3,-4)]
    Matrix<Quaternion> q(1, 1);
    q(0, 0) = Quaternion(1, 2, 3, 4);
    auto qt = conj_transpose(q);
    CHECK(qt(0, 0) == Quaternion(1, -2, -3, -4));

    // complex [[i]] -> [[-i]]
    Matrix<std::complex<double>> c(1, 1);
    c(0, 0) = {0.0, 1.0};
    CHECK(conj_transpose(c)(0, 0) == std::complex<double>(0.0, -1.0));

    // identity fixed point
    auto id = Matrix<double>::identity(2);
    CHECK(conj_transpose(id) == id);

    std::mt19937_64 gen(7);
    auto m = random_matrix<Quaternion>(3, 2, gen);
    CHECK(conj_transpose(conj_transpose(m)) == m);
}

TEST_CASE("scalar norm is multiplicative") {
    std::mt19937_64 gen(11);
    for (int rep = 0; rep < 200; ++rep) {
        auto a = random_scalar<Quaternion>(gen);
        auto b = random_scalar<Quaternion>(gen);
        CHECK(abs(a * b) == Approx(abs(a) * abs(b)).epsilon(1e-14).margin(1e-14));
        auto ca = random_scalar<std::complex<double>>(gen);
        auto cb = random_scalar<std::complex<double>>(gen);
        CHECK(std::abs(ca * cb) ==
              Approx(std::abs(ca) * std::abs(cb)).epsilon(1e-14).margin(1e-14));
    }
}

TEST_CASE("quaternion multiplication is associative") {
    std::mt19937_64 gen(13);
    for (int rep = 0; rep < 100; ++rep) {
        auto a = random_scalar<Quaternion>(gen);
        auto b = random_scalar<Quaternion>(gen);
        auto c = random_scalar<Quaternion>(gen);
        auto lhs = (a * b) * c;
        auto rhs = a * (b * c);
        CHECK(abs(lhs - rhs) < 1e-12);
    }
}

TEMPLATE_TEST_CASE("cholesky reconstructs the input", "", double, std::complex<double>,
                   Quaternion) {
    std::mt19937_64 gen(17);
    for (int n : {1, 2, 3, 6}) {
        auto p = random_hpd<TestType>(n, gen);
        auto l = cholesky_lower(p);
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j)
                CHECK(algebra_traits<TestType>::abs_sq(l(i, j)) == 0.0);
            CHECK(algebra_traits<TestType>::real(l(i, i)) > 0.0);
        }
        auto delta = l * l.adjoint() - p;
        CHECK(delta.frobenius_norm() <= 1e-10 * p.frobenius_norm());
    }
}

TEST_CASE("cholesky trivial cases and failure") {
    auto id = Matrix<double>::identity(3);
    CHECK((cholesky_lower(id) - id).frobenius_norm() == 0.0);

    Matrix<double> s(1, 1);
    s(0, 0) = 4.0;
    CHECK(cholesky_lower(s)(0, 0) == Approx(2.0));

    Matrix<double> neg(2, 2);
    neg(0, 0) = 1.0;
    neg(1, 1) = -1.0;
    CHECK_THROWS_AS(cholesky_lower(neg), NotPositiveDefinite);
}

TEMPLATE_TEST_CASE("pd_sqrt squares back to the input", "", double, std::complex<double>,
                   Quaternion) {
    std::mt19937_64 gen(23);
    for (int n : {1, 2, 4}) {
        auto p = random_hpd<TestType>(n, gen);
        auto s = pd_sqrt(p);
        CHECK(is_hermitian(s, 1e-10));
        auto delta = s * s - p;
        CHECK(delta.frobenius_norm() <= 1e-10 * p.frobenius_norm());
    }
}

TEST_CASE("pd_sqrt diagonal case") {
    Matrix<double> d(2, 2);
    d(0, 0) = 4.0;
    d(1, 1) = 9.0;
    auto s = pd_sqrt(d);
    CHECK(s(0, 0) == Approx(2.0));
    CHECK(s(1, 1) == Approx(3.0));
    CHECK(s(0, 1) == Approx(0.0).margin(1e-14));
}

TEST_CASE("hermitian eigenvalues on simple cases") {
    auto id = Matrix<double>::identity(4);
    for (double v : hermitian_eigenvalues(id)) CHECK(v == Approx(1.0));

    Matrix<double> d(2, 2);
    d(0, 0) = 3.0;
    d(1, 1) = 1.0;
    auto vals = hermitian_eigenvalues(d);
    CHECK(vals[0] == Approx(3.0));
    CHECK(vals[1] == Approx(1.0));

    Matrix<double> asym(2, 2);
    asym(0, 1) = 1.0;
    CHECK_THROWS_AS(hermitian_eigenvalues(asym), NotHermitian);
}

TEST_CASE("quaternion hermitian eigenvalues match embedding oracle") {
    // 2x2 quaternion Hermitian with off-diagonal j-part
    Matrix<Quaternion> h(2, 2);
    h(0, 0) = Quaternion(2);
    h(1, 1) = Quaternion(1);
    h(0, 1) = Quaternion(0, 0, 1, 0);
    h(1, 0) = Quaternion(0, 0, -1, 0);
    auto vals = hermitian_eigenvalues(h);

    // oracle: eigenvalues of the 4x4 complex embedding, deduplicated
    auto emb = detail::to_eigen_complex(h);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(emb, Eigen::EigenvaluesOnly);
    std::vector<double> raw(solver.eigenvalues().data(), solver.eigenvalues().data() + 4);
    std::sort(raw.begin(), raw.end(), std::greater<double>());
    CHECK(vals[0] == Approx(raw[0]).epsilon(1e-12));
    CHECK(vals[0] == Approx(raw[1]).epsilon(1e-12));
    CHECK(vals[1] == Approx(raw[2]).epsilon(1e-12));
    CHECK(vals[1] == Approx(raw[3]).epsilon(1e-12));

    // analytic check: eigenvalues of [[2, j],[-j, 1]] are (3 +- sqrt(5))/2
    CHECK(vals[0] == Approx(0.5 * (3 + std::sqrt(5.0))).epsilon(1e-12));
    CHECK(vals[1] == Approx(0.5 * (3 - std::sqrt(5.0))).epsilon(1e-12));
}

TEST_CASE("quaternion complex embedding is a homomorphism") {
    Matrix<Quaternion> one(1, 1), iq(1, 1);
    one(0, 0) = Quaternion(1);
    iq(0, 0) = Quaternion(0, 1, 0, 0);
    auto e1 = quaternion_complex_embedding(one);
    CHECK(e1(0, 0) == std::complex<double>(1, 0));
    CHECK(e1(1, 1) == std::complex<double>(1, 0));
    CHECK(e1(0, 1) == std::complex<double>(0, 0));
    auto ei = quaternion_complex_embedding(iq);
    CHECK(ei(0, 0) == std::complex<double>(0, 1));
    CHECK(ei(1, 1) == std::complex<double>(0, -1));
    CHECK(ei(0, 1) == std::complex<double>(0, 0));

    std::mt19937_64 gen(29);
    for (int rep = 0; rep < 20; ++rep) {
        auto a = random_matrix<Quaternion>(2, 2, gen);
        auto b = random_matrix<Quaternion>(2, 2, gen);
        auto lhs = quaternion_complex_embedding(a * b);
        auto rhs = quaternion_complex_embedding(a) * quaternion_complex_embedding(b);
        CHECK((lhs - rhs).frobenius_norm() <= 1e-12 * (1.0 + rhs.frobenius_norm()));
        auto lhs2 = quaternion_complex_embedding(a.adjoint());
        auto rhs2 = quaternion_complex_embedding(a).adjoint();
        CHECK((lhs2 - rhs2).frobenius_norm() == 0.0);
    }
}

TEMPLATE_TEST_CASE("leading minors agree with per-minor eigenvalue products", "", double,
                   std::complex<double>, Quaternion) {
    std::mt19937_64 gen(31);
    auto p = random_hpd<TestType>(3, gen);
    auto minors = leading_minor_dets(p);
    REQUIRE(minors.size() == 3);
    for (int q = 1; q <= 3; ++q) {
        Matrix<TestType> block(q, q);
        for (int i = 0; i < q; ++i)
            for (int j = 0; j < q; ++j) block(i, j) = p(i, j);
        double prod = 1.0;
        for (double v : hermitian_eigenvalues(block)) prod *= v;
        CHECK(minors[q - 1] == Approx(prod).epsilon(1e-10));
    }
    // product of eigenvalues of the full matrix = last minor
    double prod = 1.0;
    for (double v : hermitian_eigenvalues(p)) prod *= v;
    CHECK(minors.back() == Approx(prod).epsilon(1e-10));
}

TEST_CASE("leading minors on diagonal input") {
    Matrix<double> d(2, 2);
    d(0, 0) = 2.0;
    d(1, 1) = 5.0;
    auto minors = leading_minor_dets(d);
    CHECK(minors[0] == Approx(2.0));
    CHECK(minors[1] == Approx(10.0));

    auto id3 = Matrix<double>::identity(3);
    for (double v : leading_minor_dets(id3)) CHECK(v == Approx(1.0));
}

TEST_CASE("HermitianPD ingestion symmetrizes and validates") {
    std::mt19937_64 gen(37);
    auto p = random_hpd<std::complex<double>>(3, gen);
    // inject last-bit asymmetry
    p(0, 1) += std::complex<double>(1e-15, 0);
    HermitianPD<std::complex<double>> h(p);
    CHECK(is_hermitian(h.mat(), 0.0));

    Matrix<double> bad(2, 2);
    bad(0, 1) = 1.0;
    CHECK_THROWS_AS(HermitianPD<double>(bad), NotHermitian);

    Matrix<double> neg = Matrix<double>::identity(2);
    neg(1, 1) = -2.0;
    CHECK_THROWS_AS(HermitianPD<double>(neg), NotPositiveDefinite);
}

TEMPLATE_TEST_CASE("hpd solve and inverse", "", double, std::complex<double>, Quaternion) {
    std::mt19937_64 gen(41);
    auto p = random_hpd<TestType>(3, gen);
    auto inv = hpd_inverse(p);
    auto delta = p * inv - Matrix<TestType>::identity(3);
    CHECK(delta.frobenius_norm() < 1e-10);
}
