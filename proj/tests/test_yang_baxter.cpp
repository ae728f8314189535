#include "doctest.h"

#include "gbg/yang_baxter.hpp"

using namespace gbg;

TEST_CASE("SWAP and identity solve the Yang-Baxter equation") {
    for (int d = 2; d <= 4; ++d) {
        CHECK(yb_residual(swap_matrix(d)) <= 1e-12);
        CHECK(yb_residual(identity_matrix(d)) <= 1e-12);
    }
}

TEST_CASE("a seeded random unitary violates Yang-Baxter") {
    RMatrix r = random_unitary(2, 0x5eed2026);
    r.validate();
    CHECK(yb_residual(r) > 1e-6);
}

TEST_CASE("mixed residual degenerates to the pure residual on equal triples") {
    RMatrix s = swap_matrix(2);
    CHECK(mixed_yb_residual(s, s, s) == yb_residual(s)); // identical code path
    RMatrix r = random_unitary(2, 99);
    CHECK(mixed_yb_residual(r, r, r) == yb_residual(r));
}

TEST_CASE("global phase invariance of the pure residual") {
    RMatrix r = random_unitary(2, 7);
    double base = yb_residual(r);
    RMatrix scaled = r;
    scaled.m *= std::exp(std::complex<double>(0, 0.7));
    CHECK(std::abs(yb_residual(scaled) - base) <= 1e-10);
}

TEST_CASE("unitary conjugation invariance of the rep check") {
    RMatrix r = swap_matrix(2);
    RMatrix rp = phase_swap(2, 0.3);
    RMatrix rpp = phase_swap(2, 1.1);
    BraidRepReport a = braid_rep_check(3, r, rp, rpp);
    RMatrix v = random_unitary(2, 4242);
    // conjugate each slot by V (x) V where V acts on C^d: build from a d x d
    // unitary block of v? use a dedicated small unitary instead
    Eigen::MatrixXcd small = Eigen::MatrixXcd::Identity(2, 2);
    // rotate by an angle in the (0,1) plane with a phase
    small(0, 0) = std::complex<double>(std::cos(0.4), 0);
    small(0, 1) = std::complex<double>(-std::sin(0.4), 0.0);
    small(1, 0) = std::complex<double>(std::sin(0.4), 0.0);
    small(1, 1) = std::complex<double>(std::cos(0.4), 0);
    CMatrix vv = kron(small, small);
    auto conj = [&](const RMatrix& m) {
        RMatrix out = m;
        out.m = vv * m.m * vv.adjoint();
        return out;
    };
    BraidRepReport b = braid_rep_check(3, conj(r), conj(rp), conj(rpp));
    REQUIRE(a.entries.size() == b.entries.size());
    for (size_t i = 0; i < a.entries.size(); ++i)
        CHECK(std::abs(a.entries[i].distance - b.entries[i].distance) <= 1e-10);
}

TEST_CASE("SWAP triples satisfy every relator of the quotient for n <= 4") {
    RMatrix s = swap_matrix(2);
    for (int n = 3; n <= 4; ++n) {
        BraidRepReport rep = braid_rep_check(n, s, s, s);
        CHECK(rep.max_distance <= 1e-12);
    }
}

TEST_CASE("a mixed-YB-violating triple fails some relator") {
    RMatrix r = random_unitary(2, 11);
    RMatrix rp = random_unitary(2, 22);
    RMatrix rpp = random_unitary(2, 33);
    REQUIRE(mixed_yb_residual(r, rp, rpp) > 1e-6);
    BraidRepReport rep = braid_rep_check(3, r, rp, rpp);
    CHECK(rep.max_distance > 1e-6);
}

TEST_CASE("phase-SWAP diagonal family") {
    // residual identically zero along the diagonal (theta, theta, theta)
    for (double th : {0.0, 0.4, 1.3, 2.9}) {
        RMatrix r = phase_swap(2, th);
        CHECK(mixed_yb_residual(r, r, r) <= 1e-12);
    }
    std::string csv = mixed_scan_csv(2, 3);
    CHECK(csv.find("theta1,theta2,theta3,residual") == 0);
}

TEST_CASE("matrix JSON round trip") {
    RMatrix r = random_unitary(2, 5);
    RMatrix back = rmatrix_from_json(rmatrix_to_json(r));
    CHECK((back.m - r.m).norm() <= 1e-12);
    CHECK_THROWS_AS(rmatrix_from_json("{\"d\": 2}"), input_error);
}

TEST_CASE("size guard") {
    RMatrix s = swap_matrix(3);
    CHECK_THROWS_AS(braid_rep_check(6, s, s, s), input_error);
}
