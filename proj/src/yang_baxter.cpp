#include "gbg/yang_baxter.hpp"

#include <random>
#include <sstream>

#include "json.hpp"

namespace gbg {

void RMatrix::validate() const {
    require(d >= 2, "local dimension must be at least 2");
    require(m.rows() == d * d && m.cols() == d * d, "R-matrix must be d^2 x d^2");
    CMatrix err = m.adjoint() * m - CMatrix::Identity(d * d, d * d);
    require(err.norm() <= tolerance, "R-matrix is not unitary within tolerance");
}

RMatrix swap_matrix(int d) {
    RMatrix r;
    r.d = d;
    r.m = CMatrix::Zero(d * d, d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) r.m(j * d + i, i * d + j) = 1.0;
    return r;
}

RMatrix identity_matrix(int d) {
    RMatrix r;
    r.d = d;
    r.m = CMatrix::Identity(d * d, d * d);
    return r;
}

RMatrix phase_swap(int d, double theta) {
    RMatrix r = swap_matrix(d);
    r.m *= std::exp(std::complex<double>(0.0, theta));
    return r;
}

RMatrix random_unitary(int d, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    int N = d * d;
    CMatrix a(N, N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) a(i, j) = std::complex<double>(g(rng), g(rng));
    Eigen::HouseholderQR<CMatrix> qr(a);
    CMatrix q = qr.householderQ();
    // normalize phases along the diagonal of R for determinism
    CMatrix rm = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < N; ++i) {
        std::complex<double> v = rm(i, i);
        if (std::abs(v) > 1e-14) q.col(i) *= v / std::abs(v);
    }
    RMatrix r;
    r.d = d;
    r.m = q;
    return r;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

double yb_residual(const RMatrix& r) {
    r.validate();
    CMatrix id = CMatrix::Identity(r.d, r.d);
    CMatrix r1 = kron(r.m, id);
    CMatrix r2 = kron(id, r.m);
    return (r1 * r2 * r1 - r2 * r1 * r2).norm();
}

double mixed_yb_residual(const RMatrix& r, const RMatrix& rp, const RMatrix& rpp) {
    r.validate();
    rp.validate();
    rpp.validate();
    require(r.d == rp.d && r.d == rpp.d, "mixed residual needs equal local dimensions");
    CMatrix id = CMatrix::Identity(r.d, r.d);
    CMatrix lhs = kron(r.m, id) * kron(id, rp.m) * kron(rpp.m, id);
    CMatrix rhs = kron(id, rpp.m) * kron(rp.m, id) * kron(id, r.m);
    return (lhs - rhs).norm();
}

namespace {

CMatrix embed(const CMatrix& m, int d, int n, int slot) {
    // 1^{x slot} x m x 1^{x (n - slot - 2)}
    CMatrix out = CMatrix::Identity(1, 1);
    int i = 0;
    while (i < slot) {
        out = kron(out, CMatrix::Identity(d, d));
        ++i;
    }
    out = kron(out, m);
    i += 2;
    while (i < n) {
        out = kron(out, CMatrix::Identity(d, d));
        ++i;
    }
    return out;
}

} // namespace

BraidRepReport braid_rep_check(int n, const RMatrix& r, const RMatrix& rp, const RMatrix& rpp) {
    require(n >= 3, "braid representation check needs n >= 3");
    int d = r.d;
    double dim = std::pow(static_cast<double>(d), n);
    require(dim <= 243.0 + 0.5, "size guard: d^n must stay at or below 243");
    require(r.d == rp.d && r.d == rpp.d, "equal local dimensions required");
    r.validate();
    rp.validate();
    rpp.validate();

    auto U = [&](const RMatrix& m, int i) { return embed(m.m, d, n, i - 1); };
    BraidRepReport rep;
    auto add = [&](const std::string& name, const CMatrix& lhs, const CMatrix& rhs) {
        double dist = (lhs - rhs).norm();
        rep.entries.push_back({name, dist});
        rep.max_distance = std::max(rep.max_distance, dist);
    };
    // Mixed pseudo-braid relators per adjacent index pair:
    // sigma_i^{12} sigma_{i+1}^{13} sigma_i^{23} = sigma_{i+1}^{23}
    // sigma_i^{13} sigma_{i+1}^{12}.
    for (int i = 1; i + 1 <= n - 1; ++i) {
        std::ostringstream nm;
        nm << "mixed-braid[i=" << i << "]";
        add(nm.str(), U(r, i) * U(rp, i + 1) * U(rpp, i), U(rpp, i + 1) * U(rp, i) * U(r, i + 1));
    }
    // Commutation relators for |i - j| >= 2, all three assignments.
    const RMatrix* mats[3] = {&r, &rp, &rpp};
    const char* tags[3] = {"R", "R'", "R''"};
    for (int i = 1; i <= n - 1; ++i) {
        for (int j = i + 2; j <= n - 1; ++j) {
            for (int ai = 0; ai < 3; ++ai)
                for (int aj = 0; aj < 3; ++aj) {
                    std::ostringstream nm;
                    nm << "commute[" << tags[ai] << i << "," << tags[aj] << j << "]";
                    add(nm.str(), U(*mats[ai], i) * U(*mats[aj], j),
                        U(*mats[aj], j) * U(*mats[ai], i));
                }
        }
    }
    return rep;
}

std::string mixed_scan_csv(int d, int steps) {
    std::ostringstream os;
    os << "theta1,theta2,theta3,residual\n";
    const double pi = 3.14159265358979323846;
    for (int i = 0; i < steps; ++i)
        for (int j = 0; j < steps; ++j)
            for (int k = 0; k < steps; ++k) {
                double t1 = 2 * pi * i / steps, t2 = 2 * pi * j / steps, t3 = 2 * pi * k / steps;
                double res = mixed_yb_residual(phase_swap(d, t1), phase_swap(d, t2),
                                               phase_swap(d, t3));
                os << t1 << "," << t2 << "," << t3 << "," << res << "\n";
            }
    return os.str();
}

std::string rmatrix_to_json(const RMatrix& r) {
    nlohmann::ordered_json j;
    j["d"] = r.d;
    std::vector<std::vector<double>> re, im;
    for (int i = 0; i < r.m.rows(); ++i) {
        std::vector<double> rrow, irow;
        for (int k = 0; k < r.m.cols(); ++k) {
            rrow.push_back(r.m(i, k).real());
            irow.push_back(r.m(i, k).imag());
        }
        re.push_back(rrow);
        im.push_back(irow);
    }
    j["re"] = re;
    j["im"] = im;
    return j.dump(2);
}

RMatrix rmatrix_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw input_error(std::string("bad matrix JSON: ") + e.what());
    }
    require(j.contains("d") && j.contains("re") && j.contains("im"),
            "matrix JSON needs d, re, im");
    RMatrix r;
    r.d = j["d"].get<int>();
    int N = r.d * r.d;
    auto re = j["re"], im = j["im"];
    require(static_cast<int>(re.size()) == N && static_cast<int>(im.size()) == N,
            "matrix JSON has wrong dimensions");
    r.m = CMatrix(N, N);
    for (int i = 0; i < N; ++i) {
        require(static_cast<int>(re[i].size()) == N && static_cast<int>(im[i].size()) == N,
                "matrix JSON has ragged rows");
        for (int k = 0; k < N; ++k)
            r.m(i, k) = std::complex<double>(re[i][k].get<double>(), im[i][k].get<double>());
    }
    return r;
}

} // namespace gbg
