#ifndef GBG_YANG_BAXTER_HPP
#define GBG_YANG_BAXTER_HPP

#include <Eigen/Dense>

#include <complex>
#include <string>
#include <vector>

#include "gbg/common.hpp"

namespace gbg {

using CMatrix = Eigen::MatrixXcd;

// Unitary operator on C^d (x) C^d stored densely.
struct RMatrix {
    int d = 2;
    CMatrix m; // d^2 x d^2
    double tolerance = 1e-9;

    void validate() const; // unitarity within tolerance
};

RMatrix swap_matrix(int d);
RMatrix identity_matrix(int d);
RMatrix random_unitary(int d, unsigned long long seed); // on C^{d^2}
RMatrix phase_swap(int d, double theta);                // e^{i theta} * SWAP

CMatrix kron(const CMatrix& a, const CMatrix& b);

// || (R x 1)(1 x R)(R x 1) - (1 x R)(R x 1)(1 x R) ||_F on C^{d^3}.
double yb_residual(const RMatrix& r);

// || (R x 1)(1 x R')(R'' x 1) - (1 x R'')(R' x 1)(1 x R) ||_F.
double mixed_yb_residual(const RMatrix& r, const RMatrix& rp, const RMatrix& rpp);

// Representation check on (C^d)^{x n}: U_i(M) = 1 x..x M_{i,i+1} x..x 1 with
// R for sigma^{1,2}, R' for sigma^{1,3}, R'' for sigma^{2,3}; evaluates the
// mixed pseudo-braid and commutation relators of the quotient presentation.
struct BraidRepReport {
    struct Entry {
        std::string relator;
        double distance;
    };
    std::vector<Entry> entries;
    double max_distance = 0.0;
};
BraidRepReport braid_rep_check(int n, const RMatrix& r, const RMatrix& rp, const RMatrix& rpp);

// Parameter scan over the phase-SWAP family; rows (t1, t2, t3, residual).
std::string mixed_scan_csv(int d, int steps);

// JSON (de)serialization of the matrix file format {"d":..,"re":..,"im":..}.
std::string rmatrix_to_json(const RMatrix& r);
RMatrix rmatrix_from_json(const std::string& text);

} // namespace gbg

#endif
