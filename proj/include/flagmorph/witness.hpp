#pragma once

#include <vector>

#include "flagmorph/chow.hpp"
#include "flagmorph/linalg.hpp"

namespace flagmorph::witness {

/// The (2k+2)-dimensional space carrying the standard symplectic form J with
/// 2x2 blocks [[0,1],[-1,0]] down the diagonal. J is alternating and
/// nondegenerate, so every line lies inside its own orthogonal hyperplane.
struct SymplecticSpace {
    int k = 0;

    explicit SymplecticSpace(int k_value);
    int dimension() const { return 2 * k + 2; }
    linalg::Mat form() const;
};

/// A line together with the defining covector of its symplectic orthogonal
/// hyperplane. Storing the hyperplane as one covector keeps the linear
/// dependence on x visible; a basis is materialized only for flag assembly.
struct WitnessPair {
    linalg::Vec line;      // spanning vector of L
    linalg::Vec covector;  // x^T J; its kernel is the hyperplane containing L
};

WitnessPair symplectic_witness(int k, const linalg::Vec& x);

/// Deterministic basis of ker(covector): for each coordinate other than the
/// first nonzero one, e_j - (c_j / c_p) e_p.
linalg::Mat hyperplane_basis(const linalg::Vec& covector);

/// A point of a flag variety: one basis matrix per marked dimension.
struct FlagPoint {
    int ambient_dim = 0;
    std::vector<int> dims;
    std::vector<linalg::Mat> bases;
};

/// Builds the image of a source point x under the line-to-orthogonal-pair
/// morphism placed inside one fiber of the forgetful projection: the flag
/// members at positions i-1 and i+m-2 come from the witness pair in the slot
/// spanned by coordinates i-1..i+m-1, every other member is the standard
/// coordinate flag. Requires odd m and 1 < i < n-m+3.
FlagPoint embed_in_fiber(int n, int i, int m, const linalg::Vec& x);

/// Checks every stated dimension against the matrix rank and every
/// consecutive containment by a rank test on the stacked bases.
bool verify_flag_point(const chow::FlagVariety& fv, const FlagPoint& point);

/// True when some member of the two flags has a different column span.
bool distinct_flag_points(const FlagPoint& a, const FlagPoint& b);

/// Two coordinate directions map to distinct lines, hence the morphism is
/// nonconstant. The plain form works in the (2k+2)-dimensional space; the
/// composed form goes through embed_in_fiber.
bool nonconstancy_check(int k);
bool nonconstancy_check_composed(int n, int i, int m);

/// Batch verification over seeded random rational source points: every image
/// must verify as a flag point, the covector map must be linear, and scaling
/// the source point must not move the image (projective well-definedness).
struct SampleReport {
    int samples = 0;
    bool all_valid = false;
    bool linearity_ok = false;
    bool scaling_ok = false;
    bool pass() const { return all_valid && linearity_ok && scaling_ok; }
};

SampleReport sample_verification(int n, int i, int m, int samples, unsigned long long seed);

}  // namespace flagmorph::witness
