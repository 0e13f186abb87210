#include "flagmorph/witness.hpp"

#include <random>
#include <stdexcept>

namespace flagmorph::witness {

using linalg::Mat;
using linalg::Rat;
using linalg::Vec;

SymplecticSpace::SymplecticSpace(int k_value) : k(k_value) {
    if (k < 0) throw std::invalid_argument("SymplecticSpace: k must be nonnegative");
}

Mat SymplecticSpace::form() const {
    Mat j(dimension(), dimension());
    for (int t = 0; t < k + 1; ++t) {
        j.at(2 * t, 2 * t + 1) = 1;
        j.at(2 * t + 1, 2 * t) = -1;
    }
    return j;
}

WitnessPair symplectic_witness(int k, const Vec& x) {
    SymplecticSpace space(k);
    if (static_cast<int>(x.size()) != space.dimension())
        throw std::invalid_argument("symplectic_witness: vector has the wrong dimension");
    bool nonzero = false;
    for (const Rat& entry : x)
        if (entry != 0) { nonzero = true; break; }
    if (!nonzero) throw std::invalid_argument("symplectic_witness: zero vector spans no line");

    Mat j = space.form();
    Vec covector(x.size(), Rat(0));
    for (int c = 0; c < j.cols(); ++c) {
        Rat sum(0);
        for (int r = 0; r < j.rows(); ++r) sum += x[static_cast<std::size_t>(r)] * j.at(r, c);
        covector[static_cast<std::size_t>(c)] = sum;
    }
    return {x, covector};
}

Mat hyperplane_basis(const Vec& covector) {
    int dim = static_cast<int>(covector.size());
    int pivot = -1;
    for (int i = 0; i < dim; ++i)
        if (covector[static_cast<std::size_t>(i)] != 0) { pivot = i; break; }
    if (pivot < 0) throw std::invalid_argument("hyperplane_basis: zero covector");
    std::vector<Vec> columns;
    for (int jcol = 0; jcol < dim; ++jcol) {
        if (jcol == pivot) continue;
        Vec v(static_cast<std::size_t>(dim), Rat(0));
        v[static_cast<std::size_t>(jcol)] = 1;
        v[static_cast<std::size_t>(pivot)] =
            -covector[static_cast<std::size_t>(jcol)] / covector[static_cast<std::size_t>(pivot)];
        columns.push_back(std::move(v));
    }
    return Mat::from_columns(dim, columns);
}

namespace {

// Columns e_1..e_d of the ambient space.
Mat standard_flag_member(int ambient_dim, int d) {
    Mat m(ambient_dim, d);
    for (int c = 0; c < d; ++c) m.at(c, c) = 1;
    return m;
}

// Sends a slot vector (coordinates i-1 .. i+m-1) into the ambient space.
Vec lift_slot_vector(int ambient_dim, int slot_offset, const Vec& v) {
    Vec out(static_cast<std::size_t>(ambient_dim), Rat(0));
    for (std::size_t idx = 0; idx < v.size(); ++idx)
        out[static_cast<std::size_t>(slot_offset) + idx] = v[idx];
    return out;
}

}  // namespace

FlagPoint embed_in_fiber(int n, int i, int m, const Vec& x) {
    if (m < 3 || m % 2 != 1)
        throw std::invalid_argument("embed_in_fiber: m must be odd and at least 3");
    if (!(1 < i && i < n - m + 3))
        throw std::invalid_argument("embed_in_fiber: need 1 < i < n-m+3");
    if (static_cast<int>(x.size()) != m + 1)
        throw std::invalid_argument("embed_in_fiber: point must have m+1 coordinates");

    const int ambient = n + 1;
    const int k = (m - 1) / 2;
    // slot spans coordinates i-1 .. i+m-1 (1-based), i.e. rows i-2 .. i+m-2
    const int slot_offset = i - 2;

    WitnessPair pair = symplectic_witness(k, x);
    Mat line_basis = Mat::from_columns(ambient, {lift_slot_vector(ambient, slot_offset, pair.line)});
    Mat plane_slot = hyperplane_basis(pair.covector);
    std::vector<Vec> plane_columns;
    for (int c = 0; c < plane_slot.cols(); ++c)
        plane_columns.push_back(lift_slot_vector(ambient, slot_offset, plane_slot.column(c)));
    Mat plane_basis = Mat::from_columns(ambient, plane_columns);

    Mat base = standard_flag_member(ambient, i - 2);  // W_{i-2}, empty when i == 2

    FlagPoint point;
    point.ambient_dim = ambient;
    for (int d = 1; d <= n; ++d) {
        bool marked = d < i || d > i + m - 3;
        if (!marked) continue;
        point.dims.push_back(d);
        if (d == i - 1) {
            point.bases.push_back(base.hstack(line_basis));
        } else if (d == i + m - 2) {
            point.bases.push_back(base.hstack(plane_basis));
        } else {
            point.bases.push_back(standard_flag_member(ambient, d));
        }
    }
    return point;
}

bool verify_flag_point(const chow::FlagVariety& fv, const FlagPoint& point) {
    if (point.dims != fv.dims) return false;
    if (point.ambient_dim != fv.n + 1) return false;
    if (point.bases.size() != point.dims.size()) return false;
    for (std::size_t idx = 0; idx < point.dims.size(); ++idx) {
        const Mat& basis = point.bases[idx];
        if (basis.rows() != point.ambient_dim) return false;
        if (basis.cols() != point.dims[idx]) return false;
        if (basis.rank() != point.dims[idx]) return false;
    }
    for (std::size_t idx = 0; idx + 1 < point.dims.size(); ++idx) {
        const Mat& inner = point.bases[idx];
        const Mat& outer = point.bases[idx + 1];
        if (inner.hstack(outer).rank() != point.dims[idx + 1]) return false;
    }
    return true;
}

bool distinct_flag_points(const FlagPoint& a, const FlagPoint& b) {
    if (a.dims != b.dims || a.ambient_dim != b.ambient_dim) return true;
    for (std::size_t idx = 0; idx < a.bases.size(); ++idx)
        if (!linalg::span_equal(a.bases[idx], b.bases[idx])) return true;
    return false;
}

bool nonconstancy_check(int k) {
    SymplecticSpace space(k);
    Vec e1(static_cast<std::size_t>(space.dimension()), Rat(0));
    Vec e3 = e1;
    e1[0] = 1;
    e3[2] = 1;
    WitnessPair p = symplectic_witness(k, e1);
    WitnessPair q = symplectic_witness(k, e3);
    Mat lp = Mat::from_columns(space.dimension(), {p.line});
    Mat lq = Mat::from_columns(space.dimension(), {q.line});
    return !linalg::span_equal(lp, lq);
}

bool nonconstancy_check_composed(int n, int i, int m) {
    Vec e1(static_cast<std::size_t>(m) + 1, Rat(0));
    Vec e3 = e1;
    e1[0] = 1;
    e3[2] = 1;
    return distinct_flag_points(embed_in_fiber(n, i, m, e1), embed_in_fiber(n, i, m, e3));
}

namespace {

// mt19937_64 with plain modulo mapping: the stream is specified by the
// standard, so seeded runs are reproducible across platforms.
long long draw_int(std::mt19937_64& rng, long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

Rat draw_rational(std::mt19937_64& rng) {
    mpz_class num = to_int(draw_int(rng, -9, 9));
    mpz_class den = to_int(draw_int(rng, 1, 6));
    Rat value(num, den);
    value.canonicalize();
    return value;
}

Vec draw_point(std::mt19937_64& rng, int dim) {
    while (true) {
        Vec v(static_cast<std::size_t>(dim));
        bool nonzero = false;
        for (Rat& entry : v) {
            entry = draw_rational(rng);
            entry.canonicalize();
            if (entry != 0) nonzero = true;
        }
        if (nonzero) return v;
    }
}

}  // namespace

SampleReport sample_verification(int n, int i, int m, int samples, unsigned long long seed) {
    if (samples < 1) throw std::invalid_argument("sample_verification: need at least one sample");
    const int k = (m - 1) / 2;
    SymplecticSpace space(k);
    chow::FlagVariety fv = chow::to_flag_variety(chow::ConsecutiveComplementForm{n, m, i});
    std::mt19937_64 rng(seed);

    SampleReport report;
    report.samples = samples;
    report.all_valid = true;
    report.linearity_ok = true;
    report.scaling_ok = true;
    for (int s = 0; s < samples; ++s) {
        Vec x = draw_point(rng, space.dimension());
        FlagPoint image = embed_in_fiber(n, i, m, x);
        if (!verify_flag_point(fv, image)) report.all_valid = false;

        Vec y = draw_point(rng, space.dimension());
        Vec sum(x.size());
        for (std::size_t idx = 0; idx < x.size(); ++idx) sum[idx] = x[idx] + y[idx];
        Vec cx = symplectic_witness(k, x).covector;
        Vec cy = symplectic_witness(k, y).covector;
        bool sum_nonzero = false;
        for (const Rat& entry : sum)
            if (entry != 0) { sum_nonzero = true; break; }
        if (sum_nonzero) {
            Vec csum = symplectic_witness(k, sum).covector;
            for (std::size_t idx = 0; idx < csum.size(); ++idx)
                if (csum[idx] != cx[idx] + cy[idx]) report.linearity_ok = false;
        }
        if (linalg::pair(cx, x) != 0) report.linearity_ok = false;

        Rat lambda(0);
        while (lambda == 0) lambda = draw_rational(rng);
        Vec scaled(x.size());
        for (std::size_t idx = 0; idx < x.size(); ++idx) scaled[idx] = lambda * x[idx];
        Vec cscaled = symplectic_witness(k, scaled).covector;
        for (std::size_t idx = 0; idx < cscaled.size(); ++idx)
            if (cscaled[idx] != lambda * cx[idx]) report.linearity_ok = false;
        if (distinct_flag_points(image, embed_in_fiber(n, i, m, scaled))) report.scaling_ok = false;
    }
    return report;
}

}  // namespace flagmorph::witness
