#include "tb/heckoid.hpp"

#include "tb/errors.hpp"

#include <cmath>

namespace tb {

const char* heckoid_family_name(HeckoidFamily f) noexcept {
    switch (f) {
    case HeckoidFamily::M0: return "M0";
    case HeckoidFamily::M1: return "M1";
    case HeckoidFamily::M2: return "M2";
    }
    return "UnknownFamily";
}

const char* parabolic_locus_name(ParabolicLocus l) noexcept {
    switch (l) {
    case ParabolicLocus::TwoAnnuli: return "TwoAnnuli";
    case ParabolicLocus::OneAnnulus: return "OneAnnulus";
    case ParabolicLocus::TwoD22: return "TwoD22";
    }
    return "UnknownLocus";
}

const char* heckoid_isom_name(HeckoidIsom g) noexcept {
    switch (g) {
    case HeckoidIsom::Z2xZ2: return "Z2xZ2";
    case HeckoidIsom::Z2: return "Z2";
    }
    return "UnknownIsom";
}

const char* heckoid_edge_name(HeckoidEdge e) noexcept {
    switch (e) {
    case HeckoidEdge::LinkOrJ1: return "link_or_J1";
    case HeckoidEdge::J2: return "J2";
    case HeckoidEdge::TauPlus: return "tau_plus";
    case HeckoidEdge::TauMinus: return "tau_minus";
    }
    return "UnknownEdge";
}

Slope hat_r(const Slope& r) {
    if (r.is_infinity() || r.num() <= 0 || r.num() >= r.den()) {
        raise(errc::out_of_range, "hat needs 0 < q < p, got " + r.str());
    }
    const Int& p = r.den();
    const Int& q = r.num();
    if (is_odd(p)) {
        return is_even(q) ? Slope(q / 2, p) : Slope((p + q) / 2, p);
    }
    return Slope(q, p / 2);
}

namespace {

// The hat rule applied to the residue of an arbitrary finite slope; for
// integral r this still renormalizes within Z (the Fuchsian case).
Slope hat_of_any(const Slope& r) {
    if (r.den() == 1) {
        const Int& k = r.num();
        Int half = is_even(k) ? Int(k / 2) : Int((k + 1) / 2);
        return Slope(half, Int(1));
    }
    return hat_r(Slope(residue_class(r), r.den()));
}

} // namespace

HeckoidDescriptor heckoid_descriptor(const Slope& r, long long twice_n) {
    if (r.is_infinity()) {
        raise(errc::infinity_input, "heckoid descriptor of infinity");
    }
    if (twice_n < 3) {
        raise(errc::invalid_index,
              "heckoid index must satisfy 2n >= 3, got 2n = " +
                  std::to_string(twice_n));
    }
    HeckoidDescriptor d;
    d.fuchsian_degenerate = r.is_integer();
    if (twice_n % 2 == 0) {
        long long n = twice_n / 2;
        d.family = HeckoidFamily::M0;
        d.slope = r;
        d.index = n;
        d.weights = {{HeckoidEdge::LinkOrJ1, true, 0},
                     {HeckoidEdge::TauMinus, false, n}};
        d.locus = ParabolicLocus::TwoAnnuli;
        d.isom = HeckoidIsom::Z2xZ2;
        if (d.fuchsian_degenerate) {
            d.degenerate_note = "Fuchsian: S2(" + std::to_string(n) +
                                ",inf,inf) x I, index-2 subgroup of the "
                                "Hecke group H(" + std::to_string(2 * n) + ")";
        }
    } else {
        long long m = twice_n; // odd, >= 3
        d.slope = hat_of_any(r);
        d.index = m;
        if (is_odd(r.den())) {
            d.family = HeckoidFamily::M1;
            d.weights = {{HeckoidEdge::LinkOrJ1, true, 0},
                         {HeckoidEdge::J2, false, 2},
                         {HeckoidEdge::TauMinus, false, m}};
            d.locus = ParabolicLocus::OneAnnulus;
        } else {
            d.family = HeckoidFamily::M2;
            d.weights = {{HeckoidEdge::LinkOrJ1, true, 0},
                         {HeckoidEdge::J2, false, 2},
                         {HeckoidEdge::TauPlus, false, 2},
                         {HeckoidEdge::TauMinus, false, m}};
            d.locus = ParabolicLocus::TwoD22;
        }
        d.isom = HeckoidIsom::Z2;
        if (d.fuchsian_degenerate) {
            d.degenerate_note = "Fuchsian: S2(2," + std::to_string(m) +
                                ",inf) x I, the Hecke group H(" +
                                std::to_string(m) + ")";
        }
    }
    return d;
}

HeckoidReport heckoid_classification(const Slope& r, long long twice_n) {
    HeckoidReport report;
    report.descriptor = heckoid_descriptor(r, twice_n);
    report.unique_pair = true;
    switch (report.descriptor.family) {
    case HeckoidFamily::M0: report.figure_type = 2; break;
    case HeckoidFamily::M1: report.figure_type = 3; break;
    case HeckoidFamily::M2: report.figure_type = 4; break;
    }
    report.notes.push_back(
        "the group has a unique parabolic generating pair up to equivalence");
    if (report.descriptor.fuchsian_degenerate) {
        report.notes.push_back(
            "integral slope: " + report.descriptor.degenerate_note +
            "; the unique pair is conjugate to {A_m, Q A_m Q^-1} with m = " +
            std::to_string(twice_n));
    }
    return report;
}

Mat2d mat2_mul(const Mat2d& x, const Mat2d& y) {
    Mat2d out{};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            out[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
        }
    }
    return out;
}

Mat2d mat2_pow(const Mat2d& x, int e) {
    Mat2d out{{{1.0, 0.0}, {0.0, 1.0}}};
    for (int i = 0; i < e; ++i) {
        out = mat2_mul(out, x);
    }
    return out;
}

double mat2_trace(const Mat2d& x) { return x[0][0] + x[1][1]; }

HeckeMatrices hecke_matrices(int m) {
    if (m < 3) {
        raise(errc::index_too_small, "Hecke index must be >= 3");
    }
    double lambda = 2.0 * std::cos(M_PI / static_cast<double>(m));
    return {Mat2d{{{1.0, lambda}, {0.0, 1.0}}},
            Mat2d{{{0.0, 1.0}, {-1.0, 0.0}}}, m};
}

} // namespace tb
