#pragma once

#include "tb/slope.hpp"

#include <array>
#include <string>
#include <vector>

namespace tb {

// Heckoid orbifold families. A group index n in (1/2)N is carried as the
// exact integer 2n; integral n selects M0, half-integral n selects M1 or
// M2 by the parity of the denominator of r.
enum class HeckoidFamily { M0, M1, M2 };
enum class ParabolicLocus { TwoAnnuli, OneAnnulus, TwoD22 };
enum class HeckoidIsom { Z2xZ2, Z2 };

const char* heckoid_family_name(HeckoidFamily f) noexcept;
const char* parabolic_locus_name(ParabolicLocus l) noexcept;
const char* heckoid_isom_name(HeckoidIsom g) noexcept;

enum class HeckoidEdge { LinkOrJ1, J2, TauPlus, TauMinus };

const char* heckoid_edge_name(HeckoidEdge e) noexcept;

struct HeckoidWeight {
    HeckoidEdge edge;
    bool infinite;  // weight infinity (the parabolic locus)
    long long value; // meaningful when not infinite
};

struct HeckoidDescriptor {
    HeckoidFamily family;
    Slope slope;     // r for M0, hat_r for M1/M2
    long long index; // n (>= 2) for M0, odd m (>= 3) for M1/M2
    std::vector<HeckoidWeight> weights;
    ParabolicLocus locus;
    HeckoidIsom isom;
    bool fuchsian_degenerate; // r integral
    std::string degenerate_note;
};

// The renormalized slope selecting the half-integer-index family:
// (q/2)/p for p odd, q even; ((p+q)/2)/p for p odd, q odd; q/(p/2) for
// p even. Requires 0 < q < p.
Slope hat_r(const Slope& r);

HeckoidDescriptor heckoid_descriptor(const Slope& r, long long twice_n);

struct HeckoidReport {
    HeckoidDescriptor descriptor;
    bool unique_pair; // always true
    int figure_type;  // 2 for M0, 3 for M1, 4 for M2
    std::vector<std::string> notes;
};

HeckoidReport heckoid_classification(const Slope& r, long long twice_n);

using Mat2d = std::array<std::array<double, 2>, 2>;

Mat2d mat2_mul(const Mat2d& x, const Mat2d& y);
Mat2d mat2_pow(const Mat2d& x, int e);
double mat2_trace(const Mat2d& x);

// The classical Hecke pair: A_m = [[1, 2cos(pi/m)], [0, 1]] and
// Q = [[0, 1], [-1, 0]]; Q*A_m is elliptic of order 2m, so the m-th
// power of Q*A_m is plus or minus the identity.
struct HeckeMatrices {
    Mat2d a_m;
    Mat2d q;
    int m;
};

HeckeMatrices hecke_matrices(int m);

} // namespace tb
