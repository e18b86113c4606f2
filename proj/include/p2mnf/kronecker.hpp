#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "p2mnf/exactlin.hpp"
#include "p2mnf/quivercore.hpp"

namespace p2mnf {

// Representation of the u-arrow Kronecker quiver: u matrices of shape
// dim.y x dim.x over the field.
struct KroneckerRep {
    FieldSpec field;
    long long u = 1;
    DimVec2 dim;
    std::vector<ExactMat> mats;
};

KroneckerRep make_kron_rep(const FieldSpec& field, long long u, DimVec2 dim,
                           std::vector<ExactMat> mats);

enum class KronVerdict { MnfSchur, MnfSquare, MnfTrivial, Rigid };
enum class KronSide { Preprojective, Preinjective, None };

const char* to_cstring(KronVerdict v);
const char* to_cstring(KronSide s);

// Outcome of the canonical-decomposition decision procedure for a general
// representation of dimension d over Q(u).
struct KronDecomp {
    KronVerdict verdict = KronVerdict::MnfTrivial;
    long long mnf_type = 0;   // set for the three Mnf* verdicts
    KronSide side = KronSide::None;
    long long m = 0;          // index of the lower summand
    long long mult_low = 0, mult_high = 0;
    DimVec2 dim_low, dim_high;
};

// Preprojective dimension vectors: d0 = (0,1), d1 = (1,u),
// d_{m+1} = u d_m - d_{m-1}.  Requires u >= 2.
DimVec2 preproj_dims(long long u, long long m);

// Decision procedure for the general representation of dimension d over Q(u).
KronDecomp kron_decompose(long long u, DimVec2 d);

// u matrices with independently uniform entries; prime fields only;
// deterministic in (u, d, field, seed).
KroneckerRep kron_sample(long long u, DimVec2 d, const FieldSpec& field,
                         std::uint64_t seed);

// dim of { (f0, f1) : f1 R_i = S_i f0 for all i }.
long long kron_hom_dim(const KroneckerRep& r, const KroneckerRep& s);

// ext as the corank of the same linear system (hereditary, no ext^2).
long long kron_ext_dim(const KroneckerRep& r, const KroneckerRep& s);

// The (a a) matrix-normal-form family over Q(2): mats = [ I_a, p ].
KroneckerRep mnf_family_q2(long long a, const ExactMat& p);

// Canonical P0 = (0 k) and P1 = (k U).
KroneckerRep kron_proj0(long long u, const FieldSpec& field);
KroneckerRep kron_proj1(long long u, const FieldSpec& field);

// Generic endomorphism dimension predicted by the decomposition.
long long predicted_end_dim(const KronDecomp& dec, long long u);

}  // namespace p2mnf
