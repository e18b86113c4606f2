#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "p2mnf/exactlin.hpp"
#include "p2mnf/kronecker.hpp"
#include "p2mnf/quivercore.hpp"

namespace p2mnf {

// Multiplication table of sigma: k^3 (x) k^3 -> S^2(k^3) in the fixed
// monomial order x^2, xy, xz, y^2, yz, z^2.
int sigma_mu(int i, int j);

// Basis of ker(sigma): e_i (x) e_j - e_j (x) e_i for i < j.
struct KernelPair {
    int i, j;
};
const std::array<KernelPair, 3>& sigma_kernel_pairs();

// Representation of the multiplication sigma, in matrix form.  The relation
// (A12[j] A01[i] = A02[mu(i,j)] for all i,j) is enforced at construction.
struct BeilinsonRep {
    FieldSpec field;
    DimVec3 dim;
    std::vector<ExactMat> a01;  // 3 matrices, b x a
    std::vector<ExactMat> a12;  // 3 matrices, c x b
    std::vector<ExactMat> a02;  // 6 matrices, c x a
};

BeilinsonRep make_rep(const FieldSpec& field, DimVec3 dim,
                      std::vector<ExactMat> a01, std::vector<ExactMat> a12,
                      std::vector<ExactMat> a02);

// All structure maps zero (always a valid representation).
BeilinsonRep beilinson_zero(DimVec3 dim, const FieldSpec& field);
BeilinsonRep beilinson_simple(int vertex, const FieldSpec& field);

// P(0) = O = (k k^3 S^2 k^3), P(1) = O(-1) = (0 k k^3), P(2) = O(-2) = (0 0 k).
BeilinsonRep canonical_projective(int i, const FieldSpec& field);

// Sheaf invariants (r, c1, c2) on P^2.
struct ChernData {
    long long r = 1, c1 = 0, c2 = 0;
};

struct TwistNorm {
    long long t = 0;
    DimVec3 alpha;
};

struct NatCoh {
    long long h0 = 0, h1 = 0, h2 = 0;
};

// chi(E(j)) by Riemann-Roch; exact integer arithmetic.
long long chi_twist(ChernData ch, long long j);

// At most one cohomology group is nonzero; which one is decided by the sign
// of chi and the position of j relative to the normalizing twist.
NatCoh natural_cohomology(ChernData ch, long long j);

// The unique t with chi(E(t-1)) < 0 <= chi(E(t)) at the upper crossing of the
// quadratic; throws NoValidTwist when chi(E(j)) >= 0 for every integer j.
TwistNorm normalize_twist(ChernData ch);

long long depth_alpha(DimVec3 alpha);
long long depth_chern(ChernData ch);

// Inverse dictionary: Beilinson dimension vector at twist t back to Chern data.
ChernData alpha_to_chern(DimVec3 alpha, long long t);

// Uniform point of the left general component (Lemma-style cokernel
// construction); requires a <= b and a prime field.
BeilinsonRep sample_left_general(DimVec3 alpha, const FieldSpec& field,
                                 std::uint64_t seed);

// Injectivity of R(0) (x) K -> R(1) (x) V certifies membership in the left
// general component.
bool is_left_general(const BeilinsonRep& r);

// dim of triples (f0, f1, f2) commuting with all A01, A12, A02 blocks.
long long hom_dim(const BeilinsonRep& r, const BeilinsonRep& s);

struct ExtDims {
    long long ext1 = 0, ext2 = 0;
};

// Ext via the canonical projective resolution of r.
ExtDims ext_dims(const BeilinsonRep& r, const BeilinsonRep& s);

struct SheafCheck {
    bool is_sheaf = false;
    long long fiber_rank = 0;
};

// Probabilistic: evaluates the sheaf complex at `trials` random points of P^2
// and checks both fiber maps have the exact ranks a sheaf forces.  One-sided:
// may accept a complex whose failure locus misses every sample.
SheafCheck rep_is_sheaf(const BeilinsonRep& r, int trials, std::uint64_t seed);

// - (x) (S + S') for the pair ((0,1,0),(1,0,0)) with t = 3: a Q(3)
// representation of dimension (n m) becomes a (n m 0) representation.
BeilinsonRep kronecker_inflate(const KroneckerRep& k);

}  // namespace p2mnf
