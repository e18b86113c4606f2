#include "p2mnf/beilinson.hpp"

#include "p2mnf/linsys.hpp"

namespace p2mnf {

int sigma_mu(int i, int j) {
    // monomials: 0:x^2 1:xy 2:xz 3:y^2 4:yz 5:z^2
    static const int table[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
    return table[i][j];
}

const std::array<KernelPair, 3>& sigma_kernel_pairs() {
    static const std::array<KernelPair, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
    return pairs;
}

BeilinsonRep make_rep(const FieldSpec& field, DimVec3 dim,
                      std::vector<ExactMat> a01, std::vector<ExactMat> a12,
                      std::vector<ExactMat> a02) {
    if (dim.a < 0 || dim.b < 0 || dim.c < 0)
        throw MathError("InvalidInput", "negative dimension vector");
    if (a01.size() != 3 || a12.size() != 3 || a02.size() != 6)
        throw MathError("ShapeMismatch", "expected 3+3+6 structure matrices");
    auto check = [&](const ExactMat& m, long long rows, long long cols) {
        if (!(m.field() == field) || m.rows() != rows || m.cols() != cols)
            throw MathError("ShapeMismatch", "structure matrix has wrong shape or field");
    };
    for (const auto& m : a01) check(m, dim.b, dim.a);
    for (const auto& m : a12) check(m, dim.c, dim.b);
    for (const auto& m : a02) check(m, dim.c, dim.a);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (!(a12[std::size_t(j)] * a01[std::size_t(i)] ==
                  a02[std::size_t(sigma_mu(i, j))]))
                throw MathError("RelationViolated",
                                "relation fails at (i,j) = (" + std::to_string(i) +
                                    "," + std::to_string(j) + ")");
        }
    return BeilinsonRep{field, dim, std::move(a01), std::move(a12), std::move(a02)};
}

BeilinsonRep beilinson_zero(DimVec3 dim, const FieldSpec& field) {
    std::vector<ExactMat> a01(3, ExactMat::zeros(field, int(dim.b), int(dim.a)));
    std::vector<ExactMat> a12(3, ExactMat::zeros(field, int(dim.c), int(dim.b)));
    std::vector<ExactMat> a02(6, ExactMat::zeros(field, int(dim.c), int(dim.a)));
    return make_rep(field, dim, std::move(a01), std::move(a12), std::move(a02));
}

BeilinsonRep beilinson_simple(int vertex, const FieldSpec& field) {
    DimVec3 dim;
    if (vertex == 0) dim = {1, 0, 0};
    else if (vertex == 1) dim = {0, 1, 0};
    else if (vertex == 2) dim = {0, 0, 1};
    else throw MathError("InvalidInput", "vertex must be 0, 1 or 2");
    return beilinson_zero(dim, field);
}

BeilinsonRep canonical_projective(int i, const FieldSpec& field) {
    if (i == 2) return beilinson_zero({0, 0, 1}, field);
    if (i == 1) {
        // O(-1) = (0 k k^3): A12[j] = e_j.
        std::vector<ExactMat> a01(3, ExactMat::zeros(field, 1, 0));
        std::vector<ExactMat> a12;
        for (int j = 0; j < 3; ++j) {
            ExactMat e = ExactMat::zeros(field, 3, 1);
            e.set(j, 0, 1);
            a12.push_back(std::move(e));
        }
        std::vector<ExactMat> a02(6, ExactMat::zeros(field, 3, 0));
        return make_rep(field, {0, 1, 3}, std::move(a01), std::move(a12),
                        std::move(a02));
    }
    if (i != 0) throw MathError("InvalidInput", "projective index must be 0, 1 or 2");
    // O = (k k^3 S^2 k^3): A01[i] = e_i, A12[j] maps x_k to x_k x_j,
    // A02[w] = e_w.
    std::vector<ExactMat> a01, a12, a02;
    for (int k = 0; k < 3; ++k) {
        ExactMat e = ExactMat::zeros(field, 3, 1);
        e.set(k, 0, 1);
        a01.push_back(std::move(e));
    }
    for (int j = 0; j < 3; ++j) {
        ExactMat m = ExactMat::zeros(field, 6, 3);
        for (int k = 0; k < 3; ++k) m.set(sigma_mu(k, j), k, 1);
        a12.push_back(std::move(m));
    }
    for (int w = 0; w < 6; ++w) {
        ExactMat e = ExactMat::zeros(field, 6, 1);
        e.set(w, 0, 1);
        a02.push_back(std::move(e));
    }
    return make_rep(field, {1, 3, 6}, std::move(a01), std::move(a12), std::move(a02));
}

long long chi_twist(ChernData ch, long long j) {
    // 2 chi = 2r + 3(c1 + j r) + c1^2 - 2 c2 + 2 j c1 + j^2 r
    __int128 v = 2 * (__int128)ch.r + 3 * ((__int128)ch.c1 + (__int128)j * ch.r) +
                 (__int128)ch.c1 * ch.c1 - 2 * (__int128)ch.c2 +
                 2 * (__int128)j * ch.c1 + (__int128)j * j * ch.r;
    if (v % 2 != 0) throw MathError("InternalError", "chi is not an integer");
    v /= 2;
    if (v > INT64_MAX || v < INT64_MIN)
        throw MathError("Overflow", "chi exceeds 64 bits");
    return (long long)v;
}

namespace {

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

constexpr long long kTwistBound = 1000000;

}  // namespace

TwistNorm normalize_twist(ChernData ch) {
    if (ch.r < 1) throw MathError("RankNotPositive", "rank must be >= 1");
    // Vertex of the chi parabola is at -c1/r - 3/2; the integer minimum sits
    // at floor or ceil of it.
    long long jv = floor_div(-2 * ch.c1 - 3 * ch.r, 2 * ch.r);
    long long j_neg;
    if (chi_twist(ch, jv) < 0)
        j_neg = jv;
    else if (chi_twist(ch, jv + 1) < 0)
        j_neg = jv + 1;
    else
        throw MathError("NoValidTwist",
                        "chi(E(j)) >= 0 for all integers j; no normalizing twist");
    long long t = j_neg + 1;
    while (chi_twist(ch, t) < 0) {
        ++t;
        if (t > kTwistBound)
            throw MathError("TwistOutOfRange", "twist search exceeded |j| <= 10^6");
    }
    TwistNorm out;
    out.t = t;
    out.alpha = {chi_twist(ch, t), chi_twist(ch, t + 1), chi_twist(ch, t + 2)};
    if (out.alpha.a < 0 || out.alpha.b <= 0 || out.alpha.c <= 0)
        throw MathError("InternalError", "normalized alpha not admissible");
    return out;
}

NatCoh natural_cohomology(ChernData ch, long long j) {
    TwistNorm norm = normalize_twist(ch);
    long long chi = chi_twist(ch, j);
    NatCoh out;
    if (chi < 0)
        out.h1 = -chi;
    else if (j >= norm.t)
        out.h0 = chi;
    else
        out.h2 = chi;
    return out;
}

long long depth_alpha(DimVec3 alpha) { return gcd_dim(alpha); }

long long depth_chern(ChernData ch) {
    return gcd3(ch.r, ch.c1, chi_twist(ch, 0));
}

ChernData alpha_to_chern(DimVec3 alpha, long long t) {
    long long r = alpha.a - 2 * alpha.b + alpha.c;
    if (r < 1) throw MathError("RankNotPositive",
                               "derived rank " + std::to_string(r) + " is below 1");
    long long c1f = alpha.b - alpha.a - 2 * r;
    // c1f (c1f + 3) is always even
    long long c2f = r + (3 * c1f + c1f * c1f) / 2 - alpha.a;
    ChernData ch;
    ch.r = r;
    ch.c1 = c1f - t * r;
    ch.c2 = c2f - t * (r - 1) * c1f + r * (r - 1) / 2 * t * t;
    return ch;
}

BeilinsonRep sample_left_general(DimVec3 alpha, const FieldSpec& field,
                                 std::uint64_t seed) {
    if (!field.is_prime_field())
        throw MathError("PrimeFieldRequired", "sampling is defined over prime fields");
    if (alpha.a < 0 || alpha.b < 0 || alpha.c < 0)
        throw MathError("InvalidInput", "negative dimension vector");
    if (alpha.a > alpha.b)
        throw MathError("DimensionInfeasible",
                        "left general sampling needs a <= b, got " + to_string(alpha));
    if (alpha.a + alpha.b + alpha.c > 4000)
        throw MathError("InvalidInput", "dimension vector too large to sample");
    const int a = int(alpha.a), b = int(alpha.b), c = int(alpha.c);
    Rng rng(seed);
    for (int attempt = 0; attempt < 8; ++attempt) {
        std::vector<ExactMat> a01;
        for (int i = 0; i < 3; ++i)
            a01.push_back(ExactMat::random(field, b, a, rng));
        // M = (I_a (x) sigma, -(phi01 (x) I_V)) : k^{9a} -> k^{6a} + k^{3b};
        // column of r (x) e_i (x) e_j at (i*3+j)*a + r.
        ExactMat m = ExactMat::zeros(field, 6 * a + 3 * b, 9 * a);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int r = 0; r < a; ++r) {
                    int col = (i * 3 + j) * a + r;
                    m.set(sigma_mu(i, j) * a + r, col, 1);
                    for (int s = 0; s < b; ++s)
                        m.add_entry(6 * a + j * b + s, col, a01[std::size_t(i)], s, r,
                                    true);
                }
        if (mat_rank(m) != 9 * a) continue;
        // Cokernel presentation q (rows span the left kernel of M), then a
        // uniform map g out of the cokernel; A02 | A12 are the two blocks of
        // g q, which satisfies the relation by construction.
        ExactMat q = mat_nullspace(m.transpose()).transpose();
        ExactMat g = ExactMat::random(field, c, q.rows(), rng);
        ExactMat gq = g * q;
        std::vector<ExactMat> a02, a12;
        for (int w = 0; w < 6; ++w) {
            ExactMat blk = ExactMat::zeros(field, c, a);
            for (int row = 0; row < c; ++row)
                for (int r = 0; r < a; ++r)
                    blk.add_entry(row, r, gq, row, w * a + r, false);
            a02.push_back(std::move(blk));
        }
        for (int j = 0; j < 3; ++j) {
            ExactMat blk = ExactMat::zeros(field, c, b);
            for (int row = 0; row < c; ++row)
                for (int s = 0; s < b; ++s)
                    blk.add_entry(row, s, gq, row, 6 * a + j * b + s, false);
            a12.push_back(std::move(blk));
        }
        return make_rep(field, alpha, std::move(a01), std::move(a12), std::move(a02));
    }
    throw MathError("GenericityFailure",
                    "max-rank condition failed after 8 resamples at " + to_string(alpha));
}

bool is_left_general(const BeilinsonRep& rep) {
    const int a = int(rep.dim.a), b = int(rep.dim.b);
    if (a == 0) return true;
    // Columns indexed by kernel basis vectors tensored with R(0); the block
    // for e_i (x) e_j - e_j (x) e_i puts A01[i] into slot j and -A01[j] into
    // slot i.
    ExactMat m = ExactMat::zeros(rep.field, 3 * b, 3 * a);
    const auto& pairs = sigma_kernel_pairs();
    for (int k = 0; k < 3; ++k) {
        const int i = pairs[std::size_t(k)].i, j = pairs[std::size_t(k)].j;
        for (int r = 0; r < a; ++r) {
            int col = k * a + r;
            for (int s = 0; s < b; ++s) {
                m.add_entry(j * b + s, col, rep.a01[std::size_t(i)], s, r, false);
                m.add_entry(i * b + s, col, rep.a01[std::size_t(j)], s, r, true);
            }
        }
    }
    return mat_rank(m) == 3 * a;
}

long long hom_dim(const BeilinsonRep& r, const BeilinsonRep& s) {
    if (!(r.field == s.field)) throw MathError("FieldMismatch", "different fields");
    LinSys sys(r.field);
    int f0 = sys.add_var(int(s.dim.a), int(r.dim.a));
    int f1 = sys.add_var(int(s.dim.b), int(r.dim.b));
    int f2 = sys.add_var(int(s.dim.c), int(r.dim.c));
    for (int i = 0; i < 3; ++i) {
        sys.begin_eq(int(s.dim.b), int(r.dim.a));
        sys.add_term(f1, nullptr, &r.a01[std::size_t(i)], false);
        sys.add_term(f0, &s.a01[std::size_t(i)], nullptr, true);
    }
    for (int j = 0; j < 3; ++j) {
        sys.begin_eq(int(s.dim.c), int(r.dim.b));
        sys.add_term(f2, nullptr, &r.a12[std::size_t(j)], false);
        sys.add_term(f1, &s.a12[std::size_t(j)], nullptr, true);
    }
    for (int w = 0; w < 6; ++w) {
        sys.begin_eq(int(s.dim.c), int(r.dim.a));
        sys.add_term(f2, nullptr, &r.a02[std::size_t(w)], false);
        sys.add_term(f0, &s.a02[std::size_t(w)], nullptr, true);
    }
    return sys.nullity();
}

ExtDims ext_dims(const BeilinsonRep& r, const BeilinsonRep& s) {
    if (!(r.field == s.field)) throw MathError("FieldMismatch", "different fields");
    const long long aR = r.dim.a, bR = r.dim.b, cR = r.dim.c;
    const long long aS = s.dim.a, bS = s.dim.b, cS = s.dim.c;
    // Hom(-, s) applied to the projective resolution of r gives
    //   C0 = sum Hom(R(i), S(i))
    //   C1 = Hom(R(0), S(1))^3 + Hom(R(1), S(2))^3
    //   C2 = Hom(R(0), S(2))^3
    const long long dim_c0 = aR * aS + bR * bS + cR * cS;
    const long long dim_c1 = 3 * aR * bS + 3 * bR * cS;
    const long long dim_c2 = 3 * aR * cS;

    LinSys d0(r.field);
    {
        int g0 = d0.add_var(int(aS), int(aR));
        int g1 = d0.add_var(int(bS), int(bR));
        int g2 = d0.add_var(int(cS), int(cR));
        for (int i = 0; i < 3; ++i) {
            d0.begin_eq(int(bS), int(aR));
            d0.add_term(g1, nullptr, &r.a01[std::size_t(i)], false);
            d0.add_term(g0, &s.a01[std::size_t(i)], nullptr, true);
        }
        for (int j = 0; j < 3; ++j) {
            d0.begin_eq(int(cS), int(bR));
            d0.add_term(g2, nullptr, &r.a12[std::size_t(j)], false);
            d0.add_term(g1, &s.a12[std::size_t(j)], nullptr, true);
        }
    }
    const long long rank0 = d0.rank();

    LinSys d1(r.field);
    {
        std::array<int, 3> h1{}, h2{};
        for (int i = 0; i < 3; ++i) h1[std::size_t(i)] = d1.add_var(int(bS), int(aR));
        for (int j = 0; j < 3; ++j) h2[std::size_t(j)] = d1.add_var(int(cS), int(bR));
        for (const KernelPair& kp : sigma_kernel_pairs()) {
            const int i = kp.i, l = kp.j;
            d1.begin_eq(int(cS), int(aR));
            d1.add_term(h1[std::size_t(i)], &s.a12[std::size_t(l)], nullptr, false);
            d1.add_term(h1[std::size_t(l)], &s.a12[std::size_t(i)], nullptr, true);
            d1.add_term(h2[std::size_t(l)], nullptr, &r.a01[std::size_t(i)], false);
            d1.add_term(h2[std::size_t(i)], nullptr, &r.a01[std::size_t(l)], true);
        }
    }
    const long long rank1 = d1.rank();

    ExtDims out;
    out.ext1 = dim_c1 - rank0 - rank1;
    out.ext2 = dim_c2 - rank1;
    if (out.ext1 < 0 || out.ext2 < 0)
        throw MathError("InternalError", "negative ext dimension");
    return out;
}

SheafCheck rep_is_sheaf(const BeilinsonRep& rep, int trials, std::uint64_t seed) {
    if (!rep.field.is_prime_field())
        throw MathError("PrimeFieldRequired", "point sampling needs a prime field");
    if (trials < 1) throw MathError("InvalidInput", "trials must be >= 1");
    const int a = int(rep.dim.a), b = int(rep.dim.b), c = int(rep.dim.c);
    const std::int64_t p = rep.field.modulus;
    Rng rng(seed);
    const auto& pairs = sigma_kernel_pairs();
    for (int trial = 0; trial < trials; ++trial) {
        std::array<std::int64_t, 3> z{};
        do {
            for (auto& zi : z) zi = std::int64_t(rng.below(std::uint64_t(p)));
        } while (z[0] == 0 && z[1] == 0 && z[2] == 0);

        // First fiber map: R(0) (x) K -> R(0) (x) U + R(1) (x) V.
        ExactMat m1 = ExactMat::zeros(rep.field, 3 * a + 3 * b, 3 * a);
        for (int k = 0; k < 3; ++k) {
            const int i = pairs[std::size_t(k)].i, l = pairs[std::size_t(k)].j;
            for (int r = 0; r < a; ++r) {
                int col = k * a + r;
                m1.set(i * a + r, col, z[std::size_t(l)]);
                m1.set(l * a + r, col, -z[std::size_t(i)]);
                for (int s = 0; s < b; ++s) {
                    m1.add_entry(3 * a + l * b + s, col, rep.a01[std::size_t(i)], s, r,
                                 false);
                    m1.add_entry(3 * a + i * b + s, col, rep.a01[std::size_t(l)], s, r,
                                 true);
                }
            }
        }
        if (mat_rank(m1) != 3 * a) return {false, 0};

        // Second fiber map: R(0) (x) U + R(1) (x) V -> R(0) + R(1) + R(2).
        ExactMat m2 = ExactMat::zeros(rep.field, a + b + c, 3 * a + 3 * b);
        for (int i = 0; i < 3; ++i)
            for (int r = 0; r < a; ++r) {
                int col = i * a + r;
                m2.set(r, col, -z[std::size_t(i)]);
                for (int s = 0; s < b; ++s)
                    m2.add_entry(a + s, col, rep.a01[std::size_t(i)], s, r, false);
            }
        for (int j = 0; j < 3; ++j)
            for (int s = 0; s < b; ++s) {
                int col = 3 * a + j * b + s;
                m2.set(a + s, col, -z[std::size_t(j)]);
                for (int t = 0; t < c; ++t)
                    m2.add_entry(a + b + t, col, rep.a12[std::size_t(j)], t, s, false);
            }
        if (mat_rank(m2) != 3 * b) return {false, 0};
    }
    return {true, rep.dim.a + rep.dim.b + rep.dim.c - 3 * rep.dim.b};
}

BeilinsonRep kronecker_inflate(const KroneckerRep& k) {
    if (k.u != 3)
        throw MathError("ArrowMismatch", "inflation is defined for the 3-arrow quiver");
    DimVec3 dim{k.dim.x, k.dim.y, 0};
    std::vector<ExactMat> a01 = k.mats;
    std::vector<ExactMat> a12(3, ExactMat::zeros(k.field, 0, int(dim.b)));
    std::vector<ExactMat> a02(6, ExactMat::zeros(k.field, 0, int(dim.a)));
    return make_rep(k.field, dim, std::move(a01), std::move(a12), std::move(a02));
}

}  // namespace p2mnf
