#include "p2mnf/kronecker.hpp"

#include "p2mnf/linsys.hpp"

namespace p2mnf {

const char* to_cstring(KronVerdict v) {
    switch (v) {
        case KronVerdict::MnfSchur: return "MnfSchur";
        case KronVerdict::MnfSquare: return "MnfSquare";
        case KronVerdict::MnfTrivial: return "MnfTrivial";
        case KronVerdict::Rigid: return "Rigid";
    }
    return "?";
}

const char* to_cstring(KronSide s) {
    switch (s) {
        case KronSide::Preprojective: return "Preprojective";
        case KronSide::Preinjective: return "Preinjective";
        case KronSide::None: return "None";
    }
    return "?";
}

KroneckerRep make_kron_rep(const FieldSpec& field, long long u, DimVec2 dim,
                           std::vector<ExactMat> mats) {
    if (u < 1) throw MathError("InvalidInput", "arrow count must be positive");
    if (dim.x < 0 || dim.y < 0)
        throw MathError("InvalidInput", "negative dimension vector");
    if (mats.size() != std::size_t(u))
        throw MathError("ShapeMismatch", "expected one matrix per arrow");
    for (const ExactMat& m : mats) {
        if (!(m.field() == field) || m.rows() != dim.y || m.cols() != dim.x)
            throw MathError("ShapeMismatch", "arrow matrix has wrong shape or field");
    }
    return KroneckerRep{field, u, dim, std::move(mats)};
}

DimVec2 preproj_dims(long long u, long long m) {
    if (u < 2) throw MathError("InvalidInput", "preprojective recursion needs u >= 2");
    if (m < 0) throw MathError("InvalidInput", "negative preprojective index");
    DimVec2 prev{0, 1};
    if (m == 0) return prev;
    DimVec2 cur{1, u};
    for (long long i = 1; i < m; ++i) {
        DimVec2 next{u * cur.x - prev.x, u * cur.y - prev.y};
        if (next.y > (1LL << 60))
            throw MathError("Overflow", "preprojective dimensions exceed 64 bits");
        prev = cur;
        cur = next;
    }
    return cur;
}

namespace {

KronDecomp trivial_single(DimVec2 summand, long long mult, KronSide side,
                          long long m) {
    KronDecomp out;
    out.verdict = KronVerdict::MnfTrivial;
    out.mnf_type = mult * gcd_dim(summand);
    out.side = side;
    out.m = m;
    out.dim_low = summand;
    out.mult_low = mult;
    return out;
}

void check_bookkeeping(const KronDecomp& out, DimVec2 d) {
    DimVec2 sum = out.mult_low * out.dim_low + out.mult_high * out.dim_high;
    if (!(sum == d) || gcd2(out.mult_low, out.mult_high) != gcd_dim(d))
        throw MathError("InternalError",
                        "decomposition bookkeeping violated at " + to_string(d));
}

}  // namespace

KronDecomp kron_decompose(long long u, DimVec2 d) {
    if (u < 0 || d.x < 0 || d.y < 0)
        throw MathError("InvalidInput", "kron_decompose needs u >= 0 and d >= 0");
    const long long g = gcd_dim(d);

    if (u == 0) {
        // No arrows: the two simples, rigidly.
        if (d.x == 0 && d.y == 0) return trivial_single({0, 1}, 0, KronSide::None, 0);
        if (d.y == 0) return trivial_single({1, 0}, d.x, KronSide::None, 0);
        if (d.x == 0) return trivial_single({0, 1}, d.y, KronSide::None, 0);
        KronDecomp out;
        out.verdict = KronVerdict::Rigid;
        out.dim_low = {0, 1};
        out.mult_low = d.y;
        out.dim_high = {1, 0};
        out.mult_high = d.x;
        check_bookkeeping(out, d);
        return out;
    }

    if (d.x == 0 || d.y == 0) {
        if (d.x == 0 && d.y == 0) return trivial_single({0, 1}, 0, KronSide::None, 0);
        if (d.x == 0) return trivial_single({0, 1}, d.y, KronSide::None, 0);
        return trivial_single({1, 0}, d.x, KronSide::None, 0);
    }

    if (u == 1) {
        // P0 = (0 1), P1 = (1 1) = I1, I0 = (1 0).
        KronDecomp out;
        if (d.x < d.y) {
            out.verdict = KronVerdict::Rigid;
            out.side = KronSide::Preprojective;
            out.m = 0;
            out.dim_low = {0, 1};
            out.mult_low = d.y - d.x;
            out.dim_high = {1, 1};
            out.mult_high = d.x;
        } else if (d.x > d.y) {
            out.verdict = KronVerdict::Rigid;
            out.side = KronSide::Preinjective;
            out.m = 0;
            out.dim_low = {1, 0};
            out.mult_low = d.x - d.y;
            out.dim_high = {1, 1};
            out.mult_high = d.y;
        } else {
            return trivial_single({1, 1}, d.x, KronSide::None, 1);
        }
        check_bookkeeping(out, d);
        return out;
    }

    // u >= 2
    if (tits_q(u, d) <= 0) {
        KronDecomp out;
        if (u == 2) {
            // q <= 0 over Q(2) means x == y: the one-matrix family.
            out.verdict = KronVerdict::MnfSquare;
            out.mnf_type = d.x;
        } else {
            out.verdict = KronVerdict::MnfSchur;
            out.mnf_type = g;
        }
        return out;
    }

    // q >= 1: d sits in a unique sector between consecutive preprojective
    // (2x < uy) or preinjective (2x > uy) dimension vectors.
    const bool preproj = 2 * d.x < u * d.y;
    const DimVec2 v = preproj ? d : DimVec2{d.y, d.x};
    DimVec2 lo{0, 1};
    DimVec2 hi{1, u};
    const long long cap = 4 * (d.x + d.y) + 4;
    for (long long m = 0; m <= cap && lo.y <= v.y; ++m) {
        // det(lo, hi) = -1 for all m, so the solve is integral.
        const long long det = lo.x * hi.y - hi.x * lo.y;
        const long long c = (v.x * hi.y - hi.x * v.y) / det;
        const long long e = (lo.x * v.y - v.x * lo.y) / det;
        if (c >= 0 && e >= 0) {
            KronDecomp out;
            out.side = preproj ? KronSide::Preprojective : KronSide::Preinjective;
            out.m = m;
            out.dim_low = preproj ? lo : DimVec2{lo.y, lo.x};
            out.dim_high = preproj ? hi : DimVec2{hi.y, hi.x};
            out.mult_low = c;
            out.mult_high = e;
            if (c > 0 && e > 0) {
                out.verdict = KronVerdict::Rigid;
            } else {
                out.verdict = KronVerdict::MnfTrivial;
                out.mnf_type = g;
            }
            check_bookkeeping(out, d);
            return out;
        }
        DimVec2 next{u * hi.x - lo.x, u * hi.y - lo.y};
        lo = hi;
        hi = next;
    }
    throw MathError("IterationCap",
                    "failed to locate the decomposition sector for " + to_string(d));
}

KroneckerRep kron_sample(long long u, DimVec2 d, const FieldSpec& field,
                         std::uint64_t seed) {
    if (!field.is_prime_field())
        throw MathError("PrimeFieldRequired", "sampling is defined over prime fields");
    if (u < 1) throw MathError("InvalidInput", "arrow count must be positive");
    Rng rng(seed);
    std::vector<ExactMat> mats;
    mats.reserve(std::size_t(u));
    for (long long i = 0; i < u; ++i)
        mats.push_back(ExactMat::random(field, int(d.y), int(d.x), rng));
    return make_kron_rep(field, u, d, std::move(mats));
}

namespace {

LinSys kron_hom_system(const KroneckerRep& r, const KroneckerRep& s) {
    if (r.u != s.u) throw MathError("ArrowMismatch", "different arrow counts");
    if (!(r.field == s.field)) throw MathError("FieldMismatch", "different fields");
    LinSys sys(r.field);
    int f0 = sys.add_var(int(s.dim.x), int(r.dim.x));
    int f1 = sys.add_var(int(s.dim.y), int(r.dim.y));
    for (long long i = 0; i < r.u; ++i) {
        sys.begin_eq(int(s.dim.y), int(r.dim.x));
        sys.add_term(f1, nullptr, &r.mats[std::size_t(i)], false);
        sys.add_term(f0, &s.mats[std::size_t(i)], nullptr, true);
    }
    return sys;
}

}  // namespace

long long kron_hom_dim(const KroneckerRep& r, const KroneckerRep& s) {
    return kron_hom_system(r, s).nullity();
}

long long kron_ext_dim(const KroneckerRep& r, const KroneckerRep& s) {
    return kron_hom_system(r, s).corank();
}

KroneckerRep mnf_family_q2(long long a, const ExactMat& p) {
    if (p.rows() != p.cols() || p.rows() != a)
        throw MathError("ShapeMismatch", "family parameter must be a square a x a matrix");
    std::vector<ExactMat> mats;
    mats.push_back(ExactMat::identity(p.field(), int(a)));
    mats.push_back(p);
    return make_kron_rep(p.field(), 2, DimVec2{a, a}, std::move(mats));
}

KroneckerRep kron_proj0(long long u, const FieldSpec& field) {
    std::vector<ExactMat> mats(std::size_t(u), ExactMat::zeros(field, 1, 0));
    return make_kron_rep(field, u, DimVec2{0, 1}, std::move(mats));
}

KroneckerRep kron_proj1(long long u, const FieldSpec& field) {
    std::vector<ExactMat> mats;
    for (long long i = 0; i < u; ++i) {
        ExactMat e = ExactMat::zeros(field, int(u), 1);
        e.set(int(i), 0, 1);
        mats.push_back(std::move(e));
    }
    return make_kron_rep(field, u, DimVec2{1, u}, std::move(mats));
}

long long predicted_end_dim(const KronDecomp& dec, long long u) {
    switch (dec.verdict) {
        case KronVerdict::MnfSchur:
            return 1;
        case KronVerdict::MnfSquare:
            return dec.mnf_type;  // centralizer of a generic matrix
        case KronVerdict::MnfTrivial:
        case KronVerdict::Rigid: {
            long long c = dec.mult_low, d = dec.mult_high;
            return c * c + d * d + u * c * d;
        }
    }
    return 0;
}

}  // namespace p2mnf
