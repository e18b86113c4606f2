#pragma once

#include <string>
#include <vector>

#include "p2mnf/beilinson.hpp"
#include "p2mnf/kronecker.hpp"
#include "p2mnf/quivercore.hpp"

namespace p2mnf {

enum class Rationality { Rational, StablyRational, RetractRational, Unknown };
const char* to_cstring(Rationality r);

enum class ReduSide { SocleOuter, TopOuter };
const char* to_cstring(ReduSide s);

// Snapshot of the reduction state machine.  The inner pair is a Kronecker
// problem over Q(t): inner.x copies of the top type on inner.y copies of the
// socle type, with t = -euler(top, socle).
struct ReductionState {
    DimVec3 outer_type;
    long long outer_mult = 0;
    DimVec3 socle_type, top_type;
    DimVec2 inner;
    long long t = 0;
    ReduSide side = ReduSide::SocleOuter;
};

struct ReductionStep {
    ReductionState before;
    KronDecomp decomp;
    bool terminal = false;
};

struct ReductionReport {
    DimVec3 alpha;
    long long h = 0;           // matrix size, = gcd(alpha)
    long long matrix_count = 0;
    std::vector<ReductionStep> steps;
    std::vector<std::string> warnings;
};

// Warning appended while the trivial-endomorphism hypothesis is uncertified.
extern const char* const kHypothesisWarning;

// Runs the two-step Kronecker reduction on dimension-vector state until the
// inner problem is reducible to matrix normal form.  Total on alpha >= 0.
ReductionReport reduce(DimVec3 alpha);

// s with s h^2 - (h^2 - 1) = 1 - euler(alpha, alpha), i.e.
// s = 1 - euler(alpha/h, alpha/h).
long long matrix_count(DimVec3 alpha, long long h);

// Rational for h <= 4; stably rational when h | 420; retract rational when h
// is squarefree; strongest applicable label wins.
Rationality rationality_class(long long h);

struct ClassificationReport {
    ChernData chern;
    TwistNorm twist;
    long long depth = 0;
    ReductionReport reduction;
    Rationality rationality = Rationality::Unknown;
};

// normalize_twist -> reduce -> matrix_count -> rationality_class.
ClassificationReport classify(ChernData ch);

}  // namespace p2mnf
