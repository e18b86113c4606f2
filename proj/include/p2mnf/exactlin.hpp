#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "p2mnf/common.hpp"
#include "p2mnf/rng.hpp"

namespace p2mnf {

using Rat = boost::multiprecision::cpp_rational;

bool is_prime(std::int64_t n);

// The coefficient field: Q or F_p with p prime, p >= 5.
struct FieldSpec {
    enum class Kind { Rationals, PrimeField };

    Kind kind = Kind::Rationals;
    std::int64_t modulus = 0;  // set iff PrimeField

    static FieldSpec rationals() { return FieldSpec{Kind::Rationals, 0}; }
    static FieldSpec prime(std::int64_t p);  // throws InvalidModulus

    bool is_prime_field() const { return kind == Kind::PrimeField; }
    bool operator==(const FieldSpec&) const = default;
};

// Dense matrix with exact entries.  Prime-field entries are stored as
// canonical representatives in [0, p); rationals are arbitrary precision.
// Zero rows or columns are allowed everywhere.
class ExactMat {
public:
    ExactMat() = default;

    static ExactMat zeros(const FieldSpec& f, int rows, int cols);
    static ExactMat identity(const FieldSpec& f, int n);
    static ExactMat from_ints(const FieldSpec& f, int rows, int cols,
                              const std::vector<long long>& vals);
    // Independently uniform entries; prime fields only.
    static ExactMat random(const FieldSpec& f, int rows, int cols, Rng& rng);

    const FieldSpec& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int r, int c, long long v);          // reduced into the field
    void set_rat(int r, int c, const Rat& v);     // rationals only
    void set_from_string(int r, int c, const std::string& s);

    std::int64_t fp_at(int r, int c) const;       // prime field only
    Rat rat_at(int r, int c) const;               // rationals only
    bool entry_is_zero(int r, int c) const;
    std::string entry_string(int r, int c) const;

    // In-field accumulation; used by the linear-system builder.
    void add_unit(int r, int c, bool negate = false);
    void add_entry(int r, int c, const ExactMat& a, int ar, int ac,
                   bool negate = false);
    void add_product(int r, int c, const ExactMat& a, int ar, int ac,
                     const ExactMat& b, int br, int bc, bool negate = false);

    ExactMat transpose() const;
    ExactMat operator*(const ExactMat& rhs) const;
    ExactMat operator+(const ExactMat& rhs) const;
    ExactMat operator-(const ExactMat& rhs) const;
    bool operator==(const ExactMat& rhs) const;

    bool is_zero() const;

    int rank() const;
    ExactMat nullspace() const;
    std::optional<ExactMat> solve(const ExactMat& b) const;

private:
    FieldSpec field_ = FieldSpec::rationals();
    int rows_ = 0, cols_ = 0;
    std::vector<std::int64_t> fp_;  // used iff prime field
    std::vector<Rat> q_;            // used iff rationals

    std::size_t idx(int r, int c) const;
    void check_same(const ExactMat& rhs) const;
};

// Exact rank over the matrix field; deterministic pivoting (first nonzero in
// column order).
int mat_rank(const ExactMat& m);

// Columns form a basis of the right kernel; column count = cols - rank.
ExactMat mat_nullspace(const ExactMat& m);

// x with a*x = b when the system is consistent, nullopt otherwise.
std::optional<ExactMat> mat_solve(const ExactMat& a, const ExactMat& b);

}  // namespace p2mnf
