#pragma once

#include <string>

#include "p2mnf/common.hpp"

namespace p2mnf {

// Kronecker dimension vector (x y); x is the source vertex.
struct DimVec2 {
    long long x = 0, y = 0;
    bool operator==(const DimVec2&) const = default;
    friend DimVec2 operator+(DimVec2 a, DimVec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend DimVec2 operator*(long long k, DimVec2 v) { return {k * v.x, k * v.y}; }
};

// Beilinson dimension vector (a b c) = (dim R(0), dim R(1), dim R(2)).
struct DimVec3 {
    long long a = 0, b = 0, c = 0;
    bool operator==(const DimVec3&) const = default;
    friend DimVec3 operator+(DimVec3 u, DimVec3 v) {
        return {u.a + v.a, u.b + v.b, u.c + v.c};
    }
    friend DimVec3 operator*(long long k, DimVec3 v) {
        return {k * v.a, k * v.b, k * v.c};
    }
};

// gcd with gcd(0,0) = 0 and gcd(0,n) = n.
long long gcd2(long long a, long long b);
long long gcd3(long long a, long long b, long long c);
long long gcd_dim(DimVec2 d);
long long gcd_dim(DimVec3 d);

// Euler form of the u-arrow Kronecker quiver: x x' + y y' - u x y'.
long long euler_kronecker(long long u, DimVec2 alpha, DimVec2 beta);

// Euler form of the Beilinson category (3 arrows at each step, 3 relations).
long long euler_beilinson(DimVec3 alpha, DimVec3 beta);

// Tits form q(x,y) = x^2 + y^2 - u x y.
long long tits_q(long long u, DimVec2 d);

std::string to_string(DimVec2 d);
std::string to_string(DimVec3 d);
DimVec2 parse_dimvec2(const std::string& s);  // "x,y"
DimVec3 parse_dimvec3(const std::string& s);  // "a,b,c"

}  // namespace p2mnf
