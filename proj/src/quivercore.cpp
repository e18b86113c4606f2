#include "p2mnf/quivercore.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace p2mnf {

long long gcd2(long long a, long long b) { return std::gcd(a, b); }

long long gcd3(long long a, long long b, long long c) {
    return std::gcd(std::gcd(a, b), c);
}

long long gcd_dim(DimVec2 d) { return gcd2(d.x, d.y); }

long long gcd_dim(DimVec3 d) { return gcd3(d.a, d.b, d.c); }

long long euler_kronecker(long long u, DimVec2 alpha, DimVec2 beta) {
    return alpha.x * beta.x + alpha.y * beta.y - u * alpha.x * beta.y;
}

long long euler_beilinson(DimVec3 alpha, DimVec3 beta) {
    return alpha.a * beta.a + alpha.b * beta.b + alpha.c * beta.c
           - 3 * (alpha.a * beta.b + alpha.b * beta.c) + 3 * alpha.a * beta.c;
}

long long tits_q(long long u, DimVec2 d) {
    return d.x * d.x + d.y * d.y - u * d.x * d.y;
}

std::string to_string(DimVec2 d) {
    return std::to_string(d.x) + "," + std::to_string(d.y);
}

std::string to_string(DimVec3 d) {
    return std::to_string(d.a) + "," + std::to_string(d.b) + "," + std::to_string(d.c);
}

namespace {

std::vector<long long> parse_csv_ints(const std::string& s, std::size_t n) {
    std::vector<long long> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("bad integer: " + tok);
        out.push_back(v);
    }
    if (out.size() != n)
        throw std::invalid_argument("expected " + std::to_string(n) +
                                    " comma-separated integers: " + s);
    return out;
}

}  // namespace

DimVec2 parse_dimvec2(const std::string& s) {
    auto v = parse_csv_ints(s, 2);
    return {v[0], v[1]};
}

DimVec3 parse_dimvec3(const std::string& s) {
    auto v = parse_csv_ints(s, 3);
    return {v[0], v[1], v[2]};
}

}  // namespace p2mnf
