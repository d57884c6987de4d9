#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace mv2 {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A point of Z^n or an integer covector; its length is the ambient dimension.
using IntVector = std::vector<BigInt>;

/// Integer matrix stored as a list of rows.
using IntMatrix = std::vector<IntVector>;

/// Rational vector / matrix, used by the exact linear-algebra kernels.
using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;

inline void check_same_dim(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("mixed-dimension vector arithmetic");
}

inline IntVector add(const IntVector& a, const IntVector& b) {
    check_same_dim(a, b);
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline IntVector sub(const IntVector& a, const IntVector& b) {
    check_same_dim(a, b);
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline IntVector scale(const BigInt& c, const IntVector& a) {
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline BigInt dot(const IntVector& a, const IntVector& b) {
    check_same_dim(a, b);
    BigInt s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rational qdot(const QVector& a, const IntVector& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("mixed-dimension vector arithmetic");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * Rational(b[i]);
    return s;
}

inline bool is_zero(const IntVector& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

/// Divide out the gcd of the entries (primitive representative of the ray
/// through a). The zero vector is returned unchanged.
inline IntVector primitive(IntVector a) {
    BigInt g = 0;
    for (const auto& x : a) g = boost::multiprecision::gcd(g, x);
    if (g > 1)
        for (auto& x : a) x /= g;
    return a;
}

}  // namespace mv2
