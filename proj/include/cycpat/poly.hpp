#pragma once

#include "cycpat/bigint.hpp"

#include <compare>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace cycpat {

/// Exact integer polynomial in the single refinement marker y, dense storage.
/// Invariant: no trailing zero coefficients are stored.
class YPoly {
public:
    YPoly() = default;
    explicit YPoly(BigInt constant);
    YPoly(std::initializer_list<BigInt> coeffs_by_degree);

    static YPoly monomial(int deg, BigInt coeff = BigInt(1));
    static YPoly from_coeffs(std::vector<BigInt> coeffs);

    bool is_zero() const { return c_.empty(); }
    /// Degree, or -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    BigInt coeff(int deg) const;
    const std::vector<BigInt>& coeffs() const { return c_; }

    YPoly& operator+=(const YPoly& o);
    YPoly& operator-=(const YPoly& o);
    friend YPoly operator+(YPoly a, const YPoly& b) { a += b; return a; }
    friend YPoly operator-(YPoly a, const YPoly& b) { a -= b; return a; }
    friend YPoly operator*(const YPoly& a, const YPoly& b);

    YPoly scaled(const BigInt& k) const;
    /// Multiply by y^k (k >= 0).
    YPoly times_y(int k) const;
    YPoly negated() const { return scaled(BigInt(-1)); }

    /// Value at y = 1 (the scalar count underneath a refinement).
    BigInt at_one() const;

    /// y^n * p(1/y), an exact polynomial when degree() <= n.
    YPoly mirrored(int n) const;

    bool operator==(const YPoly& o) const = default;

    std::string str(const char* var = "y") const;

private:
    std::vector<BigInt> c_; // c_[d] = coefficient of y^d
    void normalize();
};

/// Exact integer polynomial in the markers x and y, sparse storage keyed by
/// (x-degree, y-degree).  Map order makes iteration deterministic.
class XYPoly {
public:
    using Key = std::pair<int, int>;
    using TermMap = std::map<Key, BigInt>;

    XYPoly() = default;
    explicit XYPoly(BigInt constant);
    explicit XYPoly(const YPoly& p, int xdeg = 0);

    static XYPoly monomial(int xdeg, int ydeg, BigInt coeff = BigInt(1));
    /// Build from (xdeg, ydeg, coeff) triples; duplicates accumulate.
    static XYPoly from_terms(std::initializer_list<std::tuple<int, int, long long>> terms);

    bool is_zero() const { return t_.empty(); }
    const TermMap& terms() const { return t_; }
    BigInt coeff(int xdeg, int ydeg) const;
    int max_xdeg() const;
    int max_ydeg() const;

    XYPoly& operator+=(const XYPoly& o);
    XYPoly& operator-=(const XYPoly& o);
    friend XYPoly operator+(XYPoly a, const XYPoly& b) { a += b; return a; }
    friend XYPoly operator-(XYPoly a, const XYPoly& b) { a -= b; return a; }
    friend XYPoly operator*(const XYPoly& a, const XYPoly& b);

    XYPoly scaled(const BigInt& k) const;
    /// Multiply by x^dx y^dy (dx, dy >= 0).
    XYPoly shifted(int dx, int dy) const;
    XYPoly negated() const { return scaled(BigInt(-1)); }

    /// Specialize x = 1, keeping y.
    YPoly at_x1() const;
    /// Value at x = y = 1.
    BigInt at_one_one() const;
    bool has_negative_coeff() const;

    bool operator==(const XYPoly& o) const = default;

    std::string str() const;

private:
    TermMap t_;
    void add_term(int xdeg, int ydeg, const BigInt& c);
    friend class XYPolyQ;
};

/// Rational-coefficient companion of XYPoly.  Series constructions that pass
/// through ordinary power-series coefficients (1/m! and friends) are carried
/// here and must clear to integers at the EgfSeq boundary.
class XYPolyQ {
public:
    using Key = std::pair<int, int>;
    using TermMap = std::map<Key, Rational>;

    XYPolyQ() = default;
    explicit XYPolyQ(Rational constant);
    explicit XYPolyQ(const XYPoly& p);

    static XYPolyQ monomial(int xdeg, int ydeg, Rational coeff);

    bool is_zero() const { return t_.empty(); }
    const TermMap& terms() const { return t_; }

    XYPolyQ& operator+=(const XYPolyQ& o);
    friend XYPolyQ operator+(XYPolyQ a, const XYPolyQ& b) { a += b; return a; }
    friend XYPolyQ operator*(const XYPolyQ& a, const XYPolyQ& b);
    XYPolyQ scaled(const Rational& k) const;

    /// Checked conversion; throws ExactnessError on any fractional coefficient.
    XYPoly to_integral() const;

private:
    TermMap t_;
    void add_term(int xdeg, int ydeg, const Rational& c);
};

} // namespace cycpat
