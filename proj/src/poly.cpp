#include "cycpat/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace cycpat {

// ---------------------------------------------------------------- YPoly

YPoly::YPoly(BigInt constant)
{
    if (constant != 0)
        c_.push_back(std::move(constant));
}

YPoly::YPoly(std::initializer_list<BigInt> coeffs_by_degree)
    : c_(coeffs_by_degree)
{
    normalize();
}

YPoly YPoly::monomial(int deg, BigInt coeff)
{
    YPoly p;
    if (coeff != 0) {
        p.c_.assign(static_cast<size_t>(deg) + 1, BigInt(0));
        p.c_[static_cast<size_t>(deg)] = std::move(coeff);
    }
    return p;
}

YPoly YPoly::from_coeffs(std::vector<BigInt> coeffs)
{
    YPoly p;
    p.c_ = std::move(coeffs);
    p.normalize();
    return p;
}

void YPoly::normalize()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

BigInt YPoly::coeff(int deg) const
{
    if (deg < 0 || deg >= static_cast<int>(c_.size()))
        return 0;
    return c_[static_cast<size_t>(deg)];
}

YPoly& YPoly::operator+=(const YPoly& o)
{
    if (c_.size() < o.c_.size())
        c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    normalize();
    return *this;
}

YPoly& YPoly::operator-=(const YPoly& o)
{
    if (c_.size() < o.c_.size())
        c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    normalize();
    return *this;
}

YPoly operator*(const YPoly& a, const YPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return YPoly{};
    YPoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0)
            continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.normalize();
    return r;
}

YPoly YPoly::scaled(const BigInt& k) const
{
    if (k == 0)
        return YPoly{};
    YPoly r = *this;
    for (auto& c : r.c_)
        c *= k;
    return r;
}

YPoly YPoly::times_y(int k) const
{
    if (is_zero() || k == 0)
        return *this;
    YPoly r;
    r.c_.assign(c_.size() + static_cast<size_t>(k), BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i)
        r.c_[i + static_cast<size_t>(k)] = c_[i];
    return r;
}

BigInt YPoly::at_one() const
{
    BigInt s = 0;
    for (const auto& c : c_)
        s += c;
    return s;
}

YPoly YPoly::mirrored(int n) const
{
    if (degree() > n)
        throw std::invalid_argument("YPoly::mirrored: degree exceeds mirror order");
    YPoly r;
    r.c_.assign(static_cast<size_t>(n) + 1, BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i)
        r.c_[static_cast<size_t>(n) - i] = c_[i];
    r.normalize();
    return r;
}

std::string YPoly::str(const char* var) const
{
    if (is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (int d = 0; d <= degree(); ++d) {
        const BigInt& c = c_[static_cast<size_t>(d)];
        if (c == 0)
            continue;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0)
                out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (mag != 1 || d == 0)
            out << mag.str();
        if (d >= 1) {
            if (mag != 1)
                out << " ";
            out << var;
            if (d > 1)
                out << "^" << d;
        }
    }
    return out.str();
}

// --------------------------------------------------------------- XYPoly

XYPoly::XYPoly(BigInt constant)
{
    add_term(0, 0, constant);
}

XYPoly::XYPoly(const YPoly& p, int xdeg)
{
    for (int d = 0; d <= p.degree(); ++d)
        add_term(xdeg, d, p.coeff(d));
}

XYPoly XYPoly::monomial(int xdeg, int ydeg, BigInt coeff)
{
    XYPoly p;
    p.add_term(xdeg, ydeg, coeff);
    return p;
}

XYPoly XYPoly::from_terms(std::initializer_list<std::tuple<int, int, long long>> terms)
{
    XYPoly p;
    for (const auto& [xd, yd, c] : terms)
        p.add_term(xd, yd, BigInt(c));
    return p;
}

void XYPoly::add_term(int xdeg, int ydeg, const BigInt& c)
{
    if (c == 0)
        return;
    auto key = Key{xdeg, ydeg};
    auto it = t_.find(key);
    if (it == t_.end()) {
        t_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0)
            t_.erase(it);
    }
}

BigInt XYPoly::coeff(int xdeg, int ydeg) const
{
    auto it = t_.find(Key{xdeg, ydeg});
    return it == t_.end() ? BigInt(0) : it->second;
}

int XYPoly::max_xdeg() const
{
    int m = -1;
    for (const auto& [k, c] : t_)
        m = std::max(m, k.first);
    return m;
}

int XYPoly::max_ydeg() const
{
    int m = -1;
    for (const auto& [k, c] : t_)
        m = std::max(m, k.second);
    return m;
}

XYPoly& XYPoly::operator+=(const XYPoly& o)
{
    for (const auto& [k, c] : o.t_)
        add_term(k.first, k.second, c);
    return *this;
}

XYPoly& XYPoly::operator-=(const XYPoly& o)
{
    for (const auto& [k, c] : o.t_)
        add_term(k.first, k.second, BigInt(-c));
    return *this;
}

XYPoly operator*(const XYPoly& a, const XYPoly& b)
{
    XYPoly r;
    for (const auto& [ka, ca] : a.t_)
        for (const auto& [kb, cb] : b.t_)
            r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

XYPoly XYPoly::scaled(const BigInt& k) const
{
    XYPoly r;
    if (k == 0)
        return r;
    for (const auto& [key, c] : t_)
        r.t_.emplace(key, c * k);
    return r;
}

XYPoly XYPoly::shifted(int dx, int dy) const
{
    XYPoly r;
    for (const auto& [key, c] : t_)
        r.t_.emplace(Key{key.first + dx, key.second + dy}, c);
    return r;
}

YPoly XYPoly::at_x1() const
{
    std::vector<BigInt> coeffs(static_cast<size_t>(std::max(0, max_ydeg() + 1)), BigInt(0));
    for (const auto& [k, c] : t_)
        coeffs[static_cast<size_t>(k.second)] += c;
    return YPoly::from_coeffs(std::move(coeffs));
}

BigInt XYPoly::at_one_one() const
{
    BigInt s = 0;
    for (const auto& [k, c] : t_)
        s += c;
    return s;
}

bool XYPoly::has_negative_coeff() const
{
    for (const auto& [k, c] : t_)
        if (c < 0)
            return true;
    return false;
}

std::string XYPoly::str() const
{
    if (t_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : t_) {
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0)
                out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool has_var = k.first > 0 || k.second > 0;
        if (mag != 1 || !has_var)
            out << mag.str();
        if (k.first > 0) {
            if (mag != 1)
                out << " ";
            out << "x";
            if (k.first > 1)
                out << "^" << k.first;
        }
        if (k.second > 0) {
            if (mag != 1 || k.first > 0)
                out << " ";
            out << "y";
            if (k.second > 1)
                out << "^" << k.second;
        }
    }
    return out.str();
}

// -------------------------------------------------------------- XYPolyQ

XYPolyQ::XYPolyQ(Rational constant)
{
    add_term(0, 0, constant);
}

XYPolyQ::XYPolyQ(const XYPoly& p)
{
    for (const auto& [k, c] : p.terms())
        t_.emplace(k, Rational(c));
}

XYPolyQ XYPolyQ::monomial(int xdeg, int ydeg, Rational coeff)
{
    XYPolyQ p;
    p.add_term(xdeg, ydeg, coeff);
    return p;
}

void XYPolyQ::add_term(int xdeg, int ydeg, const Rational& c)
{
    if (c == 0)
        return;
    auto key = Key{xdeg, ydeg};
    auto it = t_.find(key);
    if (it == t_.end()) {
        t_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0)
            t_.erase(it);
    }
}

XYPolyQ& XYPolyQ::operator+=(const XYPolyQ& o)
{
    for (const auto& [k, c] : o.t_)
        add_term(k.first, k.second, c);
    return *this;
}

XYPolyQ operator*(const XYPolyQ& a, const XYPolyQ& b)
{
    XYPolyQ r;
    for (const auto& [ka, ca] : a.t_)
        for (const auto& [kb, cb] : b.t_)
            r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

XYPolyQ XYPolyQ::scaled(const Rational& k) const
{
    XYPolyQ r;
    if (k == 0)
        return r;
    for (const auto& [key, c] : t_)
        r.t_.emplace(key, c * k);
    return r;
}

XYPoly XYPolyQ::to_integral() const
{
    XYPoly r;
    for (const auto& [k, c] : t_) {
        if (denominator(c) != 1)
            throw ExactnessError("fractional coefficient survived to an integer boundary: " +
                                 c.str() + " at x^" + std::to_string(k.first) + " y^" +
                                 std::to_string(k.second));
        r.add_term(k.first, k.second, numerator(c));
    }
    return r;
}

} // namespace cycpat
