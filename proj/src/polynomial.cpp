#include "cumulantkit/polynomial.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace cumulantkit {

std::string to_string(Indet v) {
    switch (v) {
        case Indet::N: return "N";
        case Indet::T: return "t";
        case Indet::S: return "s";
    }
    return "?";
}

UniPoly UniPoly::monomial(Indet v, int exponent, const Rational& coeff) {
    if (exponent < 0) throw std::invalid_argument("negative exponent");
    std::vector<Rational> c(static_cast<std::size_t>(exponent) + 1, Rational(0));
    c.back() = coeff;
    return UniPoly(v, std::move(c));
}

const Rational& UniPoly::coeff(int exponent) const {
    static const Rational zero(0);
    if (exponent < 0 || exponent >= static_cast<int>(c_.size())) return zero;
    return c_[static_cast<std::size_t>(exponent)];
}

void UniPoly::set_coeff(int exponent, const Rational& value) {
    if (exponent < 0) throw std::invalid_argument("negative exponent");
    if (exponent >= static_cast<int>(c_.size())) {
        if (value.is_zero()) return;
        c_.resize(static_cast<std::size_t>(exponent) + 1, Rational(0));
    }
    c_[static_cast<std::size_t>(exponent)] = value;
    trim();
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::derivative(Indet wrt) const {
    if (is_constant()) return UniPoly(wrt);
    if (wrt != var_)
        throw std::invalid_argument("derivative with respect to " + to_string(wrt) +
                                    " of a polynomial in " + to_string(var_));
    std::vector<Rational> d;
    d.reserve(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k)
        d.push_back(Rational(static_cast<long>(k)) * c_[k]);
    return UniPoly(var_, std::move(d));
}

Indet UniPoly::merged_var(const UniPoly& a, const UniPoly& b) {
    if (a.is_constant()) return b.var_;
    if (b.is_constant()) return a.var_;
    if (a.var_ != b.var_)
        throw std::invalid_argument("mixing polynomials in " + to_string(a.var_) +
                                    " and " + to_string(b.var_));
    return a.var_;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    var_ = merged_var(*this, o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    var_ = merged_var(*this, o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    UniPoly out(UniPoly::merged_var(a, b));
    if (a.is_zero() || b.is_zero()) return out;
    out.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
    }
    out.trim();
    return out;
}

UniPoly operator-(const UniPoly& a) {
    UniPoly out(a.var_);
    out.c_.reserve(a.c_.size());
    for (const auto& x : a.c_) out.c_.push_back(-x);
    return out;
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

std::string UniPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        if (!first) os << " + ";
        os << c_[k].str();
        if (k >= 1) os << "*" << to_string(var_);
        if (k >= 2) os << "^" << k;
        first = false;
    }
    return os.str();
}

BiPoly BiPoly::lift(const UniPoly& p) {
    BiPoly out;
    const auto& c = p.coefficients();
    if (c.empty()) return out;
    if (p.indet() == Indet::S) {
        out.c_.assign(1, c);
    } else {
        out.c_.resize(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) out.c_[i] = {c[i]};
    }
    out.trim();
    return out;
}

BiPoly BiPoly::at_t_plus_s(const UniPoly& p) {
    BiPoly out;
    const auto& c = p.coefficients();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k].is_zero()) continue;
        for (std::size_t i = 0; i <= k; ++i) {
            const Rational term = c[k] * binomial(static_cast<int>(k), static_cast<int>(i));
            if (out.c_.size() <= i) out.c_.resize(i + 1);
            auto& row = out.c_[i];
            const std::size_t j = k - i;
            if (row.size() <= j) row.resize(j + 1, Rational(0));
            row[j] += term;
        }
    }
    out.trim();
    return out;
}

Rational BiPoly::coeff(int i, int j) const {
    if (i < 0 || j < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
    const auto& row = c_[static_cast<std::size_t>(i)];
    if (j >= static_cast<int>(row.size())) return Rational(0);
    return row[static_cast<std::size_t>(j)];
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
        auto& row = c_[i];
        const auto& orow = o.c_[i];
        if (orow.size() > row.size()) row.resize(orow.size(), Rational(0));
        for (std::size_t j = 0; j < orow.size(); ++j) row[j] += orow[j];
    }
    trim();
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
        auto& row = c_[i];
        const auto& orow = o.c_[i];
        if (orow.size() > row.size()) row.resize(orow.size(), Rational(0));
        for (std::size_t j = 0; j < orow.size(); ++j) row[j] -= orow[j];
    }
    trim();
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly out;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        for (std::size_t j = 0; j < a.c_[i].size(); ++j) {
            if (a.c_[i][j].is_zero()) continue;
            for (std::size_t k = 0; k < b.c_.size(); ++k) {
                for (std::size_t l = 0; l < b.c_[k].size(); ++l) {
                    if (b.c_[k][l].is_zero()) continue;
                    const std::size_t ti = i + k, sj = j + l;
                    if (out.c_.size() <= ti) out.c_.resize(ti + 1);
                    auto& row = out.c_[ti];
                    if (row.size() <= sj) row.resize(sj + 1, Rational(0));
                    row[sj] += a.c_[i][j] * b.c_[k][l];
                }
            }
        }
    }
    out.trim();
    return out;
}

UniPoly BiPoly::collapse_s_to_t() const {
    UniPoly out(Indet::T);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < c_[i].size(); ++j)
            if (!c_[i][j].is_zero())
                out += UniPoly::monomial(Indet::T, static_cast<int>(i + j), c_[i][j]);
    return out;
}

UniPoly BiPoly::at_s_zero() const {
    std::vector<Rational> c;
    c.reserve(c_.size());
    for (const auto& row : c_) c.push_back(row.empty() ? Rational(0) : row[0]);
    return UniPoly(Indet::T, std::move(c));
}

void BiPoly::trim() {
    for (auto& row : c_)
        while (!row.empty() && row.back().is_zero()) row.pop_back();
    while (!c_.empty() && c_.back().empty()) c_.pop_back();
}

std::string BiPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        for (std::size_t j = 0; j < c_[i].size(); ++j) {
            if (c_[i][j].is_zero()) continue;
            if (!first) os << " + ";
            os << c_[i][j].str();
            if (i == 1) os << "*t";
            if (i > 1) os << "*t^" << i;
            if (j == 1) os << "*s";
            if (j > 1) os << "*s^" << j;
            first = false;
        }
    }
    return os.str();
}

UniPoly lagrange_interpolate(const std::vector<std::pair<long, Rational>>& points, Indet var) {
    if (points.empty()) throw std::invalid_argument("interpolation needs at least one point");
    std::set<long> nodes;
    for (const auto& [x, y] : points)
        if (!nodes.insert(x).second)
            throw std::invalid_argument("duplicate interpolation node " + std::to_string(x));

    UniPoly result(var);
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].second.is_zero()) continue;
        UniPoly basis(var, {points[i].second});
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            const Rational denom(points[i].first - points[j].first);
            // (x - x_j) / (x_i - x_j)
            basis *= UniPoly(var, {Rational(-points[j].first) / denom, Rational(1) / denom});
        }
        result += basis;
    }
    return result;
}

} // namespace cumulantkit
