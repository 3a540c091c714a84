#ifndef CUMULANTKIT_NCSERIES_HPP
#define CUMULANTKIT_NCSERIES_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "cumulantkit/moments.hpp"
#include "cumulantkit/rational.hpp"

namespace cumulantkit {

/// Truncated formal power series in r non-commuting generators z_1..z_r,
/// exact to total degree D. Sparse: absent words are zero; nothing longer
/// than D is stored. The scalar ring is a template parameter (Rational,
/// or a commuting polynomial ring).
template <class S>
class NCSeries {
public:
    NCSeries(int r, int degree_bound) : r_(r), d_(degree_bound) {
        if (r < 1 || degree_bound < 0) throw std::invalid_argument("series needs r >= 1, D >= 0");
    }

    static NCSeries constant(int r, int degree_bound, S value) {
        NCSeries out(r, degree_bound);
        out.set_coeff(Word{}, std::move(value));
        return out;
    }

    static NCSeries generator(int r, int degree_bound, int i) {
        NCSeries out(r, degree_bound);
        if (i < 1 || i > r) throw std::invalid_argument("generator index outside 1..r");
        if (degree_bound >= 1) out.set_coeff(Word{i}, S(Rational(1)));
        return out;
    }

    int num_generators() const { return r_; }
    int degree_bound() const { return d_; }
    const std::map<Word, S>& coefficients() const { return c_; }

    S coeff(const Word& w) const {
        const auto it = c_.find(w);
        return it == c_.end() ? S{} : it->second;
    }

    void set_coeff(const Word& w, S value) {
        check_word(w);
        if (is_zero(value))
            c_.erase(w);
        else
            c_[w] = std::move(value);
    }

    void add_to_coeff(const Word& w, const S& value) {
        check_word(w);
        auto [it, fresh] = c_.emplace(w, value);
        if (!fresh) {
            it->second += value;
            if (is_zero(it->second)) c_.erase(it);
        } else if (is_zero(it->second)) {
            c_.erase(it);
        }
    }

    bool is_zero_series() const { return c_.empty(); }
    bool has_zero_constant_term() const { return !c_.count(Word{}); }

    NCSeries& operator+=(const NCSeries& o) {
        require_compatible(o);
        for (const auto& [w, s] : o.c_) add_to_coeff(w, s);
        return *this;
    }
    NCSeries& operator-=(const NCSeries& o) {
        require_compatible(o);
        for (const auto& [w, s] : o.c_) {
            auto [it, fresh] = c_.emplace(w, S{});
            it->second -= s;
            if (is_zero(it->second)) c_.erase(it);
        }
        return *this;
    }
    friend NCSeries operator+(NCSeries a, const NCSeries& b) { a += b; return a; }
    friend NCSeries operator-(NCSeries a, const NCSeries& b) { a -= b; return a; }

    // Non-commutative product: words concatenate.
    friend NCSeries operator*(const NCSeries& a, const NCSeries& b) {
        a.require_compatible(b);
        NCSeries out(a.r_, a.d_);
        for (const auto& [wa, sa] : a.c_) {
            if (static_cast<int>(wa.size()) > a.d_) continue;
            for (const auto& [wb, sb] : b.c_) {
                if (static_cast<int>(wa.size() + wb.size()) > a.d_) continue;
                Word w = wa;
                w.insert(w.end(), wb.begin(), wb.end());
                out.add_to_coeff(w, sa * sb);
            }
        }
        return out;
    }
    NCSeries& operator*=(const NCSeries& o) { *this = *this * o; return *this; }

    NCSeries scaled(const S& factor) const {
        NCSeries out(r_, d_);
        if (is_zero(factor)) return out;
        for (const auto& [w, s] : c_) out.set_coeff(w, s * factor);
        return out;
    }

    template <class F>
    auto map_coefficients(F f) const -> NCSeries<std::decay_t<decltype(f(std::declval<S>()))>> {
        NCSeries<std::decay_t<decltype(f(std::declval<S>()))>> out(r_, d_);
        for (const auto& [w, s] : c_) out.set_coeff(w, f(s));
        return out;
    }

    friend bool operator==(const NCSeries& a, const NCSeries& b) {
        return a.r_ == b.r_ && a.d_ == b.d_ && a.c_ == b.c_;
    }
    friend bool operator!=(const NCSeries& a, const NCSeries& b) { return !(a == b); }

private:
    void check_word(const Word& w) const {
        if (static_cast<int>(w.size()) > d_)
            throw std::invalid_argument("word \"" + word_key(w) + "\" exceeds degree bound " +
                                        std::to_string(d_));
        for (const int v : w)
            if (v < 1 || v > r_) throw std::invalid_argument("generator index outside 1..r");
    }
    void require_compatible(const NCSeries& o) const {
        if (r_ != o.r_ || d_ != o.d_)
            throw std::invalid_argument("series have different generators or degree bounds");
    }

    int r_;
    int d_;
    std::map<Word, S> c_;
};

/// Composition P(T_1,...,T_r): each monomial z_{i_1}...z_{i_k} becomes
/// T_{i_1}...T_{i_k}. Every T_i must have zero constant term, which keeps
/// truncation exact.
template <class S>
NCSeries<S> substitute(const NCSeries<S>& p, const std::vector<NCSeries<S>>& targets) {
    if (static_cast<int>(targets.size()) != p.num_generators())
        throw std::invalid_argument("substitution needs one target series per generator");
    for (const auto& t : targets) {
        if (t.num_generators() != p.num_generators() || t.degree_bound() != p.degree_bound())
            throw std::invalid_argument("series have different generators or degree bounds");
        if (!t.has_zero_constant_term())
            throw std::invalid_argument("substitution target has a nonzero constant term");
    }
    NCSeries<S> out(p.num_generators(), p.degree_bound());
    // Shared prefix products: the image of w is the image of its prefix
    // times one more target factor.
    std::map<Word, NCSeries<S>> images;
    images.emplace(Word{}, NCSeries<S>::constant(p.num_generators(), p.degree_bound(), S(Rational(1))));
    auto image_of = [&](const Word& w, auto&& self) -> const NCSeries<S>& {
        const auto it = images.find(w);
        if (it != images.end()) return it->second;
        Word prefix(w.begin(), w.end() - 1);
        const NCSeries<S>& head = self(prefix, self);
        return images.emplace(w, head * targets[static_cast<std::size_t>(w.back()) - 1]).first->second;
    };
    for (const auto& [w, s] : p.coefficients()) {
        if (w.empty())
            out.add_to_coeff(Word{}, s);
        else
            out += image_of(w, image_of).scaled(s);
    }
    return out;
}

/// Vector of series; component i carries z_i on the left, so it has no
/// constant term and every stored word begins with generator i.
template <class S>
struct SeriesVector {
    std::vector<NCSeries<S>> components;

    friend bool operator==(const SeriesVector&, const SeriesVector&) = default;
};

/// (z_1 M, ..., z_r M).
template <class S>
SeriesVector<S> mu_vector(const NCSeries<S>& m) {
    SeriesVector<S> out;
    const int r = m.num_generators();
    out.components.reserve(static_cast<std::size_t>(r));
    for (int i = 1; i <= r; ++i)
        out.components.push_back(NCSeries<S>::generator(r, m.degree_bound(), i) * m);
    return out;
}

/// Component-wise composition (U o V)_i = U_i(V_1, ..., V_r).
template <class S>
SeriesVector<S> mu_compose(const SeriesVector<S>& u, const SeriesVector<S>& v) {
    if (u.components.size() != v.components.size())
        throw std::invalid_argument("vectors have different lengths");
    SeriesVector<S> out;
    out.components.reserve(u.components.size());
    for (const auto& ui : u.components) out.components.push_back(substitute(ui, v.components));
    return out;
}

/// Identity vector (z_1, ..., z_r): neutral for mu_compose.
template <class S>
SeriesVector<S> identity_vector(int r, int degree_bound) {
    SeriesVector<S> out;
    out.components.reserve(static_cast<std::size_t>(r));
    for (int i = 1; i <= r; ++i) out.components.push_back(NCSeries<S>::generator(r, degree_bound, i));
    return out;
}

} // namespace cumulantkit

#endif
