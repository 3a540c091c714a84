#include "cumulantkit/rational.hpp"

#include <cctype>

namespace cumulantkit {

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rational Rational::parse(const std::string& s) {
    const auto bad = [&] { return ParseError("malformed rational \"" + s + "\""); };
    if (s.empty()) throw bad();
    std::size_t pos = s[0] == '-' ? 1 : 0;
    const std::size_t slash = s.find('/', pos);
    if (slash == std::string::npos) {
        if (!all_digits(s, pos, s.size())) throw bad();
        return Rational(mpq_class(s));
    }
    if (!all_digits(s, pos, slash) || !all_digits(s, slash + 1, s.size())) throw bad();
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0) throw bad();
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
        throw ParseError("rational with zero denominator \"" + s + "\"");
    return Rational(q);
}

Rational factorial(int n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
    return Rational(mpq_class(f));
}

Rational binomial(int n, int k) {
    if (k < 0 || k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(mpq_class(b));
}

} // namespace cumulantkit
