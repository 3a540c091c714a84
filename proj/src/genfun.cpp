#include "cumulantkit/genfun.hpp"

#include <stdexcept>

#include "json.hpp"

#include "cumulantkit/errors.hpp"

namespace cumulantkit {

NCSeries<Rational> moment_series(const MomentFunctional& phi, int degree_bound) {
    if (degree_bound > phi.max_len)
        throw DepthError("moment data reaches length " + std::to_string(phi.max_len) +
                         ", requested degree " + std::to_string(degree_bound));
    NCSeries<Rational> m(phi.num_vars, degree_bound);
    m.set_coeff(Word{}, Rational(1));
    for (const auto& w : all_words(phi.num_vars, degree_bound)) m.set_coeff(w, phi.moment(w));
    return m;
}

NCSeries<Rational> cumulant_series(const CumulantFunctional& k, int degree_bound) {
    if (degree_bound > k.max_order)
        throw DepthError("cumulant data reaches order " + std::to_string(k.max_order) +
                         ", requested degree " + std::to_string(degree_bound));
    NCSeries<Rational> s(k.num_vars, degree_bound);
    for (const auto& w : all_words(k.num_vars, degree_bound)) s.set_coeff(w, k.cumulant(w));
    return s;
}

NCSeries<UniPoly> moment_series_t(Flavor flavor, const MomentFunctional& phi, int degree_bound) {
    if (degree_bound > phi.max_len)
        throw DepthError("moment data reaches length " + std::to_string(phi.max_len) +
                         ", requested degree " + std::to_string(degree_bound));
    NCSeries<UniPoly> m(phi.num_vars, degree_bound);
    m.set_coeff(Word{}, UniPoly(Rational(1)));
    DotCalculator calc(flavor, phi);
    for (const auto& w : all_words(phi.num_vars, degree_bound)) m.set_coeff(w, calc.phi_t(w));
    return m;
}

NCSeries<Rational> muraki_compose(const NCSeries<Rational>& mx, const NCSeries<Rational>& my) {
    const int r = mx.num_generators();
    std::vector<NCSeries<Rational>> targets;
    targets.reserve(static_cast<std::size_t>(r));
    for (int i = 1; i <= r; ++i)
        targets.push_back(NCSeries<Rational>::generator(r, mx.degree_bound(), i) * my);
    return my * substitute(mx, targets);
}

FlowCheckReport flow_check(const MomentFunctional& phi, int degree_bound) {
    const NCSeries<UniPoly> mt = moment_series_t(Flavor::Monotone, phi, degree_bound);

    const auto in_t = mt.map_coefficients([](const UniPoly& p) { return BiPoly::lift(p.retagged(Indet::T)); });
    const auto in_s = mt.map_coefficients([](const UniPoly& p) { return BiPoly::lift(p.retagged(Indet::S)); });
    const auto at_sum = mt.map_coefficients([](const UniPoly& p) { return BiPoly::at_t_plus_s(p); });

    const SeriesVector<BiPoly> lhs = mu_vector(at_sum);
    const SeriesVector<BiPoly> rhs = mu_compose(mu_vector(in_t), mu_vector(in_s));

    FlowCheckReport report;
    report.exact = true;
    for (std::size_t i = 0; i < lhs.components.size(); ++i) {
        if (lhs.components[i] == rhs.components[i]) continue;
        report.exact = false;
        report.component = static_cast<int>(i) + 1;
        const NCSeries<BiPoly> diff = lhs.components[i] - rhs.components[i];
        const auto& [w, d] = *diff.coefficients().begin();
        (void)d;
        report.word = w;
        report.lhs = lhs.components[i].coeff(w).str();
        report.rhs = rhs.components[i].coeff(w).str();
        break;
    }
    return report;
}

NCSeries<UniPoly> ode_residual(const MomentFunctional& phi, int degree_bound) {
    const int r = phi.num_vars;
    const NCSeries<UniPoly> mt = moment_series_t(Flavor::Monotone, phi, degree_bound);
    const NCSeries<UniPoly> dmt =
        mt.map_coefficients([](const UniPoly& p) { return p.derivative(Indet::T); });

    const CumulantFunctional k = cumulants_from_moments(Flavor::Monotone, phi, degree_bound);
    const NCSeries<UniPoly> kx =
        cumulant_series(k, degree_bound).map_coefficients([](const Rational& c) { return UniPoly(c); });

    std::vector<NCSeries<UniPoly>> targets;
    targets.reserve(static_cast<std::size_t>(r));
    for (int i = 1; i <= r; ++i)
        targets.push_back(NCSeries<UniPoly>::generator(r, degree_bound, i) * mt);
    return dmt - mt * substitute(kx, targets);
}

NCSeries<Rational> r_transform(const MomentFunctional& phi, int degree_bound) {
    const int r = phi.num_vars;
    const NCSeries<Rational> m = moment_series(phi, degree_bound);
    std::vector<NCSeries<Rational>> targets;
    targets.reserve(static_cast<std::size_t>(r));
    for (int i = 1; i <= r; ++i)
        targets.push_back(NCSeries<Rational>::generator(r, degree_bound, i) * m);

    // The relation is triangular: at length n the composed side picks up
    // the new coefficient R_w exactly once (all moment factors constant 1),
    // so solving by increasing length terminates in one pass per degree.
    NCSeries<Rational> rx(r, degree_bound);
    for (int n = 1; n <= degree_bound; ++n) {
        const NCSeries<Rational> composed = substitute(rx, targets);
        for (const auto& w : words_of_length(r, n))
            rx.set_coeff(w, phi.moment(w) - composed.coeff(w));
    }
    return rx;
}

std::vector<Rational> a_transform(const CumulantFunctional& k) {
    if (k.num_vars != 1)
        throw std::invalid_argument("the A-transform is defined for a single variable");
    if (k.flavor != Flavor::Monotone)
        throw std::invalid_argument("the A-transform takes monotone cumulants");
    std::vector<Rational> a;
    a.reserve(static_cast<std::size_t>(k.max_order));
    for (int n = 1; n <= k.max_order; ++n)
        a.push_back(-k.cumulant(Word(static_cast<std::size_t>(n), 1)));
    while (!a.empty() && a.back().is_zero()) a.pop_back();
    return a;
}

namespace {

template <class S, class ToJson>
std::string series_json(const NCSeries<S>& s, ToJson scalar) {
    nlohmann::json coeffs = nlohmann::json::object();
    for (const auto& [w, c] : s.coefficients()) coeffs[word_key(w)] = scalar(c);
    nlohmann::json j{{"r", s.num_generators()}, {"D", s.degree_bound()}, {"coeffs", coeffs}};
    return j.dump(2) + "\n";
}

} // namespace

std::string series_to_json_text(const NCSeries<Rational>& s) {
    return series_json(s, [](const Rational& c) { return nlohmann::json(c.str()); });
}

std::string series_to_json_text(const NCSeries<UniPoly>& s) {
    return series_json(s, [](const UniPoly& p) {
        nlohmann::json coeffs = nlohmann::json::array();
        for (const auto& c : p.coefficients()) coeffs.push_back(c.str());
        return nlohmann::json{{to_string(p.indet()), coeffs}};
    });
}

NCSeries<Rational> series_from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("r") || !j.contains("D") ||
        !j.contains("coeffs"))
        throw ParseError("series needs r, D and coeffs");
    NCSeries<Rational> s(j["r"].get<int>(), j["D"].get<int>());
    for (const auto& [key, value] : j["coeffs"].items()) {
        if (!value.is_string()) throw ParseError("series coefficient \"" + key + "\" must be a rational string");
        s.set_coeff(parse_word_key(key), Rational::parse(value.get<std::string>()));
    }
    return s;
}

} // namespace cumulantkit
