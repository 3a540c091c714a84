#include "cumulantkit/independence.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "cumulantkit/errors.hpp"
#include "cumulantkit/partitions.hpp"

namespace cumulantkit {

std::string to_string(Flavor f) {
    switch (f) {
        case Flavor::Tensor: return "tensor";
        case Flavor::Free: return "free";
        case Flavor::Boolean: return "boolean";
        case Flavor::Monotone: return "monotone";
    }
    return "?";
}

Flavor flavor_from_string(const std::string& name) {
    if (name == "tensor") return Flavor::Tensor;
    if (name == "free") return Flavor::Free;
    if (name == "boolean") return Flavor::Boolean;
    if (name == "monotone") return Flavor::Monotone;
    throw ParseError("unknown independence \"" + name + "\"");
}

LabeledWord labeled_word_from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("word") || !j["word"].is_array())
        throw ParseError("labeled word needs a \"word\" array");
    LabeledWord w;
    for (const auto& item : j["word"]) {
        if (!item.is_object() || !item.contains("label") || !item.contains("var"))
            throw ParseError("labeled word letters need \"label\" and \"var\"");
        w.push_back({item["label"].get<int>(), item["var"].get<int>()});
    }
    if (w.empty()) throw ParseError("labeled word must be nonempty");
    return w;
}

std::string labeled_word_to_json_text(const LabeledWord& w) {
    nlohmann::json letters = nlohmann::json::array();
    for (const auto& l : w) letters.push_back({{"label", l.label}, {"var", l.var}});
    return nlohmann::json{{"word", letters}}.dump();
}

void AlgebraFamily::add(int label, MomentFunctional phi) {
    members_[label] = std::make_shared<const MomentFunctional>(std::move(phi));
}

void AlgebraFamily::add(int label, std::shared_ptr<const MomentFunctional> phi) {
    members_[label] = std::move(phi);
}

const MomentFunctional& AlgebraFamily::at(int label) const {
    const auto it = members_.find(label);
    if (it == members_.end())
        throw std::invalid_argument("no algebra with label " + std::to_string(label));
    return *it->second;
}

MixedMomentEvaluator::MixedMomentEvaluator(Flavor flavor, const AlgebraFamily& family,
                                           PeakChoice peaks)
    : flavor_(flavor), family_(&family), peaks_(peaks) {}

namespace {

using Element = std::map<Word, Rational>;

Element elem_mul(const Element& a, const Element& b) {
    Element out;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            auto& c = out[w];
            c += ca * cb;
            if (c.is_zero()) out.erase(w);
        }
    return out;
}

} // namespace

Rational MixedMomentEvaluator::state_of(int label, const Element& e) const {
    const MomentFunctional& phi = family_->at(label);
    Rational acc(0);
    for (const auto& [w, c] : e) acc += c * phi.moment(w);
    return acc;
}

std::vector<MixedMomentEvaluator::Run> MixedMomentEvaluator::merge_adjacent(std::vector<Run> runs) {
    // An empty element is the zero of its algebra; it stays in place and
    // every evaluation path turns it into a zero state factor.
    std::vector<Run> out;
    for (auto& r : runs) {
        if (!out.empty() && out.back().label == r.label)
            out.back().elem = elem_mul(out.back().elem, r.elem);
        else
            out.push_back(std::move(r));
    }
    return out;
}

std::string MixedMomentEvaluator::cache_key(const std::vector<Run>& runs) {
    std::ostringstream os;
    os << 'R';
    for (const auto& r : runs) {
        os << r.label << '[';
        for (const auto& [w, c] : r.elem) os << word_key(w) << '=' << c.str() << ';';
        os << ']';
    }
    return os.str();
}

Rational MixedMomentEvaluator::eval(const LabeledWord& w) {
    if (w.empty()) return Rational(1);
    // compact byte key; labels and variable indices are small positives
    std::string key;
    key.reserve(2 * w.size() + 1);
    key.push_back('W');
    bool packable = true;
    for (const auto& letter : w) {
        packable = packable && letter.label > 0 && letter.label < 127 && letter.var > 0 &&
                   letter.var < 127;
        key.push_back(static_cast<char>(letter.label & 0x7f));
        key.push_back(static_cast<char>(letter.var & 0x7f));
    }
    if (packable)
        if (const auto it = cache_.find(key); it != cache_.end()) return it->second;

    std::vector<Run> runs;
    runs.reserve(w.size());
    for (const auto& letter : w) {
        family_->at(letter.label); // label must be registered
        runs.push_back(Run{letter.label, Element{{Word{letter.var}, Rational(1)}}});
    }
    Rational value = eval_runs(merge_adjacent(std::move(runs)));
    if (packable) cache_.emplace(std::move(key), value);
    return value;
}

Rational MixedMomentEvaluator::eval_runs(const std::vector<Run>& runs) {
    if (runs.empty()) return Rational(1);
    if (runs.size() == 1) return state_of(runs[0].label, runs[0].elem);
    const std::string key = cache_key(runs);
    if (const auto it = cache_.find(key); it != cache_.end()) return it->second;
    Rational value;
    switch (flavor_) {
        case Flavor::Tensor: value = eval_tensor(runs); break;
        case Flavor::Boolean: value = eval_boolean(runs); break;
        case Flavor::Monotone: value = eval_monotone(runs); break;
        case Flavor::Free: value = eval_free(runs); break;
    }
    cache_.emplace(key, value);
    return value;
}

// Product over labels of the state of that label's ordered subproduct.
Rational MixedMomentEvaluator::eval_tensor(const std::vector<Run>& runs) {
    std::map<int, Element> grouped;
    for (const auto& r : runs) {
        auto [it, fresh] = grouped.emplace(r.label, r.elem);
        if (!fresh) it->second = elem_mul(it->second, r.elem);
    }
    Rational acc(1);
    for (const auto& [label, elem] : grouped) acc *= state_of(label, elem);
    return acc;
}

// The state factors over maximal same-label runs.
Rational MixedMomentEvaluator::eval_boolean(const std::vector<Run>& runs) {
    Rational acc(1);
    for (const auto& r : runs) acc *= state_of(r.label, r.elem);
    return acc;
}

// Repeatedly factor out a run whose label is a strict local maximum;
// neighbours of the removed run merge when their labels coincide.
Rational MixedMomentEvaluator::eval_monotone(std::vector<Run> runs) {
    Rational acc(1);
    while (runs.size() > 1) {
        std::size_t peak = runs.size();
        for (std::size_t i = 0; i < runs.size(); ++i) {
            const bool left_ok = i == 0 || runs[i - 1].label < runs[i].label;
            const bool right_ok = i + 1 == runs.size() || runs[i].label > runs[i + 1].label;
            if (left_ok && right_ok) {
                peak = i;
                if (peaks_ == PeakChoice::Leftmost) break;
            }
        }
        // adjacent labels differ, so the global maximum is always a peak
        acc *= state_of(runs[peak].label, runs[peak].elem);
        runs.erase(runs.begin() + static_cast<std::ptrdiff_t>(peak));
        runs = merge_adjacent(std::move(runs));
    }
    if (!runs.empty()) acc *= state_of(runs[0].label, runs[0].elem);
    return acc;
}

// Centering recursion: write each run element as (centered + mean * unit)
// and expand. The all-centered term is an alternating product of centered
// elements and vanishes; every other term recurses on fewer runs.
Rational MixedMomentEvaluator::eval_free(const std::vector<Run>& runs) {
    const std::size_t m = runs.size();
    std::vector<Rational> mean(m);
    std::vector<Element> centered(m);
    std::vector<std::size_t> with_mean; // positions whose mean is nonzero
    for (std::size_t k = 0; k < m; ++k) {
        mean[k] = state_of(runs[k].label, runs[k].elem);
        centered[k] = runs[k].elem;
        if (!mean[k].is_zero()) {
            auto& unit = centered[k][Word{}];
            unit -= mean[k];
            if (unit.is_zero()) centered[k].erase(Word{});
            with_mean.push_back(k);
        }
    }
    if (with_mean.empty()) return Rational(0);

    Rational acc(0);
    const std::size_t subsets = std::size_t{1} << with_mean.size();
    // bit set in `drop`: that run is replaced by its mean
    for (std::size_t drop = 1; drop < subsets; ++drop) {
        Rational coeff(1);
        std::vector<char> dropped(m, 0);
        for (std::size_t b = 0; b < with_mean.size(); ++b)
            if (drop & (std::size_t{1} << b)) {
                coeff *= mean[with_mean[b]];
                dropped[with_mean[b]] = 1;
            }
        std::vector<Run> rest;
        for (std::size_t k = 0; k < m; ++k)
            if (!dropped[k]) rest.push_back(Run{runs[k].label, centered[k]});
        acc += coeff * eval_runs(merge_adjacent(std::move(rest)));
    }
    return acc;
}

Rational mixed_moment(Flavor flavor, const AlgebraFamily& family, const LabeledWord& w) {
    MixedMomentEvaluator ev(flavor, family);
    return ev.eval(w);
}

DotCalculator::DotCalculator(Flavor flavor, const MomentFunctional& phi)
    : flavor_(flavor), phi_(&phi), copies_([&] {
          AlgebraFamily fam;
          const auto shared = std::make_shared<const MomentFunctional>(phi);
          for (int j = 1; j <= phi.max_len; ++j) fam.add(j, shared);
          return fam;
      }()),
      ev_(flavor, copies_) {}

Rational DotCalculator::dot(const Word& w, long copies) {
    const std::size_t n = w.size();
    if (n == 0) return Rational(1);
    if (copies < 0) throw std::invalid_argument("negative copy count");
    if (copies == 0) return Rational(0);
    if (static_cast<int>(n) > phi_->max_len)
        throw DepthError("insufficient moment data: word \"" + word_key(w) + "\" exceeds max_len " +
                         std::to_string(phi_->max_len));

    Rational acc(0);
    std::vector<long> assign(n, 1);
    std::vector<long> sorted;
    LabeledWord labeled(n);
    while (true) {
        // Order-preserving collapse of the assignment to 1..k. The
        // evaluator reads labels only through equality and relative
        // order, and every copy shares one functional, so this is a pure
        // relabeling that lets equal patterns share cache entries.
        sorted = assign;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (std::size_t i = 0; i < n; ++i) {
            const auto rank = std::lower_bound(sorted.begin(), sorted.end(), assign[i]) - sorted.begin();
            labeled[i] = {static_cast<int>(rank) + 1, w[i]};
        }
        acc += ev_.eval(labeled);

        std::size_t pos = n;
        while (pos > 0 && assign[pos - 1] == copies) assign[--pos] = 1;
        if (pos == 0) break;
        ++assign[pos - 1];
    }
    return acc;
}

Rational DotCalculator::dot_nested(const Word& w, long outer, long inner) {
    MomentFunctional inner_sum;
    inner_sum.num_vars = phi_->num_vars;
    inner_sum.max_len = phi_->max_len;
    for (const auto& u : all_words(phi_->num_vars, phi_->max_len)) inner_sum.table[u] = dot(u, inner);
    DotCalculator outer_calc(flavor_, inner_sum);
    return outer_calc.dot(w, outer);
}

UniPoly DotCalculator::phi_t(const Word& w) {
    std::vector<std::pair<long, Rational>> points;
    points.reserve(w.size() + 1);
    for (long big_n = 0; big_n <= static_cast<long>(w.size()); ++big_n)
        points.emplace_back(big_n, dot(w, big_n));
    return lagrange_interpolate(points, Indet::N).retagged(Indet::T);
}

Rational DotCalculator::cumulant(const Word& w) { return phi_t(w).coeff(1); }

Rational dot_moment(Flavor flavor, const MomentFunctional& phi, const Word& w, long copies) {
    return DotCalculator(flavor, phi).dot(w, copies);
}

UniPoly phi_t(Flavor flavor, const MomentFunctional& phi, const Word& w) {
    return DotCalculator(flavor, phi).phi_t(w);
}

Rational prop51_expansion(const AlgebraFamily& family, const Word& w) {
    if (family.members().size() != 2)
        throw std::invalid_argument("pairwise-sum expansion needs exactly two labels");
    const MomentFunctional& phi_x = *family.members().begin()->second;
    const MomentFunctional& phi_y = *family.members().rbegin()->second;
    const int n = static_cast<int>(w.size());
    if (n == 0) return Rational(1);
    if (n > 62) throw std::invalid_argument("word too long for subset expansion");

    Rational acc(0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        Block v;
        for (int i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i)) v.push_back(i + 1);
        Rational term = phi_x.moment(subword_at(w, v));
        if (term.is_zero()) continue;
        for (const auto& run : complement_decomposition(n, v)) term *= phi_y.moment(subword_at(w, run));
        acc += term;
    }
    return acc;
}

} // namespace cumulantkit
