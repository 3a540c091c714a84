#include "cumulantkit/cumulants.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "cumulantkit/errors.hpp"

namespace cumulantkit {

Rational CumulantFunctional::cumulant(const Word& w) const {
    if (w.empty()) throw std::invalid_argument("cumulant of the empty word is undefined");
    if (static_cast<int>(w.size()) > max_order)
        throw DepthError("insufficient cumulant data: word \"" + word_key(w) +
                         "\" exceeds max_order " + std::to_string(max_order));
    const auto it = table.find(w);
    if (it == table.end())
        throw DepthError("insufficient cumulant data: missing word \"" + word_key(w) + "\"");
    return it->second;
}

void CumulantFunctional::validate() const {
    if (num_vars < 1) throw ParseError("num_vars must be >= 1");
    if (max_order < 1) throw ParseError("max_order must be >= 1");
    for (const auto& [w, value] : table) {
        (void)value;
        if (w.empty() || static_cast<int>(w.size()) > max_order)
            throw ParseError("word \"" + word_key(w) + "\" outside length 1.." +
                             std::to_string(max_order));
        for (const int v : w)
            if (v < 1 || v > num_vars)
                throw ParseError("word \"" + word_key(w) + "\" uses variable outside 1.." +
                                 std::to_string(num_vars));
    }
    for (const auto& w : all_words(num_vars, max_order))
        if (!table.count(w)) throw ParseError("missing cumulant for word \"" + word_key(w) + "\"");
}

CumulantFunctional cumulants_from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("flavor") || !j.contains("num_vars") ||
        !j.contains("max_order") || !j.contains("cumulants"))
        throw ParseError("cumulant file needs flavor, num_vars, max_order and cumulants");
    CumulantFunctional k;
    if (!j["flavor"].is_string()) throw ParseError("flavor must be a string");
    k.flavor = flavor_from_string(j["flavor"].get<std::string>());
    k.num_vars = j["num_vars"].get<int>();
    k.max_order = j["max_order"].get<int>();
    if (!j["cumulants"].is_object()) throw ParseError("cumulants must be an object");
    for (const auto& [key, value] : j["cumulants"].items()) {
        if (!value.is_string()) throw ParseError("cumulant \"" + key + "\" must be a rational string");
        k.table[parse_word_key(key)] = Rational::parse(value.get<std::string>());
    }
    k.validate();
    return k;
}

std::string cumulants_to_json_text(const CumulantFunctional& k) {
    nlohmann::json cumulants = nlohmann::json::object();
    for (const auto& [w, value] : k.table) cumulants[word_key(w)] = value.str();
    nlohmann::json j{{"flavor", to_string(k.flavor)},
                     {"num_vars", k.num_vars},
                     {"max_order", k.max_order},
                     {"cumulants", cumulants}};
    return j.dump(2) + "\n";
}

CumulantFunctional load_cumulants(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open cumulant file \"" + path + "\"");
    std::stringstream buf;
    buf << in.rdbuf();
    return cumulants_from_json_text(buf.str());
}

void save_cumulants(const CumulantFunctional& k, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write cumulant file \"" + path + "\"");
    out << cumulants_to_json_text(k);
}

Rational cumulant_dot(Flavor flavor, const MomentFunctional& phi, const Word& w) {
    return DotCalculator(flavor, phi).cumulant(w);
}

namespace {

PartitionKind kind_of(Flavor flavor) {
    switch (flavor) {
        case Flavor::Tensor: return PartitionKind::All;
        case Flavor::Free: return PartitionKind::NonCrossing;
        case Flavor::Boolean: return PartitionKind::Interval;
        case Flavor::Monotone: return PartitionKind::NonCrossing;
    }
    throw std::invalid_argument("bad flavor");
}

Rational product_over_blocks(const std::map<Word, Rational>& table, const SetPartition& p,
                             const Word& w) {
    Rational acc(1);
    for (const auto& v : p.blocks) {
        acc *= table.at(subword_at(w, v));
        if (acc.is_zero()) break;
    }
    return acc;
}

} // namespace

Rational cumulant_of_partition(const CumulantFunctional& k, const SetPartition& p, const Word& w) {
    if (p.n != static_cast<int>(w.size()))
        throw std::invalid_argument("partition ground set does not match word length");
    Rational acc(1);
    for (const auto& v : p.blocks) acc *= k.cumulant(subword_at(w, v));
    return acc;
}

Rational partition_weight(Flavor flavor, const SetPartition& p) {
    if (flavor == Flavor::Monotone) {
        if (is_crossing(p)) return Rational(0);
        return Rational(count_monotone_orderings(p)) / factorial(static_cast<int>(p.size()));
    }
    return highest_coefficient(flavor, p);
}

MomentFunctional moments_from_cumulants(const CumulantFunctional& k, int max_order) {
    if (max_order < 1 || max_order > k.max_order)
        throw DepthError("cumulant data reaches order " + std::to_string(k.max_order) +
                         ", requested " + std::to_string(max_order));
    MomentFunctional phi;
    phi.num_vars = k.num_vars;
    phi.max_len = max_order;
    const bool monotone = k.flavor == Flavor::Monotone;
    for (int n = 1; n <= max_order; ++n) {
        const auto parts = enumerate_partitions(n, kind_of(k.flavor), std::max(n, kDefaultEnumerationBound));
        for (const auto& w : words_of_length(k.num_vars, n)) {
            Rational acc(0);
            for (const auto& p : parts) {
                Rational term = product_over_blocks(k.table, p, w);
                if (term.is_zero()) continue;
                if (monotone)
                    term *= Rational(count_monotone_orderings(p)) / factorial(static_cast<int>(p.size()));
                acc += term;
            }
            phi.table[w] = acc;
        }
    }
    return phi;
}

CumulantFunctional cumulants_from_moments(Flavor flavor, const MomentFunctional& phi, int max_order) {
    if (max_order < 1 || max_order > phi.max_len)
        throw DepthError("moment data reaches length " + std::to_string(phi.max_len) +
                         ", requested order " + std::to_string(max_order) + " (word \"" +
                         word_key(Word(static_cast<std::size_t>(max_order), 1)) + "\" unavailable)");
    CumulantFunctional k;
    k.flavor = flavor;
    k.num_vars = phi.num_vars;
    k.max_order = max_order;
    const bool monotone = flavor == Flavor::Monotone;
    // Solve by word length: the one-block partition has weight 1 in every
    // flavor, and all other blocks only involve shorter words.
    for (int n = 1; n <= max_order; ++n) {
        const auto parts = enumerate_partitions(n, kind_of(flavor), std::max(n, kDefaultEnumerationBound));
        for (const auto& w : words_of_length(phi.num_vars, n)) {
            Rational acc = phi.moment(w);
            for (const auto& p : parts) {
                if (p.size() == 1) continue;
                Rational term = product_over_blocks(k.table, p, w);
                if (term.is_zero()) continue;
                if (monotone)
                    term *= Rational(count_monotone_orderings(p)) / factorial(static_cast<int>(p.size()));
                acc -= term;
            }
            k.table[w] = acc;
        }
    }
    return k;
}

Rational monotone_moment_via_ordered_partitions(const CumulantFunctional& k, const Word& w) {
    const int n = static_cast<int>(w.size());
    Rational acc(0);
    for (const auto& op : enumerate_monotone_partitions(n, std::max(n, kDefaultEnumerationBound))) {
        Rational term = Rational(1) / factorial(static_cast<int>(op.sequence.size()));
        for (const auto& v : op.sequence) term *= k.cumulant(subword_at(w, v));
        acc += term;
    }
    return acc;
}

MomentFunctional position_functional(Flavor flavor, const AlgebraFamily& family, const LabeledWord& w) {
    MomentFunctional phi;
    phi.num_vars = static_cast<int>(w.size());
    phi.max_len = static_cast<int>(w.size());
    MixedMomentEvaluator ev(flavor, family);
    for (const auto& positions : all_words(phi.num_vars, phi.max_len)) {
        LabeledWord letters;
        letters.reserve(positions.size());
        for (const int p : positions) letters.push_back(w[static_cast<std::size_t>(p - 1)]);
        phi.table[positions] = ev.eval(letters);
    }
    return phi;
}

Rational check_mk3(Flavor flavor, const AlgebraFamily& family, const LabeledWord& w) {
    std::set<int> labels;
    for (const auto& l : w) labels.insert(l.label);
    if (labels.size() < 2)
        throw std::invalid_argument("word must mix at least two independent algebras");
    const MomentFunctional phi = position_functional(flavor, family, w);
    Word positions(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) positions[i] = static_cast<int>(i) + 1;
    return cumulant_dot(flavor, phi, positions);
}

} // namespace cumulantkit
