#include "cumulantkit/moments.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "json.hpp"

#include "cumulantkit/errors.hpp"

namespace cumulantkit {

std::string word_key(const Word& w) {
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ',';
        os << w[i];
    }
    return os.str();
}

Word parse_word_key(const std::string& key) {
    Word w;
    if (key.empty()) return w;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = key.find(',', pos);
        const std::string tok = key.substr(pos, next == std::string::npos ? next : next - pos);
        if (tok.empty()) throw ParseError("malformed word key \"" + key + "\"");
        for (const char c : tok)
            if (c < '0' || c > '9') throw ParseError("malformed word key \"" + key + "\"");
        w.push_back(std::stoi(tok));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return w;
}

std::vector<Word> all_words(int r, int max_len) {
    std::vector<Word> out;
    std::vector<Word> level{Word{}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<Word> next;
        next.reserve(level.size() * static_cast<std::size_t>(r));
        for (const auto& w : level)
            for (int v = 1; v <= r; ++v) {
                Word ext = w;
                ext.push_back(v);
                next.push_back(std::move(ext));
            }
        out.insert(out.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return out;
}

std::vector<Word> words_of_length(int r, int len) {
    std::vector<Word> level{Word{}};
    for (int l = 1; l <= len; ++l) {
        std::vector<Word> next;
        next.reserve(level.size() * static_cast<std::size_t>(r));
        for (const auto& w : level)
            for (int v = 1; v <= r; ++v) {
                Word ext = w;
                ext.push_back(v);
                next.push_back(std::move(ext));
            }
        level = std::move(next);
    }
    return level;
}

Word subword_at(const Word& w, const std::vector<int>& positions) {
    Word sub;
    sub.reserve(positions.size());
    for (const int p : positions) sub.push_back(w.at(static_cast<std::size_t>(p) - 1));
    return sub;
}

Rational MomentFunctional::moment(const Word& w) const {
    if (w.empty()) return Rational(1);
    if (static_cast<int>(w.size()) > max_len)
        throw DepthError("insufficient moment data: word \"" + word_key(w) + "\" exceeds max_len " +
                         std::to_string(max_len));
    for (const int v : w)
        if (v < 1 || v > num_vars)
            throw DepthError("insufficient moment data: variable " + std::to_string(v) +
                             " outside 1.." + std::to_string(num_vars));
    const auto it = table.find(w);
    if (it == table.end())
        throw DepthError("insufficient moment data: missing word \"" + word_key(w) + "\"");
    return it->second;
}

void MomentFunctional::validate() const {
    if (num_vars < 1) throw ParseError("num_vars must be >= 1");
    if (max_len < 1) throw ParseError("max_len must be >= 1");
    for (const auto& [w, value] : table) {
        (void)value;
        if (w.empty() || static_cast<int>(w.size()) > max_len)
            throw ParseError("word \"" + word_key(w) + "\" outside length 1.." + std::to_string(max_len));
        for (const int v : w)
            if (v < 1 || v > num_vars)
                throw ParseError("word \"" + word_key(w) + "\" uses variable outside 1.." +
                                 std::to_string(num_vars));
    }
    for (const auto& w : all_words(num_vars, max_len))
        if (!table.count(w)) throw ParseError("missing moment for word \"" + word_key(w) + "\"");
}

namespace {

nlohmann::json parse_json(const std::string& text, const std::string& what) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("invalid JSON in " + what);
    return j;
}

} // namespace

MomentFunctional moments_from_json_text(const std::string& text) {
    const nlohmann::json j = parse_json(text, "moment file");
    if (!j.is_object() || !j.contains("num_vars") || !j.contains("max_len") || !j.contains("moments"))
        throw ParseError("moment file needs num_vars, max_len and moments");
    MomentFunctional phi;
    if (!j["num_vars"].is_number_integer() || !j["max_len"].is_number_integer())
        throw ParseError("num_vars and max_len must be integers");
    phi.num_vars = j["num_vars"].get<int>();
    phi.max_len = j["max_len"].get<int>();
    if (!j["moments"].is_object()) throw ParseError("moments must be an object");
    for (const auto& [key, value] : j["moments"].items()) {
        if (!value.is_string()) throw ParseError("moment \"" + key + "\" must be a rational string");
        phi.table[parse_word_key(key)] = Rational::parse(value.get<std::string>());
    }
    phi.validate();
    return phi;
}

std::string moments_to_json_text(const MomentFunctional& phi) {
    nlohmann::json moments = nlohmann::json::object();
    for (const auto& [w, value] : phi.table) moments[word_key(w)] = value.str();
    nlohmann::json j{{"num_vars", phi.num_vars}, {"max_len", phi.max_len}, {"moments", moments}};
    return j.dump(2) + "\n";
}

MomentFunctional load_moments(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open moment file \"" + path + "\"");
    std::stringstream buf;
    buf << in.rdbuf();
    return moments_from_json_text(buf.str());
}

void save_moments(const MomentFunctional& phi, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write moment file \"" + path + "\"");
    out << moments_to_json_text(phi);
}

MomentFunctional random_functional(int r, int max_len, std::uint64_t seed) {
    if (r < 1 || max_len < 1) throw std::invalid_argument("random functional needs r >= 1, max_len >= 1");
    MomentFunctional phi;
    phi.num_vars = r;
    phi.max_len = max_len;
    // mt19937_64 with plain modulo keeps the stream identical across
    // platforms, unlike std distributions.
    std::mt19937_64 rng(seed);
    for (const auto& w : all_words(r, max_len)) {
        const long num = static_cast<long>(rng() % 19) - 9;
        const long den = static_cast<long>(rng() % 9) + 1;
        phi.table[w] = Rational(num, den);
    }
    return phi;
}

} // namespace cumulantkit
