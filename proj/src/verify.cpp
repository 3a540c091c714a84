#include "cumulantkit/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "json.hpp"

#include "cumulantkit/cumulants.hpp"
#include "cumulantkit/genfun.hpp"
#include "cumulantkit/independence.hpp"
#include "cumulantkit/moments.hpp"
#include "cumulantkit/partitions.hpp"

namespace cumulantkit {

bool VerifySuiteReport::pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

const CheckResult* VerifySuiteReport::first_failure() const {
    for (const auto& c : checks)
        if (!c.pass) return &c;
    return nullptr;
}

std::string VerifySuiteReport::to_text() const {
    std::ostringstream os;
    os << "suite: " << suite << "\n";
    for (const auto& [k, v] : params) os << "  " << k << ": " << v << "\n";
    for (const auto& c : checks) {
        os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
        if (!c.detail.empty()) os << " — " << c.detail;
        os << "\n";
    }
    os << "result: " << (pass() ? "pass" : "FAIL") << " (" << checks.size() << " checks)\n";
    return os.str();
}

std::string VerifySuiteReport::to_json_text() const {
    nlohmann::json jparams = nlohmann::json::object();
    for (const auto& [k, v] : params) jparams[k] = v;
    nlohmann::json jchecks = nlohmann::json::array();
    for (const auto& c : checks)
        jchecks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    nlohmann::json j{{"suite", suite},
                     {"params", jparams},
                     {"checks", jchecks},
                     {"pass", pass()},
                     {"first_counterexample", first_failure() ? first_failure()->detail : ""}};
    return j.dump(2) + "\n";
}

namespace {

std::vector<Flavor> flavors_for(const VerifyOptions& o) {
    if (o.flavor) return {*o.flavor};
    return {Flavor::Tensor, Flavor::Free, Flavor::Boolean, Flavor::Monotone};
}

std::vector<std::uint64_t> trial_seeds(std::uint64_t seed, int trials) {
    std::mt19937_64 master(seed);
    std::vector<std::uint64_t> out(static_cast<std::size_t>(trials));
    for (auto& s : out) s = master();
    return out;
}

// Runs fn(index) for every index, optionally on a thread pool; results are
// collected in index order, so the aggregate is deterministic.
template <class Fn>
std::vector<CheckResult> run_indexed(int count, int threads, Fn fn) {
    std::vector<std::vector<CheckResult>> partial(static_cast<std::size_t>(count));
    if (threads <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) partial[static_cast<std::size_t>(i)] = fn(i);
    } else {
        std::atomic<int> next{0};
        auto worker = [&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1))
                partial[static_cast<std::size_t>(i)] = fn(i);
        };
        std::vector<std::thread> pool;
        const int used = std::min(threads, count);
        pool.reserve(static_cast<std::size_t>(used));
        for (int t = 0; t < used; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    std::vector<CheckResult> out;
    for (auto& chunk : partial) out.insert(out.end(), chunk.begin(), chunk.end());
    return out;
}

void put_param(VerifySuiteReport& r, const std::string& k, const std::string& v) {
    r.params.emplace_back(k, v);
}

int pick(int requested, int fallback) { return requested > 0 ? requested : fallback; }

// default series truncation: degree 6 up to two generators, 4 beyond
int default_degree(const VerifyOptions& o) { return o.r <= 2 ? 6 : 4; }

// ---------------------------------------------------------------------
// Independent brute-force oracles (reimplemented from scratch on purpose;
// the library paths must agree with these, not define them).

// Canonical code of the partition induced by an arbitrary map
// {1..n} -> {1..n}: fiber indices in first-appearance order.
std::string rgs_code(const std::vector<int>& image) {
    std::string code(image.size(), '\0');
    std::vector<int> rank(image.size() + 1, -1);
    int next = 0;
    for (std::size_t i = 0; i < image.size(); ++i) {
        if (rank[static_cast<std::size_t>(image[i])] < 0)
            rank[static_cast<std::size_t>(image[i])] = next++;
        code[i] = static_cast<char>('a' + rank[static_cast<std::size_t>(image[i])]);
    }
    return code;
}

SetPartition partition_from_code(const std::string& code) {
    std::vector<Block> blocks;
    for (std::size_t i = 0; i < code.size(); ++i) {
        const std::size_t b = static_cast<std::size_t>(code[i] - 'a');
        if (b >= blocks.size()) blocks.resize(b + 1);
        blocks[b].push_back(static_cast<int>(i) + 1);
    }
    return make_partition(static_cast<int>(code.size()), std::move(blocks));
}

// Every map {1..n} -> {1..n}, deduplicated by induced partition.
std::vector<SetPartition> oracle_all_partitions(int n) {
    std::unordered_set<std::string> codes;
    std::vector<int> image(static_cast<std::size_t>(n), 1);
    while (true) {
        codes.insert(rgs_code(image));
        std::size_t pos = image.size();
        while (pos > 0 && image[pos - 1] == n) image[--pos] = 1;
        if (pos == 0) break;
        ++image[pos - 1];
    }
    std::vector<SetPartition> out;
    out.reserve(codes.size());
    for (const auto& code : codes) out.push_back(partition_from_code(code));
    std::sort(out.begin(), out.end());
    return out;
}

// Position scan: i < j < k < l with matching blocks at i,k and j,l.
bool oracle_is_crossing(const SetPartition& p) {
    std::vector<int> idx(static_cast<std::size_t>(p.n) + 1, 0);
    for (std::size_t b = 0; b < p.blocks.size(); ++b)
        for (const int e : p.blocks[b]) idx[static_cast<std::size_t>(e)] = static_cast<int>(b);
    for (int i = 1; i <= p.n; ++i)
        for (int j = i + 1; j <= p.n; ++j)
            for (int k = j + 1; k <= p.n; ++k)
                for (int l = k + 1; l <= p.n; ++l)
                    if (idx[i] == idx[k] && idx[j] == idx[l] && idx[i] != idx[j]) return true;
    return false;
}

// Interval partition: once a block stops, it never resumes.
bool oracle_is_interval(const SetPartition& p) {
    std::vector<int> idx(static_cast<std::size_t>(p.n) + 1, 0);
    for (std::size_t b = 0; b < p.blocks.size(); ++b)
        for (const int e : p.blocks[b]) idx[static_cast<std::size_t>(e)] = static_cast<int>(b);
    std::set<int> finished;
    for (int i = 1; i <= p.n; ++i) {
        if (finished.count(idx[i])) return false;
        if (i < p.n && idx[i + 1] != idx[i]) finished.insert(idx[i]);
    }
    return true;
}

long long bell_number(int n) {
    // Bell triangle
    std::vector<long long> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<long long> next{row.back()};
        for (const long long x : row) next.push_back(next.back() + x);
        row = std::move(next);
    }
    return row.front();
}

long long catalan_number(int n) {
    long long c = 1;
    for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

// All orderings of all partitions, filtered by the monotone conditions.
std::vector<OrderedPartition> oracle_monotone_partitions(int n) {
    std::vector<OrderedPartition> out;
    for (const auto& p : oracle_all_partitions(n)) {
        if (oracle_is_crossing(p)) continue;
        std::vector<std::size_t> perm(p.blocks.size());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        std::sort(perm.begin(), perm.end());
        do {
            bool ok = true;
            for (std::size_t a = 0; a < perm.size() && ok; ++a)
                for (std::size_t b = a + 1; b < perm.size() && ok; ++b) {
                    // sequence position a before b; inner blocks must be later
                    const Block& early = p.blocks[perm[a]];
                    const Block& late = p.blocks[perm[b]];
                    if (late.front() < early.front() && early.back() < late.back()) ok = false;
                }
            if (!ok) continue;
            OrderedPartition op{p.n, {}};
            for (const std::size_t i : perm) op.sequence.push_back(p.blocks[i]);
            out.push_back(std::move(op));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------

MomentFunctional dot_functional(DotCalculator& calc, int r, int depth, long copies) {
    MomentFunctional out;
    out.num_vars = r;
    out.max_len = depth;
    for (const auto& u : all_words(r, depth)) out.table[u] = calc.dot(u, copies);
    return out;
}

VerifySuiteReport suite_consistency(const VerifyOptions& o) {
    VerifySuiteReport r;
    r.suite = "consistency";
    const int order = pick(o.order, 4);
    const int trials = pick(o.trials, 5);
    put_param(r, "r", std::to_string(o.r));
    put_param(r, "order", std::to_string(order));
    put_param(r, "trials", std::to_string(trials));
    put_param(r, "seed", std::to_string(o.seed));
    const auto seeds = trial_seeds(o.seed, trials);
    const auto flavors = flavors_for(o);
    r.checks = run_indexed(trials, o.threads, [&](int t) {
        std::vector<CheckResult> out;
        const MomentFunctional phi = random_functional(o.r, order, seeds[static_cast<std::size_t>(t)]);
        for (const Flavor f : flavors) {
            const CumulantFunctional via_partitions = cumulants_from_moments(f, phi, order);
            DotCalculator calc(f, phi);
            CheckResult c{to_string(f) + " trial " + std::to_string(t), true, ""};
            for (const auto& w : all_words(o.r, order)) {
                const Rational dot = calc.cumulant(w);
                const Rational part = via_partitions.table.at(w);
                if (dot != part) {
                    c.pass = false;
                    c.detail = "word " + word_key(w) + ": coefficient-of-N " + dot.str() +
                               " vs partition sum " + part.str();
                    break;
                }
            }
            out.push_back(std::move(c));
        }
        return out;
    });
    return r;
}

VerifySuiteReport suite_mk3(const VerifyOptions& o) {
    VerifySuiteReport r;
    r.suite = "mk3";
    const int order = pick(o.order, 4);
    const int trials = pick(o.trials, 3);
    put_param(r, "order", std::to_string(order));
    put_param(r, "trials", std::to_string(trials));
    put_param(r, "seed", std::to_string(o.seed));
    const auto seeds = trial_seeds(o.seed, 2 * trials);
    std::vector<Flavor> universal;
    bool include_monotone = false;
    for (const Flavor f : flavors_for(o)) {
        if (f == Flavor::Monotone)
            include_monotone = true;
        else
            universal.push_back(f);
    }

    r.checks = run_indexed(trials, o.threads, [&](int t) {
        std::vector<CheckResult> out;
        if (universal.empty()) return out;
        AlgebraFamily fam;
        fam.add(1, random_functional(1, order, seeds[static_cast<std::size_t>(2 * t)]));
        fam.add(2, random_functional(1, order, seeds[static_cast<std::size_t>(2 * t + 1)]));
        for (const Flavor f : universal) {
            CheckResult c{to_string(f) + " vanishing, trial " + std::to_string(t), true, ""};
            for (int n = 2; n <= order && c.pass; ++n) {
                for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
                    LabeledWord w;
                    for (int i = 0; i < n; ++i) w.push_back({(mask >> i) & 1u ? 2 : 1, 1});
                    const Rational k = check_mk3(f, fam, w);
                    if (!k.is_zero()) {
                        c.pass = false;
                        c.detail = "pattern " + labeled_word_to_json_text(w) + " gives " + k.str();
                        break;
                    }
                }
            }
            out.push_back(std::move(c));
        }
        return out;
    });

    if (include_monotone) {
        // The documented monotone counterexample: the third cumulant of
        // (X, Y, X) equals (phi(X^2)phi(Y) - phi(X)phi(Y)phi(X))/2,
        // nonzero in general, so the vanishing property genuinely fails.
        MomentFunctional x;
        x.num_vars = 1;
        x.max_len = 3;
        x.table[{1}] = Rational(1);
        x.table[{1, 1}] = Rational(2);
        x.table[{1, 1, 1}] = Rational(1);
        MomentFunctional y = x;
        y.table[{1}] = Rational(1);
        y.table[{1, 1}] = Rational(1);
        AlgebraFamily fam;
        fam.add(1, x);
        fam.add(2, y);
        const LabeledWord xyx{{1, 1}, {2, 1}, {1, 1}};
        const Rational k3 = check_mk3(Flavor::Monotone, fam, xyx);
        const Rational expected =
            (x.table.at({1, 1}) * y.table.at({1}) -
             x.table.at({1}) * y.table.at({1}) * x.table.at({1})) /
            Rational(2);
        CheckResult c{"monotone non-vanishing counterexample", false, ""};
        c.pass = k3 == expected && !k3.is_zero() && k3 == Rational(1, 2);
        c.detail = "K3(X,Y,X) = " + k3.str() + " (expected 1/2, nonzero)";
        r.checks.push_back(std::move(c));
    }
    return r;
}

VerifySuiteReport suite_extensivity(const VerifyOptions& o) {
    VerifySuiteReport r;
    r.suite = "extensivity";
    const int order = pick(o.order, 3);
    const int trials = pick(o.trials, 3);
    put_param(r, "r", std::to_string(o.r));
    put_param(r, "order", std::to_string(order));
    put_param(r, "trials", std::to_string(trials));
    put_param(r, "seed", std::to_string(o.seed));
    const auto seeds = trial_seeds(o.seed, trials);
    const auto flavors = flavors_for(o);
    r.checks = run_indexed(trials, o.threads, [&](int t) {
        std::vector<CheckResult> out;
        const MomentFunctional phi = random_functional(o.r, order, seeds[static_cast<std::size_t>(t)]);
        for (const Flavor f : flavors) {
            DotCalculator calc(f, phi);
            for (const long copies : {2L, 3L}) {
                CheckResult c{to_string(f) + " N=" + std::to_string(copies) + " trial " +
                                  std::to_string(t),
                              true, ""};
                const MomentFunctional summed = dot_functional(calc, o.r, order, copies);
                DotCalculator outer(f, summed);
                for (const auto& w : all_words(o.r, order)) {
                    const Rational lhs = outer.cumulant(w);
                    const Rational rhs = Rational(copies) * calc.cumulant(w);
                    if (lhs != rhs) {
                        c.pass = false;
                        c.detail = "word " + word_key(w) + ": " + lhs.str() + " vs " + rhs.str();
                        break;
                    }
                }
                out.push_back(std::move(c));
            }
        }
        return out;
    });
    return r;
}

VerifySuiteReport suite_prop51(const VerifyOptions& o) {
    VerifySuiteReport r;
    r.suite = "prop51";
    const int order = pick(o.order, 4);
    const int trials = pick(o.trials, 5);
    put_param(r, "r", std::to_string(o.r));
    put_param(r, "order", std::to_string(order));
    put_param(r, "trials", std::to_string(trials));
    put_param(r, "seed", std::to_string(o.seed));
    const auto seeds = trial_seeds(o.seed, 2 * trials);
    r.checks = run_indexed(trials, o.threads, [&](int t) {
        AlgebraFamily fam;
        fam.add(1, random_functional(o.r, order, seeds[static_cast<std::size_t>(2 * t)]));
        fam.add(2, random_functional(o.r, order, seeds[static_cast<std::size_t>(2 * t + 1)]));
        MixedMomentEvaluator ev(Flavor::Monotone, fam);
        CheckResult c{"subset expansion vs direct evaluation, trial " + std::to_string(t), true, ""};
        for (const auto& w : all_words(o.r, order)) {
            const int n = static_cast<int>(w.size());
            Rational direct(0);
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                LabeledWord lw;
                for (int i = 0; i < n; ++i)
                    lw.push_back({(mask >> i) & 1u ? 2 : 1, w[static_cast<std::size_t>(i)]});
                direct += ev.eval(lw);
            }
            const Rational expanded = prop51_expansion(fam, w);
            if (direct != expanded) {
                c.pass = false;
                c.detail = "word " + word_key(w) + ": direct " + direct.str() + " vs expansion " +
                           expanded.str();
                break;
            }
        }
        return std::vector<CheckResult>{std::move(c)};
    });
    return r;
}

VerifySuiteReport suite_recurrence(const VerifyOptions& o) {
    VerifySuiteReport r;
    r.suite = "recurrence";
    const int order = pick(o.order, 4);
    const int trials = pick(o.trials, 3);
    put_param(r, "r", std::to_string(o.r));
    put_param(r, "order", std::to_string(order));
    put_param(r, "trials", std::to_string(trials));
    put_param(r, "seed", std::to_string(o.seed));
    const auto seeds = trial_seeds(o.seed, trials);
    r.checks = run_indexed(trials, o.threads, [&](int t) {
        const MomentFunctional phi = random_functional(o.r, order, seeds[static_cast<std::size_t>(t)]);
        DotCalculator calc(Flavor::Monotone, phi);
        CheckResult by_subsets{"d/dt by subsets, trial " + std::to_string(t), true, ""};
        CheckResult by_intervals{"d/dt by interval blocks, trial " + std::to_string(t), true, ""};
        for (const auto& w : all_words(o.r, order)) {
            const int n = static_cast<int>(w.size());
            const UniPoly lhs = calc.phi_t(w).derivative(Indet::T);

            UniPoly rhs1(Indet::T);
            for (unsigned mask = 1; mask < (1u << n); ++mask) {
                Block v;
                for (int i = 0; i < n; ++i)
                    if ((mask >> i) & 1u) v.push_back(i + 1);
                UniPoly term(calc.cumulant(subword_at(w, v)));
                for (const auto& gap : complement_decomposition(n, v))
                    term *= calc.phi_t(subword_at(w, gap));
                rhs1 += term;
            }
            if (by_subsets.pass && lhs != rhs1) {
                by_subsets.pass = false;
                by_subsets.detail = "word " + word_key(w) + ": " + lhs.str() + " vs " + rhs1.str();
            }

            UniPoly rhs2(Indet::T);
            for (const auto& v : interval_blocks(n)) {
                Block rest;
                for (int i = 1; i <= n; ++i)
                    if (std::find(v.begin(), v.end(), i) == v.end()) rest.push_back(i);
                UniPoly term(calc.cumulant(subword_at(w, v)));
                term *= calc.phi_t(subword_at(w, rest));
                rhs2 += term;
            }
            if (by_intervals.pass && lhs != rhs2) {
                by_intervals.pass = false;
                by_intervals.detail = "word " + word_key(w) + ": " + lhs.str() + " vs " + rhs2.str();
            }
            if (!by_subsets.pass && !by_intervals.pass) break;
        }
        return std::vector<CheckResult>{std::move(by_subsets), std::move(by_intervals)};
    });
    return r;
}

VerifySuiteReport suite_muraki(const VerifyOptions& o) {
    VerifySuiteReport r;
    r.suite = "muraki";
    const int degree = pick(o.degree, default_degree(o));
    const int trials = pick(o.trials, 3);
    put_param(r, "r", std::to_string(o.r));
    put_param(r, "degree", std::to_string(degree));
    put_param(r, "trials", std::to_string(trials));
    put_param(r, "seed", std::to_string(o.seed));
    const auto seeds = trial_seeds(o.seed, 2 * trials);
    r.checks = run_indexed(trials, o.threads, [&](int t) {
        const MomentFunctional phi_x = random_functional(o.r, degree, seeds[static_cast<std::size_t>(2 * t)]);
        const MomentFunctional phi_y =
            random_functional(o.r, degree, seeds[static_cast<std::size_t>(2 * t + 1)]);
        const NCSeries<Rational> composed =
            muraki_compose(moment_series(phi_x, degree), moment_series(phi_y, degree));

        AlgebraFamily fam;
        fam.add(1, phi_x);
        fam.add(2, phi_y);
        MixedMomentEvaluator ev(Flavor::Monotone, fam);
        NCSeries<Rational> direct(o.r, degree);
        direct.set_coeff(Word{}, Rational(1));
        for (const auto& w : all_words(o.r, degree)) {
            const int n = static_cast<int>(w.size());
            Rational sum(0);
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                LabeledWord lw;
                for (int i = 0; i < n; ++i)
                    lw.push_back({(mask >> i) & 1u ? 2 : 1, w[static_cast<std::size_t>(i)]});
                sum += ev.eval(lw);
            }
            direct.set_coeff(w, sum);
        }

        CheckResult c{"composed vs evaluator route, trial " + std::to_string(t), true, ""};
        if (direct != composed) {
            c.pass = false;
            for (const auto& w : all_words(o.r, degree)) {
                if (direct.coeff(w) != composed.coeff(w)) {
                    c.detail = "word " + word_key(w) + ": evaluator " + direct.coeff(w).str() +
                               " vs composition " + composed.coeff(w).str();
                    break;
                }
            }
        }
        return std::vector<CheckResult>{std::move(c)};
    });
    return r;
}

VerifySuiteReport suite_flow(const VerifyOptions& o) {
    VerifySuiteReport r;
    r.suite = "flow";
    const int degree = pick(o.degree, default_degree(o));
    const int trials = pick(o.trials, 2);
    put_param(r, "r", std::to_string(o.r));
    put_param(r, "degree", std::to_string(degree));
    put_param(r, "trials", std::to_string(trials));
    put_param(r, "seed", std::to_string(o.seed));
    const auto seeds = trial_seeds(o.seed, trials);
    r.checks = run_indexed(trials, o.threads, [&](int t) {
        const MomentFunctional phi = random_functional(o.r, degree, seeds[static_cast<std::size_t>(t)]);
        const FlowCheckReport report = flow_check(phi, degree);
        CheckResult c{"flow identity in (t,s), trial " + std::to_string(t), report.exact, ""};
        if (!report.exact)
            c.detail = "component " + std::to_string(report.component) + ", word " +
                       word_key(report.word) + ": " + report.lhs + " vs " + report.rhs;
        return std::vector<CheckResult>{std::move(c)};
    });
    return r;
}

VerifySuiteReport suite_ode(const VerifyOptions& o) {
    VerifySuiteReport r;
    r.suite = "ode";
    const int degree = pick(o.degree, default_degree(o));
    const int trials = pick(o.trials, 3);
    put_param(r, "r", std::to_string(o.r));
    put_param(r, "degree", std::to_string(degree));
    put_param(r, "trials", std::to_string(trials));
    put_param(r, "seed", std::to_string(o.seed));
    const auto seeds = trial_seeds(o.seed, trials);
    r.checks = run_indexed(trials, o.threads, [&](int t) {
        const MomentFunctional phi = random_functional(o.r, degree, seeds[static_cast<std::size_t>(t)]);
        const NCSeries<UniPoly> residual = ode_residual(phi, degree);
        CheckResult c{"d/dt M(t) = M(t) K(zM(t)), trial " + std::to_string(t),
                      residual.is_zero_series(), ""};
        if (!c.pass) {
            const auto& [w, p] = *residual.coefficients().begin();
            c.detail = "word " + word_key(w) + ": residual " + p.str();
        }
        return std::vector<CheckResult>{std::move(c)};
    });
    return r;
}

VerifySuiteReport suite_free_relation(const VerifyOptions& o) {
    VerifySuiteReport r;
    r.suite = "free-relation";
    const int degree = pick(o.degree, pick(o.order, default_degree(o)));
    const int trials = pick(o.trials, 5);
    put_param(r, "r", std::to_string(o.r));
    put_param(r, "degree", std::to_string(degree));
    put_param(r, "trials", std::to_string(trials));
    put_param(r, "seed", std::to_string(o.seed));
    const auto seeds = trial_seeds(o.seed, trials);
    r.checks = run_indexed(trials, o.threads, [&](int t) {
        const MomentFunctional phi = random_functional(o.r, degree, seeds[static_cast<std::size_t>(t)]);
        const NCSeries<Rational> rx = r_transform(phi, degree);
        const CumulantFunctional kf = cumulants_from_moments(Flavor::Free, phi, degree);
        CheckResult c{"series relation vs partition route, trial " + std::to_string(t), true, ""};
        for (const auto& w : all_words(o.r, degree)) {
            if (rx.coeff(w) != kf.table.at(w)) {
                c.pass = false;
                c.detail = "word " + word_key(w) + ": relation " + rx.coeff(w).str() +
                           " vs partitions " + kf.table.at(w).str();
                break;
            }
        }
        CheckResult closed{"degree-2 closed form, trial " + std::to_string(t), true, ""};
        for (int i = 1; i <= o.r && closed.pass; ++i)
            for (int j = 1; j <= o.r; ++j) {
                const Rational want = phi.moment({i, j}) - phi.moment({i}) * phi.moment({j});
                if (rx.coeff({i, j}) != want) {
                    closed.pass = false;
                    closed.detail = "word " + word_key({i, j}) + ": " + rx.coeff({i, j}).str() +
                                    " vs " + want.str();
                    break;
                }
            }
        return std::vector<CheckResult>{std::move(c), std::move(closed)};
    });
    return r;
}

VerifySuiteReport suite_counts(const VerifyOptions& o) {
    VerifySuiteReport r;
    r.suite = "counts";
    const int max_n = pick(o.max_n, 8);
    if (max_n > 9)
        throw std::invalid_argument("the counts oracle enumerates n^n maps; n <= 9 only");
    const int monotone_n = std::min(max_n, 6);
    put_param(r, "max_n", std::to_string(max_n));
    put_param(r, "monotone_max_n", std::to_string(monotone_n));
    for (int n = 1; n <= max_n; ++n) {
        const auto oracle = oracle_all_partitions(n);
        std::vector<SetPartition> oracle_nc, oracle_iv;
        for (const auto& p : oracle) {
            if (!oracle_is_crossing(p)) oracle_nc.push_back(p);
            if (oracle_is_interval(p)) oracle_iv.push_back(p);
        }

        auto all = enumerate_partitions(n, PartitionKind::All, max_n);
        auto nc = enumerate_partitions(n, PartitionKind::NonCrossing, max_n);
        auto iv = enumerate_partitions(n, PartitionKind::Interval, max_n);
        std::sort(all.begin(), all.end());
        std::sort(nc.begin(), nc.end());
        std::sort(iv.begin(), iv.end());

        CheckResult c{"n=" + std::to_string(n) + " partition classes", true, ""};
        const long long bell = bell_number(n);
        const long long catalan = catalan_number(n);
        const long long intervals = 1LL << (n - 1);
        if (all != oracle || static_cast<long long>(all.size()) != bell)
            c = {c.name, false, "all: " + std::to_string(all.size()) + " vs oracle " +
                                    std::to_string(oracle.size()) + ", Bell " + std::to_string(bell)};
        else if (nc != oracle_nc || static_cast<long long>(nc.size()) != catalan)
            c = {c.name, false, "non-crossing: " + std::to_string(nc.size()) + " vs oracle " +
                                    std::to_string(oracle_nc.size()) + ", Catalan " +
                                    std::to_string(catalan)};
        else if (iv != oracle_iv || static_cast<long long>(iv.size()) != intervals)
            c = {c.name, false, "interval: " + std::to_string(iv.size()) + " vs oracle " +
                                    std::to_string(oracle_iv.size()) + ", 2^(n-1) " +
                                    std::to_string(intervals)};
        else
            c.detail = std::to_string(bell) + " / " + std::to_string(catalan) + " / " +
                       std::to_string(intervals);
        r.checks.push_back(std::move(c));
    }
    for (int n = 1; n <= monotone_n; ++n) {
        auto main_path = enumerate_monotone_partitions(n, std::max(max_n, kDefaultEnumerationBound));
        std::sort(main_path.begin(), main_path.end());
        const auto oracle = oracle_monotone_partitions(n);
        CheckResult c{"n=" + std::to_string(n) + " ordered non-crossing filter", main_path == oracle,
                      std::to_string(oracle.size()) + " sequences"};
        if (!c.pass)
            c.detail = "enumerated " + std::to_string(main_path.size()) + " vs oracle " +
                       std::to_string(oracle.size());
        r.checks.push_back(std::move(c));
    }
    for (int n = 1; n <= monotone_n; ++n) {
        CheckResult c{"n=" + std::to_string(n) + " leading weights match class membership", true, ""};
        for (const auto& p : oracle_all_partitions(n)) {
            const bool nc = !oracle_is_crossing(p);
            const bool iv = oracle_is_interval(p);
            if (highest_coefficient(Flavor::Tensor, p) != Rational(1) ||
                highest_coefficient(Flavor::Free, p) != Rational(nc ? 1 : 0) ||
                highest_coefficient(Flavor::Boolean, p) != Rational(iv ? 1 : 0)) {
                c.pass = false;
                c.detail = "partition " + partition_to_json_text(p);
                break;
            }
        }
        r.checks.push_back(std::move(c));
    }
    return r;
}

VerifySuiteReport suite_dot_associativity(const VerifyOptions& o) {
    VerifySuiteReport r;
    r.suite = "dot-associativity";
    const int order = pick(o.order, 3);
    const int trials = pick(o.trials, 3);
    put_param(r, "r", std::to_string(o.r));
    put_param(r, "order", std::to_string(order));
    put_param(r, "trials", std::to_string(trials));
    put_param(r, "seed", std::to_string(o.seed));
    const auto seeds = trial_seeds(o.seed, trials);
    const auto flavors = flavors_for(o);
    r.checks = run_indexed(trials, o.threads, [&](int t) {
        std::vector<CheckResult> out;
        const MomentFunctional phi = random_functional(o.r, order, seeds[static_cast<std::size_t>(t)]);
        for (const Flavor f : flavors) {
            DotCalculator calc(f, phi);
            CheckResult c{to_string(f) + " nested vs flat, trial " + std::to_string(t), true, ""};
            for (const long outer : {1L, 2L}) {
                for (const long inner : {1L, 2L}) {
                    for (const auto& w : all_words(o.r, order)) {
                        const Rational nested = calc.dot_nested(w, outer, inner);
                        const Rational flat = calc.dot(w, outer * inner);
                        if (nested != flat) {
                            c.pass = false;
                            c.detail = "word " + word_key(w) + ", (" + std::to_string(outer) + "," +
                                       std::to_string(inner) + "): nested " + nested.str() +
                                       " vs flat " + flat.str();
                            break;
                        }
                    }
                    if (!c.pass) break;
                }
                if (!c.pass) break;
            }
            out.push_back(std::move(c));
        }
        return out;
    });
    return r;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "consistency", "mk3", "extensivity", "prop51", "recurrence", "muraki",
        "flow", "ode", "free-relation", "counts", "dot-associativity"};
    return names;
}

VerifySuiteReport run_suite(const std::string& suite, const VerifyOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    VerifySuiteReport report;
    if (suite == "consistency") report = suite_consistency(options);
    else if (suite == "mk3") report = suite_mk3(options);
    else if (suite == "extensivity") report = suite_extensivity(options);
    else if (suite == "prop51") report = suite_prop51(options);
    else if (suite == "recurrence") report = suite_recurrence(options);
    else if (suite == "muraki") report = suite_muraki(options);
    else if (suite == "flow") report = suite_flow(options);
    else if (suite == "ode") report = suite_ode(options);
    else if (suite == "free-relation") report = suite_free_relation(options);
    else if (suite == "counts") report = suite_counts(options);
    else if (suite == "dot-associativity") report = suite_dot_associativity(options);
    else throw std::invalid_argument("unknown suite \"" + suite + "\"");
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace cumulantkit
