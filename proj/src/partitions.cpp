#include "cumulantkit/partitions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "cumulantkit/errors.hpp"

namespace cumulantkit {

SetPartition OrderedPartition::underlying() const {
    SetPartition p{n, sequence};
    std::sort(p.blocks.begin(), p.blocks.end(),
              [](const Block& a, const Block& b) { return a.front() < b.front(); });
    return p;
}

SetPartition make_partition(int n, std::vector<Block> blocks) {
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    int covered = 0;
    for (auto& b : blocks) {
        if (b.empty()) throw std::invalid_argument("empty block");
        std::sort(b.begin(), b.end());
        for (std::size_t i = 0; i < b.size(); ++i) {
            const int e = b[i];
            if (e < 1 || e > n) throw std::invalid_argument("element outside 1.." + std::to_string(n));
            if (i > 0 && b[i] == b[i - 1]) throw std::invalid_argument("repeated element in block");
            if (seen[static_cast<std::size_t>(e)]) throw std::invalid_argument("blocks not disjoint");
            seen[static_cast<std::size_t>(e)] = 1;
            ++covered;
        }
    }
    if (covered != n) throw std::invalid_argument("blocks do not cover 1.." + std::to_string(n));
    std::sort(blocks.begin(), blocks.end(),
              [](const Block& a, const Block& b) { return a.front() < b.front(); });
    return SetPartition{n, std::move(blocks)};
}

namespace {

void check_bound(int n, int bound) {
    if (n < 1) throw std::invalid_argument("ground set size must be >= 1");
    if (n > bound)
        throw std::invalid_argument("n = " + std::to_string(n) + " exceeds enumeration bound " +
                                    std::to_string(bound));
}

// Element-by-element growth: element i joins an existing block or opens a
// new one. Produces canonical block order directly.
void grow(int n, int next, std::vector<Block>& acc, std::vector<SetPartition>& out) {
    if (next > n) {
        out.push_back(SetPartition{n, acc});
        return;
    }
    // index loop: the recursion below grows and shrinks acc
    const std::size_t existing = acc.size();
    for (std::size_t i = 0; i < existing; ++i) {
        acc[i].push_back(next);
        grow(n, next + 1, acc, out);
        acc[i].pop_back();
    }
    acc.push_back({next});
    grow(n, next + 1, acc, out);
    acc.pop_back();
}

} // namespace

std::vector<SetPartition> enumerate_partitions(int n, PartitionKind kind, int bound) {
    check_bound(n, bound);
    if (kind == PartitionKind::Interval) {
        // One partition per composition of n.
        std::vector<SetPartition> out;
        const int masks = 1 << (n - 1);
        for (int m = 0; m < masks; ++m) {
            std::vector<Block> blocks;
            Block cur{1};
            for (int i = 1; i < n; ++i) {
                if (m & (1 << (i - 1))) {
                    blocks.push_back(cur);
                    cur.clear();
                }
                cur.push_back(i + 1);
            }
            blocks.push_back(cur);
            out.push_back(SetPartition{n, std::move(blocks)});
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    std::vector<SetPartition> all;
    std::vector<Block> acc;
    grow(n, 1, acc, all);
    if (kind == PartitionKind::All) return all;
    std::vector<SetPartition> nc;
    for (auto& p : all)
        if (!is_crossing(p)) nc.push_back(std::move(p));
    return nc;
}

bool is_crossing(const SetPartition& p) {
    for (std::size_t x = 0; x < p.blocks.size(); ++x) {
        for (std::size_t y = 0; y < p.blocks.size(); ++y) {
            if (x == y) continue;
            const Block& v = p.blocks[x];
            const Block& w = p.blocks[y];
            // a < b < c < d with a,c in v, b,d in w
            for (std::size_t i = 0; i + 1 < v.size(); ++i)
                for (std::size_t j = i; j + 1 < v.size(); ++j)
                    for (const int b : w)
                        if (v[i] < b && b < v[j + 1])
                            for (const int d : w)
                                if (d > v[j + 1]) return true;
        }
    }
    return false;
}

bool is_interval_partition(const SetPartition& p) {
    for (const auto& b : p.blocks)
        if (b.back() - b.front() + 1 != static_cast<int>(b.size())) return false;
    return true;
}

bool nests_inside(const Block& v, const Block& w) {
    // sorted blocks: need some element of w below v and some above v
    return w.front() < v.front() && w.back() > v.back();
}

std::vector<std::pair<std::size_t, std::size_t>> nesting_order(const SetPartition& p) {
    if (is_crossing(p)) throw std::invalid_argument("nesting order requires a non-crossing partition");
    std::vector<std::pair<std::size_t, std::size_t>> order;
    for (std::size_t i = 0; i < p.blocks.size(); ++i)
        for (std::size_t j = 0; j < p.blocks.size(); ++j)
            if (i != j && nests_inside(p.blocks[i], p.blocks[j])) order.emplace_back(i, j);
    return order;
}

namespace {

// Backtracks over sequences in which every block appears after all blocks
// it nests inside; lexicographic in canonical block indices.
void extend_orderings(const SetPartition& p,
                      const std::vector<std::pair<std::size_t, std::size_t>>& nests,
                      std::vector<std::size_t>& seq, std::vector<char>& used,
                      std::vector<OrderedPartition>* out, long long* count) {
    if (seq.size() == p.blocks.size()) {
        if (out) {
            OrderedPartition op{p.n, {}};
            op.sequence.reserve(seq.size());
            for (const std::size_t idx : seq) op.sequence.push_back(p.blocks[idx]);
            out->push_back(std::move(op));
        }
        if (count) ++*count;
        return;
    }
    for (std::size_t cand = 0; cand < p.blocks.size(); ++cand) {
        if (used[cand]) continue;
        bool ready = true;
        for (const auto& [inner, outer] : nests)
            if (inner == cand && !used[outer]) { ready = false; break; }
        if (!ready) continue;
        used[cand] = 1;
        seq.push_back(cand);
        extend_orderings(p, nests, seq, used, out, count);
        seq.pop_back();
        used[cand] = 0;
    }
}

} // namespace

std::vector<OrderedPartition> enumerate_monotone_partitions(int n, int bound) {
    check_bound(n, bound);
    std::vector<OrderedPartition> out;
    for (const auto& p : enumerate_partitions(n, PartitionKind::NonCrossing, bound)) {
        const auto nests = nesting_order(p);
        std::vector<std::size_t> seq;
        std::vector<char> used(p.blocks.size(), 0);
        extend_orderings(p, nests, seq, used, &out, nullptr);
    }
    return out;
}

long long count_monotone_orderings(const SetPartition& p) {
    const auto nests = nesting_order(p);
    std::vector<std::size_t> seq;
    std::vector<char> used(p.blocks.size(), 0);
    long long count = 0;
    extend_orderings(p, nests, seq, used, nullptr, &count);
    return count;
}

std::vector<Block> interval_blocks(int n) {
    if (n < 1) throw std::invalid_argument("ground set size must be >= 1");
    std::vector<Block> out;
    out.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
    for (int len = 1; len <= n; ++len)
        for (int start = 1; start + len - 1 <= n; ++start) {
            Block b(static_cast<std::size_t>(len));
            for (int k = 0; k < len; ++k) b[static_cast<std::size_t>(k)] = start + k;
            out.push_back(std::move(b));
        }
    return out;
}

std::vector<Block> complement_decomposition(int n, const Block& v) {
    Block k = v;
    std::sort(k.begin(), k.end());
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (k[i] < 1 || k[i] > n) throw std::invalid_argument("element outside 1.." + std::to_string(n));
        if (i > 0 && k[i] == k[i - 1]) throw std::invalid_argument("repeated element");
    }
    // sentinels 0 and n+1 turn every gap into a half-open run
    k.insert(k.begin(), 0);
    k.push_back(n + 1);
    std::vector<Block> runs;
    for (std::size_t i = 1; i < k.size(); ++i) {
        if (k[i - 1] + 1 < k[i]) {
            Block run;
            for (int e = k[i - 1] + 1; e < k[i]; ++e) run.push_back(e);
            runs.push_back(std::move(run));
        }
    }
    return runs;
}

Rational highest_coefficient(Flavor flavor, const SetPartition& p) {
    switch (flavor) {
        case Flavor::Tensor: return Rational(1);
        case Flavor::Free: return is_crossing(p) ? Rational(0) : Rational(1);
        case Flavor::Boolean:
            return (!is_crossing(p) && is_interval_partition(p)) ? Rational(1) : Rational(0);
        case Flavor::Monotone: break;
    }
    throw std::invalid_argument("highest coefficients are defined for universal products only");
}

namespace {

nlohmann::json blocks_json(const std::vector<Block>& blocks) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& b : blocks) out.push_back(b);
    return out;
}

} // namespace

std::string partition_to_json_text(const SetPartition& p) {
    return nlohmann::json{{"n", p.n}, {"blocks", blocks_json(p.blocks)}}.dump();
}

std::string ordered_partition_to_json_text(const OrderedPartition& p) {
    const SetPartition base = p.underlying();
    std::vector<std::size_t> order;
    order.reserve(p.sequence.size());
    for (const auto& v : p.sequence) {
        const auto it = std::find(base.blocks.begin(), base.blocks.end(), v);
        order.push_back(static_cast<std::size_t>(it - base.blocks.begin()));
    }
    return nlohmann::json{{"n", p.n}, {"blocks", blocks_json(base.blocks)}, {"order", order}}.dump();
}

SetPartition partition_from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("n") || !j.contains("blocks"))
        throw ParseError("partition needs n and blocks");
    std::vector<Block> blocks;
    for (const auto& b : j["blocks"]) blocks.push_back(b.get<Block>());
    return make_partition(j["n"].get<int>(), std::move(blocks));
}

} // namespace cumulantkit
