#ifndef CUMULANTKIT_INDEPENDENCE_HPP
#define CUMULANTKIT_INDEPENDENCE_HPP

#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "cumulantkit/flavor.hpp"
#include "cumulantkit/moments.hpp"
#include "cumulantkit/polynomial.hpp"

namespace cumulantkit {

struct LabeledLetter {
    int label = 0;
    int var = 0;
    friend bool operator==(const LabeledLetter&, const LabeledLetter&) = default;
};

// A word of algebra elements: letter k lives in the algebra with the given
// label and is that algebra's variable `var`.
using LabeledWord = std::vector<LabeledLetter>;

LabeledWord labeled_word_from_json_text(const std::string& text);
std::string labeled_word_to_json_text(const LabeledWord& w);

/// Family of algebras indexed by integer labels; the labels' natural order
/// is the linear order used by monotone independence. Functionals are
/// shared, so registering one table under many labels is cheap.
class AlgebraFamily {
public:
    void add(int label, MomentFunctional phi);
    void add(int label, std::shared_ptr<const MomentFunctional> phi);
    const MomentFunctional& at(int label) const;
    const std::map<int, std::shared_ptr<const MomentFunctional>>& members() const {
        return members_;
    }

private:
    std::map<int, std::shared_ptr<const MomentFunctional>> members_;
};

// Which strict local maximum the monotone reduction extracts first.
// The result is order-independent; exposing the choice lets tests check
// exactly that.
enum class PeakChoice { Leftmost, Rightmost };

/// Computes mixed moments of labeled words from per-algebra moment tables
/// by the calculation rule of the chosen independence. Carries a
/// memoization cache, so one evaluator instance should be reused across
/// related calls; instances are independent and not thread-shared.
class MixedMomentEvaluator {
public:
    MixedMomentEvaluator(Flavor flavor, const AlgebraFamily& family,
                         PeakChoice peaks = PeakChoice::Leftmost);

    Rational eval(const LabeledWord& w);

private:
    // Formal linear combination of words of one algebra; the empty word is
    // the algebra unit.
    using Element = std::map<Word, Rational>;
    struct Run {
        int label;
        Element elem;
    };

    Rational eval_runs(const std::vector<Run>& runs);
    Rational eval_tensor(const std::vector<Run>& runs);
    Rational eval_boolean(const std::vector<Run>& runs);
    Rational eval_monotone(std::vector<Run> runs);
    Rational eval_free(const std::vector<Run>& runs);

    Rational state_of(int label, const Element& e) const;
    static std::vector<Run> merge_adjacent(std::vector<Run> runs);
    static std::string cache_key(const std::vector<Run>& runs);

    Flavor flavor_;
    const AlgebraFamily* family_;
    PeakChoice peaks_;
    std::unordered_map<std::string, Rational> cache_;
};

/// One-shot mixed moment with a fresh evaluator.
Rational mixed_moment(Flavor flavor, const AlgebraFamily& family, const LabeledWord& w);

/// Expands sums of independent identically distributed copies: all copy
/// algebras share the functional phi and, for monotone independence, the
/// copy index order 1 < 2 < ... < N. Reuses one evaluator across calls.
class DotCalculator {
public:
    DotCalculator(Flavor flavor, const MomentFunctional& phi);

    /// phi(N.X_{w_1} ... N.X_{w_n}): sum of the mixed moments over all
    /// copy assignments {1..N}^n; 0.X = 0, so N = 0 gives 0 for n >= 1.
    Rational dot(const Word& w, long copies);

    /// phi(outer.(inner.X_{w_1}) ...): the outer expansion runs over the
    /// joint distribution of the inner sums, so both label levels are
    /// expanded explicitly.
    Rational dot_nested(const Word& w, long outer, long inner);

    /// The polynomial p with p(N) = dot(w, N), degree <= |w|, zero
    /// constant term; recovered by interpolation at N = 0..|w| and
    /// returned in the indeterminate t.
    UniPoly phi_t(const Word& w);

    /// Joint cumulant of (X_{w_1},...,X_{w_n}): the coefficient of N.
    Rational cumulant(const Word& w);

    const MomentFunctional& functional() const { return *phi_; }

private:
    Flavor flavor_;
    const MomentFunctional* phi_;
    AlgebraFamily copies_;
    MixedMomentEvaluator ev_;
};

Rational dot_moment(Flavor flavor, const MomentFunctional& phi, const Word& w, long copies);
UniPoly phi_t(Flavor flavor, const MomentFunctional& phi, const Word& w);

/// Pairwise-sum expansion for two monotone independent families
/// (lower label = outer part, higher label = inner part):
///   phi((X+Y)_{w_1} ... (X+Y)_{w_n})
///     = sum over subsets V of positions of
///       phi_X(w|_V) * prod_j phi_Y(w|_{V_j}),
/// the V_j being the complement runs of V. Requires exactly two labels.
Rational prop51_expansion(const AlgebraFamily& family, const Word& w);

} // namespace cumulantkit

#endif
