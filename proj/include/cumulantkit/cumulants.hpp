#ifndef CUMULANTKIT_CUMULANTS_HPP
#define CUMULANTKIT_CUMULANTS_HPP

#include <map>
#include <string>

#include "cumulantkit/independence.hpp"
#include "cumulantkit/moments.hpp"
#include "cumulantkit/partitions.hpp"

namespace cumulantkit {

/// Joint cumulants of one flavor, complete for every word of length
/// 1..max_order over 1..num_vars.
struct CumulantFunctional {
    Flavor flavor = Flavor::Tensor;
    int num_vars = 0;
    int max_order = 0;
    std::map<Word, Rational> table;

    Rational cumulant(const Word& w) const; // throws DepthError beyond depth
    void validate() const;
};

CumulantFunctional cumulants_from_json_text(const std::string& text);
std::string cumulants_to_json_text(const CumulantFunctional& k);
CumulantFunctional load_cumulants(const std::string& path);
void save_cumulants(const CumulantFunctional& k, const std::string& path);

/// Joint cumulant as the coefficient of N in phi(N.X_{w_1} ... N.X_{w_n}).
Rational cumulant_dot(Flavor flavor, const MomentFunctional& phi, const Word& w);

/// Product over the blocks V of p of K(w restricted to V).
Rational cumulant_of_partition(const CumulantFunctional& k, const SetPartition& p, const Word& w);

/// Weight of a partition in the moment-cumulant sum of the flavor:
/// 1 for every member of the flavor's partition class, and for monotone
/// the number of admissible block orders divided by |blocks|!.
Rational partition_weight(Flavor flavor, const SetPartition& p);

/// Moments as partition sums of cumulant products:
/// all partitions (tensor), non-crossing (free), interval (boolean),
/// ordered non-crossing with 1/|blocks|! weights (monotone).
MomentFunctional moments_from_cumulants(const CumulantFunctional& k, int max_order);

/// Triangular inversion of moments_from_cumulants, solved by word length.
CumulantFunctional cumulants_from_moments(Flavor flavor, const MomentFunctional& phi, int max_order);

/// Monotone partition sum materialized over ordered partitions instead of
/// per-partition weights; cross-check path for moments_from_cumulants.
Rational monotone_moment_via_ordered_partitions(const CumulantFunctional& k, const Word& w);

/// The joint distribution of the letters of w under the flavor's
/// independence, exposed as a functional on position words:
/// table[(i_1..i_k)] = mixed moment of the letters at those positions.
MomentFunctional position_functional(Flavor flavor, const AlgebraFamily& family, const LabeledWord& w);

/// Cumulant of a word mixing at least two independent algebras; exactly 0
/// for the universal flavors, and in general nonzero for monotone.
Rational check_mk3(Flavor flavor, const AlgebraFamily& family, const LabeledWord& w);

} // namespace cumulantkit

#endif
