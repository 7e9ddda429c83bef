#ifndef EHMM_ORACLES_HPP
#define EHMM_ORACLES_HPP

#include <cstdint>
#include <span>

#include "ehmm/constructions.hpp"

// Brute-force cross-checks for the forward algorithm. Everything in this
// namespace is exponential in the horizon and guarded accordingly; none of
// it belongs on a production path.
namespace ehmm::oracle {

/// -ln of the model's joint probability of the data, by explicit summation
/// over all positive-probability state paths:
///   sum over q_{1:T} of pi(q_1) prod_t P(q_t -> q_{t+1})
///                      prod_t sum_e Gamma_{q_t}(e) xi^e_t(x_t).
/// Throws LimitExceeded once the path tree exceeds `max_visits` nodes.
double path_sum(const Ehmm& model, const ExpertAdvice& advice,
                std::span<const double> data,
                std::int64_t max_visits = 1'000'000);

/// -ln of the exact mixture over all 2^(T-1) segmentations:
///   sum over P of alpha^(|P|-1) (1-alpha)^(T-|P|)
///              prod over cells C of B^mode_C(x_C),
/// where B^mode_C freezes or sleeps the union model on cell C. Equals the
/// share-operator forward run by the unrolling of the share transition.
double segmentation_mixture(SegmentMode mode, double alpha,
                            const Ehmm& union_model,
                            const ExpertAdvice& advice,
                            std::span<const double> data,
                            std::int64_t max_horizon = 14);

}  // namespace ehmm::oracle

#endif  // EHMM_ORACLES_HPP
