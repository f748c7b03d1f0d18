#ifndef LIFTEDMC_DISTRIBUTIONS_HPP
#define LIFTEDMC_DISTRIBUTIONS_HPP

#include <map>
#include <string>

#include "liftedmc/types.hpp"

namespace liftedmc {

typedef std::map<std::string, Real> FamilyParams;

// Positive unimodal weight sequence m_1..m_n with its mode index j*
// (smallest index attaining the maximum) and normalizer z' = sum of weights.
// Immutable after construction; construction validates positivity and
// unimodality.
class UnimodalWeights {
public:
    // Validates and builds from raw weights. Throws NonPositiveWeightError or
    // NotUnimodalError.
    static UnimodalWeights from_weights(const Vector& raw);

    // Built-in families: "uniform", "symmetric-tent" (alias "tent"),
    // "asymmetric-tent", "geometric-peak" (params r, optional j_star),
    // "plateau" (params height, width). Throws UnknownFamilyError /
    // InvalidParamError.
    static UnimodalWeights family(const std::string& name, Index n,
                                  const FamilyParams& params = {});

    Index n() const { return weights_.size(); }
    const Vector& weights() const { return weights_; }
    Real weight(Index j) const { return weights_[j - 1]; } // 1-based
    Index mode_index() const { return mode_index_; }       // j*, 1-based
    Real normalizer() const { return normalizer_; }        // z'

private:
    UnimodalWeights(Vector w, Index mode, Real z)
        : weights_(std::move(w)), mode_index_(mode), normalizer_(z) {}

    Vector weights_;
    Index mode_index_;
    Real normalizer_;
};

// pi(j) = m_j / z'. Entries sum to 1 within 1e-12.
Vector normalize(const UnimodalWeights& w);

// true iff m_j^2 >= m_{j-1} m_{j+1} for j = 2..n-1 (tiny relative slack for
// computed weights that satisfy the inequality with equality).
bool is_log_concave(const UnimodalWeights& w);

// Shortening radii around the mode: d2 is the largest index above j* whose
// weighted deficiency sum stays below half the right-side total, d1 the
// smallest such index below j*, and d** = max{d2 - j*, j* - d1}.
struct ShorteningRadii {
    Index d1;
    Index d2;
    Index d_double_star;
};

// Requires odd n. When the candidate range above (resp. below) the mode is
// empty, that side defaults to d2 = j* (resp. d1 = j*) and contributes zero
// to d**; when no candidate satisfies the inequality, d2 = j* + 1
// (resp. d1 = j* - 1).
ShorteningRadii shortening_radii(const UnimodalWeights& w);

// The one-sided deficiency sums the radii are defined through; exposed so
// tests can probe the boundary behaviour directly.
Real right_deficiency_sum(const UnimodalWeights& w, Index d2);
Real left_deficiency_sum(const UnimodalWeights& w, Index d1);

} // namespace liftedmc

#endif // LIFTEDMC_DISTRIBUTIONS_HPP
