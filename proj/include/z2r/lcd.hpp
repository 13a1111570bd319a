#pragma once

#include <optional>
#include <string>
#include <vector>

#include "z2r/code.hpp"

namespace z2r {

/// Outcome of the separability-based sufficient condition.
enum class SeparableVerdict {
    kNotApplicable,  ///< C_alpha is not binary LCD or C_beta is not R-LCD
    kHolds,          ///< both projections LCD and C is LCD
    kFails,          ///< both projections LCD yet C is not LCD
};

const char* to_string(SeparableVerdict v);

struct LcdReport {
    bool is_lcd = false;  ///< ground truth
    bool gram_invertible = false;
    bool row_unit_condition = false;
    /// R-independence of the generator rows; nullopt when k is too large to verify.
    std::optional<bool> r_independent;
    SeparableVerdict separable_sufficient = SeparableVerdict::kNotApplicable;
    std::string method_used;
};

/// C is LCD iff Phi(C) is binary LCD iff B B^T is invertible for a basis B of Phi(C).
/// For Gray length <= 16 the answer is cross-checked against Phi(C) ∩ Phi(C)^⊥ by enumeration.
bool is_lcd_ground_truth(const Code& c);

/// Sufficient condition: the Gram matrix of the generator is invertible over R.
bool gram_criterion(const Code& c);

/// Every row has a unit somewhere in its R block.
bool row_unit_condition(const MixedMatrix& g);

inline constexpr std::size_t kMaxIndependenceRows = 12;
inline constexpr std::size_t kVerifiedIndependenceRows = 8;

struct RIndependence {
    bool independent = false;
    /// Every zero combination sum d_j w_j = 0 found had all d_j in {0, u}.
    bool coefficients_in_maximal_ideal = true;
};

/// Exhaustive check over all 4^k coefficient tuples. Throws PreconditionError for k > kMaxIndependenceRows.
/// A list containing a zero vector is never independent.
RIndependence r_independent(const std::vector<MixedVector>& rows);

struct ConverseCheck {
    bool is_lcd = false;
    bool independence_verified = false;
};

/// Row-unit refinement: under the row-unit condition and R-independent rows, LCD iff Gram invertible.
/// Throws PreconditionError when the row-unit condition fails or the rows are found dependent; for more than
/// kVerifiedIndependenceRows rows independence is assumed and reported as unverified.
ConverseCheck lcd_iff_gram(const Code& c);

/// C_alpha binary LCD and C_beta R-LCD imply C LCD (as stated); evaluates the hypothesis and the conclusion.
SeparableVerdict separable_sufficient(const Code& c);

/// All criteria, none short-circuited.
LcdReport analyze_lcd(const Code& c);

}  // namespace z2r
