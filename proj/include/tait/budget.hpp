#pragma once

#include <stdexcept>

namespace tait {

/// An enumeration would exceed its configured size limit.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Default limits; every one can be overridden by the caller.
namespace budget {
inline constexpr int kMaxFaces = 28;          // alpha and Heawood enumeration, 2^|F| terms
inline constexpr int kMaxBruteVertices = 14;  // edge-coloring backtracking
inline constexpr int kMaxGauOrder = 9;        // 3^n vector enumeration
inline constexpr int kHardMaxFaces = 62;      // alpha masks are 64-bit
}  // namespace budget

}  // namespace tait
