#pragma once

#include <cstdint>
#include <ostream>

#include <Eigen/Core>

namespace tait {

/// Element of the three-element field, stored in balanced form {-1, 0, +1}.
///
/// Every arithmetic operation normalizes its result, so `value()` is always
/// one of -1, 0, 1 and 2 is identified with -1.
class F3 {
public:
    constexpr F3() = default;
    constexpr F3(int v) : v_(normalize(v)) {}  // NOLINT: implicit from integer literals

    constexpr int value() const { return v_; }
    constexpr bool is_zero() const { return v_ == 0; }

    constexpr F3 operator-() const { return F3(-v_); }
    constexpr F3& operator+=(F3 o) { v_ = normalize(v_ + o.v_); return *this; }
    constexpr F3& operator-=(F3 o) { v_ = normalize(v_ - o.v_); return *this; }
    constexpr F3& operator*=(F3 o) { v_ = static_cast<std::int8_t>(v_ * o.v_); return *this; }
    // Nonzero elements are their own inverses.
    constexpr F3& operator/=(F3 o) { return *this *= o; }

    friend constexpr F3 operator+(F3 a, F3 b) { return a += b; }
    friend constexpr F3 operator-(F3 a, F3 b) { return a -= b; }
    friend constexpr F3 operator*(F3 a, F3 b) { return a *= b; }
    friend constexpr F3 operator/(F3 a, F3 b) { return a /= b; }
    friend constexpr bool operator==(F3 a, F3 b) { return a.v_ == b.v_; }

    friend std::ostream& operator<<(std::ostream& os, F3 a) { return os << a.value(); }

private:
    static constexpr std::int8_t normalize(int v) {
        int r = v % 3;
        if (r < 0) r += 3;
        return static_cast<std::int8_t>(r == 2 ? -1 : r);
    }

    std::int8_t v_ = 0;
};

/// Multiplicative inverse; precondition a != 0.
constexpr F3 inverse(F3 a) { return a; }

/// Legendre symbol (a/3). With the balanced representative it is the value itself.
constexpr int legendre(F3 a) { return a.value(); }

// Eigen's scalar hooks. abs/abs2 are only here so generic Eigen code compiles;
// nothing in this library relies on an ordering of F3.
inline F3 abs(F3 a) { return a.is_zero() ? F3(0) : F3(1); }
inline F3 abs2(F3 a) { return a * a; }
inline F3 conj(F3 a) { return a; }
inline F3 real(F3 a) { return a; }
inline F3 imag(F3) { return F3(0); }

}  // namespace tait

namespace Eigen {

template <>
struct NumTraits<tait::F3> : GenericNumTraits<tait::F3> {
    using Real = tait::F3;
    using NonInteger = tait::F3;
    using Literal = tait::F3;
    using Nested = tait::F3;

    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 1,
        RequireInitialization = 0,
        ReadCost = 1,
        AddCost = 2,
        MulCost = 2,
    };

    static inline tait::F3 epsilon() { return tait::F3(0); }
    static inline tait::F3 dummy_precision() { return tait::F3(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace tait {

using F3Matrix = Eigen::Matrix<F3, Eigen::Dynamic, Eigen::Dynamic>;
using F3Vector = Eigen::Matrix<F3, Eigen::Dynamic, 1>;

/// Symmetric matrix over F3. Symmetry is a precondition checked by the
/// routines that rely on it (see `is_symmetric`), not by the type.
using SymF3Matrix = F3Matrix;

}  // namespace tait
