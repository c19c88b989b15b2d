#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vcn/errors.hpp"

namespace vcn {

using Int = mpz_class;

/// Exponent pair of a term c * t^t_pow * s^s_pow.
/// Canonical term order: ascending by (s_pow, t_pow), lexicographically.
struct Exp {
    int t_pow = 0;
    int s_pow = 0;

    friend bool operator==(const Exp&, const Exp&) = default;
    friend bool operator<(const Exp& a, const Exp& b) {
        if (a.s_pow != b.s_pow) return a.s_pow < b.s_pow;
        return a.t_pow < b.t_pow;
    }
};

/// Element of Z[t, t^-1, s, s^-1] with exact integer coefficients.
/// Canonical form: no stored coefficient is zero; the zero polynomial is
/// the empty term map. Values are immutable in spirit: all operations
/// return new polynomials, mutating operators rebuild canonical form.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long c) { if (c != 0) terms_[{0, 0}] = c; }
    LaurentPoly(const Int& c) { if (c != 0) terms_[{0, 0}] = c; }

    static LaurentPoly monomial(Int c, int t_pow, int s_pow);
    static LaurentPoly t(int power = 1) { return monomial(1, power, 0); }
    static LaurentPoly s(int power = 1) { return monomial(1, 0, power); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Exp, Int>& terms() const { return terms_; }

    /// Coefficient of t^t_pow * s^s_pow (zero if absent).
    Int coeff(int t_pow, int s_pow) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator-() const;
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    LaurentPoly mul_t_power(int l) const;
    LaurentPoly mul_s_power(int l) const;
    /// Substitution s -> s^-1.
    LaurentPoly with_s_inverted() const;

private:
    std::map<Exp, Int> terms_;
    void add_term(const Exp& e, const Int& c);
    friend LaurentPoly exact_div(const LaurentPoly&, const LaurentPoly&);
};

/// Exact quotient a / b in the Laurent ring; throws Error if b == 0 or the
/// division is not exact. Used by the fraction-free elimination, where
/// divisibility is guaranteed.
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);

/// Integer extended with two explicit infinities, for s-degree bookkeeping.
/// deg 0 = -inf and mdeg 0 = +inf; comparisons are total.
class ExtInt {
public:
    static ExtInt neg_inf() { return ExtInt(Kind::NegInf, 0); }
    static ExtInt pos_inf() { return ExtInt(Kind::PosInf, 0); }
    static ExtInt of(int v) { return ExtInt(Kind::Finite, v); }

    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_neg_inf() const { return kind_ == Kind::NegInf; }
    bool is_pos_inf() const { return kind_ == Kind::PosInf; }
    /// Finite value; only meaningful when is_finite().
    int value() const { return value_; }

    ExtInt operator-() const;
    friend bool operator==(const ExtInt&, const ExtInt&) = default;
    friend bool operator<(const ExtInt& a, const ExtInt& b);
    friend bool operator<=(const ExtInt& a, const ExtInt& b) { return a < b || a == b; }
    friend bool operator>(const ExtInt& a, const ExtInt& b) { return b < a; }
    friend bool operator>=(const ExtInt& a, const ExtInt& b) { return b <= a; }

    std::string to_string() const;

private:
    enum class Kind : std::uint8_t { NegInf, Finite, PosInf };
    ExtInt(Kind k, int v) : kind_(k), value_(v) {}
    Kind kind_;
    int value_;
};

struct SDegreeRange {
    ExtInt deg = ExtInt::neg_inf();    // max s-power
    ExtInt mdeg = ExtInt::pos_inf();   // min s-power
};

/// Max/min s-power over the terms of p; sentinels for p == 0.
SDegreeRange s_degree_range(const LaurentPoly& p);

/// Element of Z[t, t^-1]; same canonical-form rules as LaurentPoly.
class TPoly {
public:
    TPoly() = default;
    TPoly(long c) { if (c != 0) terms_[0] = c; }
    TPoly(const Int& c) { if (c != 0) terms_[0] = c; }
    static TPoly monomial(Int c, int t_pow);
    static TPoly t(int power = 1) { return monomial(1, power); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<int, Int>& terms() const { return terms_; }
    Int coeff(int t_pow) const;

    TPoly& operator+=(const TPoly& o);
    TPoly operator-() const;
    friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
    friend TPoly operator-(TPoly a, const TPoly& b) { return a += -b; }
    friend TPoly operator*(const TPoly& a, const TPoly& b);
    friend bool operator==(const TPoly&, const TPoly&) = default;

private:
    std::map<int, Int> terms_;
};

/// Embedding Z[t,t^-1] -> Z[t,t^-1,s,s^-1] with s-power 0.
LaurentPoly embed(const TPoly& p);
/// Inverse of embed; throws Error if any term carries a nonzero s-power.
TPoly to_tpoly(const LaurentPoly& p);

/// Coefficient of s^k as a polynomial in t.
TPoly coeff_s(const LaurentPoly& p, int k);

/// Square matrix over a polynomial ring. n == 0 is allowed (det == 1).
template <class P>
struct Matrix {
    int n = 0;
    std::vector<P> e;

    Matrix() = default;
    explicit Matrix(int n_) : n(n_), e(static_cast<std::size_t>(n_) * n_) {}

    P& at(int i, int j) { return e[static_cast<std::size_t>(i) * n + j]; }
    const P& at(int i, int j) const { return e[static_cast<std::size_t>(i) * n + j]; }

    friend bool operator==(const Matrix&, const Matrix&) = default;
};

using PolyMatrix = Matrix<LaurentPoly>;
using TPolyMatrix = Matrix<TPoly>;

/// Square 0/1 matrix.
struct BitMatrix {
    int n = 0;
    std::vector<std::uint8_t> e;

    BitMatrix() = default;
    explicit BitMatrix(int n_) : n(n_), e(static_cast<std::size_t>(n_) * n_, 0) {}

    std::uint8_t& at(int i, int j) { return e[static_cast<std::size_t>(i) * n + j]; }
    std::uint8_t at(int i, int j) const { return e[static_cast<std::size_t>(i) * n + j]; }

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;
};

enum class DetMethod { FractionFree, Cofactor };

/// Exact determinant. FractionFree is Bareiss elimination over the Laurent
/// ring (pivot = fewest-term nonzero entry in the column, ties to the lowest
/// row). Cofactor is Laplace expansion along the first row, exponential but
/// handy as an independent route for small n.
LaurentPoly det(const PolyMatrix& m, DetMethod method = DetMethod::FractionFree);
TPoly det(const TPolyMatrix& m, DetMethod method = DetMethod::FractionFree);

/// Exact permanent via Ryser's inclusion-exclusion, O(n * 2^n).
/// Throws Error for n > 30.
Int permanent(const BitMatrix& m);

/// Represents exactly epsilon * t^alpha * (t-1)^beta.
struct EpsAlphaBeta {
    int epsilon = 1;  // +1 or -1
    int alpha = 0;
    int beta = 0;     // >= 0

    friend bool operator==(const EpsAlphaBeta&, const EpsAlphaBeta&) = default;
};

/// Factor p as eps * t^alpha * (t-1)^beta with beta maximal.
/// Throws ZeroInput for p == 0, NotOfForm when the residual after
/// exhausting (t-1) is not a monomial with coefficient +-1.
EpsAlphaBeta factor_eps_alpha_beta(const TPoly& p);

/// Reconstruct eps * t^alpha * (t-1)^beta.
TPoly eps_alpha_beta_poly(const EpsAlphaBeta& f);

/// The unique l with a == t^l * b, if it exists; l == 0 when a == b == 0.
std::optional<int> equal_up_to_t_power(const LaurentPoly& a, const LaurentPoly& b);

/// Canonical textual form: terms in canonical order, `c*t^a*s^b` with the
/// t^0/s^0 factors omitted and coefficient +-1 shortened to its sign,
/// e.g. `t^-3 - t^-2 + t^-1 - 1`.
std::string to_string(const LaurentPoly& p);
std::string to_string(const TPoly& p);

/// Conventional display of a t-polynomial with descending powers, e.g. `t - 1`.
/// Used for human-facing certificate lines; serialization uses to_string.
std::string display_by_t(const TPoly& p);

}  // namespace vcn
