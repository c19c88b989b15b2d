#include "vcn/ring.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace vcn {

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly LaurentPoly::monomial(Int c, int t_pow, int s_pow) {
    LaurentPoly p;
    if (c != 0) p.terms_[{t_pow, s_pow}] = std::move(c);
    return p;
}

Int LaurentPoly::coeff(int t_pow, int s_pow) const {
    auto it = terms_.find({t_pow, s_pow});
    return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly::add_term(const Exp& e, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term({ea.t_pow + eb.t_pow, ea.s_pow + eb.s_pow}, ca * cb);
    return r;
}

LaurentPoly LaurentPoly::mul_t_power(int l) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[{e.t_pow + l, e.s_pow}] = c;
    return r;
}

LaurentPoly LaurentPoly::mul_s_power(int l) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[{e.t_pow, e.s_pow + l}] = c;
    return r;
}

LaurentPoly LaurentPoly::with_s_inverted() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[{e.t_pow, -e.s_pow}] = c;
    return r;
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw Error("exact_div: division by zero");
    if (a.is_zero()) return {};

    // Every exponent of the quotient lies in the componentwise box spanned by
    // the degree differences; a leading term outside it means the division is
    // not exact (and bounds the loop).
    auto box = [](const std::map<Exp, Int>& t, auto sel) {
        int lo = sel(t.begin()->first), hi = lo;
        for (const auto& [e, c] : t) {
            lo = std::min(lo, sel(e));
            hi = std::max(hi, sel(e));
        }
        return std::pair{lo, hi};
    };
    auto [a_t_lo, a_t_hi] = box(a.terms_, [](const Exp& e) { return e.t_pow; });
    auto [a_s_lo, a_s_hi] = box(a.terms_, [](const Exp& e) { return e.s_pow; });
    auto [b_t_lo, b_t_hi] = box(b.terms_, [](const Exp& e) { return e.t_pow; });
    auto [b_s_lo, b_s_hi] = box(b.terms_, [](const Exp& e) { return e.s_pow; });
    const int q_t_lo = a_t_lo - b_t_lo, q_t_hi = a_t_hi - b_t_hi;
    const int q_s_lo = a_s_lo - b_s_lo, q_s_hi = a_s_hi - b_s_hi;

    const auto& [eb, cb] = *b.terms_.rbegin();
    LaurentPoly rem = a, q;
    while (!rem.is_zero()) {
        const auto& [ea, ca] = *rem.terms_.rbegin();
        Exp em{ea.t_pow - eb.t_pow, ea.s_pow - eb.s_pow};
        if (em.t_pow < q_t_lo || em.t_pow > q_t_hi || em.s_pow < q_s_lo || em.s_pow > q_s_hi)
            throw Error("exact_div: not divisible");
        if (!mpz_divisible_p(ca.get_mpz_t(), cb.get_mpz_t()))
            throw Error("exact_div: not divisible");
        LaurentPoly m = LaurentPoly::monomial(ca / cb, em.t_pow, em.s_pow);
        q += m;
        rem -= m * b;
    }
    return q;
}

// -------------------------------------------------------------------- ExtInt

ExtInt ExtInt::operator-() const {
    switch (kind_) {
        case Kind::NegInf: return pos_inf();
        case Kind::PosInf: return neg_inf();
        default: return of(-value_);
    }
}

bool operator<(const ExtInt& a, const ExtInt& b) {
    if (a.kind_ == b.kind_)
        return a.kind_ == ExtInt::Kind::Finite && a.value_ < b.value_;
    if (a.kind_ == ExtInt::Kind::NegInf) return true;
    if (b.kind_ == ExtInt::Kind::NegInf) return false;
    return b.kind_ == ExtInt::Kind::PosInf;
}

std::string ExtInt::to_string() const {
    if (is_neg_inf()) return "neg_inf";
    if (is_pos_inf()) return "pos_inf";
    return std::to_string(value_);
}

SDegreeRange s_degree_range(const LaurentPoly& p) {
    if (p.is_zero()) return {ExtInt::neg_inf(), ExtInt::pos_inf()};
    int lo = p.terms().begin()->first.s_pow, hi = lo;
    for (const auto& [e, c] : p.terms()) {
        lo = std::min(lo, e.s_pow);
        hi = std::max(hi, e.s_pow);
    }
    return {ExtInt::of(hi), ExtInt::of(lo)};
}

// --------------------------------------------------------------------- TPoly

TPoly TPoly::monomial(Int c, int t_pow) {
    TPoly p;
    if (c != 0) p.terms_[t_pow] = std::move(c);
    return p;
}

Int TPoly::coeff(int t_pow) const {
    auto it = terms_.find(t_pow);
    return it == terms_.end() ? Int(0) : it->second;
}

TPoly& TPoly::operator+=(const TPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

TPoly TPoly::operator-() const {
    TPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
    TPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Int c = ca * cb;
            auto [it, inserted] = r.terms_.emplace(ea + eb, c);
            if (!inserted) {
                it->second += c;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    return r;
}

LaurentPoly embed(const TPoly& p) {
    LaurentPoly r;
    for (const auto& [e, c] : p.terms()) r += LaurentPoly::monomial(c, e, 0);
    return r;
}

TPoly to_tpoly(const LaurentPoly& p) {
    TPoly r;
    for (const auto& [e, c] : p.terms()) {
        if (e.s_pow != 0) throw Error("to_tpoly: polynomial has s-terms");
        r += TPoly::monomial(c, e.t_pow);
    }
    return r;
}

TPoly coeff_s(const LaurentPoly& p, int k) {
    TPoly r;
    for (const auto& [e, c] : p.terms())
        if (e.s_pow == k) r += TPoly::monomial(c, e.t_pow);
    return r;
}

// --------------------------------------------------------------- determinant

namespace {

LaurentPoly det_fraction_free(PolyMatrix m) {
    const int n = m.n;
    if (n == 0) return LaurentPoly(1);
    if (n == 1) return m.at(0, 0);

    int sign = 1;
    LaurentPoly prev(1);
    for (int k = 0; k + 1 < n; ++k) {
        int pivot = -1;
        std::size_t pivot_terms = 0;
        for (int r = k; r < n; ++r) {
            std::size_t tc = m.at(r, k).term_count();
            if (tc == 0) continue;
            if (pivot < 0 || tc < pivot_terms) {
                pivot = r;
                pivot_terms = tc;
            }
        }
        if (pivot < 0) return {};
        if (pivot != k) {
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = exact_div(m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j), prev);
        prev = m.at(k, k);
    }
    return sign < 0 ? -m.at(n - 1, n - 1) : m.at(n - 1, n - 1);
}

LaurentPoly det_cofactor_rec(const PolyMatrix& m, std::vector<int>& cols) {
    const int size = static_cast<int>(cols.size());
    if (size == 0) return LaurentPoly(1);
    const int row = m.n - size;
    if (size == 1) return m.at(row, cols[0]);

    LaurentPoly acc;
    for (int idx = 0; idx < size; ++idx) {
        const LaurentPoly& entry = m.at(row, cols[idx]);
        if (entry.is_zero()) continue;
        int col = cols[idx];
        cols.erase(cols.begin() + idx);
        LaurentPoly minor = det_cofactor_rec(m, cols);
        cols.insert(cols.begin() + idx, col);
        LaurentPoly contrib = entry * minor;
        if (idx % 2 == 0)
            acc += contrib;
        else
            acc -= contrib;
    }
    return acc;
}

LaurentPoly det_cofactor(const PolyMatrix& m) {
    std::vector<int> cols(m.n);
    for (int j = 0; j < m.n; ++j) cols[j] = j;
    return det_cofactor_rec(m, cols);
}

}  // namespace

LaurentPoly det(const PolyMatrix& m, DetMethod method) {
    return method == DetMethod::FractionFree ? det_fraction_free(m) : det_cofactor(m);
}

TPoly det(const TPolyMatrix& m, DetMethod method) {
    PolyMatrix lifted(m.n);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) lifted.at(i, j) = embed(m.at(i, j));
    return to_tpoly(det(lifted, method));
}

// ----------------------------------------------------------------- permanent

Int permanent(const BitMatrix& m) {
    const int n = m.n;
    if (n == 0) return 1;
    if (n > 30) throw Error("permanent: dimension too large for exact Ryser");

    for (int i = 0; i < n; ++i) {
        bool any = false;
        for (int j = 0; j < n; ++j) any = any || m.at(i, j);
        if (!any) return 0;
    }

    // Ryser: per = (-1)^n * sum over column subsets S of (-1)^|S| prod_i rowsum_i(S),
    // enumerated in Gray-code order so each step updates one column.
    std::vector<std::int32_t> row_sum(n, 0);
    Int total = 0;
    std::uint32_t prev_gray = 0;
    for (std::uint64_t g = 1; g < (std::uint64_t(1) << n); ++g) {
        std::uint32_t gray = static_cast<std::uint32_t>(g ^ (g >> 1));
        std::uint32_t diff = gray ^ prev_gray;
        int j = std::countr_zero(diff);
        int dir = (gray & diff) ? +1 : -1;
        for (int i = 0; i < n; ++i)
            if (m.at(i, j)) row_sum[i] += dir;
        prev_gray = gray;

        unsigned __int128 prod = 1;
        bool zero = false;
        for (int i = 0; i < n; ++i) {
            if (row_sum[i] == 0) {
                zero = true;
                break;
            }
            prod *= static_cast<unsigned>(row_sum[i]);
        }
        if (zero) continue;

        Int term;
        if (prod <= ~std::uint64_t(0)) {
            term = Int(static_cast<unsigned long>(static_cast<std::uint64_t>(prod)));
        } else {
            term = Int(static_cast<unsigned long>(static_cast<std::uint64_t>(prod >> 64)));
            term <<= 64;
            term += Int(static_cast<unsigned long>(static_cast<std::uint64_t>(prod)));
        }
        int popcount = std::popcount(gray);
        if ((n - popcount) % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

// ------------------------------------------------------------- factorization

EpsAlphaBeta factor_eps_alpha_beta(const TPoly& p) {
    if (p.is_zero()) throw ZeroInput("factor_eps_alpha_beta: zero polynomial");

    // Normalize to an ordinary polynomial in t, remembering the shift.
    int shift = p.terms().begin()->first;
    std::vector<Int> c;
    {
        int top = p.terms().rbegin()->first;
        c.assign(static_cast<std::size_t>(top - shift) + 1, 0);
        for (const auto& [e, coeff] : p.terms()) c[static_cast<std::size_t>(e - shift)] = coeff;
    }

    // Divide out (t - 1) while the coefficient sum vanishes (synthetic division).
    int beta = 0;
    auto coeff_sum = [&] {
        Int s = 0;
        for (const Int& x : c) s += x;
        return s;
    };
    while (c.size() > 1 && coeff_sum() == 0) {
        std::vector<Int> q(c.size() - 1);
        Int carry = 0;
        for (std::size_t i = c.size(); i-- > 1;) {
            carry += c[i];
            q[i - 1] = carry;
        }
        c = std::move(q);
        ++beta;
    }

    // Residual must be +-t^alpha.
    int nonzero = -1;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        if (nonzero >= 0) throw NotOfForm("factor_eps_alpha_beta: residual is not a monomial");
        nonzero = static_cast<int>(i);
    }
    if (nonzero < 0) throw InternalInconsistency("factor_eps_alpha_beta: residual vanished");
    if (c[static_cast<std::size_t>(nonzero)] != 1 && c[static_cast<std::size_t>(nonzero)] != -1)
        throw NotOfForm("factor_eps_alpha_beta: residual coefficient is not a unit");

    EpsAlphaBeta f;
    f.epsilon = c[static_cast<std::size_t>(nonzero)] == 1 ? +1 : -1;
    f.alpha = shift + nonzero;
    f.beta = beta;
    return f;
}

TPoly eps_alpha_beta_poly(const EpsAlphaBeta& f) {
    TPoly p = TPoly::monomial(f.epsilon, f.alpha);
    TPoly t_minus_1 = TPoly::t() + TPoly(-1);
    for (int i = 0; i < f.beta; ++i) p = p * t_minus_1;
    return p;
}

// -------------------------------------------------------- t-power comparison

std::optional<int> equal_up_to_t_power(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) return 0;
    if (a.is_zero() || b.is_zero()) return std::nullopt;
    if (a.term_count() != b.term_count()) return std::nullopt;

    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    int l = ia->first.t_pow - ib->first.t_pow;
    for (; ia != a.terms().end(); ++ia, ++ib) {
        if (ia->first.s_pow != ib->first.s_pow) return std::nullopt;
        if (ia->first.t_pow - ib->first.t_pow != l) return std::nullopt;
        if (ia->second != ib->second) return std::nullopt;
    }
    return l;
}

// ------------------------------------------------------------------ printing

namespace {

void print_term(std::ostream& os, bool first, const Int& c, int t_pow, int s_pow) {
    Int mag = abs(c);
    if (first) {
        if (c < 0) os << "-";
    } else {
        os << (c < 0 ? " - " : " + ");
    }
    bool has_var = (t_pow != 0) || (s_pow != 0);
    bool printed = false;
    if (mag != 1 || !has_var) {
        os << mag.get_str();
        printed = true;
    }
    if (t_pow != 0) {
        if (printed) os << "*";
        os << "t";
        if (t_pow != 1) os << "^" << t_pow;
        printed = true;
    }
    if (s_pow != 0) {
        if (printed) os << "*";
        os << "s";
        if (s_pow != 1) os << "^" << s_pow;
    }
}

}  // namespace

std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        print_term(os, first, c, e.t_pow, e.s_pow);
        first = false;
    }
    return os.str();
}

std::string to_string(const TPoly& p) {
    return to_string(embed(p));
}

std::string display_by_t(const TPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        print_term(os, first, it->second, it->first, 0);
        first = false;
    }
    return os.str();
}

}  // namespace vcn
