// poly.hpp — univariate polynomials with exact integer coefficients (GMP),
// plus the exact real-root machinery: Sturm chains, Yun squarefree
// decomposition, Descartes counts and certified bisection.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace eccentra {

using BigInt = mpz_class;
using BigRat = mpq_class;

// Coefficients ascending: c[i] * x^i. Zero polynomial has empty c.
struct ExactPoly {
    std::vector<BigInt> c;

    ExactPoly() = default;
    explicit ExactPoly(std::vector<BigInt> coeffs) : c(std::move(coeffs)) { trim(); }
    static ExactPoly constant(const BigInt& k) {
        ExactPoly p;
        if (k != 0) p.c = {k};
        return p;
    }
    static ExactPoly from_int64(const std::vector<std::int64_t>& v) {
        std::vector<BigInt> cc(v.size());
        for (size_t i = 0; i < v.size(); ++i) cc[i] = BigInt(static_cast<long>(v[i]));
        return ExactPoly(std::move(cc));
    }
    // (x + a)
    static ExactPoly linear_shift(const BigInt& a) { return ExactPoly({a, BigInt(1)}); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
    const BigInt& lead() const { return c.back(); }

    bool operator==(const ExactPoly& o) const { return c == o.c; }

    ExactPoly operator+(const ExactPoly& o) const {
        std::vector<BigInt> r(std::max(c.size(), o.c.size()), BigInt(0));
        for (size_t i = 0; i < c.size(); ++i) r[i] += c[i];
        for (size_t i = 0; i < o.c.size(); ++i) r[i] += o.c[i];
        return ExactPoly(std::move(r));
    }
    ExactPoly operator-(const ExactPoly& o) const {
        std::vector<BigInt> r(std::max(c.size(), o.c.size()), BigInt(0));
        for (size_t i = 0; i < c.size(); ++i) r[i] += c[i];
        for (size_t i = 0; i < o.c.size(); ++i) r[i] -= o.c[i];
        return ExactPoly(std::move(r));
    }
    ExactPoly operator-() const {
        ExactPoly r = *this;
        for (auto& x : r.c) x = -x;
        return r;
    }
    ExactPoly operator*(const ExactPoly& o) const {
        if (is_zero() || o.is_zero()) return {};
        std::vector<BigInt> r(c.size() + o.c.size() - 1, BigInt(0));
        for (size_t i = 0; i < c.size(); ++i)
            for (size_t j = 0; j < o.c.size(); ++j) r[i + j] += c[i] * o.c[j];
        return ExactPoly(std::move(r));
    }
    ExactPoly operator*(const BigInt& k) const {
        if (k == 0) return {};
        ExactPoly r = *this;
        for (auto& x : r.c) x *= k;
        return r;
    }

    ExactPoly pow(int e) const {
        ExactPoly r = constant(1);
        for (int i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    ExactPoly derivative() const {
        if (c.size() <= 1) return {};
        std::vector<BigInt> r(c.size() - 1);
        for (size_t i = 1; i < c.size(); ++i) r[i - 1] = c[i] * BigInt(static_cast<long>(i));
        return ExactPoly(std::move(r));
    }

    BigInt eval(const BigInt& x) const {
        BigInt acc = 0;
        for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
        return acc;
    }
    BigRat eval(const BigRat& x) const {
        BigRat acc = 0;
        for (size_t i = c.size(); i-- > 0;) acc = acc * x + BigRat(c[i]);
        return acc;
    }
    double eval(double x) const {
        double acc = 0;
        for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i].get_d();
        return acc;
    }

    // p(-x)
    ExactPoly reflect() const {
        ExactPoly r = *this;
        for (size_t i = 1; i < r.c.size(); i += 2) r.c[i] = -r.c[i];
        return r;
    }

    BigInt content() const {
        BigInt g = 0;
        for (const auto& x : c) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
            if (g == 1) break;
        }
        return g;
    }
    // Primitive part with positive leading coefficient.
    ExactPoly primitive() const {
        if (is_zero()) return {};
        BigInt g = content();
        if (lead() < 0) g = -g;
        ExactPoly r = *this;
        for (auto& x : r.c) {
            BigInt q;
            mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
            x = q;
        }
        return r;
    }

    // Exact division; nullopt when the divisor does not divide in Z[x].
    std::optional<ExactPoly> divide_exact(const ExactPoly& d) const {
        if (d.is_zero()) throw std::invalid_argument("poly division by zero");
        if (is_zero()) return ExactPoly{};
        if (degree() < d.degree()) return std::nullopt;
        std::vector<BigInt> rem = c;
        std::vector<BigInt> quot(degree() - d.degree() + 1, BigInt(0));
        for (int k = degree() - d.degree(); k >= 0; --k) {
            BigInt& top = rem[k + d.degree()];
            if (top == 0) continue;
            if (!mpz_divisible_p(top.get_mpz_t(), d.lead().get_mpz_t())) return std::nullopt;
            BigInt q;
            mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), d.lead().get_mpz_t());
            quot[k] = q;
            for (int i = 0; i <= d.degree(); ++i) rem[k + i] -= q * d.c[i];
        }
        for (const auto& x : rem)
            if (x != 0) return std::nullopt;
        return ExactPoly(std::move(quot));
    }

    // Synthetic division by (x - r); returns quotient iff remainder is 0.
    std::optional<ExactPoly> deflate_root(const BigInt& r) const {
        if (is_zero()) return ExactPoly{};
        std::vector<BigInt> q(c.size() - 1);
        BigInt carry = 0;
        for (size_t i = c.size(); i-- > 1;) {
            carry = carry * r + c[i];
            q[i - 1] = carry;
        }
        if (carry * r + c[0] != 0) return std::nullopt;
        return ExactPoly(std::move(q));
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            if (c[i] == 0) continue;
            BigInt a = c[i];
            if (!s.empty()) {
                s += (a < 0) ? " - " : " + ";
                if (a < 0) a = -a;
            } else if (a < 0) {
                s += "-";
                a = -a;
            }
            if (i == 0 || a != 1) s += a.get_str();
            if (i >= 1) s += (a != 1) ? "*x" : "x";
            if (i >= 2) s += "^" + std::to_string(i);
        }
        return s;
    }
};

inline ExactPoly operator*(const BigInt& k, const ExactPoly& p) { return p * k; }

// ---- pseudo-remainder PRS -------------------------------------------------

// prem(a, b) scaled by |lc(b)|^delta (positive, keeps Sturm signs usable).
inline ExactPoly pseudo_rem_abs(const ExactPoly& a, const ExactPoly& b) {
    ExactPoly r = a;
    BigInt lb = b.lead();
    BigInt albs = abs(lb);
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int k = r.degree() - b.degree();
        BigInt lr = r.lead();
        // r := |lb| * r - sign(lb)*lr * x^k * b  (integer coefficients, kills top term)
        ExactPoly scaled = r * albs;
        BigInt m = (lb < 0) ? BigInt(-lr) : lr;
        for (int i = 0; i <= b.degree(); ++i) scaled.c[k + i] -= m * b.c[i];
        scaled.trim();
        r = std::move(scaled);
    }
    return r;
}

// Primitive-PRS gcd, result primitive with positive leading coefficient.
inline ExactPoly poly_gcd(ExactPoly a, ExactPoly b) {
    a = a.primitive();
    b = b.primitive();
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        ExactPoly r = pseudo_rem_abs(a, b).primitive();
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline ExactPoly squarefree_part(const ExactPoly& p) {
    if (p.degree() <= 0) return p.primitive();
    ExactPoly g = poly_gcd(p, p.derivative());
    if (g.degree() == 0) return p.primitive();
    auto q = p.primitive().divide_exact(g);
    if (!q) throw std::logic_error("squarefree_part: inexact division");
    return q->primitive();
}

// Yun decomposition: p ~ prod f_i ^ m_i with f_i squarefree, pairwise coprime.
struct SquarefreeFactor {
    ExactPoly factor;
    int multiplicity;
};

inline std::vector<SquarefreeFactor> yun_squarefree(const ExactPoly& p_in) {
    std::vector<SquarefreeFactor> out;
    ExactPoly p = p_in.primitive();
    if (p.degree() <= 0) return out;
    ExactPoly dp = p.derivative();
    ExactPoly g = poly_gcd(p, dp);
    ExactPoly cpart = *p.divide_exact(g);
    ExactPoly dpart = *dp.divide_exact(g) - cpart.derivative();
    int m = 1;
    while (true) {
        ExactPoly a = poly_gcd(cpart, dpart).primitive();
        if (a.degree() > 0) out.push_back({a, m});
        if (a.degree() == 0)
            a = ExactPoly::constant(1);
        ExactPoly cnext = *cpart.divide_exact(a);
        if (cnext.degree() <= 0) break;
        dpart = *dpart.divide_exact(a) - cnext.derivative();
        cpart = std::move(cnext);
        ++m;
    }
    return out;
}

// ---- Sturm chains ----------------------------------------------------------

// Chain over the squarefree part (counts distinct roots); each step is
// -rem scaled by a positive constant, so sign variations are preserved.
inline std::vector<ExactPoly> sturm_chain(const ExactPoly& p) {
    std::vector<ExactPoly> seq;
    ExactPoly p0 = squarefree_part(p);
    if (p0.degree() < 0) return seq;
    seq.push_back(p0);
    if (p0.degree() == 0) return seq;
    seq.push_back(p0.derivative());
    while (seq.back().degree() > 0) {
        ExactPoly r = pseudo_rem_abs(seq[seq.size() - 2], seq.back());
        if (r.is_zero()) break;
        r = -r;
        // strip positive content only
        BigInt g = r.content();
        ExactPoly rr = r;
        for (auto& x : rr.c) {
            BigInt q;
            mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
            x = q;
        }
        seq.push_back(std::move(rr));
    }
    return seq;
}

inline int sign_of(const BigRat& v) { return sgn(v); }

// Sign variations of the chain at a finite rational point.
inline int sturm_variations_at(const std::vector<ExactPoly>& chain, const BigRat& x) {
    int var = 0, prev = 0;
    for (const auto& p : chain) {
        int s = sgn(p.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

// Variations at +inf (dir=+1) or -inf (dir=-1).
inline int sturm_variations_at_inf(const std::vector<ExactPoly>& chain, int dir) {
    int var = 0, prev = 0;
    for (const auto& p : chain) {
        if (p.is_zero()) continue;
        int s = sgn(p.lead());
        if (dir < 0 && (p.degree() % 2 == 1)) s = -s;
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

struct RatInterval {
    std::optional<BigRat> lo;  // nullopt = -inf
    std::optional<BigRat> hi;  // nullopt = +inf
};

// Number of distinct real roots in the half-open interval (lo, hi].
inline int count_distinct_roots(const ExactPoly& p, const RatInterval& iv) {
    if (p.degree() <= 0) return 0;
    if (iv.lo && iv.hi && *iv.lo >= *iv.hi) throw std::invalid_argument("degenerate interval");
    auto chain = sturm_chain(p);
    int va = iv.lo ? sturm_variations_at(chain, *iv.lo) : sturm_variations_at_inf(chain, -1);
    int vb = iv.hi ? sturm_variations_at(chain, *iv.hi) : sturm_variations_at_inf(chain, +1);
    return va - vb;
}

// Root count in (lo, hi] with multiplicity, via Yun decomposition.
inline int count_roots_with_multiplicity(const ExactPoly& p, const RatInterval& iv) {
    int total = 0;
    for (const auto& f : yun_squarefree(p))
        total += f.multiplicity * count_distinct_roots(f.factor, iv);
    return total;
}

// ---- Descartes counts ------------------------------------------------------

// Sign changes in the coefficient sequence. For a polynomial whose roots are
// all real (e.g. a characteristic polynomial of a symmetric matrix) this is
// *exactly* the number of positive roots counted with multiplicity.
inline int descartes_sign_changes(const ExactPoly& p) {
    int var = 0, prev = 0;
    for (const auto& a : p.c) {
        int s = sgn(a);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

struct RealRootedCounts {
    int positive = 0;  // with multiplicity
    int zero = 0;
    int negative = 0;
};

// Valid only when every root of p is real.
inline RealRootedCounts real_rooted_counts(const ExactPoly& p) {
    RealRootedCounts rc;
    if (p.degree() <= 0) return rc;
    size_t z = 0;
    while (z < p.c.size() && p.c[z] == 0) ++z;
    rc.zero = static_cast<int>(z);
    ExactPoly q;
    q.c.assign(p.c.begin() + static_cast<long>(z), p.c.end());
    rc.positive = descartes_sign_changes(q);
    rc.negative = descartes_sign_changes(q.reflect());
    return rc;
}

// ---- root isolation ---------------------------------------------------------

// 1 + max |c_i| / |c_n|: every real root lies in (-B, B).
inline BigRat cauchy_bound(const ExactPoly& p) {
    if (p.degree() <= 0) return BigRat(1);
    BigInt mx = 0;
    for (int i = 0; i < p.degree(); ++i) {
        BigInt a = abs(p.c[i]);
        if (a > mx) mx = a;
    }
    BigRat b(mx, abs(p.lead()));
    b.canonicalize();
    return b + 1;
}

struct RootBracket {
    BigRat lo, hi;       // p has exactly one root in (lo, hi]
    double approx = 0;   // midpoint after refinement
};

namespace detail {
inline double rat_to_double(const BigRat& q) { return q.get_d(); }
}

// Bisect (lo, hi] containing exactly one distinct root until hi-lo <= width.
inline RootBracket refine_bracket(const std::vector<ExactPoly>& chain, BigRat lo, BigRat hi,
                                  const BigRat& width) {
    int vlo = sturm_variations_at(chain, lo);
    while (hi - lo > width) {
        BigRat mid = (lo + hi) / 2;
        int vm = sturm_variations_at(chain, mid);
        if (vlo - vm >= 1)
            hi = mid;
        else {
            lo = mid;
            vlo = vm;
        }
    }
    RootBracket rb;
    rb.lo = lo;
    rb.hi = hi;
    rb.approx = detail::rat_to_double((lo + hi) / 2);
    return rb;
}

// All distinct real roots, isolated and refined to width <= `width`.
inline std::vector<RootBracket> isolate_real_roots(const ExactPoly& p, const BigRat& width) {
    std::vector<RootBracket> out;
    ExactPoly sf = squarefree_part(p);
    if (sf.degree() <= 0) return out;
    auto chain = sturm_chain(sf);
    BigRat bound = cauchy_bound(sf);
    struct Seg {
        BigRat lo, hi;
        int vlo, vhi;
    };
    int vl = sturm_variations_at(chain, -bound);
    int vr = sturm_variations_at(chain, bound);
    std::vector<Seg> stack{{-bound, bound, vl, vr}};
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        int nroots = s.vlo - s.vhi;
        if (nroots <= 0) continue;
        if (nroots == 1) {
            out.push_back(refine_bracket(chain, s.lo, s.hi, width));
            continue;
        }
        BigRat mid = (s.lo + s.hi) / 2;
        int vm = sturm_variations_at(chain, mid);
        stack.push_back({mid, s.hi, vm, s.vhi});
        stack.push_back({s.lo, mid, s.vlo, vm});
    }
    std::sort(out.begin(), out.end(),
              [](const RootBracket& a, const RootBracket& b) { return a.lo < b.lo; });
    return out;
}

// Isolate the unique root inside a stated open interval (lo, hi); returns
// nullopt when the interval does not contain exactly one distinct root.
inline std::optional<RootBracket> isolate_root_in(const ExactPoly& p, const BigRat& lo,
                                                  const BigRat& hi, const BigRat& width) {
    ExactPoly sf = squarefree_part(p);
    if (sf.degree() <= 0) return std::nullopt;
    auto chain = sturm_chain(sf);
    int n = sturm_variations_at(chain, lo) - sturm_variations_at(chain, hi);
    if (n != 1) return std::nullopt;
    return refine_bracket(chain, lo, hi, width);
}

inline BigRat pow10_inv(int k) {
    BigInt d = 1;
    for (int i = 0; i < k; ++i) d *= 10;
    return BigRat(1, d);
}

// ---- full real-root extraction ---------------------------------------------

struct ExactRoot {
    bool is_integer = false;
    BigInt ivalue;        // valid when is_integer
    RootBracket bracket;  // valid otherwise
    int multiplicity = 1;
    double approx = 0;

    BigRat position() const { return is_integer ? BigRat(ivalue) : (bracket.lo + bracket.hi) / 2; }
};

// All real roots with multiplicities, integer roots recognized exactly.
// Intended for polynomials with all roots real (characteristic polynomials);
// for general input it still returns the real roots only.
inline std::vector<ExactRoot> exact_real_roots(const ExactPoly& p,
                                               const BigRat& width = pow10_inv(10)) {
    std::vector<ExactRoot> out;
    BigRat iso_width = std::min(width, BigRat(1, 4));
    for (const auto& f : yun_squarefree(p)) {
        for (const auto& br : isolate_real_roots(f.factor, iso_width)) {
            ExactRoot r;
            r.multiplicity = f.multiplicity;
            BigRat mid = (br.lo + br.hi) / 2;
            // nearest integer candidate; exact membership test
            BigRat half = mid + BigRat(1, 2);
            BigInt cand;
            mpz_fdiv_q(cand.get_mpz_t(), half.get_num().get_mpz_t(), half.get_den().get_mpz_t());
            if (f.factor.eval(cand) == 0 && BigRat(cand) > br.lo && BigRat(cand) <= br.hi) {
                r.is_integer = true;
                r.ivalue = cand;
                r.approx = cand.get_d();
            } else {
                auto chain = sturm_chain(f.factor);
                r.bracket = refine_bracket(chain, br.lo, br.hi, width);
                r.approx = r.bracket.approx;
            }
            out.push_back(std::move(r));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const ExactRoot& a, const ExactRoot& b) { return a.position() > b.position(); });
    return out;
}

}  // namespace eccentra
