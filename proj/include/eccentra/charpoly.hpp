// charpoly.hpp — exact characteristic polynomials (Faddeev–LeVerrier over
// big integers, plus an overflow-checked int64 fast path for the
// enumeration kernel) and exact nullity via fraction-free elimination.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "eccentra/poly.hpp"
#include "eccentra/symmatrix.hpp"

namespace eccentra {

inline constexpr int kCharPolyMaxOrder = 32;

// det(lambda I - M) with exact integer coefficients. The division by k in
// each Faddeev–LeVerrier step is exact for integer matrices.
inline ExactPoly char_poly_exact(const SymMatrix& m) {
    int n = m.n;
    if (n > kCharPolyMaxOrder) throw std::invalid_argument("char_poly_exact: order too large");
    std::vector<BigInt> A(static_cast<size_t>(n) * n);
    for (size_t i = 0; i < A.size(); ++i) A[i] = BigInt(static_cast<long>(m.a[i]));
    std::vector<BigInt> M(static_cast<size_t>(n) * n, BigInt(0));
    std::vector<BigInt> AM(static_cast<size_t>(n) * n);
    std::vector<BigInt> coef(static_cast<size_t>(n) + 1);
    coef[n] = 1;
    for (int i = 0; i < n; ++i) M[static_cast<size_t>(i) * n + i] = 1;  // M_1 = I
    for (int k = 1; k <= n; ++k) {
        // AM = A * M
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                BigInt s = 0;
                for (int l = 0; l < n; ++l)
                    s += A[static_cast<size_t>(i) * n + l] * M[static_cast<size_t>(l) * n + j];
                AM[static_cast<size_t>(i) * n + j] = s;
            }
        BigInt tr = 0;
        for (int i = 0; i < n; ++i) tr += AM[static_cast<size_t>(i) * n + i];
        BigInt ck;
        mpz_divexact_ui(ck.get_mpz_t(), tr.get_mpz_t(), static_cast<unsigned long>(k));
        ck = -ck;
        coef[n - k] = ck;
        if (k < n) {
            M = AM;
            for (int i = 0; i < n; ++i) M[static_cast<size_t>(i) * n + i] += ck;
        }
    }
    return ExactPoly(std::move(coef));
}

// int64 variant for the exhaustive kernel (n <= 8, |entries| <= 7); the
// intermediate magnitudes stay below ~5e16, far from overflow.
struct PolyI64 {
    std::vector<std::int64_t> c;  // ascending

    int degree() const { return static_cast<int>(c.size()) - 1; }

    int descartes_positive() const {
        int var = 0, prev = 0;
        size_t z = 0;
        while (z < c.size() && c[z] == 0) ++z;
        for (size_t i = z; i < c.size(); ++i) {
            int s = (c[i] > 0) - (c[i] < 0);
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++var;
            prev = s;
        }
        return var;
    }
    int trailing_zeros() const {
        size_t z = 0;
        while (z < c.size() && c[z] == 0) ++z;
        return static_cast<int>(z);
    }
    PolyI64 reflect() const {
        PolyI64 r = *this;
        for (size_t i = 1; i < r.c.size(); i += 2) r.c[i] = -r.c[i];
        return r;
    }
    // p(x - s): used to count roots below a threshold via Descartes
    PolyI64 shift(std::int64_t s) const {
        PolyI64 r = *this;
        for (int i = static_cast<int>(r.c.size()) - 2; i >= 0; --i)
            for (size_t j = static_cast<size_t>(i); j + 1 < r.c.size(); ++j)
                r.c[j] += s * r.c[j + 1];
        return r;
    }
    std::int64_t eval(std::int64_t x) const {
        std::int64_t acc = 0;
        for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
        return acc;
    }
    // divide by (x - r); returns true and quotient iff remainder is 0
    bool deflate_root(std::int64_t r, PolyI64& q) const {
        if (c.empty()) return false;
        q.c.assign(c.size() - 1, 0);
        std::int64_t carry = 0;
        for (size_t i = c.size(); i-- > 1;) {
            carry = carry * r + c[i];
            q.c[i - 1] = carry;
        }
        return carry * r + c[0] == 0;
    }
    ExactPoly to_exact() const { return ExactPoly::from_int64(c); }
};

inline PolyI64 char_poly_i64(const SymMatrix& m) {
    int n = m.n;
    if (n > 8) throw std::invalid_argument("char_poly_i64: kernel supports n <= 8");
    std::vector<std::int64_t> M(static_cast<size_t>(n) * n, 0), AM(static_cast<size_t>(n) * n);
    PolyI64 p;
    p.c.assign(static_cast<size_t>(n) + 1, 0);
    p.c[n] = 1;
    for (int i = 0; i < n; ++i) M[static_cast<size_t>(i) * n + i] = 1;
    for (int k = 1; k <= n; ++k) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                std::int64_t s = 0;
                for (int l = 0; l < n; ++l)
                    s += m.a[static_cast<size_t>(i) * n + l] * M[static_cast<size_t>(l) * n + j];
                AM[static_cast<size_t>(i) * n + j] = s;
            }
        std::int64_t tr = 0;
        for (int i = 0; i < n; ++i) tr += AM[static_cast<size_t>(i) * n + i];
        std::int64_t ck = -tr / k;
        p.c[n - k] = ck;
        if (k < n) {
            M = AM;
            for (int i = 0; i < n; ++i) M[static_cast<size_t>(i) * n + i] += ck;
        }
    }
    return p;
}

// n - rank over the integers, by fraction-free (Bareiss) elimination with
// row/column pivoting. No floating point anywhere.
inline int exact_nullity(const SymMatrix& m) {
    int n = m.n;
    std::vector<BigInt> a(static_cast<size_t>(n) * n);
    for (size_t i = 0; i < a.size(); ++i) a[i] = BigInt(static_cast<long>(m.a[i]));
    auto at = [&](int i, int j) -> BigInt& { return a[static_cast<size_t>(i) * n + j]; };
    int rank = 0;
    BigInt prev = 1;
    for (int col = 0; col < n && rank < n; ++col) {
        int piv = -1;
        for (int r = rank; r < n; ++r)
            if (at(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = 0; j < n; ++j) std::swap(at(piv, j), at(rank, j));
        for (int r = rank + 1; r < n; ++r) {
            for (int j = col + 1; j < n; ++j) {
                BigInt v = at(rank, col) * at(r, j) - at(r, col) * at(rank, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                at(r, j) = v;
            }
            at(r, col) = 0;
        }
        prev = at(rank, col);
        ++rank;
    }
    return n - rank;
}

}  // namespace eccentra
