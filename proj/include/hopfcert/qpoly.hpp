#pragma once

#include <gmpxx.h>

#include <vector>

// Dense univariate polynomials over Q, ascending coefficients. The zero
// polynomial is the empty vector; qp_deg of zero is -1.

namespace hopfcert {

using QPoly = std::vector<mpq_class>;

inline void qp_normalize(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int qp_deg(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

inline QPoly qp_add(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), mpq_class(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    qp_normalize(r);
    return r;
}

inline QPoly qp_sub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), mpq_class(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    qp_normalize(r);
    return r;
}

inline QPoly qp_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, mpq_class(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    qp_normalize(r);
    return r;
}

inline QPoly qp_scale(const QPoly& a, const mpq_class& c) {
    if (c == 0) return {};
    QPoly r = a;
    for (auto& x : r) x *= c;
    return r;
}

// Euclidean division; b must be nonzero.
inline void qp_divrem(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem) {
    rem = a;
    quot.assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, mpq_class(0));
    const mpq_class lead = b.back();
    while (qp_deg(rem) >= qp_deg(b)) {
        const size_t shift = rem.size() - b.size();
        mpq_class c = rem.back() / lead;
        quot[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) rem[shift + i] -= c * b[i];
        qp_normalize(rem);
        if (rem.empty()) break;
    }
    qp_normalize(quot);
}

inline QPoly qp_rem(const QPoly& a, const QPoly& b) {
    QPoly q, r;
    qp_divrem(a, b, q, r);
    return r;
}

inline QPoly qp_monic(const QPoly& a) {
    if (a.empty()) return a;
    return qp_scale(a, 1 / a.back());
}

inline QPoly qp_gcd(QPoly a, QPoly b) {
    qp_normalize(a);
    qp_normalize(b);
    while (!b.empty()) {
        QPoly r = qp_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return qp_monic(a);
}

inline QPoly qp_derivative(const QPoly& a) {
    if (a.size() <= 1) return {};
    QPoly r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = mpq_class(static_cast<long>(i)) * a[i];
    qp_normalize(r);
    return r;
}

inline mpq_class qp_eval(const QPoly& a, const mpq_class& x) {
    mpq_class r = 0;
    for (size_t i = a.size(); i-- > 0;) r = r * x + a[i];
    return r;
}

}  // namespace hopfcert
