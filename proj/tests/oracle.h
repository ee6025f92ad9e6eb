// Copyright 2026 The wqsc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Brute-force reference computations for tests. Nothing here calls into the
// library's gate or measurement code.

#ifndef WQSC_TESTS_ORACLE_H
#define WQSC_TESTS_ORACLE_H

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <string_view>
#include <vector>

namespace oracle {

using C = std::complex<double>;
using Vec = std::vector<C>;

/// Dense square matrix, row-major.
struct Mat {
    std::size_t dim;
    std::vector<C> m;

    C &operator()(std::size_t r, std::size_t c) {
        return m[r * dim + c];
    }
    C operator()(std::size_t r, std::size_t c) const {
        return m[r * dim + c];
    }
};

inline Mat identity(std::size_t dim) {
    Mat out{dim, std::vector<C>(dim * dim, 0.0)};
    for (std::size_t i = 0; i < dim; ++i) {
        out(i, i) = 1.0;
    }
    return out;
}

inline Mat kron(const Mat &a, const Mat &b) {
    Mat out{a.dim * b.dim, std::vector<C>(a.dim * b.dim * a.dim * b.dim)};
    for (std::size_t r1 = 0; r1 < a.dim; ++r1)
        for (std::size_t c1 = 0; c1 < a.dim; ++c1)
            for (std::size_t r2 = 0; r2 < b.dim; ++r2)
                for (std::size_t c2 = 0; c2 < b.dim; ++c2)
                    out(r1 * b.dim + r2, c1 * b.dim + c2) = a(r1, c1) * b(r2, c2);
    return out;
}

inline Vec kron(const Vec &a, const Vec &b) {
    Vec out;
    for (const C &x : a)
        for (const C &y : b)
            out.push_back(x * y);
    return out;
}

inline Vec apply(const Mat &m, const Vec &v) {
    Vec out(m.dim, 0.0);
    for (std::size_t r = 0; r < m.dim; ++r)
        for (std::size_t c = 0; c < m.dim; ++c)
            out[r] += m(r, c) * v[c];
    return out;
}

inline Mat hadamard() {
    const double h = 1.0 / std::numbers::sqrt2;
    return {2, {h, h, h, -h}};
}

inline Mat flip() {
    return {2, {0.0, 1.0, -1.0, 0.0}};
}

/// Full-register operator acting with `gate` on qubit `qubit` (1-based, MSB first).
inline Mat on_qubit(const Mat &gate, int qubit, int num_qubits) {
    Mat out = identity(1);
    for (int q = 1; q <= num_qubits; ++q) {
        out = kron(out, q == qubit ? gate : identity(2));
    }
    return out;
}

/// Product ket from {0,1,+,-}.
inline Vec ket(std::string_view s) {
    const double h = 1.0 / std::numbers::sqrt2;
    Vec out{1.0};
    for (char c : s) {
        Vec single;
        if (c == '0') single = {1.0, 0.0};
        if (c == '1') single = {0.0, 1.0};
        if (c == '+') single = {h, h};
        if (c == '-') single = {h, -h};
        out = kron(out, single);
    }
    return out;
}

inline Vec add(Vec a, const Vec &b, double sign = 1.0) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += sign * b[i];
    return a;
}

inline Vec scale(Vec a, double s) {
    for (auto &x : a) x *= s;
    return a;
}

inline C inner(const Vec &a, const Vec &b) {
    C total = 0;
    for (std::size_t i = 0; i < a.size(); ++i) total += std::conj(a[i]) * b[i];
    return total;
}

inline double norm2(const Vec &a) {
    return std::real(inner(a, a));
}

/// Bell vectors over |ab>: psi+- = (|10> +- |01>)/sqrt2, phi+- = (|00> +- |11>)/sqrt2.
inline Vec bell(int which) {
    const double h = 1.0 / std::numbers::sqrt2;
    switch (which) {
        case 0: return {0.0, h, h, 0.0};
        case 1: return {0.0, -h, h, 0.0};
        case 2: return {h, 0.0, 0.0, h};
        default: return {h, 0.0, 0.0, -h};
    }
}

}  // namespace oracle

#endif
