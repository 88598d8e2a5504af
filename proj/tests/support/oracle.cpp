// SPDX-License-Identifier: Apache-2.0
#include "support/oracle.hpp"

#include <stdexcept>

namespace nilsum::oracle {

TinyMat tiny_zero(int n, int p) { return TinyMat{n, p, {}}; }

TinyMat tiny_add(const TinyMat& a, const TinyMat& b) {
    TinyMat r{a.n, a.p, {}};
    for (int i = 0; i < a.n * a.n; ++i)
        r.e[i] = static_cast<std::uint8_t>((a.e[i] + b.e[i]) % a.p);
    return r;
}

TinyMat tiny_sub(const TinyMat& a, const TinyMat& b) {
    TinyMat r{a.n, a.p, {}};
    for (int i = 0; i < a.n * a.n; ++i)
        r.e[i] = static_cast<std::uint8_t>((a.e[i] + a.p - b.e[i]) % a.p);
    return r;
}

TinyMat tiny_mul(const TinyMat& a, const TinyMat& b) {
    TinyMat r{a.n, a.p, {}};
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j) {
            int acc = 0;
            for (int l = 0; l < a.n; ++l) acc += a.e[i * a.n + l] * b.e[l * a.n + j];
            r.e[i * a.n + j] = static_cast<std::uint8_t>(acc % a.p);
        }
    return r;
}

bool tiny_is_zero(const TinyMat& a) {
    for (int i = 0; i < a.n * a.n; ++i)
        if (a.e[i] != 0) return false;
    return true;
}

bool tiny_is_nilpotent(const TinyMat& a) {
    TinyMat pw = a;
    for (int k = 1; k < a.n; ++k) pw = tiny_mul(pw, a);
    return tiny_is_zero(pw);
}

std::uint64_t tiny_encode(const TinyMat& a) {
    std::uint64_t v = 0;
    for (int i = a.n * a.n; i-- > 0;) v = v * a.p + a.e[i];
    return v;
}

TinyMat tiny_decode(int n, int p, std::uint64_t v) {
    TinyMat a{n, p, {}};
    for (int i = 0; i < n * n; ++i) {
        a.e[i] = static_cast<std::uint8_t>(v % p);
        v /= p;
    }
    return a;
}

std::vector<TinyMat> all_matrices(int n, int p) {
    std::uint64_t count = 1;
    for (int i = 0; i < n * n; ++i) count *= p;
    if (count > (1u << 16)) throw std::length_error("oracle: matrix space too large");
    std::vector<TinyMat> out;
    out.reserve(count);
    for (std::uint64_t v = 0; v < count; ++v) out.push_back(tiny_decode(n, p, v));
    return out;
}

std::vector<TinyMat> nilpotent_matrices(int n, int p) {
    std::vector<TinyMat> out;
    for (const auto& m : all_matrices(n, p))
        if (tiny_is_nilpotent(m)) out.push_back(m);
    return out;
}

bool tiny_is_two_nil_sum(const TinyMat& a, const std::vector<TinyMat>& nilpotents) {
    for (const auto& n1 : nilpotents)
        if (tiny_is_nilpotent(tiny_sub(a, n1))) return true;
    return false;
}

TinyMat from_matrix(const Matrix& m) {
    const auto& d = m.domain();
    if (d->kind() != DomainKind::Galois || d->degree() != 1)
        throw std::invalid_argument("oracle bridge: prime-field domains only");
    TinyMat a{static_cast<int>(m.rows()), static_cast<int>(d->prime()), {}};
    for (std::uint32_t i = 0; i < m.rows(); ++i)
        for (std::uint32_t j = 0; j < m.cols(); ++j)
            a.e[i * m.cols() + j] = static_cast<std::uint8_t>(m.at(i, j).galois_value());
    return a;
}

Matrix to_matrix(const TinyMat& a, const DomainPtr& d) {
    Matrix m(d, a.n, a.n);
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j)
            m.set(i, j, Scalar::galois_from_value(d, a.e[i * a.n + j]));
    return m;
}

} // namespace nilsum::oracle
