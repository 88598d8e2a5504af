// SPDX-License-Identifier: Apache-2.0
#include "nilsum/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "nilsum/errors.hpp"

namespace nilsum {

namespace {

bool parse_u32(const std::string& s, std::uint32_t& out) {
    if (s.empty()) return false;
    std::uint64_t v = 0;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
        v = v * 10 + static_cast<std::uint64_t>(ch - '0');
        if (v > 0xFFFFFFFFULL) return false;
    }
    out = static_cast<std::uint32_t>(v);
    return true;
}

bool looks_like_rational(const std::string& s) {
    // ^-?\d+(/\d+)?$
    std::size_t i = 0;
    if (i < s.size() && s[i] == '-') ++i;
    std::size_t digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
    if (digits == 0) return false;
    if (i == s.size()) return true;
    if (s[i] != '/') return false;
    ++i;
    digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
    return digits > 0 && i == s.size();
}

mpq_class parse_rational(const std::string& s) {
    if (!looks_like_rational(s)) throw ParseError("bad rational entry: " + s);
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0 || q.get_den() == 0)
        throw ParseError("bad rational entry: " + s);
    q.canonicalize();
    return q;
}

Scalar parse_quaternion(const std::string& token) {
    mpq_class comp[4] = {0, 0, 0, 0};
    std::size_t i = 0;
    bool any = false;
    while (i < token.size()) {
        bool neg = false;
        if (token[i] == '+' || token[i] == '-') {
            neg = token[i] == '-';
            ++i;
        } else if (any) {
            throw ParseError("bad quaternion entry: " + token);
        }
        std::size_t start = i;
        while (i < token.size() && token[i] != '+' && token[i] != '-') ++i;
        std::string term = token.substr(start, i - start);
        if (term.empty()) throw ParseError("bad quaternion entry: " + token);
        int unit = 0;
        const char last = term.back();
        if (last == 'i') unit = 1;
        else if (last == 'j') unit = 2;
        else if (last == 'k') unit = 3;
        if (unit != 0) term.pop_back();
        mpq_class coef = term.empty() ? mpq_class(1) : parse_rational(term);
        if (neg) coef = -coef;
        comp[unit] += coef;
        any = true;
    }
    if (!any) throw ParseError("empty quaternion entry");
    return Scalar::quaternion(comp[0], comp[1], comp[2], comp[3]);
}

}  // namespace

std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

DomainPtr parse_domain_spec(const std::vector<std::string>& tokens) {
    if (tokens.empty()) throw ParseError("empty domain spec");
    const std::string& head = tokens[0];
    if (head == "rat") {
        if (tokens.size() != 1) throw ParseError("domain spec: rat takes no arguments");
        return Domain::rationals();
    }
    if (head == "quat") {
        if (tokens.size() != 1) throw ParseError("domain spec: quat takes no arguments");
        return Domain::quaternions();
    }
    if (head == "gf") {
        std::uint32_t p = 0, k = 0;
        if (tokens.size() == 2) {
            if (!parse_u32(tokens[1], p)) throw ParseError("domain spec: bad prime");
            return Domain::galois(p, 1);
        }
        if (tokens.size() < 3) throw ParseError("domain spec: gf needs p [k poly]");
        if (!parse_u32(tokens[1], p) || !parse_u32(tokens[2], k))
            throw ParseError("domain spec: bad gf parameters");
        if (tokens.size() != 3 + k + 1)
            throw ParseError("domain spec: gf modulus must list k+1 coefficients");
        std::vector<std::uint32_t> mod(k + 1);
        for (std::uint32_t i = 0; i <= k; ++i)
            if (!parse_u32(tokens[3 + i], mod[i]))
                throw ParseError("domain spec: bad modulus coefficient");
        return Domain::galois(p, k, std::move(mod));
    }
    throw ParseError("unknown domain spec: " + head);
}

Scalar parse_entry(const DomainPtr& d, const std::string& token) {
    switch (d->kind()) {
        case DomainKind::Galois: {
            if (d->degree() == 1) {
                // Any integer; reduced mod p.
                std::string t = token;
                bool neg = false;
                if (!t.empty() && t[0] == '-') {
                    neg = true;
                    t.erase(0, 1);
                }
                std::uint32_t v = 0;
                if (!parse_u32(t, v)) throw ParseError("bad gf entry: " + token);
                const std::uint32_t p = d->prime();
                v %= p;
                if (neg) v = (p - v) % p;
                return Scalar::galois_from_value(d, v);
            }
            std::uint32_t v = 0;
            if (!parse_u32(token, v) || v >= d->order())
                throw ParseError("bad gf entry (expected 0.." +
                                 std::to_string(d->order() - 1) + "): " + token);
            return Scalar::galois_from_value(d, v);
        }
        case DomainKind::Rational:
            return Scalar::rational(parse_rational(token));
        case DomainKind::Quaternion:
            return parse_quaternion(token);
        case DomainKind::IntegerMod: {
            std::uint32_t v = 0;
            if (!parse_u32(token, v)) throw ParseError("bad zmod entry: " + token);
            return Scalar::residue(d, v);
        }
    }
    throw ParseError("unknown domain kind");
}

Matrix read_matrix(std::istream& in) {
    std::string line;
    auto next_line = [&](const char* what) {
        while (std::getline(in, line)) {
            auto toks = split_tokens(line);
            if (!toks.empty() && toks[0][0] != '#') return toks;
        }
        throw ParseError(std::string("matrix file truncated: expected ") + what);
    };

    DomainPtr d = parse_domain_spec(next_line("domain spec"));
    auto dims = next_line("dimensions");
    std::uint32_t rows = 0, cols = 0;
    if (dims.size() != 2 || !parse_u32(dims[0], rows) || !parse_u32(dims[1], cols) ||
        rows == 0 || cols == 0)
        throw ParseError("matrix file: bad dimension line");

    std::vector<Scalar> entries;
    entries.reserve(static_cast<std::size_t>(rows) * cols);
    for (std::uint32_t i = 0; i < rows; ++i) {
        auto toks = next_line("matrix row");
        if (toks.size() != cols)
            throw ParseError("matrix file: row " + std::to_string(i + 1) + " has " +
                             std::to_string(toks.size()) + " entries, expected " +
                             std::to_string(cols));
        for (const auto& t : toks) entries.push_back(parse_entry(d, t));
    }
    return Matrix::from_entries(d, rows, cols, std::move(entries));
}

Matrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open matrix file: " + path);
    return read_matrix(in);
}

void write_matrix(std::ostream& out, const Matrix& m) {
    out << m.domain()->spec() << "\n" << m.rows() << " " << m.cols() << "\n";
    for (std::uint32_t i = 0; i < m.rows(); ++i) {
        for (std::uint32_t j = 0; j < m.cols(); ++j)
            out << (j ? " " : "") << m.at(i, j).str();
        out << "\n";
    }
}

std::string matrix_to_string(const Matrix& m) {
    std::ostringstream os;
    write_matrix(os, m);
    return os.str();
}

std::string format_rows(const Matrix& m) {
    std::ostringstream os;
    for (std::uint32_t i = 0; i < m.rows(); ++i) {
        for (std::uint32_t j = 0; j < m.cols(); ++j)
            os << (j ? " " : "") << m.at(i, j).str();
        os << "\n";
    }
    return os.str();
}

} // namespace nilsum
