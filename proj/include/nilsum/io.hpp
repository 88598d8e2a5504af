// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nilsum/matrix.hpp"

namespace nilsum {

/// Parses the domain-spec tokens of a matrix file header:
/// `gf p` | `gf p k c0 .. ck` | `rat` | `quat`.
DomainPtr parse_domain_spec(const std::vector<std::string>& tokens);

/// Parses one whitespace-free entry token in the given domain. Integers
/// for gf (the base-p digit encoding for k >= 2), `a` or `a/b` for
/// rationals, `a+bi+cj+dk` with omitted zero terms for quaternions.
Scalar parse_entry(const DomainPtr& d, const std::string& token);

/// Matrix text format:
///   line 1: domain spec
///   line 2: `rows cols`
///   then `rows` lines of `cols` entries.
Matrix read_matrix(std::istream& in);
Matrix read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const Matrix& m);
std::string matrix_to_string(const Matrix& m);

/// One row per line, entries space-separated; no header. For reports.
std::string format_rows(const Matrix& m);

std::vector<std::string> split_tokens(const std::string& line);

} // namespace nilsum
