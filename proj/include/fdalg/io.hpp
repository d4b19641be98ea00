#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "fdalg/interchange.hpp"
#include "fdalg/linear_map.hpp"
#include "fdalg/tensor.hpp"

namespace fdalg {

// Every file is a JSON object. Value literals are strings in the scalar
// syntax ("-1/4", "3") or JSON integers.
//
//   algebra: {"name": s, "field": "Q" | "Fp:<p>", "dim": n, "unit": u?,
//             "constants": [[i, j, k, v], ...]}     omitted triples are zero
//   map:     {"field": f?, "rows": [[v, ...], ...]}
//   tensor:  {"field": f?, "shape": [n1, ...], "entries": [[[i1, ...], v], ...]}
//   ops:     {"carrier": m, "op1": {"arity": p, "table": nested}, "op2": {...}}
//
// Syntax errors raise ParseError with the offending line; semantic errors
// raise ParseError (line 0, JSON path in the reason) or ValidationError.

AlgebraPtr parse_algebra(std::string_view text);
AlgebraPtr load_algebra(const std::filesystem::path& path);
void save_algebra(const Algebra& alg, std::ostream& out);

/// Matrix file on its own, over the field it declares (Q when absent).
Matrix parse_matrix(std::string_view text);
Matrix load_matrix(const std::filesystem::path& path);

LinearMap parse_map(std::string_view text, const AlgebraPtr& source, const AlgebraPtr& target);
LinearMap load_map(const std::filesystem::path& path, const AlgebraPtr& source, const AlgebraPtr& target);
void save_map(const LinearMap& f, std::ostream& out);

/// `factors` fix the shape; a "shape" key in the file must agree with it.
Tensor parse_tensor(std::string_view text, const std::vector<AlgebraPtr>& factors);
Tensor load_tensor(const std::filesystem::path& path, const std::vector<AlgebraPtr>& factors);
void save_tensor(const Tensor& t, std::ostream& out);

FiniteOpAlgebra parse_optable(std::string_view text);
FiniteOpAlgebra load_optable(const std::filesystem::path& path);
void save_optable(const FiniteOpAlgebra& alg, std::ostream& out);

} // namespace fdalg
