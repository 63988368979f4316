#pragma once

#include <string>

#include "ybx/fieldop.hpp"

namespace ybx {

/// Matrix schema: {"n", "legs", "ring": [vars], "entries": [{"row": [..],
/// "col": [..], "coeff": "..."}]} with entries sorted by flattened (row, col)
/// and coefficients in the shared text grammar. Serialization is
/// deterministic, so build -> parse -> re-serialize is byte-identical.
std::string tensor_to_json(const TensorMat& m, int indent = 2);
TensorMat tensor_from_json(const std::string& text);

/// Operator schema: the z-variables, the parameter ring, and the term list
/// [{"swap": bool, "sub": {var: [scale, offset]}, "coeff": "..."}].
std::string fieldop_to_json(const FieldOp& op, int indent = 2);
FieldOp fieldop_from_json(const std::string& text);

/// pmatrix rendering with entries in the shared grammar.
std::string tensor_to_latex(const TensorMat& m);

} // namespace ybx
