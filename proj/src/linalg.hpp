#pragma once

// Exact dense linear algebra and the double description method. Internal to
// the library; public types live in include/toric.

#include "toric/arith.hpp"

#include <optional>
#include <vector>

namespace toric::detail {

using Row = std::vector<Rational>;
using Matrix = std::vector<Row>;

std::size_t rank(Matrix rows);

// One solution of A x = b, or nullopt when the system is inconsistent.
std::optional<Row> solve(const Matrix &a, const Row &b, std::size_t ncols);

// Basis of {x : A x = 0}.
Matrix nullspace(const Matrix &a, std::size_t ncols);

Rational dot(const Row &a, const Row &b);

// Generators of the cone {x in Q^dim : <row, x> >= 0 for every row}:
// extreme rays (modulo the lineality space) and a lineality basis. Rays come
// back as primitive integer vectors, sorted lexicographically, projected onto
// the orthogonal complement of the lineality space.
struct ConeGenerators {
    Matrix rays;
    Matrix lineality;
};

ConeGenerators cone_generators(const Matrix &inequalities, std::size_t dim);

// Scale to a primitive integer vector (rational entries, integral values).
Row primitive_row(const Row &v);

} // namespace toric::detail
