#ifndef BOLKIT_JSON_IO_HPP
#define BOLKIT_JSON_IO_HPP

#include "bolkit/algebra.hpp"
#include "bolkit/extensions.hpp"
#include "bolkit/pder.hpp"
#include "bolkit/reps.hpp"

#include <json.hpp>

namespace bolkit {

using nlohmann::json;

// Rationals travel as "p/q" or "p" strings; plain JSON integers are
// accepted on input.
json rational_to_json(const Rational& q);
Rational rational_from_json(const json& j);

json vec_to_json(const Vec& v);
Vec vec_from_json(const json& j);
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);
json tensor3_to_json(const Tensor3& t);
Tensor3 tensor3_from_json(const json& j);
json tensor4_to_json(const Tensor4& t);
Tensor4 tensor4_from_json(const json& j);

// {"dimension": n, "binary": ..., "ternary": ..., "form": ..., "labels": ...};
// missing "binary" means zero (pure LTS input).
struct AlgebraFile {
    BolAlgebra algebra;
    std::optional<Matrix> form;
};

json algebra_to_json(const BolAlgebra& a, const std::optional<Matrix>& form = std::nullopt);
AlgebraFile algebra_from_json(const json& j);

json pder_to_json(const PseudoDer& p);
PseudoDer pder_from_json(const json& j);

json representation_to_json(const Representation& rep);
Representation representation_from_json(const json& j, std::size_t algebra_dim);

json cocycle_to_json(const Cocycle23& c);
Cocycle23 cocycle_from_json(const json& j);

json report_to_json(const CheckReport& rep);

} // namespace bolkit

#endif
