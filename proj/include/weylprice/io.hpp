#pragma once

#include "weylprice/algebra.hpp"
#include "weylprice/fock.hpp"
#include "weylprice/gaussian.hpp"
#include "weylprice/moments.hpp"
#include "weylprice/qem.hpp"
#include "weylprice/test_function.hpp"
#include "weylprice/weyl.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>

namespace weylprice::io {

using Json = nlohmann::json;

/// Parses JSON text; malformed input raises InputError naming `where` and the
/// parser's line/column.
Json parse(std::string_view text, std::string_view where = "input");
Json read_file(const std::string& path);

Json to_json(const Vector& v);
Json to_json(const Matrix& m);
Json to_json(const SymMatrix& m);
Json to_json(const AntisymMatrix& m);
Json to_json(Complex c);
Json to_json(const ExactComplex& c);

Vector vector_from_json(const Json& j, std::string_view what);
Matrix matrix_from_json(const Json& j, std::string_view what);
SymMatrix sym_from_json(const Json& j, std::string_view what);
AntisymMatrix antisym_from_json(const Json& j, std::string_view what);
MultiIndex multi_index_from_json(const Json& j, std::string_view what);

/// {"dim", "mean", "cov", "ccr"}; "ccr" may be omitted for a classical state.
Json to_json(const GaussianState& state);
GaussianState state_from_json(const Json& j);

/// `vacuum2`, `thermal2:<nbar>`, `classical:<n>`.
bool is_named_state(std::string_view name);
GaussianState named_state(std::string_view name);
/// A built-in name, an inline JSON object, or a path to a JSON file.
GaussianState load_state(const std::string& spec);

Json to_json(const TestFunction& f);
TestFunction test_function_from_json(const Json& j);

Json to_json(const FourierSymbol& symbol);
FourierSymbol symbol_from_json(const Json& j);

Json to_json(const WeylPolynomial& p);
WeylPolynomial weyl_polynomial_from_json(const Json& j, int dim);

Json to_json(const MomentEstimate& e);
Json to_json(const QuantumPriceResiduals& r);
Json to_json(const QemVerification& v);

Json to_json(const QemProblem& problem);
QemProblem qem_problem_from_json(const Json& j);

Json to_json(const DensityParams& params);
DensityParams density_params_from_json(const Json& j);

/// Inline JSON if `spec` starts with '{' or '[', otherwise the contents of the file.
Json load_json_arg(const std::string& spec, std::string_view what);

/// %.17g.
std::string format_double(double x);

}  // namespace weylprice::io
