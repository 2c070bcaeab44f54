#pragma once

#include <string>
#include <vector>

#include "lyt/algebra.hpp"

namespace lyt::corpus
{

/// [e0,e1] = e0, {e0,e1,e1} = e0.
LYAlgebra ly2();
/// [e0,e1] = e2, {e0,e1,e0} = e2.
LYAlgebra ly3();
LYAlgebra abelian(std::size_t n);
/// The Lie algebra [e0,e1] = e0 with {x,y,z} = [[x,y],z].
LYAlgebra lie2();
/// Cross-product Lie algebra.
LYAlgebra so3();
/// Left Leibniz algebra e1 * e0 = e0.
LYAlgebra leibniz2();

/// [[1, k1], [0, k]]; modified Rota-Baxter on ly2 for every k, k1.
LinearOperator ly2_operator(const Scalar &k, const Scalar &k1);
/// [[0, k1, 0], [(1-k^2)/k1, k, 0], [k2, k3, k]]. Throws InputError when k1 = 0.
/// Modified Rota-Baxter on ly3 exactly when k^3 = k: at (e0,e1,e0) the
/// ternary identity reads 0 = (k^3 - k) e2.
LinearOperator ly3_operator(const Scalar &k, const Scalar &k1, const Scalar &k2, const Scalar &k3);

struct Pair
{
    std::string name;
    LYAlgebra algebra;
    LinearOperator op;
};

/// Small (algebra, modified Rota-Baxter operator) pairs used by the tests
/// and the acceptance suite.
std::vector<Pair> pairs();

/// Names understood by the `examples` verb.
std::vector<std::string> algebra_names();
/// Throws InputError on an unknown name.
LYAlgebra algebra_by_name(const std::string &name);

} // namespace lyt::corpus
