#include "lyt/corpus.hpp"

namespace lyt::corpus
{

LYAlgebra ly2()
{
    return make_algebra(2, {{0, 1, {1, 0}}}, {{0, 1, 1, {1, 0}}});
}

LYAlgebra ly3()
{
    return make_algebra(3, {{0, 1, {0, 0, 1}}}, {{0, 1, 0, {0, 0, 1}}});
}

LYAlgebra abelian(std::size_t n) { return make_algebra(n, {}, {}); }

LYAlgebra lie2() { return from_lie(2, {{0, 1, {1, 0}}}); }

LYAlgebra so3()
{
    return from_lie(3, {{0, 1, {0, 0, 1}}, {0, 2, {0, -1, 0}}, {1, 2, {1, 0, 0}}});
}

LYAlgebra leibniz2() { return from_leibniz(2, {{1, 0, {1, 0}}}); }

LinearOperator ly2_operator(const Scalar &k, const Scalar &k1) { return Matrix{{1, k1}, {0, k}}; }

LinearOperator ly3_operator(const Scalar &k, const Scalar &k1, const Scalar &k2, const Scalar &k3)
{
    if (k1.is_zero())
        throw InputError("ly3 operator family needs k1 != 0");
    return Matrix{{0, k1, 0}, {(Scalar(1) - k * k) / k1, k, 0}, {k2, k3, k}};
}

std::vector<Pair> pairs()
{
    return {
        {"ly2/R(2,3)", ly2(), ly2_operator(2, 3)},
        {"ly2/id", ly2(), Matrix::identity(2)},
        {"ly2/R(0,0)", ly2(), ly2_operator(0, 0)},
        {"ly3/R(0,2,1,-1)", ly3(), ly3_operator(0, 2, 1, -1)},
        {"ly3/id", ly3(), Matrix::identity(3)},
        {"lie2/-id", lie2(), -Matrix::identity(2)},
        {"abelian2/0", abelian(2), Matrix(2, 2)},
    };
}

std::vector<std::string> algebra_names() { return {"ly2", "ly3", "lie2", "so3", "leibniz2"}; }

LYAlgebra algebra_by_name(const std::string &name)
{
    if (name == "ly2")
        return ly2();
    if (name == "ly3")
        return ly3();
    if (name == "lie2")
        return lie2();
    if (name == "so3")
        return so3();
    if (name == "leibniz2")
        return leibniz2();
    throw InputError("unknown algebra '" + name + "'");
}

} // namespace lyt::corpus
