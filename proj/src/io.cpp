#include "lyt/io.hpp"

#include <fstream>
#include <sstream>

namespace lyt::io
{

namespace
{

const json &field(const json &j, const char *key, const std::string &where)
{
    if (!j.is_object())
        throw InputError(where + ": expected an object");
    auto it = j.find(key);
    if (it == j.end())
        throw InputError(where + ": missing \"" + key + "\"");
    return *it;
}

std::size_t index_from_json(const json &j, const std::string &where)
{
    if (!j.is_number_integer() || j.get<std::int64_t>() < 0)
        throw InputError(where + ": expected a non-negative integer");
    return j.get<std::size_t>();
}

const json &array_of(const json &j, std::size_t len, const std::string &where)
{
    if (!j.is_array() || j.size() != len)
        throw InputError(where + ": expected an array of length " + std::to_string(len));
    return j;
}

Matrix square_from_json(const json &j, std::size_t m, const std::string &where)
{
    Matrix out = matrix_from_json(j, where);
    if (out.rows() != m || out.cols() != m)
        throw InputError(where + ": expected a " + std::to_string(m) + "x" + std::to_string(m) + " matrix");
    return out;
}

std::vector<Matrix> matrices_from_json(const json &j, std::size_t count, std::size_t m,
                                       const std::string &where)
{
    array_of(j, count, where);
    std::vector<Matrix> out;
    for (std::size_t t = 0; t < count; ++t)
        out.push_back(square_from_json(j[t], m, where + "[" + std::to_string(t) + "]"));
    return out;
}

json matrices_to_json(const std::vector<Matrix> &ms)
{
    json out = json::array();
    for (const auto &m : ms)
        out.push_back(to_json(m));
    return out;
}

json cochain2_parts(const Cochain2 &c, json &g)
{
    const std::size_t n = c.dim();
    json f = json::array();
    g = json::array();
    for (std::size_t w = 0; w < wedge_count(n); ++w) {
        auto [i, j] = wedge_pair(w, n);
        f.push_back(to_json(c.f(i, j)));
        json row = json::array();
        for (std::size_t k = 0; k < n; ++k)
            row.push_back(to_json(c.g(i, j, k)));
        g.push_back(std::move(row));
    }
    return f;
}

Cochain2 cochain2_from_parts(const json &f, const json &g, std::size_t n, std::size_t m,
                             const std::string &where)
{
    Cochain2 c(n, m);
    const std::size_t W = wedge_count(n);
    array_of(f, W, where + ".f");
    array_of(g, W, where + ".g");
    for (std::size_t w = 0; w < W; ++w) {
        auto [i, j] = wedge_pair(w, n);
        const std::string at = "[" + std::to_string(w) + "]";
        c.set_f(i, j, vector_from_json(f[w], m, where + ".f" + at));
        array_of(g[w], n, where + ".g" + at);
        for (std::size_t k = 0; k < n; ++k)
            c.set_g(i, j, k, vector_from_json(g[w][k], m, where + ".g" + at + "[" + std::to_string(k) + "]"));
    }
    return c;
}

void check_basis_order(const json &j, const std::string &where)
{
    auto it = j.find("basis_order");
    if (it != j.end() && (!it->is_string() || it->get<std::string>() != kBasisOrderTag))
        throw InputError(where + ": unsupported basis_order (expected " + std::string(kBasisOrderTag) + ")");
}

} // namespace

json to_json(const Scalar &s)
{
    if (auto v = s.as_int64())
        return *v;
    return s.str();
}

Scalar scalar_from_json(const json &j, const std::string &where)
{
    if (j.is_number_integer())
        return j.is_number_unsigned() ? Scalar(mpq_class(std::to_string(j.get<std::uint64_t>())))
                                      : Scalar(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Scalar::parse(j.get<std::string>());
        } catch (const InputError &e) {
            throw InputError(where + ": " + e.what());
        }
    }
    throw InputError(where + ": expected an integer or a \"p/q\" string");
}

json to_json(const Vector &v)
{
    json out = json::array();
    for (const auto &s : v)
        out.push_back(to_json(s));
    return out;
}

Vector vector_from_json(const json &j, std::size_t len, const std::string &where)
{
    array_of(j, len, where);
    Vector out;
    out.reserve(len);
    for (std::size_t t = 0; t < len; ++t)
        out.push_back(scalar_from_json(j[t], where + "[" + std::to_string(t) + "]"));
    return out;
}

json to_json(const Matrix &m)
{
    json entries = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (const auto &s : m.row(r))
            row.push_back(to_json(s));
        entries.push_back(std::move(row));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Matrix matrix_from_json(const json &j, const std::string &where)
{
    const std::size_t rows = index_from_json(field(j, "rows", where), where + ".rows");
    const std::size_t cols = index_from_json(field(j, "cols", where), where + ".cols");
    const json &entries = array_of(field(j, "entries", where), rows, where + ".entries");
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        Vector row = vector_from_json(entries[r], cols, where + ".entries[" + std::to_string(r) + "]");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = std::move(row[c]);
    }
    return m;
}

json to_json(const LYAlgebra &a)
{
    json bin = json::array(), ter = json::array();
    for (const auto &e : a.binary_entries())
        bin.push_back({{"i", e.i}, {"j", e.j}, {"value", to_json(e.value)}});
    for (const auto &e : a.ternary_entries())
        ter.push_back({{"i", e.i}, {"j", e.j}, {"k", e.k}, {"value", to_json(e.value)}});
    return {{"dim", a.dim()}, {"binary", std::move(bin)}, {"ternary", std::move(ter)}};
}

LYAlgebra algebra_from_json(const json &j)
{
    const std::string where = "algebra";
    const std::size_t n = index_from_json(field(j, "dim", where), "algebra.dim");
    std::vector<BinaryEntry> bin;
    std::vector<TernaryEntry> ter;
    const json &jb = field(j, "binary", where), &jt = field(j, "ternary", where);
    if (!jb.is_array() || !jt.is_array())
        throw InputError("algebra: \"binary\" and \"ternary\" must be arrays");
    for (std::size_t t = 0; t < jb.size(); ++t) {
        const std::string at = "algebra.binary[" + std::to_string(t) + "]";
        bin.push_back({index_from_json(field(jb[t], "i", at), at + ".i"),
                       index_from_json(field(jb[t], "j", at), at + ".j"),
                       vector_from_json(field(jb[t], "value", at), n, at + ".value")});
    }
    for (std::size_t t = 0; t < jt.size(); ++t) {
        const std::string at = "algebra.ternary[" + std::to_string(t) + "]";
        ter.push_back({index_from_json(field(jt[t], "i", at), at + ".i"),
                       index_from_json(field(jt[t], "j", at), at + ".j"),
                       index_from_json(field(jt[t], "k", at), at + ".k"),
                       vector_from_json(field(jt[t], "value", at), n, at + ".value")});
    }
    return make_algebra(n, bin, ter);
}

json to_json(const Representation &rep)
{
    json out{{"dimV", rep.dim_v()},
             {"rho", matrices_to_json(rep.rho_list())},
             {"theta", matrices_to_json(rep.theta_list())},
             {"D", matrices_to_json(rep.d_list())}};
    if (rep.rv())
        out["rv"] = to_json(*rep.rv());
    return out;
}

Representation representation_from_json(const json &j, const LYAlgebra &a)
{
    const std::string where = "representation";
    const std::size_t n = a.dim();
    const std::size_t m = index_from_json(field(j, "dimV", where), "representation.dimV");
    auto rho = matrices_from_json(field(j, "rho", where), n, m, "representation.rho");
    auto theta = matrices_from_json(field(j, "theta", where), n * n, m, "representation.theta");
    std::optional<std::vector<Matrix>> d;
    if (j.contains("D"))
        d = matrices_from_json(j["D"], n * n, m, "representation.D");
    std::optional<Matrix> rv;
    if (j.contains("rv"))
        rv = square_from_json(j["rv"], m, "representation.rv");
    return make_representation(a, m, std::move(rho), std::move(theta), std::move(d), std::move(rv));
}

json to_json(const Cochain1 &h)
{
    json f = json::array();
    for (std::size_t i = 0; i < h.dim(); ++i)
        f.push_back(to_json(h.h.column(i)));
    return {{"degree", 1}, {"dim", h.dim()}, {"dimV", h.dim_v()}, {"basis_order", kBasisOrderTag},
            {"f", std::move(f)}};
}

json to_json(const Cochain2 &c)
{
    json g;
    json f = cochain2_parts(c, g);
    return {{"degree", 2},        {"dim", c.dim()}, {"dimV", c.dim_v()}, {"basis_order", kBasisOrderTag},
            {"f", std::move(f)}, {"g", std::move(g)}};
}

json to_json(const TotalCochain2 &c)
{
    json out = to_json(c.ly);
    out["op"] = to_json(c.op.h);
    return out;
}

TotalCochain2 CochainFile::total() const
{
    if (degree != 2)
        throw InputError("cochain: expected a degree-2 cochain");
    return {c, {op ? *op : Matrix(c.dim_v(), c.dim())}};
}

CochainFile cochain_from_json(const json &j, std::size_t n, std::size_t m)
{
    const std::string where = "cochain";
    check_basis_order(j, where);
    const json &jd = field(j, "degree", where);
    if (!jd.is_number_integer() || (jd.get<int>() != 1 && jd.get<int>() != 2))
        throw InputError("cochain: degree must be 1 or 2");
    if (j.contains("dim") && index_from_json(j["dim"], "cochain.dim") != n)
        throw InputError("cochain: dim does not match the algebra");
    if (j.contains("dimV") && index_from_json(j["dimV"], "cochain.dimV") != m)
        throw InputError("cochain: dimV does not match the representation");
    CochainFile out;
    out.degree = jd.get<int>();
    if (out.degree == 1) {
        const json &f = array_of(field(j, "f", where), n, "cochain.f");
        out.h = Cochain1::zero(n, m);
        for (std::size_t i = 0; i < n; ++i)
            out.h.h.set_column(i, vector_from_json(f[i], m, "cochain.f[" + std::to_string(i) + "]"));
        if (j.contains("op"))
            throw InputError("cochain: a degree-1 cochain has no operator part");
    } else {
        out.c = cochain2_from_parts(field(j, "f", where), field(j, "g", where), n, m, where);
        if (j.contains("op")) {
            Matrix op = matrix_from_json(j["op"], "cochain.op");
            if (op.rows() != m || op.cols() != n)
                throw InputError("cochain: op must be dimV x dim");
            out.op = std::move(op);
        }
    }
    return out;
}

json to_json(const Infinitesimal &inf)
{
    json g;
    json f = cochain2_parts(inf.fg, g);
    return {{"basis_order", kBasisOrderTag}, {"F1", std::move(f)}, {"G1", std::move(g)}, {"R1", to_json(inf.r1)}};
}

Infinitesimal infinitesimal_from_json(const json &j, std::size_t n)
{
    const std::string where = "infinitesimal";
    check_basis_order(j, where);
    Infinitesimal inf;
    inf.fg = cochain2_from_parts(field(j, "F1", where), field(j, "G1", where), n, n, where);
    inf.r1 = square_from_json(field(j, "R1", where), n, "infinitesimal.R1");
    return inf;
}

json to_json(const AbelianExtension &ext, const std::optional<Matrix> &section)
{
    json out = to_json(ext.total.algebra);
    out["operator"] = to_json(ext.total.op);
    out["ideal"] = ext.ideal;
    out["projection"] = to_json(ext.projection);
    out["inclusion"] = to_json(ext.inclusion);
    if (section)
        out["section"] = to_json(*section);
    return out;
}

ExtensionFile extension_from_json(const json &j)
{
    const std::string where = "extension";
    ExtensionFile out;
    out.ext.total.algebra = algebra_from_json(j);
    const std::size_t N = out.ext.total.algebra.dim();
    out.ext.total.op = square_from_json(field(j, "operator", where), N, "extension.operator");
    const json &ideal = field(j, "ideal", where);
    if (!ideal.is_array())
        throw InputError("extension.ideal: expected an array");
    for (std::size_t t = 0; t < ideal.size(); ++t)
        out.ext.ideal.push_back(index_from_json(ideal[t], "extension.ideal[" + std::to_string(t) + "]"));
    out.ext.projection = matrix_from_json(field(j, "projection", where), "extension.projection");
    out.ext.inclusion = matrix_from_json(field(j, "inclusion", where), "extension.inclusion");
    if (j.contains("section"))
        out.section = matrix_from_json(j["section"], "extension.section");
    return out;
}

json to_json(const Violation &v)
{
    return {{"axiom", v.axiom}, {"indices", v.indices}, {"lhs", to_json(v.lhs)}, {"rhs", to_json(v.rhs)}};
}

json to_json(const AxiomReport &r)
{
    json vs = json::array();
    for (const auto &v : r.violations)
        vs.push_back(to_json(v));
    return {{"passed", r.passed}, {"truncated", r.truncated}, {"violations", std::move(vs)}};
}

json to_json(const ComplexReport &r)
{
    return {{"complex", to_string(r.complex)},
            {"degree", r.degree},
            {"dim_cochain", r.dim_cochain},
            {"dim_cocycles", r.dim_cocycles},
            {"dim_coboundaries", r.dim_coboundaries},
            {"dim_cohomology", r.dim_cohomology},
            {"rank_outgoing", r.rank_outgoing},
            {"dim_differential_kernel", r.dim_differential_kernel},
            {"strategy", std::string(to_string(r.strategy))},
            {"basis_order", r.basis_order}};
}

json read_file(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error &e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

void write_file(const std::filesystem::path &path, const json &j)
{
    std::ofstream out(path);
    if (!out)
        throw InputError("cannot write " + path.string());
    out << canonical(j);
}

std::string canonical(const json &j)
{
    return j.dump(2) + "\n";
}

} // namespace lyt::io
