#include "lyt/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "CLI11.hpp"
#include "lyt/corpus.hpp"
#include "lyt/io.hpp"

namespace lyt::cli
{

namespace
{

using io::json;

struct Options
{
    std::string format = "text";
    unsigned threads = 1;

    std::string algebra, op, rep, cochain, infinitesimal, extension, section;
    std::string first, second, output, dir;
    std::string kind;
    std::string complex = "mrbly";
    std::string strategy = "fraction-free";
    std::string candidates = "-1,0,1";
    std::string name;
    int degree = 2;
    std::uint64_t budget = 1u << 20;
    std::size_t dim = 0;
    std::string k = "1", k1 = "1", k2 = "0", k3 = "0";
};

struct Env
{
    const Options &opt;
    std::size_t cap;
    std::ostream &out;

    bool json_format() const { return opt.format == "json"; }
};

std::size_t max_violations_from_env()
{
    const char *s = std::getenv("LYT_MAX_VIOLATIONS");
    if (!s || !*s)
        return kDefaultMaxViolations;
    char *end = nullptr;
    const long long v = std::strtoll(s, &end, 10);
    if (*end != '\0' || v <= 0)
        throw InputError("LYT_MAX_VIOLATIONS must be a positive integer");
    return static_cast<std::size_t>(v);
}

json envelope(const std::string &verb)
{
    return {{"schema_version", io::kSchemaVersion}, {"verb", verb}};
}

void print_report(std::ostream &os, const std::string &title, const AxiomReport &r)
{
    if (r.passed) {
        os << title << ": pass\n";
        return;
    }
    os << title << ": FAIL (" << r.violations.size() << (r.truncated ? "+" : "") << " violations)\n";
    for (const auto &v : r.violations) {
        os << "  " << v.axiom << " at (";
        for (std::size_t t = 0; t < v.indices.size(); ++t)
            os << (t ? "," : "") << "e" << v.indices[t];
        os << "): lhs " << v.lhs << ", rhs " << v.rhs << "\n";
    }
    if (r.truncated)
        os << "  (report truncated; raise LYT_MAX_VIOLATIONS for more)\n";
}

int emit_check(const Env &env, const std::string &verb, const std::string &title, const AxiomReport &r,
               json extra = json::object())
{
    if (env.json_format()) {
        json j = envelope(verb);
        j["check"] = title;
        j["report"] = io::to_json(r);
        for (auto &[key, value] : extra.items())
            j[key] = value;
        env.out << io::canonical(j);
    } else {
        print_report(env.out, title, r);
    }
    return r.passed ? kPass : kCheckFailed;
}

// Construction verbs print the produced file, or write it with --output.
int emit_file(const Env &env, const std::string &verb, const json &file)
{
    if (!env.opt.output.empty()) {
        io::write_file(env.opt.output, file);
        if (env.json_format()) {
            json j = envelope(verb);
            j["written"] = env.opt.output;
            env.out << io::canonical(j);
        } else {
            env.out << "wrote " << env.opt.output << "\n";
        }
        return kPass;
    }
    if (env.json_format()) {
        json j = envelope(verb);
        j["result"] = file;
        env.out << io::canonical(j);
    } else {
        env.out << io::canonical(file);
    }
    return kPass;
}

LYAlgebra load_algebra(const Options &o)
{
    if (o.algebra.empty())
        throw InputError("--algebra is required");
    return io::algebra_from_json(io::read_file(o.algebra));
}

LinearOperator load_operator(const Options &o, std::size_t n)
{
    LinearOperator r = io::matrix_from_json(io::read_file(o.op), "operator");
    if (r.rows() != n || r.cols() != n)
        throw InputError("operator must be " + std::to_string(n) + "x" + std::to_string(n));
    return r;
}

std::optional<LinearOperator> maybe_operator(const Options &o, std::size_t n)
{
    if (o.op.empty())
        return std::nullopt;
    return load_operator(o, n);
}

// --rep when given, otherwise the adjoint representation (with R_V = R when
// an operator is present).
Representation load_rep(const Options &o, const LYAlgebra &a, const std::optional<LinearOperator> &r)
{
    if (!o.rep.empty())
        return io::representation_from_json(io::read_file(o.rep), a);
    return r ? adjoint_mrb_representation(a, *r) : adjoint_representation(a);
}

OperatorKind parse_kind(const std::string &s)
{
    if (s == "mrb")
        return OperatorKind::ModifiedRotaBaxter;
    if (s == "rb")
        return OperatorKind::RotaBaxterWeightMinusOne;
    if (s == "nijenhuis")
        return OperatorKind::Nijenhuis;
    throw InputError("unknown operator kind \"" + s + "\" (expected mrb, rb or nijenhuis)");
}

RankStrategy parse_strategy(const std::string &s)
{
    for (auto st : {RankStrategy::FractionFree, RankStrategy::RationalEchelon})
        if (to_string(st) == s)
            return st;
    throw InputError("unknown strategy \"" + s + "\"");
}

std::vector<Scalar> parse_candidates(const std::string &s)
{
    std::vector<Scalar> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(Scalar::parse(item));
    if (out.empty())
        throw InputError("--candidates is empty");
    return out;
}

void nonzero_rows(ReportBuilder &rb, const char *tag, const Vector &v)
{
    for (std::size_t row = 0; row < v.size() && !rb.full(); ++row)
        if (!v[row].is_zero())
            rb.add({tag, {row}, {v[row]}, {Scalar(0)}});
}

int cmd_check_algebra(const Env &env)
{
    const LYAlgebra a = load_algebra(env.opt);
    return emit_check(env, "check-algebra", "LY1–LY6", check_ly_axioms(a, env.cap));
}

int cmd_check_operator(const Env &env)
{
    const LYAlgebra a = load_algebra(env.opt);
    const LinearOperator r = load_operator(env.opt, a.dim());
    const OperatorKind kind = parse_kind(env.opt.kind);
    return emit_check(env, "check-operator", "operator (" + env.opt.kind + ")",
                      check_operator(a, r, kind, env.cap), {{"kind", env.opt.kind}});
}

int cmd_check_rep(const Env &env)
{
    const Options &o = env.opt;
    const LYAlgebra a = load_algebra(o);
    if (o.rep.empty())
        throw InputError("--rep is required");
    const Representation rep = io::representation_from_json(io::read_file(o.rep), a);
    if (o.op.empty())
        return emit_check(env, "check-rep", "R1–R7", check_representation(rep, env.cap));
    const LinearOperator r = load_operator(o, a.dim());
    const std::string kind = o.kind.empty() ? "mrb" : o.kind;
    if (kind == "mrb")
        return emit_check(env, "check-rep", "modified Rota-Baxter representation",
                          validate_mrb_representation(rep, r, env.cap), {{"kind", kind}});
    if (kind == "rb") {
        AxiomReport report = check_representation(rep, env.cap);
        report.merge(check_rb_m1_representation(rep, r, env.cap), env.cap);
        return emit_check(env, "check-rep", "weight -1 Rota-Baxter representation", report, {{"kind", kind}});
    }
    throw InputError("check-rep --kind must be mrb or rb");
}

int cmd_descend(const Env &env)
{
    const Options &o = env.opt;
    const LYAlgebra a = load_algebra(o);
    const LinearOperator r = load_operator(o, a.dim());
    if (o.rep.empty())
        return emit_file(env, "descend", io::to_json(descendant(a, r)));
    const Representation rep = io::representation_from_json(io::read_file(o.rep), a);
    const Representation ind = induced_representation(rep, r);
    return emit_file(env, "descend",
                     {{"algebra", io::to_json(ind.algebra())}, {"representation", io::to_json(ind)}});
}

int cmd_semidirect(const Env &env)
{
    const Options &o = env.opt;
    const LYAlgebra a = load_algebra(o);
    const LinearOperator r = load_operator(o, a.dim());
    const Representation rep = load_rep(o, a, r);
    const MRBLYAlgebra s = semidirect_product(a, r, rep);
    json file = io::to_json(s.algebra);
    file["operator"] = io::to_json(s.op);
    return emit_file(env, "semidirect", file);
}

int cmd_cohomology(const Env &env)
{
    const Options &o = env.opt;
    const LYAlgebra a = load_algebra(o);
    const ComplexKind kind = parse_complex(o.complex);
    if (o.degree != 1 && o.degree != 2)
        throw InputError("--degree must be 1 or 2");
    const std::optional<LinearOperator> r = maybe_operator(o, a.dim());
    if (kind != ComplexKind::LY && !r)
        throw InputError("--operator is required for the " + o.complex + " complex");
    const Representation rep = load_rep(o, a, r);
    const ComplexReport rep_dims =
        cohomology_dims(kind, o.degree, rep, kind == ComplexKind::LY ? std::nullopt : r,
                        parse_strategy(o.strategy), o.threads);
    if (env.json_format()) {
        json j = envelope("cohomology");
        j["report"] = io::to_json(rep_dims);
        env.out << io::canonical(j);
    } else {
        env.out << "complex " << to_string(rep_dims.complex) << ", degree " << rep_dims.degree << "\n"
                << "  dim C       " << rep_dims.dim_cochain << "\n"
                << "  dim Z       " << rep_dims.dim_cocycles << "\n"
                << "  dim B       " << rep_dims.dim_coboundaries << "\n"
                << "  dim H       " << rep_dims.dim_cohomology << "\n"
                << "  rank out    " << rep_dims.rank_outgoing << "\n"
                << "  ker d only  " << rep_dims.dim_differential_kernel << "\n"
                << "  strategy    " << to_string(rep_dims.strategy) << "\n"
                << "  basis order " << rep_dims.basis_order << "\n";
    }
    return kPass;
}

int cmd_check_cocycle(const Env &env)
{
    const Options &o = env.opt;
    const LYAlgebra a = load_algebra(o);
    const std::optional<LinearOperator> r = maybe_operator(o, a.dim());
    if (!o.infinitesimal.empty()) {
        if (!r)
            throw InputError("--operator is required with --infinitesimal");
        const Infinitesimal inf = io::infinitesimal_from_json(io::read_file(o.infinitesimal), a.dim());
        return emit_check(env, "check-cocycle", "infinitesimal",
                          check_infinitesimal(adjoint_context(a, *r), inf, env.cap));
    }
    if (o.cochain.empty())
        throw InputError("one of --cochain or --infinitesimal is required");
    const Representation rep = load_rep(o, a, r);
    const io::CochainFile file = io::cochain_from_json(io::read_file(o.cochain), a.dim(), rep.dim_v());
    ReportBuilder rb(env.cap);
    if (r) {
        const MrbContext ctx(rep, *r);
        if (file.degree == 1) {
            nonzero_rows(rb, "cocycle-d1", d1(ctx, file.h).flatten());
        } else {
            return emit_check(env, "check-cocycle", "total 2-cocycle",
                              check_extension_cocycle(ctx, file.total(), env.cap));
        }
    } else if (file.degree == 1) {
        nonzero_rows(rb, "cocycle-delta1", delta1(rep, file.h).flatten());
    } else {
        if (file.op)
            throw InputError("a cochain with an operator part needs --operator");
        nonzero_rows(rb, "cocycle-delta2", delta2(rep, file.c).flatten());
        nonzero_rows(rb, "cocycle-aux2", aux2(rep, file.c));
    }
    return emit_check(env, "check-cocycle", "cocycle", std::move(rb).finish());
}

int cmd_cohomologous(const Env &env)
{
    const Options &o = env.opt;
    const LYAlgebra a = load_algebra(o);
    const LinearOperator r = load_operator(o, a.dim());
    if (o.first.empty() || o.second.empty())
        throw InputError("--first and --second are required");
    std::optional<Cochain1> witness;
    json extra = json::object();
    if (o.rep.empty()) {
        const MrbContext ctx = adjoint_context(a, r);
        const Infinitesimal i1 = io::infinitesimal_from_json(io::read_file(o.first), a.dim());
        const Infinitesimal i2 = io::infinitesimal_from_json(io::read_file(o.second), a.dim());
        witness = are_cohomologous(ctx, i1, i2);
    } else {
        const MrbContext ctx(load_rep(o, a, r), r);
        const std::size_t m = ctx.dim_v();
        const TotalCochain2 c1 = io::cochain_from_json(io::read_file(o.first), a.dim(), m).total();
        const TotalCochain2 c2 = io::cochain_from_json(io::read_file(o.second), a.dim(), m).total();
        if (auto phi = extensions_equivalent(ctx, c1, c2)) {
            Cochain1 lambda = Cochain1::zero(a.dim(), m);
            for (std::size_t u = 0; u < m; ++u)
                for (std::size_t j = 0; j < a.dim(); ++j)
                    lambda.h(u, j) = (*phi)(a.dim() + u, j);
            witness = std::move(lambda);
            extra["isomorphism"] = io::to_json(*phi);
        }
    }
    if (env.json_format()) {
        json j = envelope("cohomologous");
        j["cohomologous"] = witness.has_value();
        if (witness)
            j["witness"] = io::to_json(*witness);
        for (auto &[key, value] : extra.items())
            j[key] = value;
        env.out << io::canonical(j);
    } else if (witness) {
        env.out << "cohomologous: yes\nwitness:\n" << io::canonical(io::to_json(*witness));
    } else {
        env.out << "cohomologous: no\n";
    }
    return witness ? kPass : kCheckFailed;
}

int cmd_extend(const Env &env)
{
    const Options &o = env.opt;
    const LYAlgebra a = load_algebra(o);
    const LinearOperator r = load_operator(o, a.dim());
    const MrbContext ctx(load_rep(o, a, r), r);
    if (o.cochain.empty())
        throw InputError("--cochain is required");
    const TotalCochain2 c = io::cochain_from_json(io::read_file(o.cochain), a.dim(), ctx.dim_v()).total();
    const AbelianExtension ext = extension_from_cocycle(ctx, c);
    return emit_file(env, "extend", io::to_json(ext, canonical_section(ext)));
}

Matrix some_section(const AbelianExtension &ext)
{
    const std::size_t n = ext.dim_base();
    Matrix s(ext.total.algebra.dim(), n);
    for (std::size_t i = 0; i < n; ++i) {
        auto col = solve(ext.projection, unit_vector(n, i));
        if (!col)
            throw InputError("extension: projection is not onto");
        s.set_column(i, *col);
    }
    return s;
}

int cmd_extract_cocycle(const Env &env)
{
    const Options &o = env.opt;
    if (o.extension.empty())
        throw InputError("--extension is required");
    const io::ExtensionFile file = io::extension_from_json(io::read_file(o.extension));
    Matrix s;
    if (!o.section.empty())
        s = io::matrix_from_json(io::read_file(o.section), "section");
    else if (file.section)
        s = *file.section;
    else
        s = some_section(file.ext);
    const SectionData data = cocycle_from_section(file.ext, s);
    return emit_file(env, "extract-cocycle",
                     {{"algebra", io::to_json(data.base.algebra)},
                      {"operator", io::to_json(data.base.op)},
                      {"representation", io::to_json(data.rep)},
                      {"cocycle", io::to_json(data.cocycle)},
                      {"section", io::to_json(s)}});
}

int cmd_search(const Env &env)
{
    const Options &o = env.opt;
    const LYAlgebra a = load_algebra(o);
    SearchOptions so;
    so.budget = o.budget;
    so.threads = o.threads;
    const auto found = search_operators(a, parse_candidates(o.candidates), parse_kind(o.kind), so);
    if (env.json_format()) {
        json j = envelope("search-operators");
        j["kind"] = o.kind;
        j["count"] = found.size();
        j["operators"] = json::array();
        for (const auto &m : found)
            j["operators"].push_back(io::to_json(m));
        env.out << io::canonical(j);
    } else {
        env.out << found.size() << " operator(s) of kind " << o.kind << "\n";
        for (const auto &m : found)
            env.out << m << "\n";
    }
    return kPass;
}

std::vector<std::string> example_names()
{
    std::vector<std::string> names = corpus::algebra_names();
    for (const char *s : {"ly2-op", "ly3-op", "id", "adjoint"})
        names.emplace_back(s);
    return names;
}

json build_example(const Options &o, const std::string &name)
{
    const auto algebras = corpus::algebra_names();
    if (std::find(algebras.begin(), algebras.end(), name) != algebras.end())
        return io::to_json(corpus::algebra_by_name(name));
    if (name == "ly2-op")
        return io::to_json(corpus::ly2_operator(Scalar::parse(o.k), Scalar::parse(o.k1)));
    if (name == "ly3-op")
        return io::to_json(corpus::ly3_operator(Scalar::parse(o.k), Scalar::parse(o.k1),
                                                Scalar::parse(o.k2), Scalar::parse(o.k3)));
    if (name == "id") {
        std::size_t n = o.dim;
        if (!o.algebra.empty())
            n = load_algebra(o).dim();
        if (n == 0)
            throw InputError("examples id needs --dim or --algebra");
        return io::to_json(Matrix::identity(n));
    }
    if (name == "adjoint") {
        const LYAlgebra a = load_algebra(o);
        const auto r = maybe_operator(o, a.dim());
        return io::to_json(r ? adjoint_mrb_representation(a, *r) : adjoint_representation(a));
    }
    std::string list;
    for (const auto &n : example_names())
        list += (list.empty() ? "" : ", ") + n;
    throw InputError("unknown example \"" + name + "\"; known: " + list);
}

int cmd_examples(const Env &env)
{
    const Options &o = env.opt;
    if (o.dir.empty())
        return emit_file(env, "examples", build_example(o, o.name));
    // --dir writes every parameter-free example.
    std::filesystem::create_directories(o.dir);
    json written = json::array();
    for (const auto &name : corpus::algebra_names()) {
        const auto path = std::filesystem::path(o.dir) / (name + ".json");
        io::write_file(path, build_example(o, name));
        written.push_back(path.string());
    }
    if (env.json_format()) {
        json j = envelope("examples");
        j["written"] = written;
        env.out << io::canonical(j);
    } else {
        for (const auto &p : written)
            env.out << "wrote " << p.get<std::string>() << "\n";
    }
    return kPass;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    Options o;
    CLI::App app{"Exact checks and cohomology for Lie-Yamaguti algebras with modified Rota-Baxter operators",
                 "lyt"};
    app.require_subcommand(1, 1);
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--threads", o.threads, "Worker threads for matrix assembly and search")
        ->check(CLI::Range(1u, 256u));

    auto algebra_opt = [&](CLI::App *c, bool required) {
        auto *opt = c->add_option("--algebra", o.algebra, "Algebra file");
        if (required)
            opt->required();
    };
    auto operator_opt = [&](CLI::App *c, bool required) {
        auto *opt = c->add_option("--operator", o.op, "Operator file");
        if (required)
            opt->required();
    };
    auto rep_opt = [&](CLI::App *c) {
        c->add_option("--rep", o.rep, "Representation file (default: adjoint)");
    };
    auto output_opt = [&](CLI::App *c) { c->add_option("-o,--output", o.output, "Write the result here"); };

    auto *check_algebra = app.add_subcommand("check-algebra", "Check LY1-LY6");
    check_algebra->add_option("algebra", o.algebra, "Algebra file")->required();

    auto *check_operator = app.add_subcommand("check-operator", "Check an operator identity");
    algebra_opt(check_operator, true);
    operator_opt(check_operator, true);
    check_operator->add_option("--kind", o.kind, "mrb, rb or nijenhuis")->required();

    auto *check_rep = app.add_subcommand("check-rep", "Check a representation");
    algebra_opt(check_rep, true);
    check_rep->add_option("--rep", o.rep, "Representation file")->required();
    operator_opt(check_rep, false);
    check_rep->add_option("--kind", o.kind, "mrb or rb (with --operator)");

    auto *descend = app.add_subcommand("descend", "Descendant algebra (and induced representation)");
    algebra_opt(descend, true);
    operator_opt(descend, true);
    descend->add_option("--rep", o.rep, "Representation to induce");
    output_opt(descend);

    auto *semidirect = app.add_subcommand("semidirect", "Semidirect product with a representation");
    algebra_opt(semidirect, true);
    operator_opt(semidirect, true);
    rep_opt(semidirect);
    output_opt(semidirect);

    auto *cohomology = app.add_subcommand("cohomology", "Cohomology dimensions");
    algebra_opt(cohomology, true);
    operator_opt(cohomology, false);
    rep_opt(cohomology);
    cohomology->add_option("--complex", o.complex, "ly, mrbo or mrbly");
    cohomology->add_option("--degree", o.degree, "1 or 2");
    cohomology->add_option("--strategy", o.strategy, "fraction-free or rational-echelon");

    auto *check_cocycle = app.add_subcommand("check-cocycle", "Check a cochain or infinitesimal");
    algebra_opt(check_cocycle, true);
    operator_opt(check_cocycle, false);
    rep_opt(check_cocycle);
    check_cocycle->add_option("--cochain", o.cochain, "Cochain file");
    check_cocycle->add_option("--infinitesimal", o.infinitesimal, "Infinitesimal file");

    auto *cohomologous = app.add_subcommand("cohomologous", "Decide whether two 2-cocycles are cohomologous");
    algebra_opt(cohomologous, true);
    operator_opt(cohomologous, true);
    cohomologous->add_option("--rep", o.rep, "With --rep the inputs are cochain files");
    cohomologous->add_option("--first", o.first, "First file")->required();
    cohomologous->add_option("--second", o.second, "Second file")->required();

    auto *extend = app.add_subcommand("extend", "Abelian extension from a 2-cocycle");
    algebra_opt(extend, true);
    operator_opt(extend, true);
    rep_opt(extend);
    extend->add_option("--cochain", o.cochain, "Degree-2 total cochain file")->required();
    output_opt(extend);

    auto *extract = app.add_subcommand("extract-cocycle", "Representation and cocycle of an extension");
    extract->add_option("--extension", o.extension, "Extension file")->required();
    extract->add_option("--section", o.section, "Section matrix file");
    output_opt(extract);

    auto *search = app.add_subcommand("search-operators", "Enumerate operators over a candidate set");
    algebra_opt(search, true);
    search->add_option("--kind", o.kind, "mrb, rb or nijenhuis")->required();
    search->add_option("--candidates", o.candidates, "Comma-separated rationals");
    search->add_option("--budget", o.budget, "Maximum number of matrices");

    auto *examples = app.add_subcommand("examples", "Built-in example files");
    examples->add_option("name", o.name, "Example name");
    examples->add_option("--k", o.k);
    examples->add_option("--k1", o.k1);
    examples->add_option("--k2", o.k2);
    examples->add_option("--k3", o.k3);
    examples->add_option("--dim", o.dim, "Dimension for the identity operator");
    examples->add_option("--algebra", o.algebra, "Algebra for id / adjoint");
    examples->add_option("--operator", o.op, "Operator for adjoint");
    examples->add_option("--dir", o.dir, "Write every algebra example into this directory");
    output_opt(examples);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return kPass;
    } catch (const CLI::CallForAllHelp &e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kPass;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kInputError;
    }

    try {
        const Env env{o, max_violations_from_env(), out};
        auto *sub = app.get_subcommands().front();
        const std::string verb = sub->get_name();
        if (verb == "examples" && o.name.empty() && o.dir.empty())
            throw InputError("examples needs a name or --dir");
        if (verb == "check-algebra")
            return cmd_check_algebra(env);
        if (verb == "check-operator")
            return cmd_check_operator(env);
        if (verb == "check-rep")
            return cmd_check_rep(env);
        if (verb == "descend")
            return cmd_descend(env);
        if (verb == "semidirect")
            return cmd_semidirect(env);
        if (verb == "cohomology")
            return cmd_cohomology(env);
        if (verb == "check-cocycle")
            return cmd_check_cocycle(env);
        if (verb == "cohomologous")
            return cmd_cohomologous(env);
        if (verb == "extend")
            return cmd_extend(env);
        if (verb == "extract-cocycle")
            return cmd_extract_cocycle(env);
        if (verb == "search-operators")
            return cmd_search(env);
        if (verb == "examples")
            return cmd_examples(env);
        throw InternalError("unhandled verb " + verb);
    } catch (const CheckFailure &e) {
        if (o.format == "json") {
            json j = envelope(app.get_subcommands().front()->get_name());
            j["error"] = e.what();
            j["report"] = io::to_json(e.report());
            out << io::canonical(j);
        } else {
            out << e.what() << "\n";
            print_report(out, "precondition", e.report());
        }
        return kCheckFailed;
    } catch (const InputError &e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const InternalError &e) {
        err << "internal error: " << e.what() << "\n";
        return kInternalError;
    } catch (const std::filesystem::filesystem_error &e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

} // namespace lyt::cli
