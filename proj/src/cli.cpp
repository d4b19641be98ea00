#include "fdalg/cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "fdalg/error.hpp"
#include "fdalg/homomorphism.hpp"
#include "fdalg/interchange.hpp"
#include "fdalg/io.hpp"
#include "fdalg/representation.hpp"

namespace fdalg {

namespace {

Vec parse_csv(const std::string& text, const AlgebraPtr& alg, const char* flag) {
    Vec out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            out.push_back(Scalar::parse(item, alg->field()));
        } catch (const std::exception& e) {
            throw ParseError(0, std::string(flag) + ": bad literal '" + item + "': " + e.what());
        }
    }
    if (out.size() != alg->dim())
        throw ParseError(0, std::string(flag) + ": expected " + std::to_string(alg->dim()) + " coordinates, got " +
                                std::to_string(out.size()));
    return out;
}

void print_csv(std::ostream& out, std::span<const Scalar> v) {
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
}

void print_matrix(std::ostream& out, const Matrix& m, const std::string& indent = "") {
    std::vector<std::string> cells;
    std::size_t width = 1;
    for (const auto& s : m.entries()) {
        cells.push_back(s.to_string());
        width = std::max(width, cells.back().size());
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out << indent;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const std::string& cell = cells[r * m.cols() + c];
            out << (c ? " " : "") << std::string(width - cell.size(), ' ') << cell;
        }
        out << '\n';
    }
}

GeneratorSet default_generators(const AlgebraPtr& alg) { return GeneratorSet({LinearMap::identity(alg)}); }

int cmd_check(const std::string& path, std::ostream& out) {
    const AlgebraPtr alg = load_algebra(path);
    out << "name: " << alg->name() << '\n'
        << "field: " << alg->field().name() << '\n'
        << "dim: " << alg->dim() << '\n'
        << "unit: " << (alg->unit() ? "e" + std::to_string(*alg->unit()) : std::string("none")) << '\n'
        << "commutative: " << (is_commutative(*alg) ? "yes" : "no") << '\n'
        << "associative: " << (is_associative(*alg) ? "yes" : "no") << '\n'
        << "nucleus dim: " << nucleus_basis(alg).size() << '\n'
        << "center dim: " << center_basis(alg).size() << '\n';
    return exit_ok;
}

int cmd_mul(const std::string& path, const std::string& a, const std::string& b, std::ostream& out) {
    const AlgebraPtr alg = load_algebra(path);
    const Element x(alg, parse_csv(a, alg, "--a"));
    const Element y(alg, parse_csv(b, alg, "--b"));
    print_csv(out, (x * y).coords());
    out << '\n';
    return exit_ok;
}

int cmd_b_matrix(const std::string& path, std::ostream& out) {
    const AlgebraPtr alg = load_algebra(path);
    const Matrix b = b_matrix(alg, LinearMap::identity(alg));
    out << "B (" << b.rows() << "x" << b.cols() << "), rows (k,l), columns (i,j):\n";
    print_matrix(out, b, "  ");
    out << "rank: " << rank(b) << '\n';
    return exit_ok;
}

int cmd_std_components(const std::string& path, const std::string& map_path, const std::string& generators,
                       std::ostream& out) {
    const AlgebraPtr alg = load_algebra(path);
    const LinearMap f = load_map(map_path, alg, alg);
    if (generators != "identity" && generators != "auto")
        throw ParseError(0, "--generators: expected 'auto' or 'identity'");
    const GeneratorSet gens = generators == "auto" ? generator_basis(alg) : default_generators(alg);
    const auto dec = components_from_coords(f, gens);
    out << "generators: " << gens.size() << '\n';
    if (!dec) {
        out << "NO-SOLUTION\n";
        return exit_fails;
    }
    const std::size_t n = alg->dim();
    out << "generator i j value\n";
    for (std::size_t k = 0; k < gens.size(); ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                out << k << ' ' << i << ' ' << j << ' ' << dec->expansion.components[k][i * n + j] << '\n';
    out << "nullspace dim: " << dec->nullspace_dim << '\n';
    return exit_ok;
}

int cmd_coords(const std::string& path, const std::string& tensor_path, std::optional<std::size_t> generator,
               std::ostream& out) {
    const AlgebraPtr alg = load_algebra(path);
    const Tensor t = load_tensor(tensor_path, {alg, alg});
    const GeneratorSet gens = generator ? generator_basis(alg) : default_generators(alg);
    const std::size_t k = generator.value_or(0);
    if (k >= gens.size())
        throw ParseError(0, "--generator: index " + std::to_string(k) + " but only " + std::to_string(gens.size()) +
                                " generators");
    std::vector<Tensor> comps(gens.size(), Tensor::zero({alg, alg}));
    comps[k] = t;
    print_matrix(out, coords_from_components(MapExpansion(gens, std::move(comps))).coords());
    return exit_ok;
}

int cmd_generators(const std::string& path, std::ostream& out) {
    const AlgebraPtr alg = load_algebra(path);
    const GeneratorSet gens = generator_basis(alg);
    out << "generators: " << gens.size() << '\n';
    for (std::size_t k = 0; k < gens.size(); ++k) {
        out << "I_" << k << " orbit dim " << orbit_span(gens[k]).dim() << '\n';
        print_matrix(out, gens[k].coords(), "  ");
    }
    const Subspace all = orbit_union(gens);
    out << "union dim: " << all.dim() << " of " << all.ambient_dim() << '\n'
        << "direct sum: " << (orbits_direct_sum(gens) ? "yes" : "no") << '\n';
    return exit_ok;
}

int cmd_orbit_equal(const std::string& path, const std::string& a, const std::string& b, std::ostream& out) {
    const AlgebraPtr alg = load_algebra(path);
    const LinearMap f = load_map(a, alg, alg);
    const LinearMap g = load_map(b, alg, alg);
    const Subspace sf = orbit_span(f);
    const Subspace sg = orbit_span(g);
    if (sf == sg) {
        out << "EQUAL (orbit dim " << sf.dim() << ")\n";
        return exit_ok;
    }
    out << "DIFFERENT (orbit dims " << sf.dim() << ", " << sg.dim() << ")\n";
    return exit_fails;
}

int cmd_quat_auto(const std::string& matrix_path, std::ostream& out) {
    const QuatAutoReport report = quat_auto_check(load_matrix(matrix_path));
    if (report.pass) out << "PASS\n";
    else out << "FAIL: " << report.witness << '\n';
    out << "homomorphism cross-check: " << (report.consistent() ? "agrees" : "DISAGREES") << '\n';
    return report.pass ? exit_ok : exit_fails;
}

int cmd_hom_check(const std::string& src, const std::string& dst, const std::string& matrix_path,
                  std::ostream& out) {
    const AlgebraPtr a = load_algebra(src);
    const AlgebraPtr b = load_algebra(dst);
    const LinearMap r = load_map(matrix_path, a, b);
    const HomReport report = check_linear_homomorphism(HomCandidate(a, b, r.coords()));
    if (report.holds) {
        out << "PASS\n";
        return exit_ok;
    }
    out << "FAIL: " << report.residuals.size() << " nonzero residuals\n";
    for (const auto& res : report.residuals)
        out << "  (i,j,l) = (" << res.i << "," << res.j << "," << res.l << "): " << res.value << '\n';
    return exit_fails;
}

int cmd_interchange(const std::string& path, std::ostream& out) {
    const FiniteOpAlgebra alg = load_optable(path);
    const InterchangeResult result = interchange_holds(alg);
    if (result.holds()) {
        out << "HOLDS (" << result.checked << " argument matrices)\n";
    } else {
        const Counterexample& w = *result.counterexample;
        out << "COUNTEREXAMPLE after " << result.checked << " argument matrices\n";
        for (std::size_t r = 0; r < w.rows; ++r) {
            out << "  ";
            for (std::size_t c = 0; c < w.cols; ++c) out << (c ? " " : "") << w.matrix[r * w.cols + c];
            out << '\n';
        }
        out << "lhs = " << w.lhs << ", rhs = " << w.rhs << '\n';
    }
    if (alg.op1.arity() == 2 && alg.op2.arity() == 2) {
        try {
            out << "ring: " << ring_interchange_report(alg.op1, alg.op2).summary << '\n';
        } catch (const NotARing& e) {
            out << "not a ring: " << e.what() << '\n';
        }
    }
    return result.holds() ? exit_ok : exit_fails;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations in free finite-dimensional algebras", "fdalg"};
    app.require_subcommand(1);
    std::function<int()> action;

    std::string alg, alg2, file_a, file_b, map_path, generators = "identity";
    std::size_t generator_index = 0;

    auto* check = app.add_subcommand("check", "structure summary of an algebra");
    check->add_option("algebra", alg)->required();
    check->callback([&] { action = [&] { return cmd_check(alg, out); }; });

    auto* mul = app.add_subcommand("mul", "product of two elements");
    mul->add_option("algebra", alg)->required();
    mul->add_option("--a", file_a, "comma-separated coordinates")->required();
    mul->add_option("--b", file_b, "comma-separated coordinates")->required();
    mul->callback([&] { action = [&] { return cmd_mul(alg, file_a, file_b, out); }; });

    auto* bm = app.add_subcommand("b-matrix", "components-to-coordinates matrix of the identity map");
    bm->add_option("algebra", alg)->required();
    bm->callback([&] { action = [&] { return cmd_b_matrix(alg, out); }; });

    auto* sc = app.add_subcommand("std-components", "standard components of a linear map");
    sc->add_option("algebra", alg)->required();
    sc->add_option("--map", map_path)->required();
    sc->add_option("--generators", generators, "'identity' (default) or 'auto'");
    sc->callback([&] { action = [&] { return cmd_std_components(alg, map_path, generators, out); }; });

    auto* co = app.add_subcommand("coords", "coordinate matrix from standard components");
    co->add_option("algebra", alg)->required();
    co->add_option("--components", file_a)->required();
    auto* gen_opt = co->add_option("--generator", generator_index, "index into the generator basis");
    co->callback([&] {
        action = [&] {
            std::optional<std::size_t> k;
            if (gen_opt->count() > 0) k = generator_index;
            return cmd_coords(alg, file_a, k, out);
        };
    });

    auto* gens = app.add_subcommand("generators", "generator basis and orbit dimensions");
    gens->add_option("algebra", alg)->required();
    gens->callback([&] { action = [&] { return cmd_generators(alg, out); }; });

    auto* oe = app.add_subcommand("orbit-equal", "compare the orbits of two maps");
    oe->add_option("algebra", alg)->required();
    oe->add_option("--a", file_a)->required();
    oe->add_option("--b", file_b)->required();
    oe->callback([&] { action = [&] { return cmd_orbit_equal(alg, file_a, file_b, out); }; });

    auto* qa = app.add_subcommand("quat-auto", "quaternion automorphism check");
    qa->add_option("--matrix", map_path)->required();
    qa->callback([&] { action = [&] { return cmd_quat_auto(map_path, out); }; });

    auto* hc = app.add_subcommand("hom-check", "linear homomorphism check");
    hc->add_option("source", alg)->required();
    hc->add_option("target", alg2)->required();
    hc->add_option("--matrix", map_path)->required();
    hc->callback([&] { action = [&] { return cmd_hom_check(alg, alg2, map_path, out); }; });

    auto* ic = app.add_subcommand("interchange", "interchange law on a finite carrier");
    ic->add_option("ops", file_a)->required();
    ic->callback([&] { action = [&] { return cmd_interchange(file_a, out); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_input;
    }

    try {
        return action();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_input;
    }
}

} // namespace fdalg
