// supertensor: structural invariants, non-abelian tensor/exterior squares,
// Schur multipliers and triple tensor products of nilpotent Lie
// superalgebras, with a verification sweep against the closed formulas.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "supertensor/algebra_io.hpp"
#include "supertensor/expr.hpp"
#include "supertensor/tensor.hpp"
#include "supertensor/verify.hpp"

namespace st = supertensor;

namespace {

constexpr const char* kToolVersion = "1.0.0";
constexpr std::size_t kBasisPrintCap = 200;

struct Input {
    st::LieSuperAlgebra algebra;
    std::string label;
};

/// Accepts a catalog expression, a `file:PATH` reference, or a plain path
/// to an existing structure-constants file.
Input load_input(const std::string& arg, long seed) {
    std::string path;
    if (arg.rfind("file:", 0) == 0)
        path = arg.substr(5);
    else if (std::filesystem::exists(arg) && arg.find('(') == std::string::npos)
        path = arg;
    if (!path.empty()) {
        std::ifstream in(path);
        if (!in) throw st::IoError("cannot open '" + path + "'");
        return {st::load_algebra(in), path};
    }
    auto expr = st::parse_algebra_expr(arg, seed);
    return {expr.build(), expr.text()};
}

st::LieSuperAlgebra validated(Input input) {
    auto report = st::check_axioms(input.algebra);
    if (!report.ok()) {
        std::cerr << "axiom violations in " << input.label << ":\n" << report.summary();
        std::exit(4);
    }
    return std::move(input.algebra);
}

void print_quantity_basis(const st::PresentedSpace& space) {
    const auto& reps = space.rep_indices();
    std::size_t shown = std::min(reps.size(), kBasisPrintCap);
    for (std::size_t i = 0; i < shown; ++i)
        std::cout << "  " << space.symbols()[reps[i]].name << "\n";
    if (reps.size() > kBasisPrintCap)
        std::cout << "  ... (" << reps.size() - kBasisPrintCap << " more symbols truncated)\n";
}

int run_info(const std::string& arg, long seed) {
    auto L = validated(load_input(arg, seed));
    std::cout << "dim: " << st::to_string(L.dim()) << "\n";
    std::cout << "derived: " << st::to_string(st::derived_subalgebra(L).dim) << "\n";
    std::cout << "center: " << st::to_string(st::center(L).dim) << "\n";
    auto cls = st::nilpotency_class(L);
    std::cout << "nilpotency_class: " << (cls ? std::to_string(*cls) : "not nilpotent") << "\n";
    auto rank = st::generalized_heisenberg_rank(L);
    std::cout << "generalized_heisenberg_rank: " << (rank ? st::to_string(*rank) : "n/a") << "\n";
    if (cls && *cls <= 2) {
        auto zw = st::exterior_center(L);
        std::cout << "exterior_center: " << st::to_string(zw.dim) << "\n";
        std::cout << "capable: " << (zw.space.rank() == 0 ? "true" : "false") << "\n";
    } else {
        std::cout << "exterior_center: n/a (class > 2)\n";
        std::cout << "capable: n/a (class > 2)\n";
    }
    return 0;
}

int run_compute(const std::string& quantity, const std::string& arg, long seed, bool with_basis) {
    auto L = validated(load_input(arg, seed));
    if (quantity == "tensor2") {
        auto t = st::tensor_square(L);
        std::cout << "tensor2: " << st::to_string(t.quotient_dim()) << "\n";
        if (with_basis) print_quantity_basis(t);
    } else if (quantity == "ext2") {
        auto e = st::exterior_square(L);
        std::cout << "ext2: " << st::to_string(e.quotient_dim()) << "\n";
        if (with_basis) print_quantity_basis(e);
    } else if (quantity == "square") {
        std::cout << "square: " << st::to_string(st::square_submodule(L).dim) << "\n";
    } else if (quantity == "gamma") {
        auto ab = L.dim() - st::derived_subalgebra(L).dim;
        auto g = st::gamma_space(ab.even, ab.odd);
        std::cout << "gamma(L/L^2): " << st::to_string(g.presentation.quotient_dim()) << "\n";
        if (with_basis) print_quantity_basis(g.presentation);
    } else if (quantity == "tensor3") {
        std::cout << "tensor3: " << st::to_string(st::triple_tensor_class2(L)) << "\n";
    } else if (quantity == "multiplier") {
        std::cout << "multiplier: " << st::to_string(st::schur_multiplier_class2(L)) << "\n";
    } else if (quantity == "extcenter") {
        auto zw = st::exterior_center(L);
        std::cout << "extcenter: " << st::to_string(zw.dim) << "\n";
        if (with_basis)
            for (std::size_t r = 0; r < zw.space.basis.rows(); ++r) {
                std::cout << " ";
                for (std::size_t c = 0; c < zw.space.ambient; ++c)
                    std::cout << " " << st::to_string(zw.space.basis.at(r, c));
                std::cout << "\n";
            }
    } else if (quantity == "bound") {
        auto rep = st::bound_check(L);
        std::cout << "bound: lhs=" << rep.lhs << " rhs=" << rep.rhs
                  << " holds=" << (rep.holds ? "true" : "false")
                  << " equality=" << (rep.equality ? "true" : "false") << "\n";
    } else {
        std::cerr << "unknown quantity '" << quantity << "'\n";
        return 2;
    }
    return 0;
}

int run_verify(long max_dim, const std::string& out_path, long seed, const std::string& format) {
    bool parallel = !st::serial_forced();
    auto records = st::verify_catalog(max_dim, seed, parallel);
    std::size_t mismatches = st::mismatch_count(records);
    std::ostringstream body;
    if (format == "text") {
        body << "supertensor verification report\n";
        body << "tool_version: " << kToolVersion << "\n";
        body << "input: verify --max-dim " << max_dim << " --seed " << seed << "\n";
    }
    for (const auto& r : records) body << st::to_line(r) << "\n";
    if (format == "text") {
        body << "records: " << records.size() << "\n";
        body << "mismatches: " << mismatches << "\n";
    }
    if (out_path.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot write '" << out_path << "'\n";
            return 3;
        }
        out << body.str();
        std::cout << "wrote " << records.size() << " records to " << out_path << " ("
                  << mismatches << " mismatches)\n";
    }
    return mismatches == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"invariants of nilpotent Lie superalgebras over Q"};
    app.require_subcommand(1);
    app.fallthrough();
    long seed = 1;
    std::string format = "text";
    app.add_option("--seed", seed, "default seed for F2 catalog expressions");
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "lines"}));

    std::string info_arg;
    auto* info = app.add_subcommand("info", "structural invariants of an algebra");
    info->add_option("algebra", info_arg, "catalog expression or file:PATH")->required();

    std::string compute_quantity, compute_arg;
    bool with_basis = false;
    auto* compute = app.add_subcommand("compute", "one derived quantity of an algebra");
    compute
        ->add_option("quantity", compute_quantity,
                     "tensor2|ext2|square|gamma|tensor3|multiplier|extcenter|bound")
        ->required();
    compute->add_option("algebra", compute_arg, "catalog expression or file:PATH")->required();
    compute->add_flag("--basis", with_basis, "also print coset representative symbols");

    long max_dim = 0;
    std::string out_path;
    auto* verify = app.add_subcommand("verify", "sweep the catalog against the closed formulas");
    verify->add_option("--max-dim", max_dim, "largest total dimension to sweep")->required();
    verify->add_option("-o,--output", out_path, "write the report to a file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (info->parsed()) return run_info(info_arg, seed);
        if (compute->parsed()) return run_compute(compute_quantity, compute_arg, seed, with_basis);
        if (verify->parsed()) {
            if (max_dim < 2) {
                std::cerr << "verify: --max-dim must be at least 2\n";
                return 2;
            }
            return run_verify(max_dim, out_path, seed, format);
        }
    } catch (const st::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const st::ClassTooHigh& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return 5;
    } catch (const st::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
