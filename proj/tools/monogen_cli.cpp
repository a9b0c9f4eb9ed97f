// Command-line front end: generate shifted Appell sequences, verify the
// Appell condition on a serialized sequence, run the Fischer decomposition
// and CK extension, and emit random monogenic polynomials.
//
// Exit codes: 0 success, 2 parse error, 3 precondition violation.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "monogen/monogen.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

monogen::json parse_json(const std::string& text) {
    return monogen::json::parse(text);
}

void print_terms(const std::vector<monogen::CliffordPolynomial>& terms,
                 const std::string& format) {
    if (format == "json") {
        std::cout << monogen::sequence_to_json(terms).dump(2) << "\n";
        return;
    }
    for (std::size_t n = 0; n < terms.size(); ++n) {
        if (format == "latex")
            std::cout << "M_{" << n << "} = " << monogen::to_latex(terms[n]) << "\n";
        else
            std::cout << "M_" << n << " = " << monogen::to_text(terms[n]) << "\n";
    }
}

void print_poly(const monogen::CliffordPolynomial& p, const std::string& format) {
    if (format == "json")
        std::cout << monogen::polynomial_to_json(p).dump(2) << "\n";
    else if (format == "latex")
        std::cout << monogen::to_latex(p) << "\n";
    else
        std::cout << monogen::to_text(p) << "\n";
}

struct Options {
    int m = 3;
    unsigned terms = 0;
    unsigned degree = 0;
    std::uint64_t rng_seed = 0;
    std::string input = "-";
    std::string format = "json";
    bool m_given = false;
};

int run_gen(const Options& opt) {
    monogen::CliffordPolynomial seed = monogen::CliffordPolynomial::zero(monogen::AlgebraDim(1));
    try {
        seed = monogen::polynomial_from_json(parse_json(read_input(opt.input)));
        if (opt.m_given && seed.dim().m != opt.m)
            throw std::invalid_argument("--m disagrees with the input polynomial");
    } catch (const std::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    }
    try {
        const auto seq = monogen::shifted_appell_sequence(seed, opt.terms);
        print_terms(seq.terms, opt.format);
        return kExitOk;
    } catch (const monogen::NotMonogenicError& e) {
        std::cerr << "seed is not monogenic; residual:\n"
                  << monogen::polynomial_to_json(e.residual()).dump(2) << "\n";
        return kExitPrecondition;
    }
}

int run_verify(const Options& opt) {
    std::vector<monogen::CliffordPolynomial> terms;
    try {
        terms = monogen::sequence_from_json(parse_json(read_input(opt.input)));
    } catch (const std::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    }
    if (terms.empty()) {
        std::cerr << "warning: empty term list, nothing to verify\n";
        return kExitOk;
    }
    bool ok = true;
    for (std::size_t n = 0; n < terms.size(); ++n) {
        const auto residual = monogen::cauchy_riemann(terms[n]);
        if (!residual.is_zero()) {
            ok = false;
            std::cerr << "FAIL: M_" << n << " is not monogenic; residual:\n"
                      << monogen::polynomial_to_json(residual).dump(2) << "\n";
        }
        if (n == 0) continue;
        const auto appell_residual =
            monogen::hypercomplex_derivative(terms[n]) - monogen::Rational(n) * terms[n - 1];
        if (!appell_residual.is_zero()) {
            ok = false;
            std::cerr << "FAIL: (1/2)conj(D) M_" << n << " != " << n << " M_" << (n - 1)
                      << "; residual:\n"
                      << monogen::polynomial_to_json(appell_residual).dump(2) << "\n";
        }
    }
    if (ok) std::cerr << "verified " << terms.size() << " terms\n";
    return ok ? kExitOk : kExitPrecondition;
}

int run_fischer(const Options& opt) {
    monogen::CliffordPolynomial p = monogen::CliffordPolynomial::zero(monogen::AlgebraDim(1));
    try {
        p = monogen::polynomial_from_json(parse_json(read_input(opt.input)));
    } catch (const std::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    }
    try {
        const unsigned k = opt.degree > 0 || p.is_zero() ? opt.degree : p.degree().value_or(0);
        const auto fc = monogen::fischer_decompose(p, k);
        if (opt.format == "json") {
            monogen::json out = monogen::json::array();
            for (const auto& comp : fc.components)
                out.push_back(monogen::polynomial_to_json(comp));
            std::cout << out.dump(2) << "\n";
        } else {
            for (unsigned nu = 0; nu < fc.components.size(); ++nu)
                std::cout << "P_" << (fc.k - nu) << " = "
                          << (opt.format == "latex" ? monogen::to_latex(fc.components[nu])
                                                    : monogen::to_text(fc.components[nu]))
                          << "\n";
        }
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "precondition violation: " << e.what() << "\n";
        return kExitPrecondition;
    }
}

int run_ck(const Options& opt) {
    monogen::CliffordPolynomial p = monogen::CliffordPolynomial::zero(monogen::AlgebraDim(1));
    try {
        p = monogen::polynomial_from_json(parse_json(read_input(opt.input)));
    } catch (const std::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    }
    try {
        print_poly(monogen::ck_extension(p), opt.format);
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "precondition violation: " << e.what() << "\n";
        return kExitPrecondition;
    }
}

int run_random_monogenic(const Options& opt) {
    try {
        const monogen::AlgebraDim dim(opt.m);
        print_poly(monogen::random_monogenic(dim, opt.degree, opt.rng_seed), opt.format);
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "precondition violation: " << e.what() << "\n";
        return kExitPrecondition;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact construction and verification of shifted Appell sequences "
                 "of monogenic polynomials"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* cmd, bool with_input) {
        cmd->add_option("--format", opt.format, "Output format")
            ->check(CLI::IsMember({"json", "latex", "text"}))
            ->capture_default_str();
        if (with_input)
            cmd->add_option("--input", opt.input, "Input path, or - for stdin")
                ->capture_default_str();
    };

    auto* gen = app.add_subcommand("gen", "Generate a shifted Appell sequence from a seed");
    gen->add_option("--m", opt.m, "Number of generators (cross-checked against the input)")
        ->check(CLI::Range(1, monogen::kDefaultGeneratorCap));
    gen->callback([&] { opt.m_given = gen->count("--m") > 0; });
    gen->add_option("--terms", opt.terms, "Number of terms N (produces M_0..M_N)");
    add_common(gen, true);

    auto* verify = app.add_subcommand("verify", "Check monogenicity and the Appell condition");
    add_common(verify, true);

    auto* fischer = app.add_subcommand("fischer", "Almansi-Fischer decomposition");
    fischer->add_option("--degree", opt.degree, "Homogeneity degree k");
    add_common(fischer, true);

    auto* ck = app.add_subcommand("ck", "Cauchy-Kovalevskaya extension");
    add_common(ck, true);

    auto* rnd = app.add_subcommand("random-monogenic", "Emit a random monogenic polynomial");
    rnd->add_option("--m", opt.m, "Number of generators")
        ->check(CLI::Range(1, monogen::kDefaultGeneratorCap));
    rnd->add_option("--degree", opt.degree, "Homogeneity degree k");
    rnd->add_option("--rng-seed", opt.rng_seed, "Deterministic generator seed");
    add_common(rnd, false);

    CLI11_PARSE(app, argc, argv);

    if (gen->parsed()) return run_gen(opt);
    if (verify->parsed()) return run_verify(opt);
    if (fischer->parsed()) return run_fischer(opt);
    if (ck->parsed()) return run_ck(opt);
    return run_random_monogenic(opt);
}
