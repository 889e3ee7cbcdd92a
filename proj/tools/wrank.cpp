#include <CLI11.hpp>

#include "waring/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{
        "wrank: exact symmetric-tensor rank and border-rank toolkit.\n"
        "Binary forms are given in moment coordinates: the e+1 values a_0..a_e\n"
        "encode f = sum_i binom(e,i) a_i x^(e-i) y^i, so the e-th power of\n"
        "(x + t*y) has a_i = t^i."};
    app.require_subcommand(1);

    std::uint64_t seed = 1;
    app.add_option("--seed", seed, "seed for every pseudo-random choice (default 1)");

    unsigned m = 2, s = 5, d = 12, r = 5;
    std::string out_path, in_path;
    std::uint64_t budget = 0;
    std::vector<std::string> coeffs;

    auto* adm = app.add_subcommand("admissible", "list the admissible ranks r for (m, s, d)");
    adm->add_option("-m", m, "projective-space dimension (>= 2)")->required();
    adm->add_option("-s", s, "border rank (>= 5)")->required();
    adm->add_option("-d", d, "degree (>= 2s+2)")->required();

    auto* wit = app.add_subcommand("witness", "construct a witness point for (m, s, d, r)");
    wit->add_option("-m", m, "projective-space dimension")->required();
    wit->add_option("-s", s, "border rank")->required();
    wit->add_option("-d", d, "degree")->required();
    wit->add_option("-r", r, "symmetric rank")->required();
    wit->add_option("-o,--out", out_path, "output witness JSON path")->required();

    auto* cert = app.add_subcommand("certify", "certify a witness file");
    cert->add_option("witness", in_path, "witness JSON path")->required();
    cert->add_option("-o,--out", out_path, "output certificate JSON path")->required();
    cert->add_option("--falsify-budget", budget,
                     "also run the falsification search with this many tests");

    auto* ver = app.add_subcommand("verify", "re-run all checks of a certificate file");
    ver->add_option("certificate", in_path, "certificate JSON path")->required();

    auto* rb = app.add_subcommand("rank-binary",
                                  "rank and border rank of a binary form "
                                  "(moment coordinates a_0..a_e, rationals as p/q)");
    rb->add_option("coefficients", coeffs, "a_0 ... a_e")->required()->expected(-2);

    auto* h1 = app.add_subcommand("h1", "Hilbert-function defect of a scheme file in degree d");
    h1->add_option("scheme", in_path, "scheme JSON path")->required();
    h1->add_option("-d", d, "degree")->required();

    app.add_subcommand("selftest", "run the full acceptance suite");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    if (adm->parsed()) return waring::cli::cmd_admissible(m, s, d, std::cout, std::cerr);
    if (wit->parsed())
        return waring::cli::cmd_witness(m, s, d, r, seed, out_path, std::cout, std::cerr);
    if (cert->parsed())
        return waring::cli::cmd_certify(in_path, out_path, budget, seed, std::cout, std::cerr);
    if (ver->parsed()) return waring::cli::cmd_verify(in_path, std::cout, std::cerr);
    if (rb->parsed()) return waring::cli::cmd_rank_binary(coeffs, std::cout, std::cerr);
    if (h1->parsed()) return waring::cli::cmd_h1(in_path, d, std::cout, std::cerr);
    return waring::cli::cmd_selftest(seed, std::cout);
}
