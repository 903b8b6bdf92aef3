#include "commands.hpp"

#include "parahoric/error.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace parahoric;
using namespace parahoric::cli;

int main(int argc, char** argv) {
    CLI::App app{"parahoric: slope bounds, BGG checks and overconvergent modular symbols"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    app.add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "Seed for randomized steps")->capture_default_str();

    auto* slopes = app.add_subcommand("slopes", "Critical slope bounds along a parabolic chain");
    slopes->add_option("--group", cfg.group, "GL<n>, GSp4 or a root datum JSON file")->required();
    slopes->add_option("--Q", cfg.q, "borel, full, siegel, klingen or 1-based simple roots like 1,3")->required();
    slopes->add_option("--weight", cfg.weight, "Dominant weight: coordinates or k1=..,k2=..")->required();
    slopes->add_option("--vals", cfg.vals, "Eigenvalue valuation per chain step, comma separated")->required();
    slopes->add_option("--chain", cfg.chain, "Order in which simple roots are added (1-based)");
    slopes->add_option("--t", cfg.torus, "Explicit cocharacters per step, separated by ';'");
    slopes->add_option("--p", cfg.p, "Prime for the torus elements")->capture_default_str();

    auto* bgg = app.add_subcommand("bgg-check", "Theta kernel against the parahoric truncation");
    bgg->add_option("--group", cfg.group, "GL<n>")->required();
    bgg->add_option("--k", cfg.k, "GL2 shorthand for the weight (k, 0)");
    bgg->add_option("--weight", cfg.weight, "Dominant weight coordinates");
    bgg->add_option("--P", cfg.p_subset, "Simple roots of P (1-based); default borel");
    bgg->add_option("--Q", cfg.q, "Simple roots of Q (1-based); default P plus the first missing root");
    bgg->add_option("--d", cfg.degree, "Total degree cap")->required();

    auto* lift = app.add_subcommand("lift", "Lift a p-stabilized newform symbol to an overconvergent eigensymbol");
    lift->add_option("--N", cfg.N, "Tame level")->required();
    lift->add_option("--p", cfg.p, "Prime")->required();
    lift->add_option("--k", cfg.k, "Weight (symbols with values in Sym^k)")->required();
    lift->add_option("--M", cfg.M, "Number of moments (default from PARAHORIC_PRECISION or 20)");
    lift->add_option("--eigenvalue-choice", cfg.choice, "ordinary or slope:<h>")->capture_default_str();

    auto* charpoly = app.add_subcommand("charpoly", "det(1 - U_p X) at a weight or over a weight disc");
    charpoly->add_option("--N", cfg.N, "Tame level")->required();
    charpoly->add_option("--p", cfg.p, "Prime")->required();
    auto* k_opt = charpoly->add_option("--k", cfg.k, "Single weight");
    auto* disc_opt = charpoly->add_option("--disc-center", cfg.disc_center, "Centre of a weight disc");
    k_opt->excludes(disc_opt);
    charpoly->add_option("--M", cfg.M, "Number of moments (default from PARAHORIC_PRECISION or 20)");
    charpoly->add_option("--xdeg", cfg.xdeg, "Truncation degree in X")->capture_default_str();
    charpoly->add_option("--order", cfg.order, "Order in w for a disc")->capture_default_str();
    charpoly->add_option("--radius", cfg.radius, "Disc radius r: w in p^r Z_p")->capture_default_str();
    charpoly->add_option("--slope", cfg.adapted_h, "Slope to test for adaptedness over the disc");

    auto* catalog = app.add_subcommand("catalog", "Built-in root data");
    catalog->add_option("--group", cfg.group, "Only this group");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kUsageError;
    }
    if (slopes->parsed()) cfg.command = "slopes";
    if (bgg->parsed()) cfg.command = "bgg-check";
    if (lift->parsed()) cfg.command = "lift";
    if (charpoly->parsed()) {
        cfg.command = "charpoly";
        if (k_opt->count() == 0 && disc_opt->count() == 0) {
            std::cerr << "charpoly: one of --k or --disc-center is required\n";
            return kUsageError;
        }
        cfg.use_disc = disc_opt->count() > 0;
    }
    if (catalog->parsed()) cfg.command = "catalog";
    return run(cfg, std::cout, std::cerr);
}
