// Command-line front end: crystal graphs, Uglov sets, crystal isomorphisms
// and the derived maps, with stable text/JSON/DOT output.

#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "fock/charges.hpp"
#include "fock/crystal.hpp"
#include "fock/iso.hpp"
#include "fock/maps.hpp"

namespace {

struct Args {
    int e = 2;
    std::string charge;
    std::string charge_to;
    std::string mp;
    int n = 0;
    int k = 1;
    int N = 0;
    std::string format = "json";
    bool quiet = false;
};

int run(const std::string& cmd, const Args& a) {
    using namespace fock;
    if (cmd == "crystal") {
        CrystalGraph graph = crystal_graph(Multicharge::parse(a.charge, a.e), a.n);
        std::cout << (a.format == "dot" ? graph.to_dot() : graph.to_json());
        if (a.format != "dot") std::cout << "\n";
    } else if (cmd == "uglov") {
        for (const auto& mp : uglov_set(Multicharge::parse(a.charge, a.e), a.n))
            std::cout << mp.to_string() << "\n";
    } else if (cmd == "is-uglov") {
        std::cout << (is_uglov(Multipartition::parse(a.mp),
                               Multicharge::parse(a.charge, a.e))
                          ? "true"
                          : "false")
                  << "\n";
    } else if (cmd == "flotw") {
        std::cout << (is_flotw(Multipartition::parse(a.mp),
                               Multicharge::parse(a.charge, a.e))
                          ? "true"
                          : "false")
                  << "\n";
    } else if (cmd == "psi") {
        std::cout << psi(Multipartition::parse(a.mp),
                         Multicharge::parse(a.charge, a.e),
                         Multicharge::parse(a.charge_to, a.e))
                         .to_string()
                  << "\n";
    } else if (cmd == "path") {
        auto path = extract_path(Multipartition::parse(a.mp),
                                 Multicharge::parse(a.charge, a.e));
        for (std::size_t i = 0; i < path.size(); ++i)
            std::cout << (i ? "," : "") << path[i];
        std::cout << "\n";
    } else if (cmd == "hu") {
        std::cout << hu_map(Multipartition::parse(a.mp),
                            Multicharge::parse(a.charge, a.e))
                         .to_string()
                  << "\n";
    } else if (cmd == "iota") {
        std::cout << iota(Multipartition::parse(a.mp), a.k,
                          Multicharge::parse(a.charge, a.e))
                         .to_string()
                  << "\n";
    } else if (cmd == "split") {
        std::cout << split_count(Multipartition::parse(a.mp),
                                 Multicharge::parse(a.charge, a.e))
                  << "\n";
    } else if (cmd == "divided") {
        std::cout << (is_divided_bipartition(Multipartition::parse(a.mp), a.N, a.e)
                          ? "true"
                          : "false")
                  << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Affine type A crystal combinatorics on Fock spaces"};
    app.require_subcommand(1);

    Args args;
    app.add_flag("--quiet", args.quiet, "suppress diagnostics on stderr");

    auto add_common = [&](CLI::App* sub, bool with_mp) {
        sub->add_option("e", args.e, "level e (> 1)")->required();
        sub->add_option("charge", args.charge, "multicharge, e.g. 0,2")->required();
        if (with_mp)
            sub->add_option("mp", args.mp, "multipartition, e.g. 2.1|-|1")->required();
    };

    auto* crystal = app.add_subcommand("crystal", "generate the crystal graph");
    add_common(crystal, false);
    crystal->add_option("n_max", args.n, "rank bound")->required();
    crystal->add_option("--format", args.format, "dot or json")
        ->check(CLI::IsMember({"dot", "json"}));

    auto* uglov = app.add_subcommand("uglov", "list the rank-n Uglov set");
    add_common(uglov, false);
    uglov->add_option("n", args.n, "rank")->required();

    add_common(app.add_subcommand("is-uglov", "crystal membership test"), true);
    add_common(app.add_subcommand("flotw", "FLOTW membership test"), true);

    auto* psi_cmd = app.add_subcommand("psi", "crystal isomorphism");
    psi_cmd->add_option("e", args.e)->required();
    psi_cmd->add_option("from", args.charge)->required();
    psi_cmd->add_option("to", args.charge_to)->required();
    psi_cmd->add_option("mp", args.mp)->required();

    add_common(app.add_subcommand("path", "residue sequence from the empty multipartition"), true);
    add_common(app.add_subcommand("hu", "Hu's map"), true);

    auto* iota_cmd = app.add_subcommand("iota", "embedding of the level-ke/l crystal");
    iota_cmd->add_option("e", args.e)->required();
    iota_cmd->add_option("charge", args.charge)->required();
    iota_cmd->add_option("k", args.k)->required();
    iota_cmd->add_option("mp", args.mp)->required();

    add_common(app.add_subcommand("split", "restriction split count"), true);

    auto* divided = app.add_subcommand("divided", "divided bipartition test");
    divided->add_option("e", args.e)->required();
    divided->add_option("N", args.N)->required();
    divided->add_option("mp", args.mp)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        return app.exit(err) ? 2 : 0;
    }

    try {
        return run(app.get_subcommands().front()->get_name(), args);
    } catch (const fock::parse_error& err) {
        if (!args.quiet) std::cerr << "parse error: " << err.what() << "\n";
        return 2;
    } catch (const fock::domain_error& err) {
        if (!args.quiet) std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
}
