#include <optics/laws/registry.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>

using namespace optics::laws;

int main(int argc, char** argv)
{
    SuiteOptions opts;
    std::string jsonl;
    std::vector<std::string> only;
    bool list = false;

    CLI::App app{"Run the optics law suite.", "lawcheck"};
    app.add_option("--samples", opts.samples, "optics per family-law and morphism instance")
        ->capture_default_str();
    app.add_option("--round-trips", opts.round_trips, "optics per representation round trip")
        ->capture_default_str();
    app.add_option("--derivations", opts.derivations, "lawful optics per derivation round trip")
        ->capture_default_str();
    app.add_option("--seed", opts.seed)->capture_default_str();
    app.add_option("-j,--threads", opts.threads)->capture_default_str();
    app.add_option("--jsonl", jsonl, "write one report per line to FILE (- for stdout)");
    app.add_option("--group", only, "run only these groups");
    app.add_flag("--list", list, "print the law catalogue and exit");
    CLI11_PARSE(app, argc, argv);

    if (list) {
        for (const auto& g : standard_groups())
            for (const auto& id : g.claims)
                std::cout << g.name << '\t' << id << '\n';
        return 0;
    }

    std::vector<LawGroup> groups;
    std::vector<std::string> catalogue;
    for (const auto& g : standard_groups()) {
        if (!only.empty() && std::find(only.begin(), only.end(), g.name) == only.end())
            continue;
        groups.push_back(g);
        catalogue.insert(catalogue.end(), g.claims.begin(), g.claims.end());
    }
    if (groups.empty()) {
        std::cerr << "lawcheck: no such group\n";
        return 2;
    }
    if (only.empty())
        catalogue = law_catalogue();
    std::sort(catalogue.begin(), catalogue.end());

    auto reports = run_suite(groups, opts, catalogue);

    if (jsonl == "-") {
        write_jsonl(std::cout, reports);
    } else if (!jsonl.empty()) {
        std::ofstream out{jsonl};
        write_jsonl(out, reports);
    }

    std::size_t failed = 0, inconclusive = 0;
    std::uint64_t cases = 0;
    for (const auto& r : reports) {
        cases += r.cases;
        if (r.status == LawStatus::pass)
            continue;
        (r.status == LawStatus::fail ? failed : inconclusive) += 1;
        std::cerr << to_string(r.status) << ' ' << r.name;
        if (!r.failures.empty())
            std::cerr << ": " << r.failures.front().to_string();
        std::cerr << '\n';
    }
    std::cerr << reports.size() << " laws, " << cases << " cases, " << failed
              << " failed, " << inconclusive << " inconclusive\n";
    return failed + inconclusive == 0 ? 0 : 1;
}
