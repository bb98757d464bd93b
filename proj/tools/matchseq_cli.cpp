// matchseq: values, constructions and exact search for r-matching
// sequencibility of complete multipartite multi-k-graphs.
//
// Exit codes: 0 success, 1 failed check or defect, 2 usage error,
// 3 search budget exhausted.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "matchseq/fixtures.hpp"
#include "matchseq/json_io.hpp"
#include "matchseq/oracle.hpp"
#include "matchseq/theorem.hpp"

namespace {

using namespace matchseq;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kUnknown = 3;

PartiteSpec parse_spec(long long lambda, const std::string& sizes_csv) {
    std::vector<int> sizes;
    std::stringstream ss(sizes_csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int n = std::stoi(item, &used);
        if (used != item.size()) throw std::invalid_argument("bad size list");
        sizes.push_back(n);
    }
    return PartiteSpec::create(lambda, sizes);
}

SearchBudget make_budget(long long budget_ms) {
    SearchBudget b = SearchBudget::from_env();
    if (budget_ms > 0) b.max_millis = budget_ms;
    return b;
}

std::string branch_label(const PartiteSpec& spec, ValueBranch b) {
    std::string name = branch_name(b);
    if (b == ValueBranch::divisible && spec.u() == 1) name += ": u=1";
    return name;
}

int cmd_value(const PartiteSpec& spec, long long r, bool cyclic, bool as_json) {
    ValueBranch b = value_branch(spec, r, cyclic);
    long long v = value(spec, r, cyclic);
    if (as_json) {
        json j{{"value", v},
               {"branch", branch_name(b)},
               {"upper_bound", upper_bound(spec, r)},
               {"r", r},
               {"cyclic", cyclic}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << v << " (" << branch_label(spec, b) << ")\n";
    }
    return kOk;
}

int cmd_construct(const PartiteSpec& spec, long long r, bool cyclic, const std::string& out, bool as_json) {
    CertifiedOrdering cert = construct(spec, r, cyclic);
    json j = certified_to_json(cert);
    if (!out.empty()) save_json_file(out, j);
    if (as_json)
        std::cout << j.dump() << "\n";
    else
        std::cout << "certified s=" << cert.s << " for " << spec.to_string() << " r=" << r
                  << (cyclic ? " cyclic" : "") << " over " << cert.ordering.size() << " edges\n";
    return kOk;
}

int cmd_check(const std::string& hfile, const std::string& ofile, long long r, long long s, bool cyclic,
              bool as_json) {
    Hypergraph h = hypergraph_from_json(load_json_file(hfile));
    Ordering l = ordering_from_json(load_json_file(ofile));
    if (l.size() != h.edge_count()) throw std::invalid_argument("ordering does not cover the edge set");

    for (const Window& w : windows(l, s, cyclic)) {
        if (auto bad = window_violation(h, w, r)) {
            if (as_json) {
                json j{{"ok", false},
                       {"start", w.start},
                       {"vertex", json::array({bad->vertex.part, bad->vertex.index})},
                       {"degree", bad->degree}};
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "FAIL window at start " << w.start << ": vertex (" << bad->vertex.part << ","
                          << bad->vertex.index << ") reaches degree " << bad->degree << " > " << r << "\n";
            }
            return kFail;
        }
    }
    if (as_json)
        std::cout << json{{"ok", true}, {"s", s}, {"r", r}, {"cyclic", cyclic}}.dump() << "\n";
    else
        std::cout << "PASS: every window of length " << s << " stays within degree " << r << "\n";
    return kOk;
}

int cmd_oracle(const std::string& hfile, long long r, bool cyclic, long long budget_ms, bool as_json) {
    Hypergraph h = hypergraph_from_json(load_json_file(hfile));
    ValueResult res = exact_ms(h, r, cyclic, make_budget(budget_ms));
    if (as_json) {
        std::cout << value_result_to_json(res).dump() << "\n";
    } else if (res.known) {
        std::cout << res.ms << "\n";
    } else {
        std::cout << "unknown\n";
    }
    return res.known ? kOk : kUnknown;
}

int cmd_conjecture(int s_max, int n_max, long long budget_ms, bool as_json) {
    SearchBudget budget = make_budget(budget_ms);
    bool disagreement = false;
    bool any_unknown = false;
    json rows = json::array();
    for (int s = 2; s <= s_max; ++s) {
        for (int n = 2; n <= n_max; ++n) {
            Hypergraph g = complete_multipartite_graph(s, n);
            long long expected = (static_cast<long long>(s) * n) / 2 - 1;
            ValueResult ms = exact_ms(g, 1, false, budget);
            ValueResult cms = exact_ms(g, 1, true, budget);
            std::string status = "agree";
            if (!ms.known || !cms.known) {
                status = "unknown";
                any_unknown = true;
            } else if (ms.ms != expected || cms.ms != expected) {
                status = "DISAGREE";
                disagreement = true;
            }
            if (as_json) {
                rows.push_back(json{{"s", s},
                                    {"n", n},
                                    {"ms", ms.known ? json(ms.ms) : json("unknown")},
                                    {"cms", cms.known ? json(cms.ms) : json("unknown")},
                                    {"expected", expected},
                                    {"status", status}});
            } else {
                std::cout << "K_{" << s << "(" << n << ")}: ms=";
                if (ms.known) std::cout << ms.ms; else std::cout << "?";
                std::cout << " cms=";
                if (cms.known) std::cout << cms.ms; else std::cout << "?";
                std::cout << " expected=" << expected << " [" << status << "]\n";
            }
        }
    }
    if (as_json) std::cout << rows.dump() << "\n";
    if (disagreement) return kFail;
    return any_unknown ? kUnknown : kOk;
}

int cmd_fixtures(long long budget_ms, bool as_json) {
    SearchBudget budget = make_budget(budget_ms);
    struct Row {
        std::string name;
        bool pass;
        std::string detail;
    };
    std::vector<Row> rows;
    auto run = [&](const std::string& name, bool pass, const std::string& detail) {
        rows.push_back(Row{name, pass, detail});
    };

    {
        ValueResult v = exact_ms(fixture_g(), 1, true, budget);
        run("cms(G) = 1", v.known && v.ms == 1, v.known ? std::to_string(v.ms) : "unknown");
        DecisionResult d = exists_ordering(fixture_g(), 4, 8, true, budget);
        run("cms_4(G) >= 8", d.outcome == Outcome::yes, d.outcome == Outcome::yes ? "witness found" : "no witness");
    }
    {
        ValueResult v = exact_ms(fixture_g_prime(), 1, false, budget);
        run("ms(G') = 1", v.known && v.ms == 1, v.known ? std::to_string(v.ms) : "unknown");
        DecisionResult d = exists_ordering(fixture_g_prime(), 4, 7, false, budget);
        run("ms_4(G') >= 7", d.outcome == Outcome::yes, d.outcome == Outcome::yes ? "witness found" : "no witness");
    }
    {
        Hypergraph h = fixture_h();
        long long ms = eval_ms(h, fixture_h_ordering(), 1, false);
        run("hand labelling of H reaches 2", ms >= 2, "eval " + std::to_string(ms));
        ValueResult v = exact_ms(fixture_2h(), 1, false, budget);
        run("ms(2H) = 1", v.known && v.ms == 1, v.known ? std::to_string(v.ms) : "unknown");
    }

    bool all = true;
    json out = json::array();
    for (const Row& row : rows) {
        all = all && row.pass;
        if (as_json)
            out.push_back(json{{"name", row.name}, {"pass", row.pass}, {"detail", row.detail}});
        else
            std::cout << (row.pass ? "PASS " : "FAIL ") << row.name << " (" << row.detail << ")\n";
    }
    if (as_json) std::cout << out.dump() << "\n";
    return all ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"r-matching sequencibility of complete multipartite multigraphs"};
    app.require_subcommand(1);

    long long lambda = 1, r = 1, s = 1, budget_ms = 0;
    std::string sizes, hfile, ofile, out;
    bool cyclic = false, as_json = false;
    int s_max = 3, n_max = 3;

    auto add_spec = [&](CLI::App* c) {
        c->add_option("--lambda", lambda, "edge multiplicity")->check(CLI::PositiveNumber);
        c->add_option("--sizes", sizes, "comma separated part sizes, nondecreasing")->required();
        c->add_option("--r", r, "degree bound")->required()->check(CLI::PositiveNumber);
        c->add_flag("--cyclic", cyclic, "cyclic windows");
        c->add_flag("--json", as_json, "json output");
    };

    CLI::App* cval = app.add_subcommand("value", "closed-form value and branch");
    add_spec(cval);

    CLI::App* ccon = app.add_subcommand("construct", "build and certify an ordering");
    add_spec(ccon);
    ccon->add_option("--out", out, "write the certified ordering as json");

    CLI::App* cchk = app.add_subcommand("check", "verify windows of an ordering file");
    cchk->add_option("--hypergraph", hfile, "hypergraph json")->required();
    cchk->add_option("--ordering", ofile, "ordering json")->required();
    cchk->add_option("--r", r, "degree bound")->required()->check(CLI::PositiveNumber);
    cchk->add_option("--s", s, "window length")->required()->check(CLI::PositiveNumber);
    cchk->add_flag("--cyclic", cyclic, "cyclic windows");
    cchk->add_flag("--json", as_json, "json output");

    CLI::App* cora = app.add_subcommand("oracle", "exact value by exhaustive search");
    cora->add_option("--hypergraph", hfile, "hypergraph json")->required();
    cora->add_option("--r", r, "degree bound")->required()->check(CLI::PositiveNumber);
    cora->add_flag("--cyclic", cyclic, "cyclic windows");
    cora->add_option("--budget", budget_ms, "time budget in ms (default MATCHSEQ_BUDGET_MS)");
    cora->add_flag("--json", as_json, "json output");

    CLI::App* cconj = app.add_subcommand("conjecture", "scan K_{s(n)} against floor(sn/2) - 1");
    cconj->add_option("--s-max", s_max, "max part count")->check(CLI::Range(2, 64));
    cconj->add_option("--n-max", n_max, "max part size")->check(CLI::Range(2, 64));
    cconj->add_option("--budget", budget_ms, "time budget in ms (default MATCHSEQ_BUDGET_MS)");
    cconj->add_flag("--json", as_json, "json output");

    CLI::App* cfix = app.add_subcommand("fixtures", "run the bundled example gallery");
    cfix->add_option("--budget", budget_ms, "time budget in ms (default MATCHSEQ_BUDGET_MS)");
    cfix->add_flag("--json", as_json, "json output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (cval->parsed()) return cmd_value(parse_spec(lambda, sizes), r, cyclic, as_json);
        if (ccon->parsed()) return cmd_construct(parse_spec(lambda, sizes), r, cyclic, out, as_json);
        if (cchk->parsed()) return cmd_check(hfile, ofile, r, s, cyclic, as_json);
        if (cora->parsed()) return cmd_oracle(hfile, r, cyclic, budget_ms, as_json);
        if (cconj->parsed()) return cmd_conjecture(s_max, n_max, budget_ms, as_json);
        if (cfix->parsed()) return cmd_fixtures(budget_ms, as_json);
    } catch (const ConstructionDefect& e) {
        std::cerr << "construction defect: " << e.what() << "\n";
        return kFail;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
    return kUsage;
}
