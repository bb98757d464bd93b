#include "matchseq/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace matchseq {

SearchBudget SearchBudget::from_env() {
    SearchBudget b;
    if (const char* env = std::getenv("MATCHSEQ_BUDGET_MS")) {
        char* end = nullptr;
        long long ms = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && ms > 0) b.max_millis = ms;
    }
    return b;
}

namespace {

using Clock = std::chrono::steady_clock;

// Depth-first placement of edges into positions. Window constraints are
// kept incrementally over the trailing short_s - 1 placed edges; longer
// windows were already folded into per-vertex caps.
struct Searcher {
    const Hypergraph& h;
    bool cyclic;
    int eps;
    int short_s;
    std::vector<long long> cap;

    std::vector<int> cls;  // edge -> parallel class
    int class_count = 0;

    std::vector<EdgeId> seq;
    std::vector<char> used;
    std::vector<long long> wcnt;
    long long over = 0;
    std::vector<long long> remdeg;

    long long nodes = 0;
    long long node_limit;
    bool timed;
    Clock::time_point deadline;
    bool exhausted = false;

    Searcher(const Hypergraph& hg, bool cyc, int ss, std::vector<long long> caps, const SearchBudget& budget)
        : h(hg), cyclic(cyc), eps(hg.edge_count()), short_s(ss), cap(std::move(caps)) {
        node_limit = budget.max_nodes;
        timed = budget.max_millis > 0;
        if (timed) deadline = Clock::now() + std::chrono::milliseconds(budget.max_millis);

        std::map<std::vector<int>, int> classes;
        cls.resize(static_cast<std::size_t>(eps));
        for (EdgeId e = 0; e < eps; ++e) {
            std::vector<int> keyset(h.edge_keys(e).begin(), h.edge_keys(e).end());
            auto [it, fresh] = classes.emplace(std::move(keyset), class_count);
            if (fresh) ++class_count;
            cls[static_cast<std::size_t>(e)] = it->second;
        }

        seq.assign(static_cast<std::size_t>(eps), -1);
        used.assign(static_cast<std::size_t>(eps), 0);
        wcnt.assign(static_cast<std::size_t>(h.vertex_count()), 0);
        remdeg.assign(static_cast<std::size_t>(h.vertex_count()), 0);
        for (EdgeId e = 0; e < eps; ++e)
            for (int key : h.edge_keys(e)) ++remdeg[static_cast<std::size_t>(key)];
        tried_by_depth.assign(static_cast<std::size_t>(eps),
                              std::vector<char>(static_cast<std::size_t>(class_count), 0));
    }

    std::vector<std::vector<char>> tried_by_depth;

    // Most placements a vertex of capacity c admits within m slots when
    // every short_s consecutive slots hold at most c of them.
    long long placeable(long long m, long long c) const {
        return c * (m / short_s) + std::min<long long>(m % short_s, c);
    }

    bool root_feasible() const {
        for (int key = 0; key < h.vertex_count(); ++key)
            if (cap[static_cast<std::size_t>(key)] < 0) return false;
        // Part sums: every window's degree over a part that meets every
        // edge at least minc times totals at least short_s * minc.
        for (int p = 0; p < h.part_count(); ++p) {
            int minc = eps > 0 ? h.vertex_count() : 0;
            for (EdgeId e = 0; e < eps; ++e) {
                int inpart = 0;
                for (const Vertex& v : h.edge(e).vertices)
                    if (v.part == p) ++inpart;
                minc = std::min(minc, inpart);
            }
            if (minc == 0) continue;
            long long room = 0;
            for (int idx = 0; idx < h.part_size(p); ++idx)
                room += cap[static_cast<std::size_t>(h.vertex_key(Vertex{p, idx}))];
            if (static_cast<long long>(short_s) * minc > room) return false;
        }
        return true;
    }

    void add_window(EdgeId e) {
        for (int key : h.edge_keys(e))
            if (++wcnt[static_cast<std::size_t>(key)] == cap[static_cast<std::size_t>(key)] + 1) ++over;
    }
    void remove_window(EdgeId e) {
        for (int key : h.edge_keys(e)) {
            if (wcnt[static_cast<std::size_t>(key)] == cap[static_cast<std::size_t>(key)] + 1) --over;
            --wcnt[static_cast<std::size_t>(key)];
        }
    }

    bool wrap_ok() const {
        std::vector<long long> cnt(static_cast<std::size_t>(h.vertex_count()), 0);
        for (int start = eps - short_s + 1; start < eps; ++start) {
            std::fill(cnt.begin(), cnt.end(), 0);
            for (int i = 0; i < short_s; ++i) {
                EdgeId e = seq[static_cast<std::size_t>((start + i) % eps)];
                for (int key : h.edge_keys(e))
                    if (++cnt[static_cast<std::size_t>(key)] > cap[static_cast<std::size_t>(key)]) return false;
            }
        }
        return true;
    }

    bool out_of_budget() {
        if (exhausted) return true;
        if (nodes > node_limit) return exhausted = true;
        if (timed && (nodes & 0x1FFF) == 0 && Clock::now() > deadline) return exhausted = true;
        return false;
    }

    bool dfs(int pos) {
        if (exhausted) return false;
        long long m = eps - pos;
        for (int key = 0; key < h.vertex_count(); ++key)
            if (remdeg[static_cast<std::size_t>(key)] > placeable(m, cap[static_cast<std::size_t>(key)]))
                return false;

        EdgeId evicted = -1;
        if (pos >= short_s) {
            evicted = seq[static_cast<std::size_t>(pos - short_s)];
            remove_window(evicted);
        }

        bool found = false;
        std::vector<char>& tried = tried_by_depth[static_cast<std::size_t>(pos)];
        std::fill(tried.begin(), tried.end(), 0);
        for (EdgeId e = 0; e < eps && !found; ++e) {
            if (used[static_cast<std::size_t>(e)]) continue;
            if (cyclic && pos == 0 && e != 0) break;  // rotations are equivalent
            if (tried[static_cast<std::size_t>(cls[static_cast<std::size_t>(e)])]) continue;
            tried[static_cast<std::size_t>(cls[static_cast<std::size_t>(e)])] = 1;

            ++nodes;
            if (out_of_budget()) break;
            add_window(e);
            if (over == 0) {
                seq[static_cast<std::size_t>(pos)] = e;
                used[static_cast<std::size_t>(e)] = 1;
                for (int key : h.edge_keys(e)) --remdeg[static_cast<std::size_t>(key)];

                if (pos == eps - 1)
                    found = !cyclic || short_s <= 1 || wrap_ok();
                else
                    found = dfs(pos + 1);

                if (!found) {
                    for (int key : h.edge_keys(e)) ++remdeg[static_cast<std::size_t>(key)];
                    used[static_cast<std::size_t>(e)] = 0;
                    seq[static_cast<std::size_t>(pos)] = -1;
                }
            }
            if (!found) remove_window(e);
        }

        if (!found && evicted >= 0) add_window(evicted);
        return found;
    }
};

DecisionResult decide(const Hypergraph& h, long long r, long long s, bool cyclic, const SearchBudget& budget) {
    DecisionResult res;
    long long eps = h.edge_count();
    if (eps == 0) {
        res.outcome = Outcome::yes;
        res.witness = Ordering();
        return res;
    }
    long long a = s / eps;
    long long short_s = s % eps;

    std::vector<long long> cap(static_cast<std::size_t>(h.vertex_count()));
    bool dead = false;
    for (int key = 0; key < h.vertex_count(); ++key) {
        cap[static_cast<std::size_t>(key)] = r - a * h.degree_by_key(key);
        if (cap[static_cast<std::size_t>(key)] < 0 && h.degree_by_key(key) > 0) dead = true;
    }
    if (dead) {
        res.outcome = Outcome::no;
        return res;
    }
    if (short_s == 0) {
        res.outcome = Outcome::yes;
        res.witness = Ordering::identity(static_cast<int>(eps));
        return res;
    }

    Searcher sr(h, cyclic, static_cast<int>(short_s), std::move(cap), budget);
    if (!sr.root_feasible()) {
        res.outcome = Outcome::no;
        return res;
    }
    bool found = sr.dfs(0);
    res.nodes = sr.nodes;
    if (found) {
        Ordering witness(sr.seq);
        if (!all_windows_ok(h, witness, r, s, cyclic))
            throw std::logic_error("oracle witness failed re-check");
        res.outcome = Outcome::yes;
        res.witness = std::move(witness);
    } else {
        res.outcome = sr.exhausted ? Outcome::unknown : Outcome::no;
    }
    return res;
}

}  // namespace

DecisionResult exists_ordering(const Hypergraph& h, long long r, long long s, bool cyclic,
                               const SearchBudget& budget) {
    if (r < 1 || s < 1) throw std::invalid_argument("need r >= 1 and s >= 1");
    return decide(h, r, s, cyclic, budget);
}

ValueResult exact_ms(const Hypergraph& h, long long r, bool cyclic, const SearchBudget& budget) {
    if (r < 1) throw std::invalid_argument("r must be >= 1");
    ValueResult out;
    long long eps = h.edge_count();
    if (eps == 0) {
        out.known = true;
        return out;
    }
    long long floor_a = r / h.max_degree();
    out.ms = floor_a * eps;
    out.known = true;
    for (long long s = out.ms + 1; s < (floor_a + 1) * eps; ++s) {
        DecisionResult d = decide(h, r, s, cyclic, budget);
        out.nodes += d.nodes;
        if (d.outcome == Outcome::yes) {
            out.ms = s;
        } else if (d.outcome == Outcome::no) {
            return out;
        } else {
            out.known = false;
            return out;
        }
    }
    return out;
}

}  // namespace matchseq
