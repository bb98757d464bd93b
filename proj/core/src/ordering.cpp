#include "matchseq/ordering.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace matchseq {

Ordering::Ordering(std::vector<EdgeId> seq) : seq_(std::move(seq)) {
    pos_.reserve(seq_.size());
    for (std::size_t p = 0; p < seq_.size(); ++p) {
        if (!pos_.emplace(seq_[p], static_cast<int>(p)).second)
            throw std::invalid_argument("ordering repeats an edge id");
    }
}

Ordering Ordering::identity(int count) {
    std::vector<EdgeId> seq(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) seq[static_cast<std::size_t>(i)] = i;
    return Ordering(std::move(seq));
}

int Ordering::label_of(EdgeId e) const {
    auto it = pos_.find(e);
    return it == pos_.end() ? -1 : it->second;
}

Ordering join(std::span<const Ordering> parts) {
    std::vector<EdgeId> seq;
    for (const Ordering& p : parts) seq.insert(seq.end(), p.sequence().begin(), p.sequence().end());
    return Ordering(std::move(seq));  // ctor rejects duplicates
}

Ordering replicate(const Ordering& base, int lambda) {
    if (lambda < 1) throw std::invalid_argument("lambda must be >= 1");
    std::vector<EdgeId> seq;
    seq.reserve(base.sequence().size() * static_cast<std::size_t>(lambda));
    for (int t = 0; t < lambda; ++t)
        for (EdgeId e : base.sequence()) seq.push_back(e * lambda + t);
    return Ordering(std::move(seq));
}

Ordering join_boundary(const Ordering& first, const Ordering& second, long long s) {
    if (s < 1) throw std::invalid_argument("window length must be >= 1");
    long long tail = s - 1;
    if (tail > first.size() || tail > second.size())
        throw std::invalid_argument("orderings too short for boundary");
    std::vector<EdgeId> seq;
    seq.reserve(static_cast<std::size_t>(2 * tail));
    for (long long i = first.size() - tail; i < first.size(); ++i) seq.push_back(first.at(static_cast<int>(i)));
    for (long long i = 0; i < tail; ++i) seq.push_back(second.at(static_cast<int>(i)));
    return Ordering(std::move(seq));
}

std::vector<Window> windows(const Ordering& l, long long s, bool cyclic) {
    if (s < 1) throw std::invalid_argument("window length must be >= 1");
    long long eps = l.size();
    std::vector<Window> out;
    if (eps == 0) return out;
    long long a = s / eps;
    long long last = cyclic ? eps - 1 : std::min((a + 1) * eps - s, eps - 1);
    for (long long p = 0; p <= last; ++p) {
        Window w;
        w.start = p;
        w.length = s;
        w.cyclic = cyclic;
        w.edge_seq.reserve(static_cast<std::size_t>(s));
        for (long long i = 0; i < s; ++i) w.edge_seq.push_back(l.at(static_cast<int>((p + i) % eps)));
        out.push_back(std::move(w));
    }
    return out;
}

std::optional<DegreeViolation> window_violation(const Hypergraph& h, const Window& w, long long r) {
    std::vector<long long> cnt(static_cast<std::size_t>(h.vertex_count()), 0);
    for (EdgeId e : w.edge_seq) {
        for (int key : h.edge_keys(e)) {
            if (++cnt[static_cast<std::size_t>(key)] > r)
                return DegreeViolation{h.vertex_of_key(key), cnt[static_cast<std::size_t>(key)]};
        }
    }
    return std::nullopt;
}

bool check_window_degree(const Hypergraph& h, const Window& w, long long r) {
    return !window_violation(h, w, r).has_value();
}

namespace {

// Shared sliding check. A window of length s = a*eps + s' counts every
// edge a times plus once more for a short cyclic stretch of s' positions,
// so degrees <= r over the long window is the same as degrees <= r - a*deg
// over the short stretch.
bool windows_ok_impl(const Hypergraph& h, const std::vector<EdgeId>& seq, long long r, long long s, bool cyclic) {
    long long eps = static_cast<long long>(seq.size());
    if (eps == 0) return true;
    long long a = s / eps;
    long long short_s = s % eps;

    std::vector<long long> cap(static_cast<std::size_t>(h.vertex_count()), r);
    if (a > 0) {
        for (EdgeId e : seq)
            for (int key : h.edge_keys(e)) cap[static_cast<std::size_t>(key)] -= a;
        for (EdgeId e : seq)
            for (int key : h.edge_keys(e))
                if (cap[static_cast<std::size_t>(key)] < 0) return false;
    }
    if (short_s == 0) return true;

    std::vector<long long> cnt(static_cast<std::size_t>(h.vertex_count()), 0);
    long long over = 0;
    auto add = [&](EdgeId e) {
        for (int key : h.edge_keys(e))
            if (++cnt[static_cast<std::size_t>(key)] == cap[static_cast<std::size_t>(key)] + 1) ++over;
    };
    auto remove = [&](EdgeId e) {
        for (int key : h.edge_keys(e)) {
            if (cnt[static_cast<std::size_t>(key)] == cap[static_cast<std::size_t>(key)] + 1) --over;
            --cnt[static_cast<std::size_t>(key)];
        }
    };

    for (long long i = 0; i < short_s; ++i) add(seq[static_cast<std::size_t>(i)]);
    if (over > 0) return false;
    long long last = cyclic ? eps - 1 : eps - short_s;
    for (long long p = 1; p <= last; ++p) {
        remove(seq[static_cast<std::size_t>(p - 1)]);
        add(seq[static_cast<std::size_t>((p + short_s - 1) % eps)]);
        if (over > 0) return false;
    }
    return true;
}

long long max_seq_degree(const Hypergraph& h, const std::vector<EdgeId>& seq) {
    std::vector<long long> deg(static_cast<std::size_t>(h.vertex_count()), 0);
    long long mx = 0;
    for (EdgeId e : seq)
        for (int key : h.edge_keys(e)) mx = std::max(mx, ++deg[static_cast<std::size_t>(key)]);
    return mx;
}

}  // namespace

bool all_windows_ok(const Hypergraph& h, const Ordering& l, long long r, long long s, bool cyclic) {
    if (s < 1) throw std::invalid_argument("window length must be >= 1");
    if (r < 1) throw std::invalid_argument("degree bound must be >= 1");
    return windows_ok_impl(h, l.sequence(), r, s, cyclic);
}

long long eval_ms(const Hypergraph& h, const Ordering& l, long long r, bool cyclic) {
    if (r < 1) throw std::invalid_argument("degree bound must be >= 1");
    if (l.empty()) return 0;
    long long eps = l.size();
    long long d = max_seq_degree(h, l.sequence());
    long long floor_a = r / d;
    long long best = floor_a * eps;  // every window of a full wraps stays within r
    for (long long s = best + 1; s < (floor_a + 1) * eps; ++s) {
        if (!windows_ok_impl(h, l.sequence(), r, s, cyclic)) break;
        best = s;
    }
    return best;
}

long long ms_pair(const Hypergraph& h, const Ordering& first, const Ordering& second) {
    long long cap = std::min(first.size(), second.size()) + 1LL;
    long long best = 1;
    for (long long s = 2; s <= cap; ++s) {
        Ordering boundary = join_boundary(first, second, s);
        if (eval_ms(h, boundary, 1, false) >= s) best = std::max(best, s);
    }
    return best;
}

}  // namespace matchseq
