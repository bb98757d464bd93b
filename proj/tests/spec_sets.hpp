#pragma once

#include <matchseq/hypergraph.hpp>

#include <vector>

namespace testutil {

/// Every spec (lambda; n1 <= ... <= nk) with k <= max_k and at most cap
/// edges, i.e. lambda * n1 * ... * nk <= cap.
inline std::vector<matchseq::PartiteSpec> enumerate_specs(long long cap, int max_k) {
    std::vector<matchseq::PartiteSpec> out;
    std::vector<int> sizes;
    auto rec = [&](auto&& self, long long weight) -> void {
        if (!sizes.empty()) {
            for (long long lam = 1; lam * weight <= cap; ++lam)
                out.push_back(matchseq::PartiteSpec::create(lam, sizes));
        }
        if (static_cast<int>(sizes.size()) == max_k) return;
        int lo = sizes.empty() ? 1 : sizes.back();
        for (int n = lo; weight * n <= cap; ++n) {
            sizes.push_back(n);
            self(self, weight * n);
            sizes.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

}  // namespace testutil
