#pragma once

#include <span>
#include <vector>

namespace matchseq {

/// Mixed-radix positional arithmetic, most significant digit first.
/// A base (b0,...,bm-1) identifies [b0*...*bm-1] with digit vectors
/// (d0,...,dm-1), di in [bi].
struct RadixBase {
    std::vector<long long> radii;  // each >= 1

    long long total() const;
    std::size_t width() const { return radii.size(); }
};

std::vector<long long> to_digits(const RadixBase& base, long long value);
long long from_digits(const RadixBase& base, std::span<const long long> digits);

/// Increment with carry, wrapping total()-1 back to all zeros. Returns
/// the most significant digit position that changed.
std::size_t succ(const RadixBase& base, std::vector<long long>& digits);

/// Componentwise sums and differences modulo the base.
std::vector<long long> add_mod(const RadixBase& base, std::span<const long long> a, std::span<const long long> b);
std::vector<long long> sub_mod(const RadixBase& base, std::span<const long long> a, std::span<const long long> b);

/// (x, x, ..., x); requires x < min radius.
std::vector<long long> diagonal(const RadixBase& base, long long x);

}  // namespace matchseq
