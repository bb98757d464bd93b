#include "matchseq/mixed_radix.hpp"

#include <stdexcept>

namespace matchseq {

long long RadixBase::total() const {
    long long t = 1;
    for (long long r : radii) {
        if (r < 1) throw std::invalid_argument("radix must be >= 1");
        t *= r;
    }
    return t;
}

std::vector<long long> to_digits(const RadixBase& base, long long value) {
    if (value < 0 || value >= base.total()) throw std::out_of_range("value outside radix range");
    std::vector<long long> d(base.width(), 0);
    for (std::size_t i = base.width(); i-- > 0;) {
        d[i] = value % base.radii[i];
        value /= base.radii[i];
    }
    return d;
}

long long from_digits(const RadixBase& base, std::span<const long long> digits) {
    if (digits.size() != base.width()) throw std::invalid_argument("digit width mismatch");
    long long v = 0;
    for (std::size_t i = 0; i < base.width(); ++i) {
        if (digits[i] < 0 || digits[i] >= base.radii[i]) throw std::out_of_range("digit outside radix");
        v = v * base.radii[i] + digits[i];
    }
    return v;
}

std::size_t succ(const RadixBase& base, std::vector<long long>& digits) {
    if (digits.size() != base.width()) throw std::invalid_argument("digit width mismatch");
    std::size_t i = base.width();
    while (i-- > 0) {
        if (++digits[i] < base.radii[i]) return i;
        digits[i] = 0;
    }
    return 0;  // wrapped to zero
}

std::vector<long long> add_mod(const RadixBase& base, std::span<const long long> a, std::span<const long long> b) {
    if (a.size() != base.width() || b.size() != base.width()) throw std::invalid_argument("digit width mismatch");
    std::vector<long long> out(base.width());
    for (std::size_t i = 0; i < base.width(); ++i) out[i] = (a[i] + b[i]) % base.radii[i];
    return out;
}

std::vector<long long> sub_mod(const RadixBase& base, std::span<const long long> a, std::span<const long long> b) {
    if (a.size() != base.width() || b.size() != base.width()) throw std::invalid_argument("digit width mismatch");
    std::vector<long long> out(base.width());
    for (std::size_t i = 0; i < base.width(); ++i) {
        long long m = base.radii[i];
        out[i] = ((a[i] - b[i]) % m + m) % m;
    }
    return out;
}

std::vector<long long> diagonal(const RadixBase& base, long long x) {
    for (long long r : base.radii)
        if (x < 0 || x >= r) throw std::out_of_range("diagonal value outside some radius");
    return std::vector<long long>(base.width(), x);
}

}  // namespace matchseq
