#include <kwb/partitions.hpp>

#include <algorithm>
#include <map>
#include <mutex>

namespace kwb {

unsigned partition_weight(const Partition& p) {
    unsigned w = 0;
    for (unsigned x : p) w += x;
    return w;
}

bool partition_less(const Partition& a, const Partition& b) {
    unsigned wa = partition_weight(a), wb = partition_weight(b);
    if (wa != wb) return wa < wb;
    if (a.size() != b.size()) return a.size() < b.size();
    return a > b;  // reverse-lexicographic within fixed length
}

namespace {

void gen_exact(unsigned remaining, unsigned slots, unsigned max_part,
               Partition& cur, std::vector<Partition>& out) {
    if (slots == 0) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    unsigned hi = std::min(max_part, remaining - (slots - 1));
    unsigned lo = (remaining + slots - 1) / slots;  // parts stay decreasing
    for (unsigned p = hi; p >= lo; --p) {
        cur.push_back(p);
        gen_exact(remaining - p, slots - 1, p, cur, out);
        cur.pop_back();
        if (p == 1) break;
    }
}

}  // namespace

std::vector<Partition> partitions(unsigned d, unsigned max_len) {
    std::vector<Partition> out;
    if (d == 0) {
        out.push_back({});
        return out;
    }
    Partition cur;
    for (unsigned len = 1; len <= std::min(d, max_len); ++len)
        gen_exact(d, len, d, cur, out);
    return out;
}

Integer partition_count(unsigned d, unsigned k) {
    // p(d, k) = p(d, k-1) + p(d-k, k), memoized.
    static std::mutex mu;
    static std::map<std::pair<unsigned, unsigned>, Integer> cache;
    if (d == 0) return 1;
    if (k == 0) return 0;
    if (k > d) k = d;
    std::lock_guard<std::mutex> lock(mu);
    std::vector<std::pair<unsigned, unsigned>> stack{{d, k}};
    while (!stack.empty()) {
        auto [dd, kk] = stack.back();
        if (cache.count({dd, kk})) {
            stack.pop_back();
            continue;
        }
        if (dd == 0) {
            cache[{dd, kk}] = 1;
            stack.pop_back();
            continue;
        }
        if (kk == 0) {
            cache[{dd, kk}] = 0;
            stack.pop_back();
            continue;
        }
        if (kk > dd) {
            if (!cache.count({dd, dd})) {
                stack.push_back({dd, dd});
                continue;
            }
            cache[{dd, kk}] = cache[{dd, dd}];
            stack.pop_back();
            continue;
        }
        bool ready = true;
        std::pair<unsigned, unsigned> a{dd, kk - 1}, b{dd - kk, kk};
        if (!cache.count(a)) { stack.push_back(a); ready = false; }
        if (!cache.count(b)) { stack.push_back(b); ready = false; }
        if (!ready) continue;
        cache[{dd, kk}] = cache[a] + cache[b];
        stack.pop_back();
    }
    return cache[{d, k}];
}

std::vector<SetPartition> set_partitions(unsigned m) {
    std::vector<SetPartition> out;
    if (m == 0) {
        out.push_back({});
        return out;
    }
    std::vector<unsigned> rgs(m, 0);
    // Enumerate restricted-growth strings in lexicographic order.
    auto emit = [&]() {
        unsigned blocks = 0;
        for (unsigned x : rgs) blocks = std::max(blocks, x + 1);
        SetPartition sp(blocks);
        for (unsigned i = 0; i < m; ++i) sp[rgs[i]].push_back(i + 1);
        out.push_back(std::move(sp));
    };
    // rgs[0] is always 0; advance like an odometer bounded by running max.
    while (true) {
        emit();
        int i = static_cast<int>(m) - 1;
        for (; i >= 1; --i) {
            unsigned maxprev = 0;
            for (int j = 0; j < i; ++j) maxprev = std::max(maxprev, rgs[j]);
            if (rgs[i] <= maxprev) break;
        }
        if (i < 1) return out;
        rgs[i] += 1;
        for (unsigned j = i + 1; j < m; ++j) rgs[j] = 0;
    }
}

}  // namespace kwb
