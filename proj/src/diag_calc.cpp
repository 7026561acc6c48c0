#include <kwb/diag_calc.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace kwb {

namespace {

constexpr unsigned kMaxMarks = 8;
constexpr unsigned kMaxExpo = 31;
constexpr unsigned kExpoShift = 24;

[[noreturn]] void overflow() { throw std::overflow_error("DiagClass: coefficient overflow"); }

DiagClass::Coeff cadd(DiagClass::Coeff a, DiagClass::Coeff b) {
    DiagClass::Coeff r;
    if (__builtin_add_overflow(a, b, &r)) overflow();
    return r;
}

DiagClass::Coeff cmul(DiagClass::Coeff a, DiagClass::Coeff b) {
    DiagClass::Coeff r;
    if (__builtin_mul_overflow(a, b, &r)) overflow();
    return r;
}

void check_d(unsigned d) {
    if (d > kMaxMarks)
        throw std::invalid_argument("DiagClass: at most 8 auxiliary points supported");
}

unsigned block_of(DiagClass::Key k, unsigned i) {  // i is 1-based
    return static_cast<unsigned>((k >> (3 * (i - 1))) & 7u);
}

unsigned expo_of(DiagClass::Key k, unsigned b) {
    return static_cast<unsigned>((k >> (kExpoShift + 5 * b)) & 31u);
}

}  // namespace

unsigned DiagMonomial::degree(unsigned d) const {
    unsigned s = 0;
    for (unsigned e : expo) s += e;
    return s + d - static_cast<unsigned>(blocks.size());
}

DiagClass::DiagClass(unsigned d) : d_(d) { check_d(d); }

DiagClass DiagClass::unit(unsigned d) {
    DiagClass c(d);
    Key k = 0;
    for (unsigned i = 1; i <= d; ++i) k |= static_cast<Key>(i - 1) << (3 * (i - 1));
    c.terms_[k] = 1;
    return c;
}

DiagClass DiagClass::psi(unsigned d, unsigned i, unsigned power) {
    DiagClass c = unit(d);
    Key k = c.terms_.begin()->first;
    c.terms_.clear();
    c.terms_[mul_psi_key(d, k, i, power)] = 1;
    return c;
}

DiagClass DiagClass::diagonal(unsigned d, unsigned i, unsigned j) {
    DiagClass c = unit(d);
    Key k = c.terms_.begin()->first;
    c.terms_.clear();
    int sign = 1;
    k = mul_diag_key(d, k, i, j, sign);
    c.terms_[k] = sign;
    return c;
}

DiagClass::Key DiagClass::encode(unsigned d, const DiagMonomial& m) {
    check_d(d);
    if (m.blocks.size() != m.expo.size())
        throw std::invalid_argument("DiagMonomial: block/exponent size mismatch");
    std::vector<int> assign(d, -1);
    for (size_t b = 0; b < m.blocks.size(); ++b) {
        if (m.blocks[b].empty()) throw std::invalid_argument("DiagMonomial: empty block");
        if (b > 0 && m.blocks[b][0] <= m.blocks[b - 1][0])
            throw std::invalid_argument("DiagMonomial: blocks not ordered by least element");
        for (unsigned mark : m.blocks[b]) {
            if (mark < 1 || mark > d || assign[mark - 1] != -1)
                throw std::invalid_argument("DiagMonomial: marks must partition 1..d");
            assign[mark - 1] = static_cast<int>(b);
        }
        if (m.expo[b] > kMaxExpo) throw std::invalid_argument("DiagMonomial: exponent too large");
    }
    for (unsigned i = 0; i < d; ++i)
        if (assign[i] == -1) throw std::invalid_argument("DiagMonomial: marks must partition 1..d");
    Key k = 0;
    for (unsigned i = 0; i < d; ++i) k |= static_cast<Key>(assign[i]) << (3 * i);
    for (size_t b = 0; b < m.expo.size(); ++b)
        k |= static_cast<Key>(m.expo[b]) << (kExpoShift + 5 * b);
    return k;
}

DiagMonomial DiagClass::decode(unsigned d, Key k) {
    DiagMonomial m;
    unsigned nblocks = 0;
    for (unsigned i = 1; i <= d; ++i) nblocks = std::max(nblocks, block_of(k, i) + 1);
    if (d == 0) nblocks = 0;
    m.blocks.resize(nblocks);
    for (unsigned i = 1; i <= d; ++i) m.blocks[block_of(k, i)].push_back(i);
    m.expo.resize(nblocks);
    for (unsigned b = 0; b < nblocks; ++b) m.expo[b] = expo_of(k, b);
    return m;
}

unsigned DiagClass::degree_of(unsigned d, Key k) {
    unsigned nblocks = 0, s = 0;
    for (unsigned i = 1; i <= d; ++i) nblocks = std::max(nblocks, block_of(k, i) + 1);
    if (d == 0) nblocks = 0;
    for (unsigned b = 0; b < nblocks; ++b) s += expo_of(k, b);
    return s + d - nblocks;
}

DiagClass::Key DiagClass::mul_psi_key(unsigned d, Key k, unsigned i, unsigned power) {
    if (i < 1 || i > d) throw std::invalid_argument("mul_psi: mark out of range");
    unsigned b = block_of(k, i);
    unsigned e = expo_of(k, b) + power;
    if (e > kMaxExpo) throw std::overflow_error("DiagClass: exponent limit exceeded");
    k &= ~(static_cast<Key>(31) << (kExpoShift + 5 * b));
    k |= static_cast<Key>(e) << (kExpoShift + 5 * b);
    return k;
}

DiagClass::Key DiagClass::mul_diag_key(unsigned d, Key k, unsigned i, unsigned j, int& sign) {
    if (i < 1 || j < 1 || i > d || j > d || i == j)
        throw std::invalid_argument("mul_diag: bad mark pair");
    unsigned bi = block_of(k, i), bj = block_of(k, j);
    if (bi == bj) {
        sign = -sign;
        return mul_psi_key(d, k, i);
    }
    unsigned lo = std::min(bi, bj), hi = std::max(bi, bj);
    unsigned assign[kMaxMarks];
    unsigned nblocks = 0;
    for (unsigned m = 1; m <= d; ++m) {
        unsigned b = block_of(k, m);
        nblocks = std::max(nblocks, b + 1);
        assign[m - 1] = b;
    }
    unsigned expo[kMaxMarks];
    for (unsigned b = 0; b < nblocks; ++b) expo[b] = expo_of(k, b);
    expo[lo] += expo[hi];
    if (expo[lo] > kMaxExpo) throw std::overflow_error("DiagClass: exponent limit exceeded");
    Key out = 0;
    for (unsigned m = 0; m < d; ++m) {
        unsigned b = assign[m];
        if (b == hi) b = lo;
        else if (b > hi) b -= 1;
        out |= static_cast<Key>(b) << (3 * m);
    }
    for (unsigned b = 0; b < nblocks; ++b) {
        if (b == hi) continue;
        unsigned nb = b > hi ? b - 1 : b;
        out |= static_cast<Key>(expo[b]) << (kExpoShift + 5 * nb);
    }
    return out;
}

void DiagClass::add(const DiagMonomial& m, Coeff c) { add_key(encode(d_, m), c); }

void DiagClass::add_key(Key k, Coeff c) {
    if (c == 0) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_[k] = c;
    } else {
        it->second = cadd(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

DiagClass::Coeff DiagClass::coeff(const DiagMonomial& m) const {
    auto it = terms_.find(encode(d_, m));
    return it == terms_.end() ? 0 : it->second;
}

DiagClass& DiagClass::operator+=(const DiagClass& o) {
    if (o.d_ != d_) throw std::invalid_argument("DiagClass: mark count mismatch");
    for (const auto& [k, c] : o.terms_) add_key(k, c);
    return *this;
}

DiagClass DiagClass::scaled(Coeff s) const {
    DiagClass out(d_);
    if (s == 0) return out;
    for (const auto& [k, c] : terms_) out.terms_[k] = cmul(c, s);
    return out;
}

DiagClass DiagClass::degree_part(unsigned r) const {
    DiagClass out(d_);
    for (const auto& [k, c] : terms_)
        if (degree_of(d_, k) == r) out.terms_[k] = c;
    return out;
}

DiagClass DiagClass::truncated(unsigned r_max) const {
    DiagClass out(d_);
    for (const auto& [k, c] : terms_)
        if (degree_of(d_, k) <= r_max) out.terms_[k] = c;
    return out;
}

DiagClass DiagClass::relabeled(const std::vector<unsigned>& perm) const {
    if (perm.size() != d_) throw std::invalid_argument("relabeled: permutation size mismatch");
    DiagClass out(d_);
    for (const auto& [k, c] : terms_) {
        DiagMonomial m = decode(d_, k);
        DiagMonomial img;
        img.blocks.resize(m.blocks.size());
        for (size_t b = 0; b < m.blocks.size(); ++b) {
            for (unsigned mark : m.blocks[b]) img.blocks[b].push_back(perm[mark - 1]);
            std::sort(img.blocks[b].begin(), img.blocks[b].end());
        }
        img.expo = m.expo;
        // restore least-element order of blocks, exponents follow
        std::vector<size_t> order(img.blocks.size());
        for (size_t b = 0; b < order.size(); ++b) order[b] = b;
        std::sort(order.begin(), order.end(),
                  [&](size_t a, size_t b) { return img.blocks[a][0] < img.blocks[b][0]; });
        DiagMonomial canon;
        for (size_t b : order) {
            canon.blocks.push_back(img.blocks[b]);
            canon.expo.push_back(img.expo[b]);
        }
        out.add(canon, c);
    }
    return out;
}

std::vector<std::pair<DiagMonomial, DiagClass::Coeff>> DiagClass::decoded_sorted() const {
    std::vector<std::pair<Key, Coeff>> keys(terms_.begin(), terms_.end());
    std::sort(keys.begin(), keys.end());
    std::vector<std::pair<DiagMonomial, Coeff>> out;
    out.reserve(keys.size());
    for (const auto& [k, c] : keys) out.emplace_back(decode(d_, k), c);
    return out;
}

DiagClass diag_multiply(const DiagClass& a, const DiagClass& b) {
    if (a.marks() != b.marks()) throw std::invalid_argument("diag_multiply: mark count mismatch");
    unsigned d = a.marks();
    DiagClass out(d);
    for (const auto& [kb, cb] : b.terms()) {
        // decompose the b-monomial into diagonal merges and psi powers
        DiagMonomial mb = DiagClass::decode(d, kb);
        std::vector<std::pair<unsigned, unsigned>> merges;
        std::vector<std::pair<unsigned, unsigned>> psis;
        for (size_t blk = 0; blk < mb.blocks.size(); ++blk) {
            const auto& B = mb.blocks[blk];
            for (size_t t = 1; t < B.size(); ++t) merges.push_back({B[0], B[t]});
            if (mb.expo[blk] > 0) psis.push_back({B[0], mb.expo[blk]});
        }
        for (const auto& [ka, ca] : a.terms()) {
            DiagClass::Key k = ka;
            int sign = 1;
            for (const auto& [i, j] : merges) k = DiagClass::mul_diag_key(d, k, i, j, sign);
            for (const auto& [i, e] : psis) k = DiagClass::mul_psi_key(d, k, i, e);
            out.add_key(k, cmul(cmul(ca, cb), sign));
        }
    }
    return out;
}

namespace {

struct ExpansionCache {
    std::mutex mu;
    std::map<unsigned, std::pair<unsigned, DiagClass>> by_d;  // d -> (r_max, class)
};

ExpansionCache& expansion_cache() {
    static ExpansionCache c;
    return c;
}

DiagClass expand_uncached(unsigned d, unsigned r_max) {
    DiagClass a = DiagClass::unit(d);
    for (unsigned i = 1; i <= d; ++i) {
        // multiply the running product by 1 + sum_m psi_i (psi_i - Delta_i)^m
        DiagClass result = a;
        std::unordered_map<DiagClass::Key, DiagClass::Coeff> level;
        for (const auto& [k, c] : a.terms()) {
            if (DiagClass::degree_of(d, k) >= r_max) continue;
            DiagClass::Key k2 = DiagClass::mul_psi_key(d, k, i);
            auto [it, fresh] = level.try_emplace(k2, c);
            if (!fresh) it->second = cadd(it->second, c);
        }
        while (!level.empty()) {
            for (const auto& [k, c] : level) result.add_key(k, c);
            std::unordered_map<DiagClass::Key, DiagClass::Coeff> next;
            next.reserve(level.size() * 2);
            auto bump = [&next](DiagClass::Key k, DiagClass::Coeff c) {
                if (c == 0) return;
                auto [it, fresh] = next.try_emplace(k, c);
                if (!fresh) {
                    it->second = cadd(it->second, c);
                    if (it->second == 0) next.erase(it);
                }
            };
            for (const auto& [k, c] : level) {
                if (DiagClass::degree_of(d, k) >= r_max) continue;
                bump(DiagClass::mul_psi_key(d, k, i), c);
                for (unsigned j = 1; j < i; ++j) {
                    int sign = 1;
                    DiagClass::Key kd = DiagClass::mul_diag_key(d, k, j, i, sign);
                    bump(kd, cmul(c, -sign));
                }
            }
            level = std::move(next);
        }
        a = std::move(result);
    }
    return a;
}

}  // namespace

DiagClass expand_chern_class(unsigned d, unsigned r_max) {
    check_d(d);
    if (r_max > kMaxExpo)
        throw std::invalid_argument("expand_chern_class: truncation degree above representation limit");
    auto& cache = expansion_cache();
    std::lock_guard<std::mutex> lock(cache.mu);
    auto it = cache.by_d.find(d);
    if (it == cache.by_d.end() || it->second.first < r_max) {
        DiagClass full = expand_uncached(d, r_max);
        auto [pos, _] = cache.by_d.insert_or_assign(d, std::make_pair(r_max, std::move(full)));
        it = pos;
    }
    if (it->second.first == r_max) return it->second.second;
    return it->second.second.truncated(r_max);
}

KappaPoly pushforward_to_kappa(const DiagClass& c, long s) {
    KappaPoly out;
    unsigned d = c.marks();
    for (const auto& [k, coeff] : c.terms()) {
        DiagMonomial m = DiagClass::decode(d, k);
        Rational scalar((long)coeff);
        Partition parts;
        bool dead = false;
        for (unsigned e : m.expo) {
            if (e == 0) { dead = true; break; }
            if (e == 1) scalar *= Rational(s);
            else parts.push_back(e - 1);
        }
        if (dead || scalar.is_zero()) continue;
        std::sort(parts.begin(), parts.end(), std::greater<unsigned>());
        out.add_term(parts, scalar);
    }
    return out;
}

Integer substitution_count(unsigned d, unsigned r) {
    DiagClass part = expand_chern_class(d, r).degree_part(r);
    Integer total = 0;
    for (const auto& [k, c] : part.terms()) {
        unsigned nblocks = 0;
        for (unsigned i = 1; i <= d; ++i) nblocks = std::max(nblocks, block_of(k, i) + 1);
        if (d == 0) nblocks = 0;
        int sign = ((d - nblocks) % 2 == 0) ? 1 : -1;
        total += Integer((long)c) * sign;
    }
    return total;
}

Integer connected_count_direct(unsigned r, unsigned d) {
    if (d == 0) return 0;
    if (r + 1 < d) return 0;  // one-block monomial needs exponent r - d + 1 >= 0
    DiagMonomial m;
    m.blocks.resize(1);
    for (unsigned i = 1; i <= d; ++i) m.blocks[0].push_back(i);
    m.expo = {r - d + 1};
    DiagClass::Coeff c = expand_chern_class(d, r).coeff(m);
    int sign = (d % 2 == 1) ? 1 : -1;
    return Integer((long)c) * sign;
}

}  // namespace kwb
