#include "polyolab/symfunc/tables.hpp"

#include "polyolab/error.hpp"

#include <algorithm>
#include <atomic>
#include <memory>
#include <mutex>

namespace polyolab::symfunc {

namespace {

std::atomic<int> g_cap{12};

using Beta = std::vector<int>;  // strictly decreasing

Beta to_beta(const std::vector<int>& parts) {
    int L = int(parts.size());
    Beta b(parts.size());
    for (int i = 0; i < L; ++i) b[std::size_t(i)] = parts[std::size_t(i)] + (L - 1 - i);
    return b;
}

// Memoized on (beta set, remaining cycle type).
struct MN {
    std::map<std::pair<Beta, std::vector<int>>, long> memo;

    long value(const Beta& beta, const std::vector<int>& rho, std::size_t pos) {
        if (pos == rho.size()) {
            // Empty partition has all beta numbers equal to 0..L-1.
            for (std::size_t i = 0; i < beta.size(); ++i)
                if (beta[i] != int(beta.size() - 1 - i)) return 0;
            return 1;
        }
        std::vector<int> rest(rho.begin() + long(pos), rho.end());
        auto key = std::make_pair(beta, rest);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        int r = rho[pos];
        long total = 0;
        for (std::size_t i = 0; i < beta.size(); ++i) {
            int b = beta[i], nb = b - r;
            if (nb < 0 || std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
            int between = 0;
            for (int x : beta)
                if (x > nb && x < b) ++between;
            Beta next = beta;
            next[i] = nb;
            std::sort(next.begin(), next.end(), std::greater<int>());
            long v = value(next, rho, pos + 1);
            total += (between % 2 ? -v : v);
        }
        memo.emplace(std::move(key), total);
        return total;
    }
};

std::map<Partition, BigRational> h_single(int m) {
    std::map<Partition, BigRational> out;
    for (const auto& rho : partitions(m)) out[rho] = BigRational(1) / BigRational(zmu(rho));
    return out;
}

std::unique_ptr<DegreeTables> build(int n) {
    auto T = std::make_unique<DegreeTables>();
    T->n = n;
    T->parts = partitions(n);
    std::size_t N = T->parts.size();
    for (std::size_t i = 0; i < N; ++i) T->index.emplace(T->parts[i], int(i));
    for (const auto& p : T->parts) {
        T->z.push_back(zmu(p));
        T->eps.push_back(sign(p));
    }

    MN mn;
    T->chi.assign(N, std::vector<long>(N));
    for (std::size_t l = 0; l < N; ++l) {
        Beta beta = to_beta(T->parts[l].parts());
        for (std::size_t r = 0; r < N; ++r) T->chi[l][r] = mn.value(beta, T->parts[r].parts(), 0);
    }

    std::map<int, std::map<Partition, BigRational>> hs;
    T->hp.assign(N, std::vector<BigRational>(N));
    for (std::size_t l = 0; l < N; ++l) {
        std::map<Partition, BigRational> acc{{Partition(), BigRational(1)}};
        for (int part : T->parts[l].parts()) {
            auto& hm = hs[part];
            if (hm.empty()) hm = h_single(part);
            std::map<Partition, BigRational> next;
            for (const auto& [a, ca] : acc)
                for (const auto& [b, cb] : hm) {
                    std::vector<int> v = a.parts();
                    v.insert(v.end(), b.parts().begin(), b.parts().end());
                    next[Partition(std::move(v))] += ca * cb;
                }
            acc = std::move(next);
        }
        for (const auto& [rho, c] : acc) T->hp[l][std::size_t(T->index.at(rho))] = c;
    }

    // <h_lambda, m_mu> = delta, so mp^T = (hp * diag(z))^{-1}.
    QMatrix A = T->hp;
    for (std::size_t l = 0; l < N; ++l)
        for (std::size_t r = 0; r < N; ++r) A[l][r] *= BigRational(T->z[r]);
    QMatrix inv = algebra::invert_rational(A);
    T->mp.assign(N, std::vector<BigRational>(N));
    for (std::size_t m = 0; m < N; ++m)
        for (std::size_t r = 0; r < N; ++r) T->mp[m][r] = inv[r][m];
    return T;
}

}  // namespace

int degree_cap() { return g_cap.load(); }
void set_degree_cap(int cap) { g_cap.store(cap); }

const DegreeTables& tables(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<DegreeTables>> cache;
    if (n < 0) throw DomainError("negative degree");
    if (n > degree_cap()) throw CapExceeded("symmetric function degree", n, degree_cap());
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return *it->second;
    }
    // Built outside the lock; a concurrent duplicate build yields the same tables.
    auto built = build(n);
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.emplace(n, std::move(built));
    return *it->second;
}

long schur_char(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) throw DomainError("schur_char: weight mismatch");
    if (lambda.size() <= degree_cap()) {
        const auto& T = tables(lambda.size());
        return T.chi[std::size_t(T.idx(lambda))][std::size_t(T.idx(mu))];
    }
    MN mn;
    return mn.value(to_beta(lambda.parts()), mu.parts(), 0);
}

}  // namespace polyolab::symfunc
