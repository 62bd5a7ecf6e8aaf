#include "polyolab/algebra/evalcheck.hpp"

#include <algorithm>
#include <mutex>

namespace polyolab::algebra {

const std::vector<long>& evaluation_nodes(int count) {
    static std::mutex mu;
    static std::vector<long> primes;
    std::lock_guard<std::mutex> lock(mu);
    long c = primes.empty() ? 2 : primes.back() + 1;
    while (int(primes.size()) < count) {
        bool prime = true;
        for (long p : primes) {
            if (p * p > c) break;
            if (c % p == 0) {
                prime = false;
                break;
            }
        }
        if (prime) primes.push_back(c);
        ++c;
    }
    return primes;
}

EvalProof equal_by_evaluation(const QTRat& a, const QTRat& b) {
    EvalProof pr;
    auto dq = [](const QTPoly& p) { return std::max(p.deg_q(), 0); };
    auto dt = [](const QTPoly& p) { return std::max(p.deg_t(), 0); };
    pr.deg_q_bound = std::max(dq(a.num()) + dq(b.den()), dq(b.num()) + dq(a.den()));
    pr.deg_t_bound = std::max(dt(a.num()) + dt(b.den()), dt(b.num()) + dt(a.den()));
    std::vector<long> nodes = evaluation_nodes(std::max(pr.deg_q_bound, pr.deg_t_bound) + 1);
    for (int i = 0; i <= pr.deg_q_bound && pr.equal; ++i) {
        for (int j = 0; j <= pr.deg_t_bound; ++j) {
            BigRational qv(nodes[i]), tv(nodes[j]);
            ++pr.points;
            BigRational lhs = a.num().eval(qv, tv) * b.den().eval(qv, tv);
            BigRational rhs = b.num().eval(qv, tv) * a.den().eval(qv, tv);
            if (lhs != rhs) {
                pr.equal = false;
                break;
            }
        }
    }
    return pr;
}

}  // namespace polyolab::algebra
