#include "pado/factorials.hpp"

#include <mutex>
#include <vector>

namespace pado {

namespace {
std::mutex fact_mutex;
std::vector<Int> fact_table = {Int(1)};
}  // namespace

Int factorial(unsigned long k) {
    std::lock_guard<std::mutex> lock(fact_mutex);
    while (fact_table.size() <= k) {
        fact_table.push_back(fact_table.back() * Int(fact_table.size()));
    }
    return fact_table[k];
}

Int qfactorial(unsigned long nu, const LevelParams& lp) { return factorial(q_floor(nu, lp)); }

long vp_factorial(unsigned long k, long p) {
    require_prime(Int(p));
    long v = 0;
    unsigned long q = k;
    while (q > 0) {
        q /= static_cast<unsigned long>(p);
        v += static_cast<long>(q);
    }
    return v;
}

long vp_qfactorial(unsigned long nu, const LevelParams& lp) {
    return vp_factorial(q_floor(nu, lp), lp.p);
}

Int binomial(unsigned long n, unsigned long k) {
    Int r;
    if (k > n) return Int(0);
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

DpCoeff dp_coeff(unsigned long d, const LevelParams& lp) {
    DpCoeff res;
    Int pm = lp.pm();
    Int qz = Int(d) / pm;
    Int sz = Int(d) % pm;
    res.q = qz.get_ui();
    res.s = sz.get_ui();
    res.value = make_rat(qfactorial(d, lp), factorial(d));
    res.unit = res.value * Rat(factorial(res.s)) * pow_rat(Rat(factorial(pm.get_ui())), static_cast<long>(res.q));
    if (!(vp(res.unit, lp.pint()) == Valuation::of(0)))
        throw std::logic_error("dp_coeff unit certification failed");
    return res;
}

Rat integrality_ratio(unsigned long i, unsigned long j, const LevelParams& lp) {
    Rat r = Rat(binomial(i + j, i)) * Rat(qfactorial(i, lp)) * Rat(qfactorial(j, lp));
    r /= Rat(qfactorial(i + j, lp));
    return r;
}

Rat qbinomial_ratio(unsigned long nu, unsigned long k, const LevelParams& lp) {
    if (k > nu) throw std::invalid_argument("qbinomial_ratio: k > nu");
    Rat r = Rat(qfactorial(nu, lp));
    r /= Rat(qfactorial(k, lp)) * Rat(qfactorial(nu - k, lp));
    return r;
}

}  // namespace pado
