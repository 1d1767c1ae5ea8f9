#include "pado/rational.hpp"

namespace pado {

bool is_prime(const Int& p) {
    if (p < 2) return false;
    return mpz_probab_prime_p(p.get_mpz_t(), 40) != 0;
}

void require_prime(const Int& p) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime, got " + p.get_str());
}

Valuation vp(const Int& x, const Int& p) {
    require_prime(p);
    if (x == 0) return Valuation::inf();
    Int rem;
    unsigned long v = mpz_remove(rem.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
    return Valuation::of(static_cast<long>(v));
}

Valuation vp(const Rat& x, const Int& p) {
    require_prime(p);
    if (x == 0) return Valuation::inf();
    Int rem;
    long vn = static_cast<long>(mpz_remove(rem.get_mpz_t(), x.get_num_mpz_t(), p.get_mpz_t()));
    long vd = static_cast<long>(mpz_remove(rem.get_mpz_t(), x.get_den_mpz_t(), p.get_mpz_t()));
    return Valuation::of(vn - vd);
}

bool p_integral(const Rat& x, const Int& p) { return vp(x, p) >= 0; }

Rat make_rat(Int num, Int den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rat r(std::move(num), std::move(den));
    r.canonicalize();
    return r;
}

Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rat pow_rat(const Rat& base, long e) {
    if (e >= 0) {
        Rat r(pow_int(Int(base.get_num()), static_cast<unsigned long>(e)),
              pow_int(Int(base.get_den()), static_cast<unsigned long>(e)));
        r.canonicalize();
        return r;
    }
    if (base == 0) throw std::invalid_argument("negative power of zero");
    Rat r(pow_int(Int(base.get_den()), static_cast<unsigned long>(-e)),
          pow_int(Int(base.get_num()), static_cast<unsigned long>(-e)));
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& x) {
    return Int(x.get_num()).get_str() + "/" + Int(x.get_den()).get_str();
}

Rat parse_rat(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    for (size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        bool ok = (ch >= '0' && ch <= '9') || ch == '/' || (ch == '-' && (i == 0 || text[i - 1] == '/'));
        if (!ok) throw std::invalid_argument("bad rational literal: " + text);
    }
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0)
        throw std::invalid_argument("bad rational literal: " + text);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    r.canonicalize();
    return r;
}

}  // namespace pado
