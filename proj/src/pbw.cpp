#include "pado/pbw.hpp"

#include <mutex>
#include <unordered_map>
#include <vector>

#include "pado/factorials.hpp"
#include "pado/stirling.hpp"

namespace pado {

namespace {

uint64_t pack(const Mono& m) {
    uint64_t k = 0;
    for (int i = 0; i < 4; ++i) {
        if (m[i] >= (1u << 16)) throw std::overflow_error("monomial exponent too large");
        k = (k << 16) | m[i];
    }
    return k;
}

Mono bump(Mono m, int slot) {
    ++m[slot];
    return m;
}

}  // namespace

GlElement::GlElement(const Rat& constant) {
    if (constant != 0) c_[{0, 0, 0, 0}] = constant;
}

GlElement GlElement::generator(GlGen g) {
    Mono m{0, 0, 0, 0};
    m[static_cast<int>(g)] = 1;
    return monomial(m);
}

GlElement GlElement::monomial(const Mono& m, const Rat& coeff) {
    GlElement x;
    if (coeff != 0) x.c_[m] = coeff;
    return x;
}

Rat GlElement::coeff(const Mono& m) const {
    auto it = c_.find(m);
    return it == c_.end() ? Rat(0) : it->second;
}

void GlElement::add_coeff(const Mono& m, const Rat& v) {
    auto it = c_.find(m);
    if (it == c_.end()) {
        if (v != 0) c_[m] = v;
        return;
    }
    it->second += v;
    if (it->second == 0) c_.erase(it);
}

GlElement GlElement::operator+(const GlElement& o) const {
    GlElement r = *this;
    for (const auto& [m, v] : o.c_) r.add_coeff(m, v);
    return r;
}

GlElement GlElement::operator-(const GlElement& o) const {
    GlElement r = *this;
    for (const auto& [m, v] : o.c_) r.add_coeff(m, -v);
    return r;
}

GlElement GlElement::operator*(const Rat& s) const {
    GlElement r;
    if (s == 0) return r;
    for (const auto& [m, v] : c_) r.c_[m] = v * s;
    return r;
}

GlElement GlElement::operator-() const { return *this * Rat(-1); }

GlElement gen_left_mul(GlGen g, const Mono& m) {
    static std::mutex mu;
    static std::unordered_map<uint64_t, GlElement> memo[4];
    const int gi = static_cast<int>(g);
    const uint64_t key = pack(m);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo[gi].find(key);
        if (it != memo[gi].end()) return it->second;
    }

    GlElement r;
    switch (g) {
        case GlGen::E:
            r.add_coeff(bump(m, 0), Rat(1));
            break;
        case GlGen::H1:
            // h1 e^{a} = e^{a} (h1 + a)
            r.add_coeff(bump(m, 1), Rat(1));
            if (m[0] > 0) r.add_coeff(m, Rat(static_cast<long>(m[0])));
            break;
        case GlGen::H2:
            r.add_coeff(bump(m, 2), Rat(1));
            if (m[0] > 0) r.add_coeff(m, Rat(-static_cast<long>(m[0])));
            break;
        case GlGen::F:
            if (m[0] == 0) {
                // f h1^b h2^c = (h1+1)^b (h2-1)^c f
                for (unsigned i = 0; i <= m[1]; ++i) {
                    for (unsigned j = 0; j <= m[2]; ++j) {
                        Rat w = Rat(binomial(m[1], i) * binomial(m[2], j));
                        if ((m[2] - j) % 2 == 1) w = -w;
                        r.add_coeff({0, i, j, m[3] + 1}, w);
                    }
                }
            } else {
                // f e X = e (f X) - h1 X + h2 X
                Mono x = m;
                --x[0];
                GlElement fx = gen_left_mul(GlGen::F, x);
                for (const auto& [mm, v] : fx.terms()) {
                    GlElement t = gen_left_mul(GlGen::E, mm);
                    for (const auto& [m2, v2] : t.terms()) r.add_coeff(m2, v * v2);
                }
                GlElement h1x = gen_left_mul(GlGen::H1, x);
                for (const auto& [mm, v] : h1x.terms()) r.add_coeff(mm, -v);
                GlElement h2x = gen_left_mul(GlGen::H2, x);
                for (const auto& [mm, v] : h2x.terms()) r.add_coeff(mm, v);
            }
            break;
    }

    std::lock_guard<std::mutex> lock(mu);
    return memo[gi].emplace(key, std::move(r)).first->second;
}

namespace {

GlElement gen_left_mul_elem(GlGen g, const GlElement& x) {
    GlElement r;
    for (const auto& [m, v] : x.terms()) {
        GlElement t = gen_left_mul(g, m);
        for (const auto& [m2, v2] : t.terms()) r.add_coeff(m2, v * v2);
    }
    return r;
}

// a * x where a is a single ordered monomial: apply the factors of a to
// x from the right end of a inwards.
GlElement mono_left_mul(const Mono& a, const GlElement& x) {
    GlElement r = x;
    for (unsigned k = 0; k < a[3]; ++k) r = gen_left_mul_elem(GlGen::F, r);
    for (unsigned k = 0; k < a[2]; ++k) r = gen_left_mul_elem(GlGen::H2, r);
    for (unsigned k = 0; k < a[1]; ++k) r = gen_left_mul_elem(GlGen::H1, r);
    for (unsigned k = 0; k < a[0]; ++k) r = gen_left_mul_elem(GlGen::E, r);
    return r;
}

}  // namespace

GlElement GlElement::operator*(const GlElement& o) const {
    GlElement r;
    for (const auto& [a, va] : c_) {
        GlElement t = mono_left_mul(a, o);
        for (const auto& [m, v] : t.terms()) r.add_coeff(m, va * v);
    }
    return r;
}

GlElement bracket(const GlElement& a, const GlElement& b) { return a * b - b * a; }

GlElement dist_basis_element(const Mono& m) {
    GlElement r;
    Rat scale = make_rat(Int(1), factorial(m[0]) * factorial(m[1]) * factorial(m[2]) * factorial(m[3]));
    for (unsigned j = (m[1] > 0) ? 1u : 0u; j <= m[1]; ++j) {
        for (unsigned k = (m[2] > 0) ? 1u : 0u; k <= m[2]; ++k) {
            Rat w = Rat(stirling_first(m[1], j) * stirling_first(m[2], k)) * scale;
            if (w != 0) r.add_coeff({m[0], j, k, m[3]}, w);
        }
    }
    return r;
}

GlElement level_basis_element(const Mono& m, const LevelParams& lp) {
    Rat u(qfactorial(m[0], lp) * qfactorial(m[1], lp) * qfactorial(m[2], lp) * qfactorial(m[3], lp));
    return dist_basis_element(m) * u;
}

GlElement scaled_level_basis_element(const Mono& m, const LevelParams& lp) {
    return level_basis_element(m, lp) * Rat(pow_int(lp.pint(), static_cast<unsigned long>(lp.n) * mono_weight(m)));
}

std::map<Mono, Rat> to_dist_coords(const GlElement& x) {
    std::map<Mono, Rat> r;
    for (const auto& [m, v] : x.terms()) {
        // e^a h1^b h2^c f^d = sum_{i,j} S2(b,i) i! S2(c,j) j! a! d! E_{(a,i,j,d)}
        Rat base = v * Rat(factorial(m[0]) * factorial(m[3]));
        for (unsigned i = (m[1] > 0) ? 1u : 0u; i <= m[1]; ++i) {
            for (unsigned j = (m[2] > 0) ? 1u : 0u; j <= m[2]; ++j) {
                Rat w = base * Rat(stirling_second(m[1], i) * factorial(i) * stirling_second(m[2], j) * factorial(j));
                if (w == 0) continue;
                Mono t{m[0], i, j, m[3]};
                auto it = r.find(t);
                if (it == r.end()) {
                    r[t] = w;
                } else {
                    it->second += w;
                    if (it->second == 0) r.erase(it);
                }
            }
        }
    }
    return r;
}

long vp_level_scale(const Mono& m, const LevelParams& lp) {
    long s = 0;
    for (int i = 0; i < 4; ++i) s += vp_qfactorial(m[i], lp);
    return s;
}

std::map<Mono, Rat> to_level_coords(const GlElement& x, const LevelParams& lp) {
    std::map<Mono, Rat> r = to_dist_coords(x);
    for (auto& [m, v] : r) {
        Rat u(qfactorial(m[0], lp) * qfactorial(m[1], lp) * qfactorial(m[2], lp) * qfactorial(m[3], lp));
        v /= u;
    }
    return r;
}

std::map<Mono, Rat> to_scaled_level_coords(const GlElement& x, const LevelParams& lp) {
    std::map<Mono, Rat> r = to_level_coords(x, lp);
    for (auto& [m, v] : r) {
        Rat s(pow_int(lp.pint(), static_cast<unsigned long>(lp.n) * mono_weight(m)));
        v /= s;
    }
    return r;
}

namespace {

using DistVec = std::map<Mono, Rat>;

void dist_add(DistVec& r, const Mono& m, const Rat& v) {
    auto it = r.find(m);
    if (it == r.end()) {
        if (v != 0) r[m] = v;
        return;
    }
    it->second += v;
    if (it->second == 0) r.erase(it);
}

// Left multiplication by a generator on the E basis.  Fanout is 1 or 2
// except for F, which expands two Pascal relations.
//   e  E_m = (m0+1) E_{m0+1}
//   h1 E_m = (m1+1) E_{m1+1} + (m1 + m0) E_m
//   h2 E_m = (m2+1) E_{m2+1} + (m2 - m0) E_m
//   f  E_{(0,b,c,d)} = (d+1) (h1+1 choose b)(h2-1 choose c) f-slot d+1
//   f  E_{(k,b,c,d)} = [slot0:=k] f E_{(0,b,c,d)}
//                      + [slot0:=k-1] (h2 - h1 - (k-1)) E_{(0,b,c,d)}
const DistVec& dist_left_mul(GlGen g, const Mono& m);

DistVec dist_left_mul_elem(GlGen g, const DistVec& x) {
    DistVec r;
    for (const auto& [m, v] : x) {
        for (const auto& [m2, v2] : dist_left_mul(g, m)) dist_add(r, m2, v * v2);
    }
    return r;
}

const DistVec& dist_left_mul(GlGen g, const Mono& m) {
    static std::mutex mu;
    static std::unordered_map<uint64_t, DistVec> memo[4];
    const int gi = static_cast<int>(g);
    const uint64_t key = pack(m);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo[gi].find(key);
        if (it != memo[gi].end()) return it->second;
    }

    DistVec r;
    switch (g) {
        case GlGen::E:
            dist_add(r, bump(m, 0), Rat(static_cast<long>(m[0]) + 1));
            break;
        case GlGen::H1:
            dist_add(r, bump(m, 1), Rat(static_cast<long>(m[1]) + 1));
            dist_add(r, m, Rat(static_cast<long>(m[1]) + static_cast<long>(m[0])));
            break;
        case GlGen::H2:
            dist_add(r, bump(m, 2), Rat(static_cast<long>(m[2]) + 1));
            dist_add(r, m, Rat(static_cast<long>(m[2]) - static_cast<long>(m[0])));
            break;
        case GlGen::F: {
            if (m[0] == 0) {
                // (h1+1 choose b) = (h1 choose b) + (h1 choose b-1)
                // (h2-1 choose c) = sum_t (-1)^t (h2 choose c-t)
                Rat lead(static_cast<long>(m[3]) + 1);
                for (unsigned db = 0; db <= std::min(m[1], 1u); ++db) {
                    for (unsigned t = 0; t <= m[2]; ++t) {
                        Rat w = lead;
                        if (t % 2 == 1) w = -w;
                        dist_add(r, {0, m[1] - db, m[2] - t, m[3] + 1}, w);
                    }
                }
            } else {
                Mono rest{0, m[1], m[2], m[3]};
                const unsigned k = m[0];
                for (const auto& [mm, v] : dist_left_mul(GlGen::F, rest)) {
                    Mono t = mm;
                    t[0] = k;
                    dist_add(r, t, v);
                }
                DistVec rv{{rest, Rat(1)}};
                DistVec z = dist_left_mul_elem(GlGen::H2, rv);
                for (const auto& [mm, v] : dist_left_mul(GlGen::H1, rest)) dist_add(z, mm, -v);
                dist_add(z, rest, Rat(-(static_cast<long>(k) - 1)));
                for (const auto& [mm, v] : z) {
                    Mono t = mm;
                    t[0] = k - 1;
                    dist_add(r, t, v);
                }
            }
            break;
        }
    }

    std::lock_guard<std::mutex> lock(mu);
    return memo[gi].emplace(key, std::move(r)).first->second;
}

}  // namespace

std::map<Mono, Rat> dist_product(const Mono& a, const Mono& b) {
    // E_a * E_b: apply the factors of E_a to the unit vector at b,
    // right factor first.
    DistVec x{{b, Rat(1)}};
    for (unsigned k = 0; k < a[3]; ++k) x = dist_left_mul_elem(GlGen::F, x);
    if (a[3] > 1) {
        Rat inv = make_rat(Int(1), factorial(a[3]));
        for (auto& [m, v] : x) v *= inv;
    }
    for (unsigned i = 0; i < a[2]; ++i) {
        // multiply by (h2 - i)
        DistVec y = dist_left_mul_elem(GlGen::H2, x);
        if (i > 0) {
            for (const auto& [m, v] : x) dist_add(y, m, v * Rat(-static_cast<long>(i)));
        }
        x = std::move(y);
    }
    if (a[2] > 1) {
        Rat inv = make_rat(Int(1), factorial(a[2]));
        for (auto& [m, v] : x) v *= inv;
    }
    for (unsigned i = 0; i < a[1]; ++i) {
        DistVec y = dist_left_mul_elem(GlGen::H1, x);
        if (i > 0) {
            for (const auto& [m, v] : x) dist_add(y, m, v * Rat(-static_cast<long>(i)));
        }
        x = std::move(y);
    }
    if (a[1] > 1) {
        Rat inv = make_rat(Int(1), factorial(a[1]));
        for (auto& [m, v] : x) v *= inv;
    }
    for (unsigned k = 0; k < a[0]; ++k) x = dist_left_mul_elem(GlGen::E, x);
    if (a[0] > 1) {
        Rat inv = make_rat(Int(1), factorial(a[0]));
        for (auto& [m, v] : x) v *= inv;
    }
    return x;
}

ClosureReport check_subalgebra_closure(const LevelParams& lp, unsigned max_weight) {
    std::vector<Mono> basis;
    for (unsigned a = 0; a <= max_weight; ++a)
        for (unsigned b = 0; a + b <= max_weight; ++b)
            for (unsigned c = 0; a + b + c <= max_weight; ++c)
                for (unsigned d = 0; a + b + c + d <= max_weight; ++d) basis.push_back({a, b, c, d});

    ClosureReport rep;
    for (const Mono& nu : basis) {
        const long vnu = vp_level_scale(nu, lp) + static_cast<long>(lp.n) * mono_weight(nu);
        for (const Mono& mu : basis) {
            const long vmu = vp_level_scale(mu, lp) + static_cast<long>(lp.n) * mono_weight(mu);
            ++rep.pairs_checked;
            for (const auto& [lam, v] : dist_product(nu, mu)) {
                const long vlam = vp_level_scale(lam, lp) + static_cast<long>(lp.n) * mono_weight(lam);
                const long val = vp(v, lp.p).value + vnu + vmu - vlam;
                if (val < 0) {
                    rep.ok = false;
                    // exact coordinate: v * u_nu * u_mu / u_lam * p^{n(|nu|+|mu|-|lam|)}
                    Rat unu(qfactorial(nu[0], lp) * qfactorial(nu[1], lp) * qfactorial(nu[2], lp) *
                            qfactorial(nu[3], lp));
                    Rat umu(qfactorial(mu[0], lp) * qfactorial(mu[1], lp) * qfactorial(mu[2], lp) *
                            qfactorial(mu[3], lp));
                    Rat ulam(qfactorial(lam[0], lp) * qfactorial(lam[1], lp) * qfactorial(lam[2], lp) *
                             qfactorial(lam[3], lp));
                    long ns = static_cast<long>(lp.n) *
                              (static_cast<long>(mono_weight(nu)) + mono_weight(mu) - mono_weight(lam));
                    rep.bad = ClosureCounterexample{nu, mu, lam, v * unu * umu / ulam * pow_rat(Rat(lp.p), ns), val};
                    return rep;
                }
            }
        }
    }
    return rep;
}

}  // namespace pado
