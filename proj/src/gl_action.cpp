#include "pado/gl_action.hpp"

#include <stdexcept>

#include "pado/factorials.hpp"

namespace pado {

MPoly gen_derivation_image(GlGen g, int var) {
    switch (g) {
        case GlGen::E:
            if (var == kVarB) return MPoly::variable(kVarA);
            if (var == kVarD) return MPoly::variable(kVarC);
            return MPoly();
        case GlGen::H1:
            if (var == kVarA) return MPoly::variable(kVarA);
            if (var == kVarC) return MPoly::variable(kVarC);
            return MPoly();
        case GlGen::H2:
            if (var == kVarB) return MPoly::variable(kVarB);
            if (var == kVarD) return MPoly::variable(kVarD);
            return MPoly();
        case GlGen::F:
            if (var == kVarA) return MPoly::variable(kVarB);
            if (var == kVarC) return MPoly::variable(kVarD);
            return MPoly();
    }
    throw std::logic_error("unreachable");
}

namespace {

MPoly apply_derivation(const std::array<MPoly, 4>& images, const MPoly& f) {
    MPoly r;
    for (const auto& [e, v] : f.terms()) {
        for (int i = 0; i < 4; ++i) {
            if (e[i] == 0 || images[i].is_zero()) continue;
            MPoly::Exps rest = e;
            --rest[i];
            r = r + MPoly::monomial(rest, v * Rat(int(e[i]))) * images[i];
        }
    }
    return r;
}

std::array<MPoly, 4> unshifted_images(GlGen g) {
    return {gen_derivation_image(g, 0), gen_derivation_image(g, 1), gen_derivation_image(g, 2),
            gen_derivation_image(g, 3)};
}

// (op choose k) f with op a derivation given by its variable images.
MPoly binom_apply(const std::array<MPoly, 4>& images, unsigned k, MPoly f) {
    for (unsigned i = 0; i < k; ++i) f = apply_derivation(images, f) - f * Rat(static_cast<long>(i));
    if (k > 1) f = f * make_rat(Int(1), factorial(k));
    return f;
}

}  // namespace

MPoly apply_gen(GlGen g, const MPoly& f) { return apply_derivation(unshifted_images(g), f); }

MPoly apply_dist(const Mono& m, const MPoly& f) {
    MPoly g = f;
    for (unsigned k = 0; k < m[3]; ++k) g = apply_gen(GlGen::F, g);
    if (m[3] > 1) g = g * make_rat(Int(1), factorial(m[3]));
    g = binom_apply(unshifted_images(GlGen::H2), m[2], g);
    g = binom_apply(unshifted_images(GlGen::H1), m[1], g);
    for (unsigned k = 0; k < m[0]; ++k) g = apply_gen(GlGen::E, g);
    if (m[0] > 1) g = g * make_rat(Int(1), factorial(m[0]));
    return g;
}

Rat eval_at_identity(const MPoly& f) {
    std::array<Rat, MPoly::kMaxVars> pt{};
    pt[kVarA] = Rat(1);
    pt[kVarD] = Rat(1);
    return f.eval(pt);
}

Rat pair_direct(const Mono& m, const MPoly& g) { return eval_at_identity(apply_dist(m, g)); }

MPoly dual_monomial(const Mono& m) {
    MPoly am1 = MPoly::variable(kVarA) - MPoly(Rat(1));
    MPoly dm1 = MPoly::variable(kVarD) - MPoly(Rat(1));
    MPoly r(Rat(1));
    for (unsigned k = 0; k < m[0]; ++k) r = r * MPoly::variable(kVarB);
    for (unsigned k = 0; k < m[1]; ++k) r = r * am1;
    for (unsigned k = 0; k < m[2]; ++k) r = r * dm1;
    for (unsigned k = 0; k < m[3]; ++k) r = r * MPoly::variable(kVarC);
    return r;
}

namespace {

// Shifted coordinates: slot 0 holds a-1, slot 3 holds d-1; slots 1, 2
// stay b, c.  Derivations do not change under the shift, so the shifted
// variable images are the unshifted ones rewritten in the new basis.
MPoly to_shifted(const MPoly& f) {
    return f.substitute([](int v) {
        if (v == kVarA || v == kVarD) return MPoly::variable(v) + MPoly(Rat(1));
        return MPoly::variable(v);
    });
}

std::array<MPoly, 4> shifted_images(GlGen g) {
    std::array<MPoly, 4> r;
    for (int v = 0; v < 4; ++v) r[v] = to_shifted(gen_derivation_image(g, v));
    return r;
}

MPoly::Exps mono_to_shifted_exps(const Mono& m) {
    MPoly::Exps e{};
    e[kVarB] = static_cast<uint8_t>(m[0]);
    e[kVarA] = static_cast<uint8_t>(m[1]);
    e[kVarD] = static_cast<uint8_t>(m[2]);
    e[kVarC] = static_cast<uint8_t>(m[3]);
    return e;
}

}  // namespace

PairingTable::PairingTable(unsigned max_weight) : max_weight_(max_weight) {
    for (unsigned a = 0; a <= max_weight; ++a)
        for (unsigned b = 0; a + b <= max_weight; ++b)
            for (unsigned c = 0; a + b + c <= max_weight; ++c)
                for (unsigned d = 0; a + b + c + d <= max_weight; ++d) index_.push_back({a, b, c, d});
    const int dim = static_cast<int>(index_.size());
    for (int i = 0; i < dim; ++i) pos_[index_[i]] = i;

    // sparse columns of each generator action on shifted monomials
    std::array<std::vector<std::vector<std::pair<int, Rat>>>, 4> cols;
    for (int gi = 0; gi < 4; ++gi) {
        auto images = shifted_images(static_cast<GlGen>(gi));
        cols[gi].resize(dim);
        for (int j = 0; j < dim; ++j) {
            MPoly out = apply_derivation(images, MPoly::monomial(mono_to_shifted_exps(index_[j])));
            for (const auto& [e, v] : out.terms()) {
                Mono m{e[kVarB], e[kVarA], e[kVarD], e[kVarC]};
                auto it = pos_.find(m);
                if (it == pos_.end()) throw std::logic_error("action left the filtration");
                cols[gi][j].emplace_back(it->second, v);
            }
        }
    }

    auto vec_times_mat = [&](const std::vector<Rat>& r, int gi) {
        std::vector<Rat> out(dim, Rat(0));
        for (int j = 0; j < dim; ++j) {
            Rat s(0);
            for (const auto& [i, v] : cols[gi][j]) {
                if (r[i] != 0) s += r[i] * v;
            }
            out[j] = s;
        }
        return out;
    };

    // row of the evaluation functional: coefficient of the constant monomial
    std::vector<Rat> delta(dim, Rat(0));
    delta[pos_.at(Mono{0, 0, 0, 0})] = Rat(1);

    rows_.reserve(index_.size());
    for (const Mono& nu : index_) {
        std::vector<Rat> r = delta;
        for (unsigned k = 0; k < nu[0]; ++k) r = vec_times_mat(r, static_cast<int>(GlGen::E));
        if (nu[0] > 1) {
            Rat inv = make_rat(Int(1), factorial(nu[0]));
            for (auto& x : r) x *= inv;
        }
        for (unsigned i = 0; i < nu[1]; ++i) {
            auto t = vec_times_mat(r, static_cast<int>(GlGen::H1));
            if (i > 0)
                for (int j = 0; j < dim; ++j) t[j] -= r[j] * Rat(static_cast<long>(i));
            r = std::move(t);
        }
        if (nu[1] > 1) {
            Rat inv = make_rat(Int(1), factorial(nu[1]));
            for (auto& x : r) x *= inv;
        }
        for (unsigned i = 0; i < nu[2]; ++i) {
            auto t = vec_times_mat(r, static_cast<int>(GlGen::H2));
            if (i > 0)
                for (int j = 0; j < dim; ++j) t[j] -= r[j] * Rat(static_cast<long>(i));
            r = std::move(t);
        }
        if (nu[2] > 1) {
            Rat inv = make_rat(Int(1), factorial(nu[2]));
            for (auto& x : r) x *= inv;
        }
        for (unsigned k = 0; k < nu[3]; ++k) r = vec_times_mat(r, static_cast<int>(GlGen::F));
        if (nu[3] > 1) {
            Rat inv = make_rat(Int(1), factorial(nu[3]));
            for (auto& x : r) x *= inv;
        }
        rows_.push_back(std::move(r));
    }
}

Rat PairingTable::entry(const Mono& nu, const Mono& mu) const {
    return rows_[pos_.at(nu)][pos_.at(mu)];
}

bool PairingTable::is_identity() const {
    const int dim = static_cast<int>(index_.size());
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            if (rows_[i][j] != (i == j ? Rat(1) : Rat(0))) return false;
        }
    return true;
}

PairingReport PairingTable::report() const {
    PairingReport rep;
    const int dim = static_cast<int>(index_.size());
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            ++rep.pairs_checked;
            const Rat& v = rows_[i][j];
            if (v.get_den() != 1) rep.all_integer = false;
            Rat want = (i == j) ? Rat(1) : Rat(0);
            if (v != want) {
                rep.kronecker = false;
                if (mono_weight(index_[i]) <= mono_weight(index_[j])) rep.kronecker_when_dominated = false;
                rep.deviations.push_back({index_[i], index_[j], v});
            }
        }
    return rep;
}

Rat PairingTable::scaled_entry(const Mono& nu, const Mono& mu, const LevelParams& lp) const {
    long shift = static_cast<long>(lp.n) * (static_cast<long>(mono_weight(nu)) - static_cast<long>(mono_weight(mu)));
    return entry(nu, mu) * pow_rat(Rat(lp.p), shift);
}

}  // namespace pado
