#include "pado/realize.hpp"

#include <mutex>
#include <unordered_map>

namespace pado {

DiffOp realize_generator(GlGen g) {
    DiffOp d = DiffOp::d(Chart::X);
    switch (g) {
        case GlGen::E:
            return d;
        case GlGen::H1:
            return compose(DiffOp::coord(Chart::X), d) * Rat(-1);
        case GlGen::H2:
            return compose(DiffOp::coord(Chart::X), d);
        case GlGen::F:
            return compose(DiffOp::coord(Chart::X, 2), d) * Rat(-1);
    }
    throw std::logic_error("unreachable");
}

namespace {

uint64_t pack(const Mono& m) {
    uint64_t k = 0;
    for (int i = 0; i < 4; ++i) k = (k << 16) | m[i];
    return k;
}

DiffOp realize_mono(const Mono& m) {
    static std::mutex mu;
    static std::unordered_map<uint64_t, DiffOp> memo;
    const uint64_t key = pack(m);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    DiffOp r = DiffOp::one(Chart::X);
    for (int slot = 0; slot < 4; ++slot) {
        DiffOp g = realize_generator(static_cast<GlGen>(slot));
        for (unsigned k = 0; k < m[slot]; ++k) r = compose(r, g);
    }
    std::lock_guard<std::mutex> lock(mu);
    return memo.emplace(key, std::move(r)).first->second;
}

}  // namespace

DiffOp realize_element(const GlElement& x) {
    DiffOp r = DiffOp::zero(Chart::X);
    for (const auto& [m, v] : x.terms()) r = r + realize_mono(m) * v;
    return r;
}

GlElement casimir() {
    GlElement e = GlElement::generator(GlGen::E);
    GlElement h1 = GlElement::generator(GlGen::H1);
    GlElement h2 = GlElement::generator(GlGen::H2);
    GlElement f = GlElement::generator(GlGen::F);
    GlElement h = h1 - h2;
    return e * f + f * e + h * h * make_rat(Int(1), Int(2));
}

bool is_central(const GlElement& x) {
    for (int g = 0; g < 4; ++g) {
        if (!bracket(x, GlElement::generator(static_cast<GlGen>(g))).is_zero()) return false;
    }
    return true;
}

}  // namespace pado
