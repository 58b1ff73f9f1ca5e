#include "ordcalc/fourier_motzkin.hpp"

#include <algorithm>
#include <set>

namespace ordcalc::fm {

namespace {

// Divide by the largest coefficient magnitude so duplicates collide.
void normalize(AffineIneq& q) {
    Rat scale(0);
    for (const Rat& c : q.coeffs)
        if (abs(c) > scale) scale = abs(c);
    if (sgn(scale) == 0) scale = abs(q.constant);
    if (sgn(scale) == 0) return;
    for (Rat& c : q.coeffs) c /= scale;
    q.constant /= scale;
}

void dedupe(std::vector<AffineIneq>& sys) {
    std::set<std::pair<std::vector<Rat>, Rat>> seen;
    std::vector<AffineIneq> out;
    for (AffineIneq& q : sys) {
        normalize(q);
        auto key = std::make_pair(q.coeffs, q.constant);
        if (seen.insert(key).second) out.push_back(std::move(q));
    }
    sys = std::move(out);
}

} // namespace

bool feasible(std::vector<AffineIneq> system) {
    if (system.empty()) return true;
    const std::size_t nvars = system[0].coeffs.size();
    std::vector<bool> eliminated(nvars, false);

    for (std::size_t round = 0; round < nvars; ++round) {
        dedupe(system);

        // choose the variable minimizing |pos|*|neg|
        std::size_t best = nvars;
        std::size_t best_cost = 0;
        for (std::size_t v = 0; v < nvars; ++v) {
            if (eliminated[v]) continue;
            std::size_t np = 0, nn = 0;
            for (const AffineIneq& q : system) {
                int s = sgn(q.coeffs[v]);
                if (s > 0) ++np;
                else if (s < 0) ++nn;
            }
            std::size_t cost = np * nn + np + nn;
            if (best == nvars || cost < best_cost) { best = v; best_cost = cost; }
        }
        if (best == nvars) break;
        eliminated[best] = true;

        std::vector<AffineIneq> pos, neg, rest;
        for (AffineIneq& q : system) {
            int s = sgn(q.coeffs[best]);
            if (s > 0) pos.push_back(std::move(q));
            else if (s < 0) neg.push_back(std::move(q));
            else rest.push_back(std::move(q));
        }
        for (const AffineIneq& p : pos)
            for (const AffineIneq& n : neg) {
                // p.c[v] > 0, n.c[v] < 0: combine to cancel v exactly
                Rat a = p.coeffs[best], b = -n.coeffs[best];
                AffineIneq q;
                q.coeffs.resize(nvars, Rat(0));
                for (std::size_t j = 0; j < nvars; ++j)
                    q.coeffs[j] = b * p.coeffs[j] + a * n.coeffs[j];
                q.constant = b * p.constant + a * n.constant;
                rest.push_back(std::move(q));
            }
        system = std::move(rest);
    }

    for (const AffineIneq& q : system)
        if (sgn(q.constant) < 0) return false; // 0 >= negative constant fails
    return true;
}

} // namespace ordcalc::fm
