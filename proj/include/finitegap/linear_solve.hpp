#pragma once

/**
 * @file linear_solve.hpp
 * @brief Triangular solves for linear systems over Q[g2, g3][z, 1/z].
 *
 * An ansatz  sum_j x_j * E_j + E_c = 0  with unknown x-constant coefficients x_j
 * and known ring elements E_j splits, over the basis P^a Pp^b, into one scalar
 * relation per basis monomial. The systems produced by the spectral-curve
 * constructions are triangular: each relation can be brought to a single
 * undetermined unknown whose coefficient is a unit c*z^k of the Laurent ring.
 * The solver propagates along that structure and then re-checks every relation.
 */

#include "finitegap/weierstrass.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace finitegap {

class InconsistentSystem : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Coefficients of p over the basis P^a Pp^b, keyed (a, b), highest first.
inline std::map<std::pair<int, int>, SparsePoly, std::greater<>> split_ring_basis(const SparsePoly& p) {
    std::map<std::pair<int, int>, std::vector<Term>, std::greater<>> buckets;
    for (const auto& t : p.terms())
        buckets[{t.mono[Var::P], t.mono[Var::Pp]}].push_back(
            {t.mono.without(Var::P).without(Var::Pp), t.coeff});
    std::map<std::pair<int, int>, SparsePoly, std::greater<>> out;
    for (auto& [key, terms] : buckets) out.emplace(key, SparsePoly::from_terms(std::move(terms)));
    return out;
}

/// One scalar relation  sum_j coeffs[j] * x_j + constant = 0.
struct LinearRelation {
    std::vector<SparsePoly> coeffs;
    SparsePoly constant;
};

/// Relations for  sum_j x_j * images[j] + constant = 0, one per ring basis monomial.
inline std::vector<LinearRelation> relations_from_images(const std::vector<WeierstrassElement>& images,
                                                         const WeierstrassElement& constant) {
    std::map<std::pair<int, int>, LinearRelation, std::greater<>> rows;
    auto row = [&](const std::pair<int, int>& key) -> LinearRelation& {
        auto [it, fresh] = rows.try_emplace(key);
        if (fresh) it->second.coeffs.resize(images.size());
        return it->second;
    };
    for (std::size_t j = 0; j < images.size(); ++j)
        for (auto& [key, c] : split_ring_basis(images[j].value())) row(key).coeffs[j] = c;
    for (auto& [key, c] : split_ring_basis(constant.value())) row(key).constant = c;
    std::vector<LinearRelation> out;
    out.reserve(rows.size());
    for (auto& [key, r] : rows) out.push_back(std::move(r));
    return out;
}

/// Exact division by a unit c*z^k.
inline SparsePoly divide_by_z_unit(const SparsePoly& p, const SparsePoly& unit) {
    const Term& u = unit.terms().front();
    return p.shifted(Monomial{{Var::z, -u.mono[Var::z]}}) / u.coeff;
}

/**
 * Solves by propagation. `known` fixes any unknowns chosen in advance (free
 * normalizations). Throws InconsistentSystem when some relation is violated
 * or when the remaining relations are not triangular in the sense above.
 */
inline std::vector<SparsePoly> solve_triangular(const std::vector<LinearRelation>& rows,
                                                std::vector<std::optional<SparsePoly>> known) {
    const std::size_t n = known.size();
    std::vector<bool> settled(rows.size(), false);
    auto residual = [&](const LinearRelation& r, std::vector<std::size_t>& open) {
        SparsePoly acc = r.constant;
        open.clear();
        for (std::size_t j = 0; j < n; ++j) {
            if (r.coeffs[j].is_zero()) continue;
            if (known[j])
                acc += r.coeffs[j] * *known[j];
            else
                open.push_back(j);
        }
        return acc;
    };

    bool progress = true;
    std::vector<std::size_t> open;
    while (progress) {
        progress = false;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (settled[i]) continue;
            SparsePoly rest = residual(rows[i], open);
            if (open.empty()) {
                if (!rest.is_zero())
                    throw InconsistentSystem("relation " + std::to_string(i) + " has nonzero residual");
                settled[i] = true;
            } else if (open.size() == 1 && rows[i].coeffs[open[0]].is_z_unit()) {
                known[open[0]] = -divide_by_z_unit(rest, rows[i].coeffs[open[0]]);
                settled[i] = true;
                progress = true;
            }
        }
    }
    std::vector<SparsePoly> out;
    out.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (!known[j])
            throw InconsistentSystem("unknown " + std::to_string(j) +
                                     " is not determined by a triangular relation");
        out.push_back(*known[j]);
    }
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (!settled[i] && !residual(rows[i], open).is_zero())
            throw InconsistentSystem("relation " + std::to_string(i) + " has nonzero residual");
    return out;
}

}  // namespace finitegap
