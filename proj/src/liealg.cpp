#include <z2c/liealg.hpp>
#include <z2c/rng.hpp>

#include <algorithm>
#include <stdexcept>

namespace z2c {

std::string family_name(Family f) { return f == Family::GL ? "gl" : "so"; }

std::vector<std::pair<int, Rat>> LieAlgebra::bracket_of(int i, int j) const {
    if (i == j) return {};
    bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = brackets.find({i, j});
    if (it == brackets.end()) return {};
    if (!flip) return it->second;
    std::vector<std::pair<int, Rat>> out = it->second;
    for (auto& [k, c] : out) {
        (void)k;
        c = -c;
    }
    return out;
}

Rat LieAlgebra::structure_constant(int i, int j, int k) const {
    for (const auto& [idx, c] : bracket_of(i, j))
        if (idx == k) return c;
    return Rat(0);
}

std::vector<int> LieAlgebra::part_indices(VarPart p) const {
    std::vector<int> out;
    for (int i = 0; i < dim(); ++i)
        if (parts[static_cast<std::size_t>(i)] == p) out.push_back(i);
    return out;
}

namespace {

/*
 * Structure constants from the matrix model: bracket every basis pair as a
 * matrix commutator and read the coordinates back off. The coordinate
 * extraction is family-specific: every matrix position for gl, the strict
 * upper triangle for so (where the basis is e_ab = E_ab - E_ba, a < b).
 */
LieAlgebra from_matrix_basis(std::string name, std::vector<std::string> basis_names,
                             std::vector<VarPart> parts, std::vector<RatMatrix> mats,
                             int order, Family f) {
    LieAlgebra L;
    L.name = std::move(name);
    L.basis_names = std::move(basis_names);
    L.parts = parts;
    L.space = VarSpace::create(L.basis_names, std::move(parts));
    L.basis_matrices = std::move(mats);
    L.matrix_order = order;

    auto extract = [&](const RatMatrix& c) {
        std::vector<std::pair<int, Rat>> coords;
        if (f == Family::GL) {
            int idx = 0;
            for (int r = 0; r < order; ++r)
                for (int col = 0; col < order; ++col, ++idx)
                    if (!c.at(r, col).is_zero()) coords.emplace_back(idx, c.at(r, col));
        } else {
            int idx = 0;
            for (int a = 0; a < order; ++a)
                for (int b = a + 1; b < order; ++b, ++idx)
                    if (!c.at(a, b).is_zero()) coords.emplace_back(idx, c.at(a, b));
        }
        return coords;
    };

    const int n = L.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            RatMatrix comm = L.basis_matrices[static_cast<std::size_t>(i)] *
                                 L.basis_matrices[static_cast<std::size_t>(j)] -
                             L.basis_matrices[static_cast<std::size_t>(j)] *
                                 L.basis_matrices[static_cast<std::size_t>(i)];
            auto coords = extract(comm);
            if (!coords.empty()) L.brackets.emplace(std::make_pair(i, j), std::move(coords));
        }
    return L;
}

void check_order_cap(int N, int max_order) {
    if (N < 1) throw std::invalid_argument("matrix order must be positive");
    if (N > max_order)
        throw std::invalid_argument("matrix order " + std::to_string(N) +
                                    " exceeds the configured cap " + std::to_string(max_order));
}

} // namespace

LieAlgebra build_classical(Family f, int N, int max_order) {
    check_order_cap(N, max_order);
    std::vector<std::string> names;
    std::vector<RatMatrix> mats;
    if (f == Family::GL) {
        for (int r = 0; r < N; ++r)
            for (int c = 0; c < N; ++c) {
                names.push_back("x" + std::to_string(r + 1) + "_" + std::to_string(c + 1));
                RatMatrix m(N, N);
                m.at(r, c) = Rat(1);
                mats.push_back(std::move(m));
            }
    } else {
        for (int a = 0; a < N; ++a)
            for (int b = a + 1; b < N; ++b) {
                names.push_back("x" + std::to_string(a + 1) + "_" + std::to_string(b + 1));
                RatMatrix m(N, N);
                m.at(a, b) = Rat(1);
                m.at(b, a) = Rat(-1);
                mats.push_back(std::move(m));
            }
    }
    std::vector<VarPart> parts(names.size(), VarPart::Zero);
    return from_matrix_basis(family_name(f) + std::to_string(N), std::move(names),
                             std::move(parts), std::move(mats), N, f);
}

LieAlgebra build_symmetric_pair(Family f, int n, int m, int max_order) {
    if (m < 0 || n < m) throw std::invalid_argument("build_symmetric_pair: need n >= m >= 0");
    const int N = n + m;
    check_order_cap(N, max_order);
    LieAlgebra L = build_classical(f, N, max_order);

    // Re-label parts by block position: the m-block occupies rows/columns
    // 0..m-1, so a basis vector is off-diagonal (One) iff exactly one of its
    // two matrix indices falls inside that block.
    std::vector<VarPart> parts;
    if (f == Family::GL) {
        for (int r = 0; r < N; ++r)
            for (int c = 0; c < N; ++c)
                parts.push_back((r < m) != (c < m) ? VarPart::One : VarPart::Zero);
    } else {
        for (int a = 0; a < N; ++a)
            for (int b = a + 1; b < N; ++b)
                parts.push_back((a < m) != (b < m) ? VarPart::One : VarPart::Zero);
    }
    L.parts = parts;
    L.space = VarSpace::create(L.basis_names, std::move(parts));
    L.pair = PairInfo{f, n, m};
    L.name = family_name(f) + "(n=" + std::to_string(n) + ",m=" + std::to_string(m) + ")";
    return L;
}

LieAlgebra contract(const LieAlgebra& g) {
    LieAlgebra k = g;
    k.name = "k(" + g.name + ")";
    k.contracted = true;
    for (auto it = k.brackets.begin(); it != k.brackets.end();) {
        auto [i, j] = it->first;
        bool both_one = k.parts[static_cast<std::size_t>(i)] == VarPart::One &&
                        k.parts[static_cast<std::size_t>(j)] == VarPart::One;
        if (both_one)
            it = k.brackets.erase(it);
        else
            ++it;
    }
    return k;
}

LieAlgebra heisenberg() {
    LieAlgebra L;
    L.name = "heis3";
    L.basis_names = {"a", "b", "h"};
    L.parts = {VarPart::Zero, VarPart::Zero, VarPart::Zero};
    L.space = VarSpace::create(L.basis_names, L.parts);
    L.brackets[{0, 1}] = {{2, Rat(1)}};
    return L;
}

LieAlgebra abelian(int d) {
    if (d < 0) throw std::invalid_argument("abelian: negative dimension");
    LieAlgebra L;
    L.name = "abelian" + std::to_string(d);
    for (int i = 0; i < d; ++i) L.basis_names.push_back("a" + std::to_string(i + 1));
    L.parts.assign(static_cast<std::size_t>(d), VarPart::Zero);
    L.space = VarSpace::create(L.basis_names, L.parts);
    return L;
}

PolyMatrix generic_matrix(const LieAlgebra& L) {
    if (L.basis_matrices.empty())
        throw std::invalid_argument("generic_matrix: algebra has no matrix model");
    PolyMatrix M(L.space, L.matrix_order, L.matrix_order);
    for (int i = 0; i < L.dim(); ++i) {
        Poly xi = Poly::variable(L.space, i);
        const RatMatrix& B = L.basis_matrices[static_cast<std::size_t>(i)];
        for (int r = 0; r < L.matrix_order; ++r)
            for (int c = 0; c < L.matrix_order; ++c)
                if (!B.at(r, c).is_zero()) M.at(r, c) += xi.scaled(B.at(r, c));
    }
    return M;
}

namespace {

// Accumulates all n derivation defects of p in one sweep over the brackets,
// reusing the partial derivatives of p. kind selects the coordinate action.
std::vector<Poly> all_derivations(const LieAlgebra& L, const Poly& p, RepKind kind) {
    require_space(L.space, p.space(), "derivation");
    const int n = L.dim();
    std::vector<Poly> partials;
    partials.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) partials.push_back(p.derivative(j));

    std::vector<Poly> defects(static_cast<std::size_t>(n), Poly::zero(L.space));
    for (const auto& [key, list] : L.brackets) {
        const auto [a, b] = key;
        for (const auto& [k, c] : list) {
            if (kind == RepKind::Coadjoint) {
                // D_a(x_b) gains c * x_k and D_b(x_a) gains -c * x_k.
                if (!partials[static_cast<std::size_t>(b)].is_zero())
                    defects[static_cast<std::size_t>(a)] +=
                        (Poly::variable(L.space, k) * partials[static_cast<std::size_t>(b)]).scaled(c);
                if (!partials[static_cast<std::size_t>(a)].is_zero())
                    defects[static_cast<std::size_t>(b)] -=
                        (Poly::variable(L.space, k) * partials[static_cast<std::size_t>(a)]).scaled(c);
            } else {
                // D_a(x_k) gains c * x_b and D_b(x_k) gains -c * x_a.
                if (!partials[static_cast<std::size_t>(k)].is_zero()) {
                    defects[static_cast<std::size_t>(a)] +=
                        (Poly::variable(L.space, b) * partials[static_cast<std::size_t>(k)]).scaled(c);
                    defects[static_cast<std::size_t>(b)] -=
                        (Poly::variable(L.space, a) * partials[static_cast<std::size_t>(k)]).scaled(c);
                }
            }
        }
    }
    return defects;
}

} // namespace

Poly coadjoint_derivation(const LieAlgebra& L, int i, const Poly& p) {
    require_space(L.space, p.space(), "coadjoint_derivation");
    if (i < 0 || i >= L.dim()) throw std::out_of_range("coadjoint_derivation: basis index");
    Poly acc = Poly::zero(L.space);
    for (int j = 0; j < L.dim(); ++j) {
        Poly pj = p.derivative(j);
        if (pj.is_zero()) continue;
        Poly img = Poly::zero(L.space);
        for (const auto& [k, c] : L.bracket_of(i, j)) img += Poly::variable(L.space, k).scaled(c);
        if (!img.is_zero()) acc += img * pj;
    }
    return acc;
}

Poly adjoint_derivation(const LieAlgebra& L, int i, const Poly& p) {
    require_space(L.space, p.space(), "adjoint_derivation");
    if (i < 0 || i >= L.dim()) throw std::out_of_range("adjoint_derivation: basis index");
    Poly acc = Poly::zero(L.space);
    for (int k = 0; k < L.dim(); ++k) {
        Poly pk = p.derivative(k);
        if (pk.is_zero()) continue;
        Poly img = Poly::zero(L.space);
        for (int j = 0; j < L.dim(); ++j) {
            Rat c = L.structure_constant(i, j, k);
            if (!c.is_zero()) img += Poly::variable(L.space, j).scaled(c);
        }
        if (!img.is_zero()) acc += img * pk;
    }
    return acc;
}

InvarianceReport invariance_defect(const LieAlgebra& L, const Poly& p, RepKind rep) {
    std::vector<Poly> defects = all_derivations(L, p, rep);
    for (int i = 0; i < L.dim(); ++i)
        if (!defects[static_cast<std::size_t>(i)].is_zero())
            return {false, i, std::move(defects[static_cast<std::size_t>(i)])};
    return {true, -1, Poly::zero(L.space)};
}

bool is_invariant(const LieAlgebra& L, const Poly& p, RepKind rep) {
    return invariance_defect(L, p, rep).invariant;
}

std::optional<JacobiViolation> find_jacobi_violation(const LieAlgebra& L) {
    const int n = L.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                std::vector<Rat> acc(static_cast<std::size_t>(n), Rat(0));
                auto add_double = [&](int a, int b, int c) {
                    for (const auto& [m, cm] : L.bracket_of(a, b))
                        for (const auto& [r, cr] : L.bracket_of(m, c))
                            acc[static_cast<std::size_t>(r)] += cm * cr;
                };
                add_double(i, j, k);
                add_double(j, k, i);
                add_double(k, i, j);
                for (const auto& v : acc)
                    if (!v.is_zero()) return JacobiViolation{i, j, k, acc};
            }
    return std::nullopt;
}

bool check_jacobi(const LieAlgebra& L) { return !find_jacobi_violation(L).has_value(); }

PolyMatrix poisson_matrix(const LieAlgebra& L) {
    const int n = L.dim();
    PolyMatrix pi(L.space, n, n);
    for (const auto& [key, list] : L.brackets) {
        const auto [i, j] = key;
        Poly entry = Poly::zero(L.space);
        for (const auto& [k, c] : list) entry += Poly::variable(L.space, k).scaled(c);
        pi.at(i, j) = entry;
        pi.at(j, i) = -entry;
    }
    return pi;
}

int index_estimate(const LieAlgebra& L, int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("index_estimate: trials must be >= 1");
    PolyMatrix pi = poisson_matrix(L);
    Rng rng(seed);
    int max_rank = 0;
    for (int t = 0; t < trials; ++t) {
        std::vector<Rat> point;
        point.reserve(static_cast<std::size_t>(L.dim()));
        for (int i = 0; i < L.dim(); ++i)
            point.emplace_back(static_cast<long>(rng.int_in(-10000, 10000)));
        max_rank = std::max(max_rank, pi.evaluate(point).rank());
    }
    return L.dim() - max_rank;
}

int stabilizer_dim_at(const LieAlgebra& L, const std::vector<Rat>& point) {
    return L.dim() - poisson_matrix(L).evaluate(point).rank();
}

DimStabCheck dim_stab_formula_check(const LieAlgebra& L, const std::vector<Rat>& eta) {
    if (static_cast<int>(eta.size()) != L.dim())
        throw std::invalid_argument("dim_stab_formula_check: point dimension mismatch");
    const std::vector<int> p0 = L.part_indices(VarPart::Zero);
    const std::vector<int> p1 = L.part_indices(VarPart::One);
    for (const auto& [key, list] : L.brackets) {
        const auto [i, j] = key;
        if (L.parts[static_cast<std::size_t>(i)] == VarPart::One &&
            L.parts[static_cast<std::size_t>(j)] == VarPart::One && !list.empty())
            throw std::invalid_argument(
                "dim_stab_formula_check: algebra is not a semidirect contraction");
    }

    DimStabCheck out;
    out.lhs = stabilizer_dim_at(L, eta);

    // Action matrix Phi: rows g0, columns g1, entry = eta([e_i, e_j]).
    RatMatrix phi(static_cast<int>(p0.size()), static_cast<int>(p1.size()));
    for (std::size_t a = 0; a < p0.size(); ++a)
        for (std::size_t b = 0; b < p1.size(); ++b) {
            Rat acc(0);
            for (const auto& [k, c] : L.bracket_of(p0[a], p1[b]))
                if (L.parts[static_cast<std::size_t>(k)] == VarPart::One)
                    acc += c * eta[static_cast<std::size_t>(k)];
            phi.at(static_cast<int>(a), static_cast<int>(b)) = acc;
        }
    int rank_phi = phi.rank();
    out.orbit_codim = static_cast<int>(p1.size()) - rank_phi;

    // Stabilizer of the g1-part inside g0: left nullspace of Phi.
    std::vector<std::vector<Rat>> stab = phi.transpose().nullspace();
    out.stab0_dim = static_cast<int>(stab.size());

    // Alpha-bracket form on that stabilizer: W[a][b] = eta([e_a, e_b]) over g0,
    // then B = Z W Z^T for the nullspace basis rows Z.
    RatMatrix w(static_cast<int>(p0.size()), static_cast<int>(p0.size()));
    for (std::size_t a = 0; a < p0.size(); ++a)
        for (std::size_t b = a + 1; b < p0.size(); ++b) {
            Rat acc(0);
            for (const auto& [k, c] : L.bracket_of(p0[a], p0[b]))
                acc += c * eta[static_cast<std::size_t>(k)];
            w.at(static_cast<int>(a), static_cast<int>(b)) = acc;
            w.at(static_cast<int>(b), static_cast<int>(a)) = -acc;
        }
    RatMatrix z(out.stab0_dim, static_cast<int>(p0.size()));
    for (int s = 0; s < out.stab0_dim; ++s)
        for (std::size_t a = 0; a < p0.size(); ++a)
            z.at(s, static_cast<int>(a)) = stab[static_cast<std::size_t>(s)][a];
    RatMatrix b = z * w * z.transpose();
    out.rank_b = b.rank();

    out.rhs = out.orbit_codim + (out.stab0_dim - out.rank_b);
    out.ok = out.lhs == out.rhs;
    return out;
}

std::vector<std::string> structure_constant_lines(const LieAlgebra& L) {
    std::vector<std::string> lines;
    for (const auto& [key, list] : L.brackets) {
        const auto [i, j] = key;
        for (const auto& [k, c] : list)
            lines.push_back(std::to_string(i) + " " + std::to_string(j) + " " +
                            std::to_string(k) + " " + c.to_text());
    }
    return lines;
}

} // namespace z2c
