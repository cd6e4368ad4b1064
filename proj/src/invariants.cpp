#include <z2c/invariants.hpp>
#include <z2c/rng.hpp>

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace z2c {

std::string system_kind_name(SystemKind k) {
    switch (k) {
        case SystemKind::CharpolyCoeffs: return "charpoly-coeffs";
        case SystemKind::EvenCoeffsPlusPfaffian: return "even-coeffs";
        case SystemKind::PowerTraces: return "power-traces";
        case SystemKind::F4Explicit: return "f4-explicit";
    }
    return "?";
}

namespace {

const PairInfo& require_pair(const LieAlgebra& L, const char* who) {
    if (!L.pair) throw std::invalid_argument(std::string(who) + ": algebra carries no pair data");
    return *L.pair;
}

// Deterministic spread of basis directions used for spot checks.
std::vector<int> spot_directions(int dim) {
    std::set<int> s{0, dim - 1, dim / 2, dim / 3, (2 * dim) / 3, dim / 5};
    std::vector<int> out;
    for (int i : s)
        if (i >= 0 && i < dim) out.push_back(i);
    return out;
}

std::vector<Rat> random_point(Rng& rng, int dim, long bound = 10000) {
    std::vector<Rat> pt;
    pt.reserve(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) pt.emplace_back(static_cast<long>(rng.int_in(-bound, bound)));
    return pt;
}

std::string point_text(const std::vector<Rat>& pt) {
    std::ostringstream os;
    for (std::size_t i = 0; i < pt.size(); ++i) {
        if (i) os << ',';
        os << pt[i].to_text();
    }
    return os.str();
}

} // namespace

GeneratingSystem basic_invariants(const LieAlgebra& pair_algebra, SystemKind kind) {
    const PairInfo& pr = require_pair(pair_algebra, "basic_invariants");
    const int N = pr.N();
    GeneratingSystem sys;
    sys.ambient = pair_algebra;
    sys.kind = kind;

    PolyMatrix M = generic_matrix(pair_algebra);
    if (pr.family == Family::GL && kind == SystemKind::CharpolyCoeffs) {
        sys.generators = principal_minor_sums(M, N);
    } else if (pr.family == Family::SO && kind == SystemKind::EvenCoeffsPlusPfaffian) {
        const int top = N % 2 == 0 ? N - 2 : N - 1; // so(2): the Pfaffian alone generates
        std::vector<Poly> e = top >= 1 ? principal_minor_sums(M, top) : std::vector<Poly>{};
        for (int i = 1; 2 * i <= static_cast<int>(e.size()); ++i)
            sys.generators.push_back(e[static_cast<std::size_t>(2 * i - 1)]);
        if (N % 2 == 0) sys.generators.push_back(pfaffian(M));
    } else if (pr.family == Family::SO && kind == SystemKind::PowerTraces) {
        const int l = N / 2;
        PolyMatrix M2 = M * M;
        PolyMatrix P = M2;
        for (int i = 1; i <= l; ++i) {
            sys.generators.push_back(P.trace());
            if (i < l) P = P * M2;
        }
    } else {
        throw std::invalid_argument("basic_invariants: unsupported family/kind combination " +
                                    family_name(pr.family) + "/" + system_kind_name(kind));
    }

    for (const Poly& f : sys.generators)
        for (int i : spot_directions(pair_algebra.dim()))
            if (!adjoint_derivation(pair_algebra, i, f).is_zero())
                throw std::logic_error("basic_invariants: generator fails ambient invariance "
                                       "spot check in direction " +
                                       pair_algebra.basis_names[static_cast<std::size_t>(i)]);
    return sys;
}

DegenerationResult z2_degenerate(const GeneratingSystem& sys, std::uint64_t seed) {
    LieAlgebra k = contract(sys.ambient);
    DegenerationResult out;
    out.degrees_preserved = true;
    out.invariant = true;

    for (std::size_t i = 0; i < sys.generators.size(); ++i) {
        const Poly& f = sys.generators[i];
        Poly top = f.top_component();
        auto bd = top.bidegree();
        if (!bd)
            throw std::logic_error("z2_degenerate: top component is not bi-homogeneous (generator "
                                   "not homogeneous?)");
        out.bidegrees.push_back(*bd);
        if (top.degree() != f.degree()) out.degrees_preserved = false;
        if (out.invariant) {
            InvarianceReport rep = invariance_defect(k, top, RepKind::Coadjoint);
            if (!rep.invariant) {
                out.invariant = false;
                out.failed_generator = static_cast<int>(i);
                out.failed_direction = rep.direction;
            }
        }
        out.degenerated.push_back(std::move(top));
    }

    const int l = static_cast<int>(out.degenerated.size());
    Rng rng(seed);
    for (int attempt = 0; attempt < 5; ++attempt) {
        std::vector<Rat> pt = random_point(rng, k.dim());
        int r = jacobian_rank_at(out.degenerated, pt);
        out.witness_point = std::move(pt);
        out.witness_rank = r;
        out.samples_used = attempt + 1;
        if (r == l) {
            out.independent = true;
            break;
        }
    }
    return out;
}

VarSpacePtr slice_space(const PairInfo& pair) {
    // Memoized so that restrictions computed in separate calls share one space
    // and can be compared or combined.
    static std::mutex cache_mutex;
    static std::map<std::tuple<Family, int, int>, VarSpacePtr> cache;
    const auto key = std::make_tuple(pair.family, pair.n, pair.m);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    std::vector<std::string> names;
    std::vector<VarPart> parts;
    const int m = pair.m, q = pair.n - pair.m;
    if (pair.family == Family::GL) {
        for (int i = 1; i <= m; ++i) {
            names.push_back("a" + std::to_string(i));
            parts.push_back(VarPart::Zero);
        }
        for (int i = 1; i <= m; ++i) {
            names.push_back("b" + std::to_string(i));
            parts.push_back(VarPart::One);
        }
        for (int r = 1; r <= q; ++r)
            for (int c = 1; c <= q; ++c) {
                names.push_back("e" + std::to_string(r) + "_" + std::to_string(c));
                parts.push_back(VarPart::Zero);
            }
    } else {
        for (int i = 1; i <= m; ++i) {
            names.push_back("d" + std::to_string(i));
            parts.push_back(VarPart::One);
        }
        for (int r = 1; r <= q; ++r)
            for (int c = r + 1; c <= q; ++c) {
                names.push_back("e" + std::to_string(r) + "_" + std::to_string(c));
                parts.push_back(VarPart::Zero);
            }
    }
    VarSpacePtr s = VarSpace::create(std::move(names), std::move(parts));
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(key, std::move(s)).first->second;
}

Poly restrict_to_slice(const Poly& p, const LieAlgebra& pair_algebra) {
    const PairInfo& pr = require_pair(pair_algebra, "restrict_to_slice");
    require_space(p.space(), pair_algebra.space, "restrict_to_slice");
    VarSpacePtr s = slice_space(pr);
    const int N = pr.N(), m = pr.m;

    auto var = [&s](const std::string& nm) { return Poly::variable(s, nm); };
    auto zero = Poly::zero(s);

    // Entry (r, c) of the slice matrix, 0-based global indices.
    auto entry = [&](int r, int c) -> Poly {
        if (pr.family == Family::GL) {
            if (r == c && r < m) return var("a" + std::to_string(r + 1));
            if (r == c && r >= m && r < 2 * m) return var("a" + std::to_string(r - m + 1));
            if (r < m && c == r + m) return var("b" + std::to_string(r + 1));
            if (c < m && r == c + m) return -var("b" + std::to_string(c + 1));
            if (r >= 2 * m && c >= 2 * m)
                return var("e" + std::to_string(r - 2 * m + 1) + "_" + std::to_string(c - 2 * m + 1));
            return zero;
        }
        if (r < m && c == r + m) return var("d" + std::to_string(r + 1));
        if (c < m && r == c + m) return -var("d" + std::to_string(c + 1));
        if (r >= 2 * m && c >= 2 * m && r < c)
            return var("e" + std::to_string(r - 2 * m + 1) + "_" + std::to_string(c - 2 * m + 1));
        if (r >= 2 * m && c >= 2 * m && r > c)
            return -var("e" + std::to_string(c - 2 * m + 1) + "_" + std::to_string(r - 2 * m + 1));
        return zero;
    };

    std::map<int, Poly> assignment;
    if (pr.family == Family::GL) {
        int idx = 0;
        for (int r = 0; r < N; ++r)
            for (int c = 0; c < N; ++c, ++idx) assignment.emplace(idx, entry(r, c));
    } else {
        int idx = 0;
        for (int a = 0; a < N; ++a)
            for (int b = a + 1; b < N; ++b, ++idx) assignment.emplace(idx, entry(a, b));
    }
    return p.substitute(assignment);
}

namespace {

/*
 * Symbolic dependence argument via the slice: when every degeneration
 * restricts to a polynomial in the One-part slice variables alone, more
 * generators than slice One-variables cannot be independent (restriction to
 * the slice is faithful on invariants).
 */
std::optional<std::string> slice_dependence_witness(const LieAlgebra& pair_algebra,
                                                    const std::vector<Poly>& degens) {
    const PairInfo& pr = *pair_algebra.pair;
    VarSpacePtr s = slice_space(pr);
    std::vector<Poly> restricted;
    for (const Poly& f : degens) restricted.push_back(restrict_to_slice(f, pair_algebra));

    for (const Poly& r : restricted)
        for (const auto& [mon, c] : r.terms()) {
            (void)c;
            for (int v = 0; v < s->size(); ++v)
                if (mon.exp[static_cast<std::size_t>(v)] > 0 && s->part(v) == VarPart::Zero)
                    return std::nullopt; // a Zero-part slice variable occurs; no argument
        }
    const int one_vars = s->count_part(VarPart::One);
    if (static_cast<int>(degens.size()) <= one_vars) return std::nullopt;

    std::ostringstream os;
    os << "slice restrictions use only the " << one_vars
       << " One-part slice variable(s): [";
    for (std::size_t i = 0; i < restricted.size(); ++i) {
        if (i) os << "; ";
        os << restricted[i].to_text();
    }
    os << "]; " << degens.size() << " polynomials in " << one_vars
       << " variable(s) are algebraically dependent";
    return os.str();
}

} // namespace

GoodGenCheck good_gensystem_check(const LieAlgebra& pair_algebra, SystemKind kind,
                                  std::uint64_t seed) {
    GeneratingSystem sys = basic_invariants(pair_algebra, kind);
    DegenerationResult degen = z2_degenerate(sys, seed);
    return good_gensystem_assess(pair_algebra, degen);
}

GoodGenCheck good_gensystem_assess(const LieAlgebra& pair_algebra,
                                   const DegenerationResult& degen) {
    const PairInfo& pr = require_pair(pair_algebra, "good_gensystem_assess");
    GoodGenCheck out;
    out.invariant = degen.invariant;
    out.independent = degen.independent;
    out.bidegrees = degen.bidegrees;
    for (const Poly& f : degen.degenerated) out.degree_sum += f.degree().value_or(0);
    out.degree_target = (pair_algebra.dim() + pr.rank_ambient()) / 2;
    out.pass = degen.invariant && degen.independent && out.degree_sum == out.degree_target;

    if (!degen.invariant) {
        out.witness = "generator " + std::to_string(degen.failed_generator) +
                      " not invariant in direction " +
                      pair_algebra.basis_names[static_cast<std::size_t>(degen.failed_direction)];
    } else if (!degen.independent) {
        if (auto w = slice_dependence_witness(pair_algebra, degen.degenerated))
            out.witness = *w;
        else
            out.witness = "jacobian rank " + std::to_string(degen.witness_rank) + " < " +
                          std::to_string(degen.degenerated.size()) + " at " +
                          std::to_string(degen.samples_used) + " samples";
    } else if (out.degree_sum != out.degree_target) {
        out.witness = "degree sum " + std::to_string(out.degree_sum) + " != target " +
                      std::to_string(out.degree_target);
    }
    return out;
}

DegreeSumCheck degree_sum_check(const LieAlgebra& L, const std::vector<Poly>& fs, int trials,
                                std::uint64_t seed) {
    DegreeSumCheck out;
    int idx = index_estimate(L, trials, seed);
    if (static_cast<int>(fs.size()) != idx) {
        out.skipped = true;
        out.note = "list size " + std::to_string(fs.size()) + " != estimated index " +
                   std::to_string(idx);
        return out;
    }
    for (const Poly& f : fs) {
        auto d = f.degree();
        if (!d) {
            out.skipped = true;
            out.note = "zero polynomial in the list";
            return out;
        }
        out.sum += *d;
    }
    out.bound = (L.dim() + idx) / 2;
    out.pass = out.sum >= out.bound;
    out.equality = out.sum == out.bound;
    return out;
}

BidegreeBoundCheck bidegree_bound_check(const LieAlgebra& pair_algebra,
                                        const std::vector<BiDegree>& bidegrees) {
    const PairInfo& pr = require_pair(pair_algebra, "bidegree_bound_check");
    const int q = pr.n - pr.m;
    int dim_s = 0, rk_s = 0;
    if (pr.family == Family::GL) {
        dim_s = q * q + pr.m; // gl(n-m) plus an m-torus
        rk_s = q + pr.m;
    } else {
        dim_s = q * (q - 1) / 2; // so(n-m)
        rk_s = q / 2;
    }
    BidegreeBoundCheck out;
    out.bound = BiDegree{(dim_s + rk_s) / 2, pair_algebra.space->count_part(VarPart::One)};
    for (const BiDegree& b : bidegrees) {
        out.sum.zero += b.zero;
        out.sum.one += b.one;
    }
    out.pass = out.sum.dominates(out.bound);
    out.equality = out.sum == out.bound;
    return out;
}

TableRow table_expected(const std::string& family, int n, int m) {
    if (n < m || m < 1) throw std::invalid_argument("table_expected: need n >= m >= 1");
    TableRow row;
    if (family == "gl") {
        row.status = TableStatus::Covered;
        for (int i = 1; i <= n + m; ++i) {
            if (i > 2 * m)
                row.bidegrees.push_back({i - 2 * m, 2 * m});
            else if (i % 2 == 0)
                row.bidegrees.push_back({0, i});
            else
                row.bidegrees.push_back({1, i - 1});
        }
        return row;
    }
    if (family == "so") {
        if (!(n > m + 2 && (n + m) % 2 == 1)) {
            row.status = TableStatus::NotCovered;
            return row;
        }
        row.status = TableStatus::Covered;
        const int l = (n + m - 1) / 2;
        for (int i = 1; i <= l; ++i) {
            if (i <= m)
                row.bidegrees.push_back({0, 2 * i});
            else
                row.bidegrees.push_back({2 * (i - m), 2 * m});
        }
        return row;
    }
    if (family == "sp") {
        row.status = TableStatus::Conjectural;
        return row;
    }
    throw std::invalid_argument("table_expected: unknown family " + family);
}

namespace {

int shuffle_sign(const std::vector<int>& head, const std::vector<int>& tail) {
    std::vector<int> seq = head;
    seq.insert(seq.end(), tail.begin(), tail.end());
    int inv = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] > seq[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

std::vector<int> sample_subset(Rng& rng, int n, int r) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
    for (int t = 0; t < r; ++t) {
        int j = static_cast<int>(rng.int_in(t, n - 1));
        std::swap(v[static_cast<std::size_t>(t)], v[static_cast<std::size_t>(j)]);
    }
    std::vector<int> out(v.begin(), v.begin() + r);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> complement_of(const std::vector<int>& idx, int n) {
    std::vector<bool> in(static_cast<std::size_t>(n), false);
    for (int i : idx) in[static_cast<std::size_t>(i)] = true;
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (!in[static_cast<std::size_t>(i)]) out.push_back(i);
    return out;
}

std::string subset_text(const std::vector<int>& idx) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) os << ',';
        os << idx[i];
    }
    os << '}';
    return os.str();
}

} // namespace

MinorCrossCheck minor_cross_identity_check(const LieAlgebra& contraction,
                                           const std::vector<Poly>& gens, int num_points,
                                           int num_pairs, std::uint64_t seed) {
    const int n = contraction.dim();
    const int l = static_cast<int>(gens.size());
    const int r = n - l;
    if (r < 0 || r % 2 != 0)
        throw std::invalid_argument("minor_cross_identity_check: dim - #generators must be even "
                                    "and nonnegative");
    PolyMatrix pi = poisson_matrix(contraction);
    Rng rng(seed);

    std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs;
    for (int t = 0; t < num_pairs; ++t)
        pairs.emplace_back(sample_subset(rng, n, r), sample_subset(rng, n, r));

    // Signed Jacobian minor on the columns complementary to I.
    auto signed_minor = [&](const RatMatrix& jac, const std::vector<int>& idx) {
        std::vector<int> comp = complement_of(idx, n);
        RatMatrix sub(l, l);
        for (int rr = 0; rr < l; ++rr)
            for (int cc = 0; cc < l; ++cc) sub.at(rr, cc) = jac.at(rr, comp[static_cast<std::size_t>(cc)]);
        Rat d = determinant(sub);
        return shuffle_sign(comp, idx) < 0 ? -d : d;
    };

    MinorCrossCheck out;
    out.pass = true;
    for (int p = 0; p < num_points; ++p) {
        std::vector<Rat> pt = random_point(rng, n);
        RatMatrix pi_at = pi.evaluate(pt);
        RatMatrix jac = jacobian_at(gens, pt);
        ++out.points_checked;
        for (const auto& [I, J] : pairs) {
            if (p == 0) ++out.pairs_checked;
            Rat lhs = signed_minor(jac, I) * pfaffian(pi_at.submatrix(J));
            Rat rhs = signed_minor(jac, J) * pfaffian(pi_at.submatrix(I));
            if (lhs != rhs) {
                out.pass = false;
                out.witness = "I=" + subset_text(I) + " J=" + subset_text(J) + " at point (" +
                              point_text(pt) + "): " + lhs.to_text() + " != " + rhs.to_text();
                return out;
            }
        }
    }
    return out;
}

} // namespace z2c
