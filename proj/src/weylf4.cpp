#include <z2c/weylf4.hpp>

#include <z2c/rng.hpp>

#include <map>
#include <stdexcept>

namespace z2c {

VarSpacePtr f4_weight_space() {
    static VarSpacePtr s = VarSpace::create(
        {"e1", "e2", "e3", "e4"},
        {VarPart::One, VarPart::Zero, VarPart::Zero, VarPart::Zero});
    return s;
}

std::vector<std::vector<Rat>> f4_simple_roots() {
    const Rat h(1, 2);
    return {{h, -h, -h, -h}, {Rat(0), Rat(0), Rat(0), Rat(1)},
            {Rat(0), Rat(0), Rat(1), Rat(-1)}, {Rat(0), Rat(1), Rat(-1), Rat(0)}};
}

RatMatrix reflection_matrix(const std::vector<Rat>& root) {
    const int d = static_cast<int>(root.size());
    Rat norm;
    for (const Rat& a : root) norm += a * a;
    if (norm.is_zero()) throw std::invalid_argument("reflection_matrix: zero root");
    RatMatrix M = RatMatrix::identity(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            M.at(i, j) -= Rat(2) * root[static_cast<std::size_t>(i)] *
                          root[static_cast<std::size_t>(j)] / norm;
    return M;
}

std::vector<RatMatrix> f4_simple_reflections() {
    std::vector<RatMatrix> out;
    for (const auto& a : f4_simple_roots()) out.push_back(reflection_matrix(a));
    return out;
}

Poly apply_linear(const Poly& p, const RatMatrix& M) {
    const VarSpacePtr& s = p.space();
    if (M.rows() != s->size() || M.cols() != s->size())
        throw std::invalid_argument("apply_linear: matrix size does not match variable count");
    std::map<int, Poly> assignment;
    for (int i = 0; i < s->size(); ++i) {
        Poly img = Poly::zero(s);
        for (int j = 0; j < s->size(); ++j)
            if (!M.at(i, j).is_zero()) img += Poly::variable(s, j).scaled(M.at(i, j));
        assignment.emplace(i, std::move(img));
    }
    return p.substitute(assignment);
}

D4Invariants d4_basic_invariants() {
    VarSpacePtr s = f4_weight_space();
    std::vector<Poly> e;
    for (int i = 0; i < 4; ++i) e.push_back(Poly::variable(s, i));
    D4Invariants out{Poly::zero(s), e[0] * e[1] * e[2] * e[3], Poly::zero(s), Poly::zero(s)};
    for (int i = 0; i < 4; ++i) out.f2 += e[i] * e[i];
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) out.f4 += e[i] * e[i] * e[j] * e[j];
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int k = j + 1; k < 4; ++k) out.f6 += e[i] * e[i] * e[j] * e[j] * e[k] * e[k];
    return out;
}

F4Generators f4_good_generators() {
    D4Invariants d = d4_basic_invariants();
    F4Generators g{d.f2, Poly::zero(d.f2.space()), Poly::zero(d.f2.space()),
                   Poly::zero(d.f2.space())};
    g.g6 = d.f6 - (d.f2 * d.f4).scaled(Rat(1, 6));
    g.g8 = d.f4p * d.f4p + (d.f4 * d.f4).scaled(Rat(1, 12)) - (d.f2 * d.f6).scaled(Rat(1, 4));
    g.g12 = (d.f4p * d.f4p * d.f4).scaled(Rat(4)) - (d.f6 * d.f6).scaled(Rat(3, 2)) -
            (d.f4p * d.f4p * d.f2 * d.f2).scaled(Rat(3, 2)) -
            (d.f4 * d.f4 * d.f4).scaled(Rat(1, 9)) + (d.f2 * d.f4 * d.f6).scaled(Rat(1, 2));
    return g;
}

namespace {

std::vector<Poly> expected_tops() {
    VarSpacePtr s = f4_weight_space();
    Poly e1 = Poly::variable(s, 0);
    // Symmetric functions of the squares of e2, e3, e4.
    Poly w = Poly::zero(s), q = Poly::zero(s);
    for (int i = 1; i < 4; ++i) w += Poly::variable(s, i) * Poly::variable(s, i);
    for (int i = 1; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            q += Poly::variable(s, i) * Poly::variable(s, i) * Poly::variable(s, j) *
                 Poly::variable(s, j);
    Poly r = Poly::constant(s, Rat(1));
    for (int i = 1; i < 4; ++i) r *= Poly::variable(s, i) * Poly::variable(s, i);

    Poly e1_2 = e1 * e1;
    Poly e1_4 = e1_2 * e1_2;
    Poly e1_6 = e1_4 * e1_2;
    return {
        e1_2,
        (e1_4 * w).scaled(Rat(-1, 6)),
        e1_4 * (q.scaled(Rat(-1, 4)) + (w * w).scaled(Rat(1, 12))),
        e1_6 * (r.scaled(Rat(-3, 2)) - (w * w * w).scaled(Rat(1, 9)) + (w * q).scaled(Rat(1, 2))),
    };
}

} // namespace

F4Verify f4_verify(std::uint64_t seed) {
    F4Verify out;
    VarSpacePtr s = f4_weight_space();
    std::vector<RatMatrix> refl = f4_simple_reflections();
    D4Invariants d = d4_basic_invariants();
    F4Generators gen = f4_good_generators();
    const std::vector<Poly> gs{gen.g2, gen.g6, gen.g8, gen.g12};
    const char* names[] = {"g2", "g6", "g8", "g12"};

    auto fail = [&out](const std::string& msg) {
        if (out.witness.empty()) out.witness = msg;
    };

    // (a) reflection sanity: involutions, norm form preserved, frozen images.
    out.reflections_ok = true;
    RatMatrix id = RatMatrix::identity(4);
    for (std::size_t i = 0; i < refl.size(); ++i) {
        if (!(refl[i] * refl[i] == id)) {
            out.reflections_ok = false;
            fail("reflection " + std::to_string(i + 1) + " is not an involution");
        }
        if (apply_linear(d.f2, refl[i]) != d.f2) {
            out.reflections_ok = false;
            fail("reflection " + std::to_string(i + 1) + " does not preserve the norm form");
        }
    }
    {
        // Images of the first basis vector under s1 and of e4 under s2.
        std::vector<Rat> v1{refl[0].at(0, 0), refl[0].at(1, 0), refl[0].at(2, 0), refl[0].at(3, 0)};
        const Rat h(1, 2);
        if (!(v1 == std::vector<Rat>{h, h, h, h})) {
            out.reflections_ok = false;
            fail("first reflection sends the first basis vector to an unexpected image");
        }
        if (!(refl[1].at(3, 3) == Rat(-1) && refl[1].at(0, 0) == Rat(1) &&
              refl[1].at(1, 1) == Rat(1) && refl[1].at(2, 2) == Rat(1))) {
            out.reflections_ok = false;
            fail("second reflection is not the expected sign flip");
        }
        if (!(refl[3].at(1, 2) == Rat(1) && refl[3].at(2, 1) == Rat(1) &&
              refl[3].at(0, 0) == Rat(1) && refl[3].at(3, 3) == Rat(1))) {
            out.reflections_ok = false;
            fail("fourth reflection is not the expected transposition");
        }
    }

    // (b) invariance under the four generators, then a redundant sweep over
    // all words of length <= 3.
    out.invariance_ok = true;
    for (std::size_t gi = 0; gi < gs.size() && out.invariance_ok; ++gi)
        for (std::size_t ri = 0; ri < refl.size(); ++ri)
            if (apply_linear(gs[gi], refl[ri]) != gs[gi]) {
                out.invariance_ok = false;
                fail(std::string(names[gi]) + " not fixed by simple reflection " +
                     std::to_string(ri + 1));
                break;
            }
    if (out.invariance_ok) {
        // Distinct group elements among words of length 2 and 3 (length 1 is
        // covered above; squares of the involutions collapse to the identity).
        auto key = [](const RatMatrix& M) {
            std::string k;
            for (int i = 0; i < M.rows(); ++i)
                for (int j = 0; j < M.cols(); ++j) k += M.at(i, j).to_text() + ",";
            return k;
        };
        std::map<std::string, RatMatrix> distinct;
        distinct.emplace(key(id), id);
        for (const RatMatrix& r : refl) distinct.emplace(key(r), r);
        std::vector<RatMatrix> frontier{refl};
        for (int len = 2; len <= 3; ++len) {
            std::vector<RatMatrix> next;
            for (const RatMatrix& w : frontier)
                for (const RatMatrix& r : refl) {
                    RatMatrix prod = w * r;
                    if (distinct.emplace(key(prod), prod).second) next.push_back(std::move(prod));
                }
            frontier = std::move(next);
        }
        distinct.erase(key(id));
        for (const RatMatrix& r : refl) distinct.erase(key(r));
        for (const auto& [k, w] : distinct) {
            (void)k;
            for (std::size_t gi = 0; gi < gs.size() && out.invariance_ok; ++gi)
                if (apply_linear(gs[gi], w) != gs[gi]) {
                    out.invariance_ok = false;
                    fail(std::string(names[gi]) + " not fixed by a short word in the reflections");
                }
            if (!out.invariance_ok) break;
        }
    }

    // (c) frozen highest components with respect to e1.
    std::vector<Poly> tops;
    for (const Poly& g : gs) tops.push_back(g.top_component());
    std::vector<Poly> expected = expected_tops();
    out.tops_ok = true;
    for (std::size_t i = 0; i < tops.size(); ++i)
        if (tops[i] != expected[i]) {
            out.tops_ok = false;
            fail(std::string(names[i]) + " top component mismatch: computed " +
                 tops[i].to_text());
        }

    // (d) independence of the tops at a random point.
    Rng rng(seed);
    out.independent = false;
    for (int attempt = 0; attempt < 5 && !out.independent; ++attempt) {
        std::vector<Rat> pt;
        for (int i = 0; i < 4; ++i) pt.emplace_back(static_cast<long>(rng.int_in(-100, 100)));
        if (jacobian_rank_at(tops, pt) == 4) out.independent = true;
    }
    if (!out.independent) fail("top components not independent at 5 sample points");

    // (e) bidegrees and the component-wise degree-sum bound for the pair with
    // slice data dim s = 21, rk s = 3 and sixteen-dimensional odd part.
    const std::vector<BiDegree> want{{0, 2}, {2, 4}, {4, 4}, {6, 6}};
    for (const Poly& t : tops) {
        auto bd = t.bidegree();
        out.bidegrees.push_back(bd ? *bd : BiDegree{-1, -1});
    }
    out.bidegrees_ok = out.bidegrees == want;
    if (!out.bidegrees_ok) fail("bidegree list mismatch");
    BiDegree sum{0, 0};
    for (const BiDegree& b : out.bidegrees) {
        sum.zero += b.zero;
        sum.one += b.one;
    }
    const BiDegree bound{(21 + 3) / 2, 16};
    out.bound_ok = sum.dominates(bound) && sum == bound;
    if (!out.bound_ok) fail("degree-sum bound mismatch: sum " + sum.to_text());

    out.pass = out.reflections_ok && out.invariance_ok && out.tops_ok && out.independent &&
               out.bidegrees_ok && out.bound_ok;
    return out;
}

} // namespace z2c
