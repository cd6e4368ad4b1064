#include <z2c/nregular.hpp>

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace z2c {

int Partition::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::to_text() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ',';
        os << parts[i];
    }
    os << ')';
    return os.str();
}

namespace {

void enumerate(int remaining, int max_part, Partition& acc, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(acc);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.parts.push_back(p);
        enumerate(remaining - p, p, acc, out);
        acc.parts.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int N) {
    if (N < 0) throw std::invalid_argument("partitions_of: negative argument");
    std::vector<Partition> out;
    Partition acc;
    enumerate(N, N == 0 ? 1 : N, acc, out);
    return out;
}

Partition dual_partition(const Partition& p) {
    Partition d;
    if (p.parts.empty()) return d;
    for (int i = 1; i <= p.parts.front(); ++i) {
        int count = 0;
        for (int part : p.parts)
            if (part >= i) ++count;
        d.parts.push_back(count);
    }
    return d;
}

int centralizer_dim_from_partition(const Partition& p) {
    int sum = 0;
    for (int d : dual_partition(p).parts) sum += d * d;
    return sum;
}

RatMatrix nilpotent_from_partition(const Partition& p) {
    const int N = p.total();
    RatMatrix M(N, N);
    int offset = 0;
    for (int part : p.parts) {
        for (int i = 0; i + 1 < part; ++i) M.at(offset + i, offset + i + 1) = Rat(1);
        offset += part;
    }
    return M;
}

int ad_centralizer_dim(const RatMatrix& M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("ad_centralizer_dim: square matrix required");
    const int N = M.rows();
    // Column (r,c): the commutator [E_rc, M]... rows index the entry (i,j) of
    // M*E_rc - E_rc*M = the image of E_rc under y -> [M, y].
    RatMatrix K(N * N, N * N);
    for (int r = 0; r < N; ++r)
        for (int c = 0; c < N; ++c) {
            const int col = r * N + c;
            for (int i = 0; i < N; ++i) K.at(i * N + c, col) += M.at(i, r);
            for (int j = 0; j < N; ++j) K.at(r * N + j, col) -= M.at(c, j);
        }
    return N * N - K.rank();
}

UslovieCheck uslovie_check(const Partition& p) {
    if (p.parts.empty()) throw std::invalid_argument("uslovie_check: empty partition");
    const int total = p.total();
    if (total % 2 != 0) throw std::invalid_argument("uslovie_check: partition of an odd number");
    const Partition dual = dual_partition(p);
    const int s = static_cast<int>(dual.parts.size()); // = largest part of p
    const int eta1 = p.parts.front();

    UslovieCheck out;
    out.lhs = Rat(centralizer_dim_from_partition(p), 2) + Rat((eta1 - 1) / 2) - Rat(total) + Rat(1);
    Rat sq;
    for (int d : dual.parts) sq += Rat(d - 1) * Rat(d - 1);
    out.rhs = sq / Rat(2) + Rat((s + 1) / 2) - Rat(s, 2);
    out.pass = out.lhs == out.rhs && out.rhs.sign() >= 0;
    return out;
}

namespace {

// Split the generic matrix of a gl(n,n) pair into diagonal-block and
// off-diagonal-block halves.
std::pair<PolyMatrix, PolyMatrix> split_generic(const LieAlgebra& pair_algebra) {
    PolyMatrix M = generic_matrix(pair_algebra);
    const int N = M.rows();
    PolyMatrix M0(pair_algebra.space, N, N), M1(pair_algebra.space, N, N);
    for (int r = 0; r < N; ++r)
        for (int c = 0; c < N; ++c) {
            if (pair_algebra.space->part(r * N + c) == VarPart::Zero)
                M0.at(r, c) = M.at(r, c);
            else
                M1.at(r, c) = M.at(r, c);
        }
    return {std::move(M0), std::move(M1)};
}

} // namespace

NRegularSystem nregular_generators(int n, int cap) {
    if (n < 1) throw std::invalid_argument("nregular_generators: need n >= 1");
    if (n > cap)
        throw std::invalid_argument("nregular_generators: n = " + std::to_string(n) +
                                    " exceeds cap " + std::to_string(cap));
    NRegularSystem sys;
    sys.pair = build_symmetric_pair(Family::GL, n, n);
    auto [M0, M1] = split_generic(sys.pair);
    PolyMatrix M1sq = M1 * M1;

    PolyMatrix even = M1sq;               // M1^(2i)
    PolyMatrix lower = PolyMatrix::identity(sys.pair.space, M1.rows()); // M1^(2i-2)
    for (int i = 1; i <= n; ++i) {
        sys.barred.push_back(even.trace());
        sys.hatted.push_back((M0 * lower).trace());
        if (i < n) {
            even = even * M1sq;
            lower = lower * M1sq;
        }
    }

    LieAlgebra k = contract(sys.pair);
    for (const std::vector<Poly>* list : {&sys.barred, &sys.hatted})
        for (const Poly& f : *list) {
            InvarianceReport rep = invariance_defect(k, f, RepKind::Coadjoint);
            if (!rep.invariant)
                throw std::logic_error("nregular_generators: generator not invariant in direction " +
                                       k.basis_names[static_cast<std::size_t>(rep.direction)]);
        }
    return sys;
}

std::vector<Rat> regular_nilpotent_in_g1(int n) {
    if (n < 1) throw std::invalid_argument("regular_nilpotent_in_g1: need n >= 1");
    const int N = 2 * n;
    RatMatrix X(N, N);
    for (int r = 0; r + 1 < n; ++r) X.at(r, n + r + 1) = Rat(1); // upper-right Jordan block
    for (int r = 0; r < n; ++r) X.at(n + r, r) = Rat(1);         // lower-left identity
    if (ad_centralizer_dim(X) != N)
        throw std::logic_error("regular_nilpotent_in_g1: point failed the regularity certificate");
    std::vector<Rat> point;
    point.reserve(static_cast<std::size_t>(N * N));
    for (int r = 0; r < N; ++r)
        for (int c = 0; c < N; ++c) point.push_back(X.at(r, c));
    return point;
}

SpanCheck centralizer_span_check(const LieAlgebra& pair_algebra, const std::vector<Rat>& point) {
    if (!pair_algebra.pair || pair_algebra.pair->family != Family::GL ||
        pair_algebra.pair->n != pair_algebra.pair->m)
        throw std::invalid_argument("centralizer_span_check: gl(n,n) pair required");
    const int n = pair_algebra.pair->n;
    const int N = 2 * n;
    if (static_cast<int>(point.size()) != pair_algebra.dim())
        throw std::invalid_argument("centralizer_span_check: point has wrong length");

    RatMatrix X(N, N);
    for (int r = 0; r < N; ++r)
        for (int c = 0; c < N; ++c)
            if ((r < n) != (c < n)) X.at(r, c) = point[static_cast<std::size_t>(r * N + c)];

    SpanCheck out;
    if (ad_centralizer_dim(X) != N) {
        out.skipped = true;
        out.note = "point is not regular (centralizer dimension != " + std::to_string(N) + ")";
        return out;
    }

    // Indices of diagonal-block (domain) and off-block (target) coordinates.
    std::vector<int> zero_idx = pair_algebra.part_indices(VarPart::Zero);
    std::vector<int> one_idx = pair_algebra.part_indices(VarPart::One);
    std::vector<int> pos(static_cast<std::size_t>(N * N), -1);
    for (std::size_t t = 0; t < zero_idx.size(); ++t) pos[static_cast<std::size_t>(zero_idx[t])] = static_cast<int>(t);

    // Action map y -> [y, X] from the diagonal blocks to the off blocks.
    RatMatrix T(static_cast<int>(one_idx.size()), static_cast<int>(zero_idx.size()));
    for (std::size_t col = 0; col < zero_idx.size(); ++col) {
        const int r = zero_idx[col] / N, c = zero_idx[col] % N;
        // [E_rc, X] entry (i,j) = delta_{i,r} X_{c,j} - X_{i,r} delta_{c,j}
        for (std::size_t row = 0; row < one_idx.size(); ++row) {
            const int i = one_idx[row] / N, j = one_idx[row] % N;
            Rat v;
            if (i == r) v += X.at(c, j);
            if (c == j) v -= X.at(i, r);
            T.at(static_cast<int>(row), static_cast<int>(col)) = v;
        }
    }
    std::vector<std::vector<Rat>> kernel = T.nullspace();
    out.null_dim = static_cast<int>(kernel.size());

    // Covariant vectors: diagonal-block parts of X^(2i-2), i = 1..n.
    std::vector<std::vector<Rat>> covs;
    RatMatrix P = RatMatrix::identity(N);
    for (int i = 1; i <= n; ++i) {
        std::vector<Rat> w(zero_idx.size());
        for (std::size_t t = 0; t < zero_idx.size(); ++t)
            w[t] = P.at(zero_idx[t] / N, zero_idx[t] % N);
        covs.push_back(std::move(w));
        if (i < n) P = P * X * X;
    }

    RatMatrix W(static_cast<int>(covs.size()), static_cast<int>(zero_idx.size()));
    for (std::size_t r = 0; r < covs.size(); ++r)
        for (std::size_t c = 0; c < covs[r].size(); ++c)
            W.at(static_cast<int>(r), static_cast<int>(c)) = covs[r][c];
    out.span_dim = W.rank();
    out.contained = true;
    for (const auto& w : covs)
        if (!in_span(kernel, w)) {
            out.contained = false;
            break;
        }
    out.pass = out.contained && out.span_dim == out.null_dim;
    std::ostringstream os;
    os << "span dim " << out.span_dim << ", kernel dim " << out.null_dim
       << (out.contained ? ", contained" : ", not contained");
    out.note = os.str();
    return out;
}

} // namespace z2c
