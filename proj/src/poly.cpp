#include <z2c/poly.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace z2c {

void require_space(const VarSpacePtr& a, const VarSpacePtr& b, const char* op) {
    if (a != b)
        throw std::invalid_argument(std::string(op) + ": operands belong to different variable spaces");
}

void Poly::require_same_space(const Poly& o, const char* op) const {
    require_space(space_, o.space_, op);
}

Poly Poly::zero(VarSpacePtr s) {
    Poly p;
    p.space_ = std::move(s);
    return p;
}

Poly Poly::constant(VarSpacePtr s, const Rat& c) {
    Poly p = zero(std::move(s));
    if (!c.is_zero()) p.terms_.emplace(Monomial::unit(p.space_->size()), c);
    return p;
}

Poly Poly::variable(VarSpacePtr s, int var) {
    if (var < 0 || var >= s->size()) throw std::out_of_range("Poly::variable: index out of range");
    Poly p = zero(std::move(s));
    Monomial m = Monomial::unit(p.space_->size());
    m.exp[static_cast<std::size_t>(var)] = 1;
    m.tot = 1;
    p.terms_.emplace(std::move(m), Rat(1));
    return p;
}

Poly Poly::variable(VarSpacePtr s, const std::string& name) {
    int idx = s->index_of(name);
    if (idx < 0) throw std::out_of_range("Poly::variable: no variable named " + name);
    return variable(std::move(s), idx);
}

Poly Poly::from_terms(VarSpacePtr s,
                      const std::vector<std::pair<std::vector<std::uint16_t>, Rat>>& terms) {
    Poly p = zero(std::move(s));
    for (const auto& [e, c] : terms) {
        if (static_cast<int>(e.size()) != p.space_->size())
            throw std::invalid_argument("Poly::from_terms: exponent vector length mismatch");
        p.add_term(Monomial::of(e), c);
    }
    return p;
}

void Poly::add_term(const Monomial& m, const Rat& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::optional<int> Poly::degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first.tot; // descending graded order: leading term is maximal
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.tot;
    return terms_.rbegin()->first.tot == d;
}

BiDegree Poly::monomial_bidegree(const Monomial& m) const {
    BiDegree b{0, 0};
    for (int i = 0; i < space_->size(); ++i) {
        int e = m.exp[static_cast<std::size_t>(i)];
        if (e == 0) continue;
        if (space_->part(i) == VarPart::One)
            b.one += e;
        else
            b.zero += e;
    }
    return b;
}

std::optional<BiDegree> Poly::bidegree() const {
    if (terms_.empty()) return BiDegree{0, 0};
    auto it = terms_.begin();
    BiDegree b = monomial_bidegree(it->first);
    for (++it; it != terms_.end(); ++it)
        if (monomial_bidegree(it->first) != b) return std::nullopt;
    return b;
}

std::vector<std::pair<BiDegree, Poly>> Poly::bihomogeneous_components() const {
    std::map<BiDegree, Poly> parts;
    for (const auto& [m, c] : terms_) {
        BiDegree b = monomial_bidegree(m);
        auto it = parts.find(b);
        if (it == parts.end()) it = parts.emplace(b, zero(space_)).first;
        it->second.terms_.emplace(m, c);
    }
    std::vector<std::pair<BiDegree, Poly>> out;
    out.reserve(parts.size());
    for (auto& [b, p] : parts) out.emplace_back(b, std::move(p));
    // BiDegree::operator< is lexicographic on (zero, one) -- see varspace.hpp --
    // so the map already delivers the documented deterministic order.
    return out;
}

int Poly::max_one_degree() const {
    int best = -1;
    for (const auto& [m, c] : terms_) {
        (void)c;
        int d = monomial_bidegree(m).one;
        if (d > best) best = d;
    }
    return best;
}

Poly Poly::top_component() const {
    if (terms_.empty()) return *this;
    int d = max_one_degree();
    Poly out = zero(space_);
    for (const auto& [m, c] : terms_)
        if (monomial_bidegree(m).one == d) out.terms_.emplace(m, c);
    return out;
}

Poly Poly::bottom_component() const {
    if (terms_.empty()) return *this;
    int d = -1;
    for (const auto& [m, c] : terms_) {
        (void)c;
        int e = monomial_bidegree(m).one;
        if (d < 0 || e < d) d = e;
    }
    Poly out = zero(space_);
    for (const auto& [m, c] : terms_)
        if (monomial_bidegree(m).one == d) out.terms_.emplace(m, c);
    return out;
}

Poly Poly::operator-() const {
    Poly out = zero(space_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Poly& Poly::operator+=(const Poly& o) {
    require_same_space(o, "Poly::operator+=");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    require_same_space(o, "Poly::operator-=");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    require_space(a.space_, b.space_, "Poly::operator*");
    Poly out = Poly::zero(a.space_);
    const std::size_t n = a.space_ ? static_cast<std::size_t>(a.space_->size()) : 0;
    Monomial prod;
    prod.exp.resize(n);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            for (std::size_t i = 0; i < n; ++i)
                prod.exp[i] = static_cast<std::uint16_t>(ma.exp[i] + mb.exp[i]);
            prod.tot = ma.tot + mb.tot;
            out.add_term(prod, ca * cb);
        }
    }
    return out;
}

Poly Poly::scaled(const Rat& c) const {
    Poly out = zero(space_);
    if (c.is_zero()) return out;
    for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
    return out;
}

Poly Poly::pow(unsigned k) const {
    Poly result = constant(space_, Rat(1));
    Poly base = *this;
    while (k > 0) {
        if (k & 1u) result = result * base;
        k >>= 1u;
        if (k > 0) base = base * base;
    }
    return result;
}

Poly Poly::derivative(int var) const {
    if (var < 0 || var >= space_->size())
        throw std::out_of_range("Poly::derivative: index out of range");
    Poly out = zero(space_);
    const auto v = static_cast<std::size_t>(var);
    for (const auto& [m, c] : terms_) {
        int e = m.exp[v];
        if (e == 0) continue;
        Monomial d = m;
        d.exp[v] = static_cast<std::uint16_t>(e - 1);
        d.tot = m.tot - 1;
        out.terms_.emplace(std::move(d), c * Rat(e));
    }
    return out;
}

Rat Poly::evaluate(const std::vector<Rat>& point) const {
    if (static_cast<int>(point.size()) != space_->size())
        throw std::invalid_argument("Poly::evaluate: point dimension mismatch");
    // Per-variable power tables up to the max exponent actually used.
    std::vector<int> maxe(point.size(), 0);
    for (const auto& [m, c] : terms_) {
        (void)c;
        for (std::size_t i = 0; i < point.size(); ++i)
            maxe[i] = std::max(maxe[i], static_cast<int>(m.exp[i]));
    }
    std::vector<std::vector<Rat>> pows(point.size());
    for (std::size_t i = 0; i < point.size(); ++i) {
        pows[i].resize(static_cast<std::size_t>(maxe[i]) + 1, Rat(1));
        for (int e = 1; e <= maxe[i]; ++e) pows[i][static_cast<std::size_t>(e)] = pows[i][static_cast<std::size_t>(e - 1)] * point[i];
    }
    Rat acc(0);
    for (const auto& [m, c] : terms_) {
        Rat t = c;
        for (std::size_t i = 0; i < point.size(); ++i)
            if (m.exp[i] != 0) t *= pows[i][m.exp[i]];
        acc += t;
    }
    return acc;
}

Poly Poly::substitute(const std::map<int, Poly>& assignment) const {
    // Determine the target space: from any image, else this space.
    VarSpacePtr target = space_;
    for (const auto& [idx, img] : assignment) {
        if (idx < 0 || idx >= space_->size())
            throw std::out_of_range("Poly::substitute: index out of range");
        if (!img.space()) throw std::invalid_argument("Poly::substitute: image without space");
        target = img.space();
        break;
    }
    for (const auto& [idx, img] : assignment)
        require_space(img.space(), target, "Poly::substitute");

    // Unassigned variables pass through by name lookup in the target space.
    std::vector<int> passthrough(static_cast<std::size_t>(space_->size()), -1);
    for (int i = 0; i < space_->size(); ++i) {
        if (assignment.count(i)) continue;
        if (target == space_) {
            passthrough[static_cast<std::size_t>(i)] = i;
        } else {
            int j = target->index_of(space_->name(i));
            passthrough[static_cast<std::size_t>(i)] = j; // may be -1; error only if used
        }
    }

    // Memoized power tables for the assigned images.
    std::map<int, std::vector<Poly>> img_pows;
    auto image_power = [&](int var, int e) -> const Poly& {
        auto& tab = img_pows[var];
        if (tab.empty()) tab.push_back(Poly::constant(target, Rat(1)));
        while (static_cast<int>(tab.size()) <= e)
            tab.push_back(tab.back() * assignment.at(var));
        return tab[static_cast<std::size_t>(e)];
    };

    Poly acc = Poly::zero(target);
    for (const auto& [m, c] : terms_) {
        Poly t = Poly::constant(target, c);
        for (int i = 0; i < space_->size(); ++i) {
            int e = m.exp[static_cast<std::size_t>(i)];
            if (e == 0) continue;
            if (assignment.count(i)) {
                t = t * image_power(i, e);
            } else {
                int j = passthrough[static_cast<std::size_t>(i)];
                if (j < 0)
                    throw std::invalid_argument("Poly::substitute: variable " + space_->name(i) +
                                                " absent from target space");
                Monomial shift = Monomial::unit(target->size());
                shift.exp[static_cast<std::size_t>(j)] = static_cast<std::uint16_t>(e);
                shift.tot = e;
                Poly mono = Poly::zero(target);
                mono.terms_.emplace(std::move(shift), Rat(1));
                t = t * mono;
            }
        }
        acc += t;
    }
    return acc;
}

std::string Poly::to_text() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a.sign() < 0) {
                os << '-';
                a = -a;
            }
        } else {
            if (a.sign() < 0) {
                os << " - ";
                a = -a;
            } else {
                os << " + ";
            }
        }
        // Build the variable part.
        std::string vars;
        for (int i = 0; i < space_->size(); ++i) {
            int e = m.exp[static_cast<std::size_t>(i)];
            if (e == 0) continue;
            if (!vars.empty()) vars += '*';
            vars += space_->name(i);
            if (e > 1) {
                vars += '^';
                vars += std::to_string(e);
            }
        }
        if (vars.empty()) {
            os << a.to_text();
        } else if (a == Rat(1)) {
            os << vars;
        } else {
            os << a.to_text() << '*' << vars;
        }
        first = false;
    }
    return os.str();
}

} // namespace z2c
