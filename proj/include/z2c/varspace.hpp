#ifndef Z2C_VARSPACE_HPP
#define Z2C_VARSPACE_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace z2c {

// Z2 label of a variable (and of a Lie algebra basis vector): which graded part
// it belongs to. A plain ungraded algebra labels everything Zero.
enum class VarPart : std::uint8_t { Zero = 0, One = 1 };

/*
 * Bi-degree of a monomial/polynomial: (degree in the Zero-part variables,
 * degree in the One-part variables). Total degree is the sum of the two.
 */
struct BiDegree {
    int zero = 0;
    int one = 0;

    friend bool operator==(const BiDegree& a, const BiDegree& b) {
        return a.zero == b.zero && a.one == b.one;
    }
    friend bool operator!=(const BiDegree& a, const BiDegree& b) { return !(a == b); }
    // Lexicographic; used only to keep component listings deterministic.
    friend bool operator<(const BiDegree& a, const BiDegree& b) {
        if (a.zero != b.zero) return a.zero < b.zero;
        return a.one < b.one;
    }
    // Componentwise comparison for the lower-bound checks.
    bool dominates(const BiDegree& b) const { return zero >= b.zero && one >= b.one; }

    std::string to_text() const {
        return "(" + std::to_string(zero) + "," + std::to_string(one) + ")";
    }
};

/*
 * Shared variable context for polynomials. A VarSpace fixes the variable
 * identifiers, their order (which determines the graded-lex term order and the
 * canonical printing order) and their Z2 part labels. Polynomials hold a
 * shared_ptr to their space; operations mixing spaces are rejected.
 */
class VarSpace {
public:
    static std::shared_ptr<const VarSpace> create(std::vector<std::string> names,
                                                  std::vector<VarPart> parts) {
        if (names.size() != parts.size())
            throw std::invalid_argument("VarSpace: names/parts size mismatch");
        return std::shared_ptr<const VarSpace>(new VarSpace(std::move(names), std::move(parts)));
    }

    // Convenience: every variable in the Zero part.
    static std::shared_ptr<const VarSpace> create(std::vector<std::string> names) {
        std::vector<VarPart> parts(names.size(), VarPart::Zero);
        return create(std::move(names), std::move(parts));
    }

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
    VarPart part(int i) const { return parts_.at(static_cast<std::size_t>(i)); }

    // Index of a variable id, or -1 when absent.
    int index_of(const std::string& nm) const {
        auto it = index_.find(nm);
        return it == index_.end() ? -1 : it->second;
    }

    int count_part(VarPart p) const {
        int c = 0;
        for (VarPart q : parts_)
            if (q == p) ++c;
        return c;
    }

private:
    VarSpace(std::vector<std::string> names, std::vector<VarPart> parts)
        : names_(std::move(names)), parts_(std::move(parts)) {
        for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
            auto [it, fresh] = index_.emplace(names_[static_cast<std::size_t>(i)], i);
            (void)it;
            if (!fresh) throw std::invalid_argument("VarSpace: duplicate variable id " +
                                                    names_[static_cast<std::size_t>(i)]);
        }
    }

    std::vector<std::string> names_;
    std::vector<VarPart> parts_;
    std::unordered_map<std::string, int> index_;
};

using VarSpacePtr = std::shared_ptr<const VarSpace>;

} // namespace z2c

#endif // Z2C_VARSPACE_HPP
