#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tspread {

using BigInt = boost::multiprecision::cpp_int;

/// Ambient parameters: the polynomial ring K[x_1..x_n] and the spread t.
struct Context {
    int n = 1;
    int t = 0;

    Context() = default;
    Context(int n_vars, int spread);

    friend bool operator==(const Context&, const Context&) = default;
};

/// A squarefree monomial x_{i_1} ... x_{i_d} stored as its strictly increasing
/// index list. The empty list is the monomial 1.
class Monomial {
public:
    Monomial() = default;
    /// Throws InvalidMonomial unless the indices are positive and strictly increasing.
    explicit Monomial(std::vector<int> indices);
    Monomial(std::initializer_list<int> indices);

    [[nodiscard]] int degree() const { return static_cast<int>(indices_.size()); }
    [[nodiscard]] bool is_one() const { return indices_.empty(); }
    [[nodiscard]] const std::vector<int>& indices() const { return indices_; }
    [[nodiscard]] int operator[](std::size_t pos) const { return indices_[pos]; }

    [[nodiscard]] auto begin() const { return indices_.begin(); }
    [[nodiscard]] auto end() const { return indices_.end(); }

    /// True iff every index of this monomial also occurs in `other`.
    [[nodiscard]] bool divides(const Monomial& other) const;
    [[nodiscard]] bool contains_index(int i) const;

    /// First `len` indices.
    [[nodiscard]] Monomial prefix(int len) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    /// Plain lexicographic order of the index lists (NOT slex, which is reversed).
    friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.indices_ <=> b.indices_; }

private:
    struct Unchecked {};
    Monomial(Unchecked, std::vector<int> indices) : indices_(std::move(indices)) {}
    friend Monomial make_monomial_unchecked(std::vector<int> indices);

    std::vector<int> indices_;
};

/// For hot loops whose output is sorted by construction.
Monomial make_monomial_unchecked(std::vector<int> indices);

struct MonomialHash {
    std::size_t operator()(const Monomial& u) const noexcept;
};

/// max(u); 0 for the monomial 1.
int max_index(const Monomial& u);
/// min(u); 0 for the monomial 1.
int min_index(const Monomial& u);
std::vector<int> support(const Monomial& u);

/// Throws InvalidMonomial if some index exceeds ctx.n.
void validate(const Monomial& u, const Context& ctx);

/// True iff consecutive index gaps are all >= t.
bool is_t_spread(const Monomial& u, const Context& ctx);

/// Squarefree lexicographic comparison within one degree. `greater` means u >_slex v,
/// i.e. at the first differing position u has the smaller index.
/// Throws DegreeMismatch on different degrees.
std::strong_ordering slex_cmp(const Monomial& u, const Monomial& v);

/// Strict "u >_slex v" usable as a sort predicate for slex-descending order.
struct SlexGreater {
    bool operator()(const Monomial& u, const Monomial& v) const { return u.indices() < v.indices(); }
};

/// Distinct monomials of a single degree, sorted slex-descending.
class MonomialSet {
public:
    MonomialSet() = default;
    explicit MonomialSet(int degree) : degree_(degree) {}
    /// Sorts and deduplicates. Throws DegreeMismatch if degrees differ.
    MonomialSet(int degree, std::vector<Monomial> members);
    /// Trusts the caller: members already distinct, of this degree, slex-descending.
    static MonomialSet from_sorted(int degree, std::vector<Monomial> members);

    [[nodiscard]] int degree() const { return degree_; }
    [[nodiscard]] const std::vector<Monomial>& members() const { return members_; }
    [[nodiscard]] std::size_t size() const { return members_.size(); }
    [[nodiscard]] bool empty() const { return members_.empty(); }
    [[nodiscard]] auto begin() const { return members_.begin(); }
    [[nodiscard]] auto end() const { return members_.end(); }

    /// slex-maximum / slex-minimum; undefined on an empty set.
    [[nodiscard]] const Monomial& max() const { return members_.front(); }
    [[nodiscard]] const Monomial& min() const { return members_.back(); }

    [[nodiscard]] bool contains(const Monomial& u) const;

    friend bool operator==(const MonomialSet&, const MonomialSet&) = default;

private:
    int degree_ = 0;
    std::vector<Monomial> members_;
};

/// Binomial coefficient with binom(a, b) = 0 for b > a or b < 0.
BigInt binomial(int a, int b);
/// Same, in 64 bits; throws std::overflow_error if it does not fit.
std::uint64_t binomial_u64(int a, int b);

/// |M_{n,d,t}| by the closed form binom(n - (d-1)(t-1), d).
std::uint64_t spread_count(const Context& ctx, int d);

/// All t-spread monomials of degree d in slex-descending order.
MonomialSet enumerate(const Context& ctx, int d);

/// x_1 x_{1+t} ... x_{1+(d-1)t}, the slex-largest element of M_{n,d,t} (not range-checked).
Monomial greatest_spread_monomial(int d, int t);

/// Parses `x2*x5*x14` (whitespace-insensitive) or `1`.
Monomial parse_monomial(std::string_view text);
/// Comma-separated list of monomials.
std::vector<Monomial> parse_monomial_list(std::string_view text);
std::string format_monomial(const Monomial& u);

}  // namespace tspread
