#include "tspread/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>

#include "tspread/error.hpp"

namespace tspread {

Context::Context(int n_vars, int spread) : n(n_vars), t(spread) {
    if (n_vars < 1) {
        throw Error("context: number of variables must be >= 1, got " + std::to_string(n_vars));
    }
    if (spread < 0) {
        throw Error("context: spread must be >= 0, got " + std::to_string(spread));
    }
}

Monomial::Monomial(std::vector<int> indices) : indices_(std::move(indices)) {
    for (std::size_t pos = 0; pos < indices_.size(); ++pos) {
        if (indices_[pos] < 1) {
            throw InvalidMonomial("monomial index must be >= 1, got " + std::to_string(indices_[pos]));
        }
        if (pos > 0 && indices_[pos] <= indices_[pos - 1]) {
            throw InvalidMonomial("monomial indices must be strictly increasing (repeated variables are not supported)");
        }
    }
}

Monomial::Monomial(std::initializer_list<int> indices) : Monomial(std::vector<int>(indices)) {}

Monomial make_monomial_unchecked(std::vector<int> indices) {
    return Monomial(Monomial::Unchecked{}, std::move(indices));
}

bool Monomial::divides(const Monomial& other) const {
    return std::includes(other.indices_.begin(), other.indices_.end(), indices_.begin(), indices_.end());
}

bool Monomial::contains_index(int i) const {
    return std::binary_search(indices_.begin(), indices_.end(), i);
}

Monomial Monomial::prefix(int len) const {
    return Monomial(Unchecked{}, std::vector<int>(indices_.begin(), indices_.begin() + len));
}

std::size_t MonomialHash::operator()(const Monomial& u) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (int i : u) {
        h ^= static_cast<std::uint64_t>(i);
        h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h);
}

int max_index(const Monomial& u) { return u.is_one() ? 0 : u.indices().back(); }

int min_index(const Monomial& u) { return u.is_one() ? 0 : u.indices().front(); }

std::vector<int> support(const Monomial& u) { return u.indices(); }

void validate(const Monomial& u, const Context& ctx) {
    if (max_index(u) > ctx.n) {
        throw InvalidMonomial("monomial " + format_monomial(u) + " uses a variable beyond x" + std::to_string(ctx.n));
    }
}

bool is_t_spread(const Monomial& u, const Context& ctx) {
    validate(u, ctx);
    for (std::size_t pos = 1; pos < u.indices().size(); ++pos) {
        if (u[pos] - u[pos - 1] < ctx.t) {
            return false;
        }
    }
    return true;
}

std::strong_ordering slex_cmp(const Monomial& u, const Monomial& v) {
    if (u.degree() != v.degree()) {
        throw DegreeMismatch("slex order compares monomials of equal degree only (" + std::to_string(u.degree()) +
                             " vs " + std::to_string(v.degree()) + ")");
    }
    // Smaller index at the first difference means slex-greater.
    return v.indices() <=> u.indices();
}

MonomialSet::MonomialSet(int degree, std::vector<Monomial> members) : degree_(degree), members_(std::move(members)) {
    for (const auto& u : members_) {
        if (u.degree() != degree_) {
            throw DegreeMismatch("monomial " + format_monomial(u) + " does not have degree " + std::to_string(degree_));
        }
    }
    std::sort(members_.begin(), members_.end(), SlexGreater{});
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

MonomialSet MonomialSet::from_sorted(int degree, std::vector<Monomial> members) {
    MonomialSet set(degree);
    set.members_ = std::move(members);
    return set;
}

bool MonomialSet::contains(const Monomial& u) const {
    return std::binary_search(members_.begin(), members_.end(), u, SlexGreater{});
}

BigInt binomial(int a, int b) {
    if (b < 0 || a < 0 || b > a) {
        return 0;
    }
    b = std::min(b, a - b);
    BigInt result = 1;
    for (int i = 1; i <= b; ++i) {
        result *= a - b + i;
        result /= i;
    }
    return result;
}

std::uint64_t binomial_u64(int a, int b) {
    BigInt value = binomial(a, b);
    if (value > std::numeric_limits<std::uint64_t>::max()) {
        throw std::overflow_error("binomial(" + std::to_string(a) + ", " + std::to_string(b) + ") exceeds 64 bits");
    }
    return value.convert_to<std::uint64_t>();
}

std::uint64_t spread_count(const Context& ctx, int d) {
    if (d == 0) {
        return 1;
    }
    // t = 0 is handled on the squarefree fragment, which has binom(n, d) members.
    int t = std::max(ctx.t, 1);
    return binomial_u64(ctx.n - (d - 1) * (t - 1), d);
}

namespace {

void enumerate_rec(const Context& ctx, int d, int step, int lo, std::vector<int>& current,
                   std::vector<Monomial>& out) {
    int remaining = d - static_cast<int>(current.size());
    if (remaining == 0) {
        out.push_back(make_monomial_unchecked(current));
        return;
    }
    int hi = ctx.n - (remaining - 1) * step;
    for (int i = lo; i <= hi; ++i) {
        current.push_back(i);
        enumerate_rec(ctx, d, step, i + step, current, out);
        current.pop_back();
    }
}

}  // namespace

MonomialSet enumerate(const Context& ctx, int d) {
    if (d < 1) {
        throw Error("enumerate: degree must be >= 1, got " + std::to_string(d));
    }
    std::vector<Monomial> out;
    std::vector<int> current;
    current.reserve(d);
    // Ascending index lists come out slex-descending.
    enumerate_rec(ctx, d, std::max(ctx.t, 1), 1, current, out);
    return MonomialSet::from_sorted(d, std::move(out));
}

Monomial greatest_spread_monomial(int d, int t) {
    std::vector<int> idx(d);
    for (int s = 0; s < d; ++s) {
        idx[s] = 1 + s * t;
    }
    return Monomial(std::move(idx));
}

Monomial parse_monomial(std::string_view text) {
    std::string compact;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            compact.push_back(c);
        }
    }
    if (compact == "1") {
        return Monomial{};
    }
    if (compact.empty()) {
        throw ParseError("empty monomial text");
    }
    std::vector<int> indices;
    std::size_t pos = 0;
    while (pos <= compact.size()) {
        std::size_t star = compact.find('*', pos);
        std::string factor = compact.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
        if (factor.size() < 2 || (factor[0] != 'x' && factor[0] != 'X')) {
            throw ParseError("bad factor '" + factor + "' in monomial '" + std::string(text) + "'");
        }
        for (std::size_t k = 1; k < factor.size(); ++k) {
            if (!std::isdigit(static_cast<unsigned char>(factor[k]))) {
                throw ParseError("bad variable '" + factor + "' in monomial '" + std::string(text) + "'");
            }
        }
        indices.push_back(std::stoi(factor.substr(1)));
        if (star == std::string::npos) {
            break;
        }
        pos = star + 1;
    }
    // Variables commute; a repeated variable is still rejected by the constructor.
    std::sort(indices.begin(), indices.end());
    return Monomial(std::move(indices));
}

std::vector<Monomial> parse_monomial_list(std::string_view text) {
    std::vector<Monomial> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view piece = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        bool blank = std::all_of(piece.begin(), piece.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
        if (!blank) {
            out.push_back(parse_monomial(piece));
        }
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    return out;
}

std::string format_monomial(const Monomial& u) {
    if (u.is_one()) {
        return "1";
    }
    std::string out;
    for (int i : u) {
        if (!out.empty()) {
            out += '*';
        }
        out += 'x';
        out += std::to_string(i);
    }
    return out;
}

}  // namespace tspread
