#include "vbs/birack.hpp"

#include "vbs/error.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

namespace vbs {

Permutation identity_permutation(int n) {
    Permutation p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
    Permutation out(inner.size());
    for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[static_cast<std::size_t>(inner[i])];
    return out;
}

Permutation inverse(const Permutation& p) {
    Permutation out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
    return out;
}

bool is_permutation(const Permutation& p, int n) {
    if (static_cast<int>(p.size()) != n) return false;
    std::vector<bool> seen(p.size(), false);
    for (int v : p) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

int order(const Permutation& p) {
    const Permutation id = identity_permutation(static_cast<int>(p.size()));
    Permutation power = p;
    int k = 1;
    while (power != id) {
        power = compose(p, power);
        ++k;
    }
    return k;
}

std::optional<ElementPair> PairMap::first_collision() const {
    std::vector<bool> seen(image_.size(), false);
    for (int x = 0; x < n_; ++x) {
        for (int y = 0; y < n_; ++y) {
            const auto [a, b] = (*this)(x, y);
            const std::size_t k = index(a, b);
            if (seen[k]) return ElementPair{x, y};
            seen[k] = true;
        }
    }
    return std::nullopt;
}

PairMap PairMap::inverse() const {
    PairMap inv(n_);
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y) {
            const auto [a, b] = (*this)(x, y);
            inv(a, b) = {x, y};
        }
    return inv;
}

namespace {

using Triple = std::array<int, 3>;

void check_shape(int n, const Table& t, const char* name) {
    if (n < 1) throw DimensionMismatch("birack size must be positive");
    if (t.rows() != n || t.cols() != n)
        throw DimensionMismatch(std::string(name) + " must be " + std::to_string(n) + "x" +
                                std::to_string(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (t(i, j) < 0 || t(i, j) >= n)
                throw AxiomViolation(std::string(name) + " entries in range", {i, j});
}

/// Builds S from B via S(B_1(x,y), x) = (B_2(x,y), y).
PairMap sideways_of(const PairMap& m, const char* name) {
    const int n = m.size();
    PairMap s(n);
    std::vector<bool> defined(static_cast<std::size_t>(n) * n, false);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const auto [a, b] = m(x, y);
            const std::size_t k = static_cast<std::size_t>(a) * n + x;
            if (defined[k]) throw AxiomViolation(std::string(name) + " sideways map well defined", {x, y});
            defined[k] = true;
            s(a, x) = {b, y};
        }
    if (auto c = s.first_collision())
        throw AxiomViolation(std::string(name) + " sideways map invertible", {c->first, c->second});
    return s;
}

void check_diagonal_bijective(const PairMap& m, const char* name) {
    const int n = m.size();
    for (int comp = 0; comp < 2; ++comp) {
        std::vector<int> seen(static_cast<std::size_t>(n), -1);
        for (int x = 0; x < n; ++x) {
            const auto [a, b] = m(x, x);
            const int v = comp == 0 ? a : b;
            if (seen[static_cast<std::size_t>(v)] >= 0)
                throw AxiomViolation(std::string(name) + " component " + std::to_string(comp + 1) +
                                         " bijective",
                                     {x});
            seen[static_cast<std::size_t>(v)] = x;
        }
    }
}

Triple left(const PairMap& m, const Triple& t) {
    const auto [a, b] = m(t[0], t[1]);
    return {a, b, t[2]};
}

Triple right(const PairMap& m, const Triple& t) {
    const auto [a, b] = m(t[1], t[2]);
    return {t[0], a, b};
}

/// (F x Id)(Id x G)(H x Id) = (Id x H')(G' x Id)(Id x F'), composed right to left.
void check_yang_baxter(int n, const PairMap& f, const PairMap& g, const PairMap& h,
                       const PairMap& h2, const PairMap& g2, const PairMap& f2, const char* name) {
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                const Triple t{x, y, z};
                const Triple lhs = left(f, right(g, left(h, t)));
                const Triple rhs = right(h2, left(g2, right(f2, t)));
                if (lhs != rhs) throw AxiomViolation(name, {x, y, z});
            }
}

PairMap pair_map_from(int n, const Table& first_by_col, const Table& second_by_row) {
    PairMap m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = {first_by_col(j, i), second_by_row(i, j)};
    return m;
}

int mod(long long a, int n) {
    const long long r = a % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

std::optional<int> mod_inverse(int a, int n) {
    a = mod(a, n);
    for (int b = 1; b < n; ++b)
        if ((static_cast<long long>(a) * b) % n == 1 % n) return b;
    if (n == 1) return 0;
    return std::nullopt;
}

}  // namespace

FiniteBirack FiniteBirack::from_tables(int n, const BirackTables& t) {
    check_shape(n, t.b1, "B1");
    check_shape(n, t.b2, "B2");
    check_shape(n, t.v1, "V1");
    check_shape(n, t.v2, "V2");

    FiniteBirack out;
    out.n_ = n;
    out.b_ = pair_map_from(n, t.b1, t.b2);
    out.v_ = pair_map_from(n, t.v1, t.v2);

    if (auto c = out.b_.first_collision()) throw AxiomViolation("B bijective", {c->first, c->second});
    if (auto c = out.v_.first_collision()) throw AxiomViolation("V bijective", {c->first, c->second});
    out.b_inv_ = out.b_.inverse();

    // (i) sideways invertibility
    out.s_ = sideways_of(out.b_, "B");
    out.vs_ = sideways_of(out.v_, "V");
    out.s_inv_ = out.s_.inverse();

    // (ii) diagonal invertibility of B
    check_diagonal_bijective(out.s_, "S o Delta");
    check_diagonal_bijective(out.s_inv_, "S^-1 o Delta");

    // (iii) V involutive and diagonal fixing
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const auto [a, b] = out.v_(x, y);
            if (out.v_(a, b) != ElementPair{x, y}) throw AxiomViolation("V o V = Id", {x, y});
        }
    for (int x = 0; x < n; ++x) {
        const auto [a, b] = out.vs_(x, x);
        if (a != b) throw AxiomViolation("(vS o Delta)_1 = (vS o Delta)_2", {x});
    }

    // (iv) Yang-Baxter equations
    const PairMap& B = out.b_;
    const PairMap& V = out.v_;
    check_yang_baxter(n, B, B, B, B, B, B, "Yang-Baxter BBB");
    check_yang_baxter(n, V, V, V, V, V, V, "Yang-Baxter VVV");
    check_yang_baxter(n, B, V, V, V, V, B, "Yang-Baxter BVV");

    out.kink_ = kink_map(out);
    out.biquandle_ = true;
    for (int x = 0; x < n; ++x) {
        const auto [a, b] = out.s_(x, x);
        if (a != b) out.biquandle_ = false;
    }
    return out;
}

BirackTables FiniteBirack::tables() const {
    BirackTables t{Table(n_, n_), Table(n_, n_), Table(n_, n_), Table(n_, n_)};
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            t.b1(j, i) = b_(i, j).first;
            t.b2(i, j) = b_(i, j).second;
            t.v1(j, i) = v_(i, j).first;
            t.v2(i, j) = v_(i, j).second;
        }
    return t;
}

KinkData kink_map(const FiniteBirack& b) {
    const int n = b.size();
    Permutation first(static_cast<std::size_t>(n)), second(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
        const auto [a, c] = b.sideways_inverse(x, x);
        first[static_cast<std::size_t>(x)] = a;
        second[static_cast<std::size_t>(x)] = c;
    }
    KinkData k;
    k.alpha = inverse(second);
    k.pi = compose(first, k.alpha);
    k.rank = order(k.pi);
    return k;
}

FiniteBirack birack_from_tables(int n, const BirackTables& tables) {
    return FiniteBirack::from_tables(n, tables);
}

BirackTables vtsr_tables(int n, int v, int t, int s, int r) {
    // element e (0-based) stands for residue (e + 1) mod n
    const auto residue = [n](int e) { return (e + 1) % n; };
    const auto element = [n](long long res) { return (mod(res, n) + n - 1) % n; };
    const int vinv = mod_inverse(v, n).value_or(0);
    BirackTables out{Table(n, n), Table(n, n), Table(n, n), Table(n, n)};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const long long x = residue(i), y = residue(j);
            out.b1(j, i) = element(static_cast<long long>(t) * y + static_cast<long long>(s) * x);
            out.b2(i, j) = element(static_cast<long long>(r) * x);
            out.v1(j, i) = element(static_cast<long long>(v) * y);
            out.v2(i, j) = element(static_cast<long long>(vinv) * x);
        }
    return out;
}

FiniteBirack vtsr_birack(int n, int v, int t, int s, int r) {
    if (n < 1) throw ConstraintViolation("modulus must be positive");
    for (auto [name, value] : {std::pair{"v", v}, std::pair{"t", t}, std::pair{"r", r}})
        if (!mod_inverse(value, n))
            throw ConstraintViolation(std::string(name) + "=" + std::to_string(value) + " is not a unit mod " +
                                      std::to_string(n));
    const long long lhs = mod(static_cast<long long>(s) * s, n);
    const long long rhs = mod((1 - static_cast<long long>(t) * r) % n * s, n);
    if (lhs != rhs)
        throw ConstraintViolation("s^2 = " + std::to_string(lhs) + " but (1-tr)s = " + std::to_string(rhs) +
                                  " mod " + std::to_string(n));
    return FiniteBirack::from_tables(n, vtsr_tables(n, v, t, s, r));
}

FiniteBirack constant_action_birack(const Permutation& sigma, const Permutation& tau,
                                    const Permutation& nu) {
    const int n = static_cast<int>(sigma.size());
    for (auto [name, p] : {std::pair{"sigma", &sigma}, std::pair{"tau", &tau}, std::pair{"nu", &nu}})
        if (!is_permutation(*p, n)) throw ConstraintViolation(std::string(name) + " is not a permutation");
    const std::array<std::pair<const char*, const Permutation*>, 3> named{
        {{"sigma", &sigma}, {"tau", &tau}, {"nu", &nu}}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            if (compose(*named[i].second, *named[j].second) != compose(*named[j].second, *named[i].second))
                throw ConstraintViolation(std::string(named[i].first) + " and " + named[j].first +
                                          " do not commute");
    const Permutation nu_inv = inverse(nu);
    BirackTables t{Table(n, n), Table(n, n), Table(n, n), Table(n, n)};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
            t.b1(j, i) = tau[uj];
            t.b2(i, j) = sigma[ui];
            t.v1(j, i) = nu[uj];
            t.v2(i, j) = nu_inv[ui];
        }
    return FiniteBirack::from_tables(n, t);
}

TwistedBirack attach_twist(const FiniteBirack& b, const Permutation& twist) {
    const int n = b.size();
    if (!is_permutation(twist, n)) throw DimensionMismatch("twist map must be a permutation of 1..n");
    const auto T = [&](int x) { return twist[static_cast<std::size_t>(x)]; };
    for (int x = 0; x < n; ++x)
        if (T(T(x)) != x) throw AxiomViolation("T o T = Id", {x});
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const auto [a, c] = b.virtual_braid(x, y);
            if (ElementPair{T(a), c} != b.virtual_braid(x, T(y)))
                throw AxiomViolation("(T x Id)V = V(Id x T)", {x, y});
            if (ElementPair{a, T(c)} != b.virtual_braid(T(x), y))
                throw AxiomViolation("(Id x T)V = V(T x Id)", {x, y});
        }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const auto [p, q] = b.braid(T(x), T(y));
            const ElementPair lhs{T(p), T(q)};
            const auto [v1, v2] = b.virtual_braid(x, y);
            const auto [b1, b2] = b.braid(v1, v2);
            const ElementPair rhs = b.virtual_braid(b1, b2);
            if (lhs != rhs) throw AxiomViolation("(T x T)B(T x T) = VBV", {x, y});
        }
    return TwistedBirack(b, twist);
}

}  // namespace vbs
